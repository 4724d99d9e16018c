#include "hanabi/trace.h"

#include <istream>
#include <ostream>
#include <sstream>

namespace hanabi {

namespace {

std::string Detail(const Action& action) {
  switch (action.type) {
    case ActionType::kTellSuit:
      return "to=" + std::to_string(action.target) + ",suit=" +
             SuitLetter(action.suit());
    case ActionType::kTellRank:
      return "to=" + std::to_string(action.target) +
             ",rank=" + std::to_string(action.rank());
    default:
      return "slot=" + std::to_string(action.slot);
  }
}

std::string Outcome(const Action& action, const ActionOutcome& outcome) {
  if (action.IsTell()) {
    std::string out = "slots=";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
      if (!(outcome.indicated_slots & (1u << i))) continue;
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
    return out;
  }
  std::string out = outcome.card ? ToString(*outcome.card) : "??";
  if (action.type == ActionType::kPlay) {
    out += outcome.success ? ":hit" : ":miss";
  }
  return out;
}

}  // namespace

std::string FormatTraceLine(const MoveRecord& move) {
  std::ostringstream out;
  out << "turn=" << move.turn << " player=" << move.player
      << " action=" << ActionKindName(move.action)
      << " detail=" << Detail(move.action)
      << " outcome=" << Outcome(move.action, move.outcome)
      << " lives=" << move.life_tokens << " info=" << move.info_tokens
      << " score=" << move.score;
  return out.str();
}

void WriteTrace(std::ostream& out, std::span<const MoveRecord> history) {
  for (const MoveRecord& move : history) out << FormatTraceLine(move) << '\n';
}

void WriteReplay(std::ostream& out, const ReplayHeader& header,
                 std::span<const MoveRecord> history) {
  out << "players=" << header.players << " seed=" << header.seed
      << " hand_size=" << header.hand_size << '\n';
  for (const MoveRecord& move : history) out << Serialize(move.action) << '\n';
}

Replay ReadReplay(std::istream& in) {
  Replay replay;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty replay");
  std::istringstream header(line);
  std::string token;
  bool have_players = false, have_seed = false;
  while (header >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ConfigError("bad header token " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "players") {
        replay.header.players = std::stoi(value);
        have_players = true;
      } else if (key == "seed") {
        replay.header.seed = std::stoull(value);
        have_seed = true;
      } else if (key == "hand_size") {
        replay.header.hand_size = std::stoi(value);
      } else {
        throw ConfigError("unknown header key " + key);
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ConfigError*>(&e)) throw;
      throw ConfigError("bad header value " + token);
    }
  }
  if (!have_players || !have_seed) throw ConfigError("incomplete replay header");
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto action = ParseAction(line);
    if (!action) {
      throw ConfigError("bad action on line " + std::to_string(line_number) +
                        ": " + line);
    }
    replay.actions.push_back(*action);
  }
  return replay;
}

GameState RunReplay(const Replay& replay) {
  GameState state = GameState::NewGame(
      replay.header.players, replay.header.seed, replay.header.hand_size);
  for (const Action& action : replay.actions) state.Apply(action);
  return state;
}

}  // namespace hanabi
