#include "hanabi/action.h"

#include <sstream>

namespace hanabi {

std::string Serialize(const Action& action) {
  switch (action.type) {
    case ActionType::kPlay:
      return "play " + std::to_string(action.slot);
    case ActionType::kDiscard:
      return "discard " + std::to_string(action.slot);
    case ActionType::kTellSuit:
      return "tell " + std::to_string(action.target) + " suit " +
             SuitLetter(action.suit());
    case ActionType::kTellRank:
      return "tell " + std::to_string(action.target) + " rank " +
             std::to_string(action.rank());
  }
  return {};
}

std::optional<Action> ParseAction(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string verb;
  if (!(in >> verb)) return std::nullopt;
  std::optional<Action> result;
  if (verb == "play" || verb == "discard") {
    int slot = -1;
    if (!(in >> slot) || slot < 0 || slot >= 128) return std::nullopt;
    result = verb == "play" ? Action::Play(slot) : Action::Discard(slot);
  } else if (verb == "tell") {
    int target = -1;
    std::string kind, value;
    if (!(in >> target >> kind >> value) || target < 0 || target >= 128) {
      return std::nullopt;
    }
    if (kind == "suit" && value.size() == 1) {
      auto suit = SuitFromLetter(value[0]);
      if (!suit) return std::nullopt;
      result = Action::TellSuit(target, *suit);
    } else if (kind == "rank" && value.size() == 1 && value[0] >= '1' &&
               value[0] <= '5') {
      result = Action::TellRank(target, value[0] - '0');
    } else {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  std::string trailing;
  if (in >> trailing) return std::nullopt;
  return result;
}

std::string_view ActionKindName(const Action& action) {
  switch (action.type) {
    case ActionType::kPlay:
      return "Play";
    case ActionType::kDiscard:
      return "Discard";
    default:
      return "Tell";
  }
}

}  // namespace hanabi
