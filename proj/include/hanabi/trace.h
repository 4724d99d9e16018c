#ifndef HANABI_TRACE_H_
#define HANABI_TRACE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hanabi/game_state.h"

namespace hanabi {

// One human-readable line per move:
//   turn=3 player=1 action=Tell detail=to=0,rank=1 outcome=slots=0,3 lives=3 info=6 score=0
//   turn=4 player=0 action=Play detail=slot=0 outcome=W1:hit lives=3 info=6 score=1
//   turn=5 player=1 action=Discard detail=slot=2 outcome=B4 lives=3 info=7 score=1
std::string FormatTraceLine(const MoveRecord& move);

void WriteTrace(std::ostream& out, std::span<const MoveRecord> history);

struct ReplayHeader {
  int players = 2;
  std::uint64_t seed = 0;
  int hand_size = GameState::kDefaultHandSize;

  friend bool operator==(const ReplayHeader&, const ReplayHeader&) = default;
};

struct Replay {
  ReplayHeader header;
  std::vector<Action> actions;
};

// Header line "players=<n> seed=<s> hand_size=<h>", then one serialized
// Action per line.
void WriteReplay(std::ostream& out, const ReplayHeader& header,
                 std::span<const MoveRecord> history);

// Throws ConfigError on malformed input.
Replay ReadReplay(std::istream& in);

// Re-deals from the header and applies every action in order.
GameState RunReplay(const Replay& replay);

}  // namespace hanabi

#endif  // HANABI_TRACE_H_
