#ifndef HANABI_ACTION_H_
#define HANABI_ACTION_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hanabi/card.h"

namespace hanabi {

enum class ActionType : std::uint8_t { kPlay = 0, kDiscard, kTellSuit, kTellRank };

// A Tell carries a target and either a suit or a rank; Play and Discard carry
// a hand position. Only the fields relevant to the type are meaningful.
struct Action {
  ActionType type = ActionType::kPlay;
  std::int8_t slot = 0;
  std::int8_t target = 0;
  std::int8_t value = 0;  // suit index for kTellSuit, rank for kTellRank

  static constexpr Action Play(int slot) {
    return {ActionType::kPlay, static_cast<std::int8_t>(slot), 0, 0};
  }
  static constexpr Action Discard(int slot) {
    return {ActionType::kDiscard, static_cast<std::int8_t>(slot), 0, 0};
  }
  static constexpr Action TellSuit(int target, Suit suit) {
    return {ActionType::kTellSuit, 0, static_cast<std::int8_t>(target),
            static_cast<std::int8_t>(suit)};
  }
  static constexpr Action TellRank(int target, int rank) {
    return {ActionType::kTellRank, 0, static_cast<std::int8_t>(target),
            static_cast<std::int8_t>(rank)};
  }

  constexpr bool IsTell() const {
    return type == ActionType::kTellSuit || type == ActionType::kTellRank;
  }
  constexpr Suit suit() const { return static_cast<Suit>(value); }
  constexpr int rank() const { return value; }

  // True if the Tell criterion matches the card.
  constexpr bool Matches(const Card& card) const {
    return type == ActionType::kTellSuit ? card.suit == suit()
                                         : card.rank == rank();
  }

  friend constexpr bool operator==(const Action&, const Action&) = default;
  friend constexpr auto operator<=>(const Action&, const Action&) = default;
};

// Replay-line form: "play 2", "discard 0", "tell 1 suit R", "tell 1 rank 3".
std::string Serialize(const Action& action);
std::optional<Action> ParseAction(std::string_view text);

// Compact form for traces: "Play", "Discard", "Tell".
std::string_view ActionKindName(const Action& action);

}  // namespace hanabi

#endif  // HANABI_ACTION_H_
