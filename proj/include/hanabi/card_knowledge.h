#ifndef HANABI_CARD_KNOWLEDGE_H_
#define HANABI_CARD_KNOWLEDGE_H_

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "hanabi/action.h"
#include "hanabi/card.h"

namespace hanabi {

// Raised when a possibility set would become empty. Given a correct engine
// this cannot happen, so it signals a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint8_t kAllMask = 0x1F;

// What the holder of one hand slot can deduce from every Tell seen so far,
// positive and negative. Suits are bits 0..4, ranks 1..5 are bits 0..4.
struct CardKnowledge {
  std::uint32_t slot_id = 0;
  std::uint8_t suits = kAllMask;
  std::uint8_t ranks = kAllMask;
  int drawn_turn = 0;

  bool MaySuit(Suit suit) const {
    return suits & (1u << static_cast<int>(suit));
  }
  bool MayRank(int rank) const { return ranks & (1u << (rank - 1)); }
  bool MayBe(const Card& card) const {
    return MaySuit(card.suit) && MayRank(card.rank);
  }
  bool SuitKnown() const { return std::popcount(suits) == 1; }
  bool RankKnown() const { return std::popcount(ranks) == 1; }
  bool FullyKnown() const { return SuitKnown() && RankKnown(); }
  // Only meaningful when the corresponding dimension is known.
  Suit KnownSuit() const { return static_cast<Suit>(std::countr_zero(suits)); }
  int KnownRank() const { return std::countr_zero(ranks) + 1; }
  int Age(int current_turn) const { return current_turn - drawn_turn; }

  // True if a Tell with this criterion would shrink the set in its dimension.
  bool WouldLearn(const Action& tell) const {
    return tell.type == ActionType::kTellSuit ? !SuitKnown() : !RankKnown();
  }

  friend bool operator==(const CardKnowledge&, const CardKnowledge&) = default;
};

// Applies a Tell to the holder's per-slot knowledge. Bit i of
// `indicated_slots` marks hand position i. Indicated slots collapse the
// criterion's dimension to the stated value; the rest lose that value.
void UpdateOnTell(std::span<CardKnowledge> hand, const Action& tell,
                  std::uint32_t indicated_slots);

// Single-slot form of UpdateOnTell.
void ApplyTell(CardKnowledge& slot, const Action& tell, bool indicated);

std::string ToString(const CardKnowledge& knowledge);

}  // namespace hanabi

#endif  // HANABI_CARD_KNOWLEDGE_H_
