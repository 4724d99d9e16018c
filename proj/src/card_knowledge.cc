#include "hanabi/card_knowledge.h"

namespace hanabi {

void ApplyTell(CardKnowledge& slot, const Action& tell, bool indicated) {
  const bool by_suit = tell.type == ActionType::kTellSuit;
  const std::uint8_t bit =
      static_cast<std::uint8_t>(1u << (by_suit ? tell.value : tell.value - 1));
  std::uint8_t& set = by_suit ? slot.suits : slot.ranks;
  if (indicated) {
    set &= bit;
  } else {
    set &= static_cast<std::uint8_t>(~bit);
  }
  if (set == 0) {
    throw ConsistencyError("empty possibility set for slot id " +
                           std::to_string(slot.slot_id) + " after " +
                           Serialize(tell));
  }
}

void UpdateOnTell(std::span<CardKnowledge> hand, const Action& tell,
                  std::uint32_t indicated_slots) {
  for (std::size_t i = 0; i < hand.size(); ++i) {
    ApplyTell(hand[i], tell, (indicated_slots >> i) & 1u);
  }
}

std::string ToString(const CardKnowledge& knowledge) {
  std::string out;
  for (Suit s : kAllSuits) {
    if (knowledge.MaySuit(s)) out += SuitLetter(s);
  }
  out += '|';
  for (int r = 1; r <= kNumRanks; ++r) {
    if (knowledge.MayRank(r)) out += static_cast<char>('0' + r);
  }
  return out;
}

}  // namespace hanabi
