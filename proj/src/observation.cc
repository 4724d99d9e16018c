#include "hanabi/observation.h"

#include <stdexcept>
#include <string>

namespace hanabi {

CardCounts StackCounts(const Stacks& stacks) {
  CardCounts counts{};
  for (int s = 0; s < kNumSuits; ++s) {
    for (int r = 1; r <= stacks[s]; ++r) {
      ++counts[Card{static_cast<Suit>(s), r}.Index()];
    }
  }
  return counts;
}

Observation::Observation(const GameState& state, int viewer)
    : state_(&state), viewer_(viewer) {
  if (viewer < 0 || viewer >= state.num_players()) {
    throw std::out_of_range("viewer index " + std::to_string(viewer));
  }
}

Card Observation::card(int player, int slot) const {
  if (player == viewer_) {
    throw std::out_of_range("a player cannot see their own cards");
  }
  return state_->hand(player).at(slot).card;
}

CardCounts Observation::UnseenCounts() const {
  CardCounts counts = FullDeckCounts();
  const CardCounts& discarded = discard();
  const CardCounts stacked = StackCounts(stacks());
  for (int i = 0; i < kNumIdentities; ++i) {
    counts[i] -= discarded[i] + stacked[i];
  }
  for (int p = 0; p < num_players(); ++p) {
    if (p == viewer_) continue;
    for (const HeldCard& h : state_->hand(p)) --counts[h.card.Index()];
  }
  return counts;
}

bool operator==(const Observation& a, const Observation& b) {
  if (a.viewer_ != b.viewer_ || a.num_players() != b.num_players() ||
      a.current_player() != b.current_player() ||
      a.info_tokens() != b.info_tokens() ||
      a.life_tokens() != b.life_tokens() || a.deck_size() != b.deck_size() ||
      a.turn() != b.turn() || a.stacks() != b.stacks() ||
      a.discard() != b.discard()) {
    return false;
  }
  const auto ha = a.history();
  const auto hb = b.history();
  if (!std::equal(ha.begin(), ha.end(), hb.begin(), hb.end())) return false;
  for (int p = 0; p < a.num_players(); ++p) {
    if (a.hand_size(p) != b.hand_size(p)) return false;
    for (int i = 0; i < a.hand_size(p); ++i) {
      if (!(a.knowledge(p, i) == b.knowledge(p, i))) return false;
      if (p != a.viewer_ && !(a.card(p, i) == b.card(p, i))) return false;
    }
  }
  return true;
}

}  // namespace hanabi
