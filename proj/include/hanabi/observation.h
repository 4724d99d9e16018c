#ifndef HANABI_OBSERVATION_H_
#define HANABI_OBSERVATION_H_

#include <span>

#include "hanabi/game_state.h"

namespace hanabi {

// One player's view of a game: every hand but their own, the public piles,
// tokens, and everyone's Tell-derived knowledge. A non-owning view; it is
// valid only while the underlying state is alive and unchanged.
//
// There is no accessor for the identity of a card in the viewer's hand.
class Observation {
 public:
  Observation(const GameState& state, int viewer);

  int viewer() const { return viewer_; }
  int num_players() const { return state_->num_players(); }
  int current_player() const { return state_->current_player(); }
  int info_tokens() const { return state_->info_tokens(); }
  int life_tokens() const { return state_->life_tokens(); }
  int deck_size() const { return state_->deck_size(); }
  bool deck_has_cards() const { return state_->deck_size() > 0; }
  int turn() const { return state_->turn(); }
  int score() const { return state_->Score(); }
  bool is_terminal() const { return state_->IsTerminal(); }
  const Stacks& stacks() const { return state_->stacks(); }
  const CardCounts& discard() const { return state_->discard(); }
  std::span<const MoveRecord> history() const { return state_->history(); }

  int hand_size(int player) const {
    return static_cast<int>(state_->hand(player).size());
  }
  int own_hand_size() const { return hand_size(viewer_); }
  const CardKnowledge& knowledge(int player, int slot) const {
    return state_->hand(player)[slot].knowledge;
  }
  // Identity of a card in another player's hand. Throws std::out_of_range
  // for the viewer's own hand.
  Card card(int player, int slot) const;

  // Seat `offset` places after the viewer in turn order.
  int PlayerAfter(int offset) const {
    return (viewer_ + offset) % num_players();
  }

  // Legal actions for the viewer (who must be to move). Depends only on
  // visible information.
  ActionList LegalActions() const { return state_->LegalActions(viewer_); }
  bool IsLegal(const Action& action) const {
    return viewer_ == current_player() && state_->IsLegal(action);
  }

  // Copies of each identity the viewer cannot see anywhere: the full deck
  // minus other hands, discard and stacks. These cards are in the viewer's
  // hand or the draw deck.
  CardCounts UnseenCounts() const;

  // A fully specified state agreeing with everything the viewer sees.
  // `own_hand` fills the viewer's slots in order; `deck_order` is the deck.
  GameState Complete(std::span<const Card> own_hand,
                     std::span<const Card> deck_order) const {
    return state_->WithHiddenCards(viewer_, own_hand, deck_order);
  }

  friend bool operator==(const Observation& a, const Observation& b);

 private:
  const GameState* state_;
  int viewer_;
};

// Cards counted into the stacks: for each suit, ranks 1..top.
CardCounts StackCounts(const Stacks& stacks);

}  // namespace hanabi

#endif  // HANABI_OBSERVATION_H_
