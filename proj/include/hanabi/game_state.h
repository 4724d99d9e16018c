#ifndef HANABI_GAME_STATE_H_
#define HANABI_GAME_STATE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/container/static_vector.hpp>

#include "hanabi/action.h"
#include "hanabi/card.h"
#include "hanabi/card_knowledge.h"

namespace hanabi {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TerminalStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class TurnOrderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IllegalActionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMaxActions =
    2 * kMaxHandSize + (kMaxPlayers - 1) * (kNumSuits + kNumRanks);

using ActionList = boost::container::static_vector<Action, kMaxActions>;

struct HeldCard {
  Card card;
  CardKnowledge knowledge;
};

using Hand = boost::container::static_vector<HeldCard, kMaxHandSize>;

struct ActionOutcome {
  std::uint32_t indicated_slots = 0;  // Tell: bit i = hand position i
  std::optional<Card> card;           // Play/Discard: the revealed card
  bool success = false;               // Play landed on its stack
  bool drew = false;                  // a replacement card was drawn

  friend bool operator==(const ActionOutcome&, const ActionOutcome&) = default;
};

struct MoveRecord {
  int turn = 0;
  int player = 0;
  Action action;
  ActionOutcome outcome;
  // Token and score snapshot after the move.
  int life_tokens = 0;
  int info_tokens = 0;
  int score = 0;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

class Observation;

// Full hidden-information state of one game of Hanabi. Changes only through
// Apply(); every rejected action leaves the state untouched.
class GameState {
 public:
  static constexpr int kDefaultHandSize = 5;

  // Deals from a deck shuffled by `seed`.
  static GameState NewGame(int num_players, std::uint64_t seed,
                           int hand_size = kDefaultHandSize);

  // Deals from an explicit deck; deck_order[0] is drawn first. The deck must
  // be a permutation of the 50-card multiset.
  static GameState NewGameWithDeck(int num_players,
                                   std::span<const Card> deck_order,
                                   int hand_size = kDefaultHandSize);

  // Mid-game position built directly from its parts, for tests and
  // scenarios. Knowledge starts blank; tokens, stacks and discard are taken
  // as given. The union of hands, deck, discard and stacks must be exactly
  // the 50-card multiset.
  struct Setup {
    std::vector<std::vector<Card>> hands;
    std::vector<Card> deck;  // front is drawn first
    Stacks stacks{};
    CardCounts discard{};
    int info_tokens = kMaxInfoTokens;
    int life_tokens = kMaxLifeTokens;
    int current_player = 0;
    int hand_size = kDefaultHandSize;
  };
  static GameState FromSetup(const Setup& setup);

  int num_players() const { return num_players_; }
  int hand_size() const { return hand_size_; }
  int current_player() const { return current_player_; }
  int info_tokens() const { return info_tokens_; }
  int life_tokens() const { return life_tokens_; }
  int turn() const { return turn_; }
  int deck_size() const { return deck_end_ - deck_next_; }
  // -1 while the deck still has cards.
  int turns_since_deck_empty() const { return turns_since_deck_empty_; }
  const Stacks& stacks() const { return stacks_; }
  const CardCounts& discard() const { return discard_; }
  const Hand& hand(int player) const { return hands_[player]; }
  std::span<const Card> deck() const {
    return {deck_.data() + deck_next_, deck_.data() + deck_end_};
  }
  std::span<const MoveRecord> history() const { return history_; }

  int Score() const;
  bool IsTerminal() const;

  // Throws TerminalStateError / TurnOrderError.
  ActionList LegalActions(int player) const;
  ActionList LegalActions() const { return LegalActions(current_player_); }
  bool IsLegal(const Action& action) const;

  // Throws IllegalActionError (or TerminalStateError) without mutating.
  ActionOutcome Apply(const Action& action);

  Observation Observe(int player) const;

  // Every card in every partition, counted by identity. Equals
  // FullDeckCounts() in any reachable state.
  CardCounts CardInventory() const;

  // Copy with the viewer's hand and the deck replaced by the given cards
  // (knowledge and history preserved). Used by determinization.
  GameState WithHiddenCards(int viewer, std::span<const Card> own_hand,
                            std::span<const Card> deck_order) const;

  // Search copies do not need the move log.
  void set_record_history(bool record) { record_history_ = record; }
  bool record_history() const { return record_history_; }

  friend bool operator==(const GameState& a, const GameState& b);

 private:
  GameState() = default;
  void Deal();
  void Draw(int player);
  void EndTurn();
  bool IsLegalFor(int player, const Action& action) const;

  int num_players_ = 0;
  int hand_size_ = 0;
  int current_player_ = 0;
  int info_tokens_ = kMaxInfoTokens;
  int life_tokens_ = kMaxLifeTokens;
  int turn_ = 0;
  int turns_since_deck_empty_ = -1;
  std::uint32_t next_slot_id_ = 0;
  std::array<Card, kDeckSize> deck_{};
  int deck_next_ = 0;
  int deck_end_ = 0;
  std::array<Hand, kMaxPlayers> hands_{};
  Stacks stacks_{};
  CardCounts discard_{};
  bool record_history_ = true;
  std::vector<MoveRecord> history_;
};

// Free-function spellings of the core operations.
inline GameState NewGame(int num_players, std::uint64_t seed,
                         int hand_size = GameState::kDefaultHandSize) {
  return GameState::NewGame(num_players, seed, hand_size);
}
inline ActionList LegalActions(const GameState& state, int player) {
  return state.LegalActions(player);
}
inline bool IsTerminal(const GameState& state) { return state.IsTerminal(); }
inline int Score(const GameState& state) { return state.Score(); }

// Deck order produced by a seed; a pure function of the seed.
std::array<Card, kDeckSize> ShuffledDeck(std::uint64_t seed);

}  // namespace hanabi

#endif  // HANABI_GAME_STATE_H_
