#include "hanabi/game_state.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "hanabi/observation.h"
#include "hanabi/rng.h"

namespace hanabi {

namespace {

std::array<Card, kDeckSize> OrderedDeck() {
  std::array<Card, kDeckSize> deck{};
  int n = 0;
  for (Suit s : kAllSuits) {
    for (int r = 1; r <= kNumRanks; ++r) {
      for (int c = 0; c < kRankMultiplicity[r]; ++c) deck[n++] = Card{s, r};
    }
  }
  return deck;
}

void CheckPlayerCount(int num_players) {
  if (num_players < kMinPlayers || num_players > kMaxPlayers) {
    throw ConfigError("player count must be in 2..5, got " +
                      std::to_string(num_players));
  }
}

void CheckHandSize(int num_players, int hand_size) {
  if (hand_size <= 0 || hand_size > kMaxHandSize ||
      num_players * hand_size > kDeckSize) {
    throw ConfigError("invalid hand size " + std::to_string(hand_size) +
                      " for " + std::to_string(num_players) + " players");
  }
}

}  // namespace

std::array<Card, kDeckSize> ShuffledDeck(std::uint64_t seed) {
  auto deck = OrderedDeck();
  Rng rng = MakeRng(seed, streams::kDeal);
  std::shuffle(deck.begin(), deck.end(), rng);
  return deck;
}

GameState GameState::NewGame(int num_players, std::uint64_t seed,
                             int hand_size) {
  const auto deck = ShuffledDeck(seed);
  return NewGameWithDeck(num_players, deck, hand_size);
}

GameState GameState::NewGameWithDeck(int num_players,
                                     std::span<const Card> deck_order,
                                     int hand_size) {
  CheckPlayerCount(num_players);
  CheckHandSize(num_players, hand_size);
  if (deck_order.size() != kDeckSize) {
    throw ConfigError("deck must hold 50 cards");
  }
  CardCounts counts{};
  for (const Card& c : deck_order) ++counts[c.Index()];
  if (counts != FullDeckCounts()) {
    throw ConfigError("deck is not the standard 50-card multiset");
  }
  GameState state;
  state.num_players_ = num_players;
  state.hand_size_ = hand_size;
  std::copy(deck_order.begin(), deck_order.end(), state.deck_.begin());
  state.deck_end_ = kDeckSize;
  state.Deal();
  return state;
}

GameState GameState::FromSetup(const Setup& setup) {
  const int n = static_cast<int>(setup.hands.size());
  CheckPlayerCount(n);
  CheckHandSize(n, setup.hand_size);
  if (setup.current_player < 0 || setup.current_player >= n) {
    throw ConfigError("current player out of range");
  }
  if (setup.info_tokens < 0 || setup.info_tokens > kMaxInfoTokens ||
      setup.life_tokens < 1 || setup.life_tokens > kMaxLifeTokens) {
    throw ConfigError("token counts out of range");
  }
  CardCounts counts = setup.discard;
  for (const auto& hand : setup.hands) {
    if (static_cast<int>(hand.size()) > setup.hand_size) {
      throw ConfigError("hand larger than hand size");
    }
    for (const Card& c : hand) ++counts[c.Index()];
  }
  for (const Card& c : setup.deck) ++counts[c.Index()];
  for (int s = 0; s < kNumSuits; ++s) {
    if (setup.stacks[s] < 0 || setup.stacks[s] > kNumRanks) {
      throw ConfigError("stack out of range");
    }
    for (int r = 1; r <= setup.stacks[s]; ++r) {
      ++counts[Card{static_cast<Suit>(s), r}.Index()];
    }
  }
  if (counts != FullDeckCounts()) {
    throw ConfigError("setup does not partition the 50-card deck");
  }

  GameState state;
  state.num_players_ = n;
  state.hand_size_ = setup.hand_size;
  state.current_player_ = setup.current_player;
  state.info_tokens_ = setup.info_tokens;
  state.life_tokens_ = setup.life_tokens;
  state.stacks_ = setup.stacks;
  state.discard_ = setup.discard;
  std::copy(setup.deck.begin(), setup.deck.end(), state.deck_.begin());
  state.deck_end_ = static_cast<int>(setup.deck.size());
  for (int p = 0; p < n; ++p) {
    for (const Card& c : setup.hands[p]) {
      CardKnowledge k;
      k.slot_id = state.next_slot_id_++;
      state.hands_[p].push_back({c, k});
    }
  }
  if (state.deck_size() == 0) state.turns_since_deck_empty_ = 0;
  return state;
}

void GameState::Deal() {
  for (int i = 0; i < hand_size_; ++i) {
    for (int p = 0; p < num_players_; ++p) Draw(p);
  }
  if (deck_size() == 0) turns_since_deck_empty_ = 0;
}

void GameState::Draw(int player) {
  CardKnowledge k;
  k.slot_id = next_slot_id_++;
  k.drawn_turn = turn_;
  hands_[player].push_back({deck_[deck_next_++], k});
}

int GameState::Score() const {
  return std::accumulate(stacks_.begin(), stacks_.end(), 0);
}

bool GameState::IsTerminal() const {
  return life_tokens_ == 0 || Score() == kMaxScore ||
         turns_since_deck_empty_ >= num_players_;
}

ActionList GameState::LegalActions(int player) const {
  if (IsTerminal()) throw TerminalStateError("game is over");
  if (player != current_player_) {
    throw TurnOrderError("player " + std::to_string(player) +
                         " is not to move (current " +
                         std::to_string(current_player_) + ")");
  }
  ActionList actions;
  const int held = static_cast<int>(hands_[player].size());
  for (int i = 0; i < held; ++i) actions.push_back(Action::Play(i));
  if (info_tokens_ < kMaxInfoTokens) {
    for (int i = 0; i < held; ++i) actions.push_back(Action::Discard(i));
  }
  if (info_tokens_ > 0) {
    for (int offset = 1; offset < num_players_; ++offset) {
      const int target = (player + offset) % num_players_;
      unsigned suits = 0, ranks = 0;
      for (const HeldCard& h : hands_[target]) {
        suits |= 1u << static_cast<int>(h.card.suit);
        ranks |= 1u << (h.card.rank - 1);
      }
      for (Suit s : kAllSuits) {
        if (suits & (1u << static_cast<int>(s))) {
          actions.push_back(Action::TellSuit(target, s));
        }
      }
      for (int r = 1; r <= kNumRanks; ++r) {
        if (ranks & (1u << (r - 1))) actions.push_back(Action::TellRank(target, r));
      }
    }
  }
  return actions;
}

bool GameState::IsLegalFor(int player, const Action& action) const {
  const int held = static_cast<int>(hands_[player].size());
  switch (action.type) {
    case ActionType::kPlay:
      return action.slot >= 0 && action.slot < held;
    case ActionType::kDiscard:
      return info_tokens_ < kMaxInfoTokens && action.slot >= 0 &&
             action.slot < held;
    case ActionType::kTellSuit:
    case ActionType::kTellRank: {
      if (info_tokens_ < 1 || action.target < 0 ||
          action.target >= num_players_ || action.target == player) {
        return false;
      }
      if (action.type == ActionType::kTellSuit
              ? (action.value < 0 || action.value >= kNumSuits)
              : (action.value < 1 || action.value > kNumRanks)) {
        return false;
      }
      return std::any_of(
          hands_[action.target].begin(), hands_[action.target].end(),
          [&](const HeldCard& h) { return action.Matches(h.card); });
    }
  }
  return false;
}

bool GameState::IsLegal(const Action& action) const {
  return !IsTerminal() && IsLegalFor(current_player_, action);
}

ActionOutcome GameState::Apply(const Action& action) {
  if (IsTerminal()) throw TerminalStateError("game is over");
  const int player = current_player_;
  if (!IsLegalFor(player, action)) {
    throw IllegalActionError("illegal action '" + Serialize(action) +
                             "' for player " + std::to_string(player));
  }
  const bool deck_was_empty = turns_since_deck_empty_ >= 0;
  ActionOutcome outcome;
  if (action.IsTell()) {
    --info_tokens_;
    Hand& target = hands_[action.target];
    for (std::size_t i = 0; i < target.size(); ++i) {
      const bool hit = action.Matches(target[i].card);
      if (hit) outcome.indicated_slots |= 1u << i;
      ApplyTell(target[i].knowledge, action, hit);
    }
  } else {
    Hand& hand = hands_[player];
    const Card card = hand[action.slot].card;
    hand.erase(hand.begin() + action.slot);
    outcome.card = card;
    if (action.type == ActionType::kPlay) {
      if (IsPlayable(card, stacks_)) {
        stacks_[static_cast<int>(card.suit)] = card.rank;
        outcome.success = true;
        if (card.rank == kNumRanks && info_tokens_ < kMaxInfoTokens) {
          ++info_tokens_;
        }
      } else {
        --life_tokens_;
        ++discard_[card.Index()];
      }
    } else {
      ++discard_[card.Index()];
      ++info_tokens_;
    }
    if (deck_size() > 0) {
      Draw(player);
      outcome.drew = true;
    }
  }

  if (deck_was_empty) {
    ++turns_since_deck_empty_;
  } else if (deck_size() == 0) {
    turns_since_deck_empty_ = 0;
  }
  if (record_history_) {
    history_.push_back(MoveRecord{turn_, player, action, outcome, life_tokens_,
                                  info_tokens_, Score()});
  }
  ++turn_;
  current_player_ = (current_player_ + 1) % num_players_;
  return outcome;
}

Observation GameState::Observe(int player) const {
  return Observation(*this, player);
}

CardCounts GameState::CardInventory() const {
  CardCounts counts = discard_;
  for (int i = deck_next_; i < deck_end_; ++i) ++counts[deck_[i].Index()];
  for (int p = 0; p < num_players_; ++p) {
    for (const HeldCard& h : hands_[p]) ++counts[h.card.Index()];
  }
  const CardCounts stacked = StackCounts(stacks_);
  for (int i = 0; i < kNumIdentities; ++i) counts[i] += stacked[i];
  return counts;
}

GameState GameState::WithHiddenCards(int viewer, std::span<const Card> own_hand,
                                     std::span<const Card> deck_order) const {
  if (own_hand.size() != hands_[viewer].size() ||
      static_cast<int>(deck_order.size()) != deck_size()) {
    throw ConsistencyError("hidden-card completion has the wrong shape");
  }
  GameState copy;
  copy.num_players_ = num_players_;
  copy.hand_size_ = hand_size_;
  copy.current_player_ = current_player_;
  copy.info_tokens_ = info_tokens_;
  copy.life_tokens_ = life_tokens_;
  copy.turn_ = turn_;
  copy.turns_since_deck_empty_ = turns_since_deck_empty_;
  copy.next_slot_id_ = next_slot_id_;
  copy.hands_ = hands_;
  copy.stacks_ = stacks_;
  copy.discard_ = discard_;
  copy.record_history_ = false;
  for (std::size_t i = 0; i < own_hand.size(); ++i) {
    copy.hands_[viewer][i].card = own_hand[i];
  }
  std::copy(deck_order.begin(), deck_order.end(), copy.deck_.begin());
  copy.deck_next_ = 0;
  copy.deck_end_ = static_cast<int>(deck_order.size());
  return copy;
}

bool operator==(const GameState& a, const GameState& b) {
  if (a.num_players_ != b.num_players_ || a.hand_size_ != b.hand_size_ ||
      a.current_player_ != b.current_player_ ||
      a.info_tokens_ != b.info_tokens_ || a.life_tokens_ != b.life_tokens_ ||
      a.turn_ != b.turn_ ||
      a.turns_since_deck_empty_ != b.turns_since_deck_empty_ ||
      a.next_slot_id_ != b.next_slot_id_ || a.stacks_ != b.stacks_ ||
      a.discard_ != b.discard_ || a.history_ != b.history_ ||
      !std::equal(a.deck().begin(), a.deck().end(), b.deck().begin(),
                  b.deck().end())) {
    return false;
  }
  for (int p = 0; p < a.num_players_; ++p) {
    const Hand& x = a.hands_[p];
    const Hand& y = b.hands_[p];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i].card == y[i].card) || !(x[i].knowledge == y[i].knowledge)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hanabi
