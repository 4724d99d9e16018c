#ifndef HANABI_TESTS_TEST_UTIL_H_
#define HANABI_TESTS_TEST_UTIL_H_

// Shared fixtures and brute-force oracles. The oracles deliberately avoid
// the library's counting helpers: they enumerate the 50 physical cards one
// by one.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hanabi/game_state.h"
#include "hanabi/observation.h"
#include "hanabi/rng.h"

namespace hanabi::testing {

inline Card C(const char* text) { return *ParseCard(text); }

inline std::vector<Card> Cards(std::initializer_list<const char*> texts) {
  std::vector<Card> out;
  for (const char* t : texts) out.push_back(C(t));
  return out;
}

// The 50 physical cards as (suit, rank) pairs, one entry per copy.
inline std::vector<Card> PhysicalDeck() {
  std::vector<Card> deck;
  for (int s = 0; s < kNumSuits; ++s) {
    for (int r = 1; r <= kNumRanks; ++r) {
      const int copies = r == 1 ? 3 : (r == 5 ? 1 : 2);
      for (int c = 0; c < copies; ++c) deck.push_back({static_cast<Suit>(s), r});
    }
  }
  return deck;
}

// Removes one physical copy of `card` from `cards`; false if absent.
inline bool RemoveOne(std::vector<Card>& cards, const Card& card) {
  for (auto it = cards.begin(); it != cards.end(); ++it) {
    if (*it == card) {
      cards.erase(it);
      return true;
    }
  }
  return false;
}

// Everything physically in the game, in one multiset.
inline std::vector<Card> AllLocatedCards(const GameState& state) {
  std::vector<Card> cards;
  for (int p = 0; p < state.num_players(); ++p) {
    for (const HeldCard& h : state.hand(p)) cards.push_back(h.card);
  }
  for (const Card& c : state.deck()) cards.push_back(c);
  for (int i = 0; i < kNumIdentities; ++i) {
    for (int k = 0; k < state.discard()[i]; ++k) {
      cards.push_back(Card::FromIndex(i));
    }
  }
  for (int s = 0; s < kNumSuits; ++s) {
    for (int r = 1; r <= state.stacks()[s]; ++r) {
      cards.push_back({static_cast<Suit>(s), r});
    }
  }
  return cards;
}

// The physical cards the viewer cannot see, after removing every card in
// other players' hands, the discard pile and the stacks.
inline std::vector<Card> UnseenPhysicalCards(const GameState& state,
                                             int viewer) {
  std::vector<Card> cards = PhysicalDeck();
  for (int p = 0; p < state.num_players(); ++p) {
    if (p == viewer) continue;
    for (const HeldCard& h : state.hand(p)) RemoveOne(cards, h.card);
  }
  for (int i = 0; i < kNumIdentities; ++i) {
    for (int k = 0; k < state.discard()[i]; ++k) {
      RemoveOne(cards, Card::FromIndex(i));
    }
  }
  for (int s = 0; s < kNumSuits; ++s) {
    for (int r = 1; r <= state.stacks()[s]; ++r) {
      RemoveOne(cards, {static_cast<Suit>(s), r});
    }
  }
  return cards;
}

// Fills `setup.deck` with the cards not already placed in hands, stacks
// or discard. Listed `deck_front` cards are drawn first. With
// `deck_size >= 0` only that many cards stay in the deck and the rest of
// the remainder is added to the discard pile.
inline GameState::Setup CompleteSetup(GameState::Setup setup,
                                      const std::vector<Card>& deck_front = {},
                                      int deck_size = -1) {
  std::vector<Card> rest = PhysicalDeck();
  for (const auto& hand : setup.hands) {
    for (const Card& c : hand) RemoveOne(rest, c);
  }
  for (int i = 0; i < kNumIdentities; ++i) {
    for (int k = 0; k < setup.discard[i]; ++k) {
      RemoveOne(rest, Card::FromIndex(i));
    }
  }
  for (int s = 0; s < kNumSuits; ++s) {
    for (int r = 1; r <= setup.stacks[s]; ++r) {
      RemoveOne(rest, {static_cast<Suit>(s), r});
    }
  }
  for (const Card& c : deck_front) RemoveOne(rest, c);
  setup.deck = deck_front;
  setup.deck.insert(setup.deck.end(), rest.begin(), rest.end());
  if (deck_size >= 0) {
    while (static_cast<int>(setup.deck.size()) > deck_size) {
      ++setup.discard[setup.deck.back().Index()];
      setup.deck.pop_back();
    }
  }
  return setup;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Card-can-never-score test written out independently of the library.
inline bool OracleUseless(const Card& card, const GameState& state) {
  const int top = state.stacks()[static_cast<int>(card.suit)];
  if (card.rank <= top) return true;
  for (int r = top + 1; r < card.rank; ++r) {
    const Card need{card.suit, r};
    const int copies = r == 1 ? 3 : (r == 5 ? 1 : 2);
    if (state.discard()[need.Index()] == copies) return true;
  }
  return false;
}

// Fraction of the viewer's consistent physical candidates for `slot` that
// satisfy `pred`.
template <typename Pred>
Fraction OracleFraction(const GameState& state, int viewer, int slot,
                        Pred pred) {
  const CardKnowledge& k = state.hand(viewer)[slot].knowledge;
  Fraction f{0, 0};
  for (const Card& c : UnseenPhysicalCards(state, viewer)) {
    const bool consistent = (k.suits >> static_cast<int>(c.suit)) & 1 &&
                            (k.ranks >> (c.rank - 1)) & 1;
    if (!consistent) continue;
    ++f.den;
    if (pred(c)) ++f.num;
  }
  return f;
}

inline Fraction OraclePlayability(const GameState& state, int viewer,
                                  int slot) {
  return OracleFraction(state, viewer, slot, [&](const Card& c) {
    return state.stacks()[static_cast<int>(c.suit)] == c.rank - 1;
  });
}

inline Fraction OracleUselessness(const GameState& state, int viewer,
                                  int slot) {
  return OracleFraction(state, viewer, slot, [&](const Card& c) {
    return OracleUseless(c, state);
  });
}

// Plays uniformly random legal moves for up to `steps` turns.
inline GameState RandomPlayout(int players, std::uint64_t seed, int steps) {
  GameState state = GameState::NewGame(players, seed);
  Rng rng(DeriveSeed(seed, 77));
  for (int i = 0; i < steps && !state.IsTerminal(); ++i) {
    const ActionList legal = state.LegalActions();
    state.Apply(legal[UniformIndex(rng, static_cast<int>(legal.size()))]);
  }
  return state;
}

// Mean, sample SD and SEM written out directly.
struct Moments {
  double mean = 0.0;
  double sd = 0.0;
  double sem = 0.0;
};

inline Moments ComputeMoments(const std::vector<double>& xs) {
  Moments m;
  const double n = static_cast<double>(xs.size());
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.sd = xs.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  m.sem = m.sd / std::sqrt(n);
  return m;
}

}  // namespace hanabi::testing

#endif  // HANABI_TESTS_TEST_UTIL_H_
