#ifndef HANABI_CARD_H_
#define HANABI_CARD_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hanabi {

inline constexpr int kNumSuits = 5;
inline constexpr int kNumRanks = 5;
inline constexpr int kNumIdentities = kNumSuits * kNumRanks;
inline constexpr int kDeckSize = 50;
inline constexpr int kMaxScore = kNumSuits * kNumRanks;
inline constexpr int kMaxInfoTokens = 8;
inline constexpr int kMaxLifeTokens = 3;
inline constexpr int kMinPlayers = 2;
inline constexpr int kMaxPlayers = 5;
inline constexpr int kMaxHandSize = 10;

enum class Suit : std::uint8_t { kWhite = 0, kYellow, kGreen, kBlue, kRed };

inline constexpr std::array<Suit, kNumSuits> kAllSuits = {
    Suit::kWhite, Suit::kYellow, Suit::kGreen, Suit::kBlue, Suit::kRed};

// Copies of each rank per suit: three 1s, two each of 2-4, one 5.
inline constexpr std::array<int, kNumRanks + 1> kRankMultiplicity = {0, 3, 2, 2,
                                                                     2, 1};

char SuitLetter(Suit suit);
std::optional<Suit> SuitFromLetter(char letter);

struct Card {
  Suit suit = Suit::kWhite;
  int rank = 1;

  constexpr int Index() const {
    return static_cast<int>(suit) * kNumRanks + (rank - 1);
  }
  static constexpr Card FromIndex(int index) {
    return Card{static_cast<Suit>(index / kNumRanks), index % kNumRanks + 1};
  }

  friend constexpr bool operator==(const Card&, const Card&) = default;
};

// "R3", "W1", ...
std::string ToString(const Card& card);
std::optional<Card> ParseCard(std::string_view text);

constexpr int Multiplicity(const Card& card) {
  return kRankMultiplicity[card.rank];
}

// Per-identity card counts; the currency of card counting.
using CardCounts = std::array<int, kNumIdentities>;

constexpr CardCounts FullDeckCounts() {
  CardCounts counts{};
  for (int i = 0; i < kNumIdentities; ++i) {
    counts[i] = Multiplicity(Card::FromIndex(i));
  }
  return counts;
}

using Stacks = std::array<int, kNumSuits>;

constexpr int StackOf(const Stacks& stacks, Suit suit) {
  return stacks[static_cast<int>(suit)];
}

constexpr bool IsPlayable(const Card& card, const Stacks& stacks) {
  return StackOf(stacks, card.suit) == card.rank - 1;
}

// A card can never score if its stack has passed it, or if every copy of
// some rank between the stack top and the card is in the discard pile.
constexpr bool IsUseless(const Card& card, const Stacks& stacks,
                         const CardCounts& discard) {
  const int top = StackOf(stacks, card.suit);
  if (card.rank <= top) return true;
  for (int r = top + 1; r < card.rank; ++r) {
    const Card needed{card.suit, r};
    if (discard[needed.Index()] >= Multiplicity(needed)) return true;
  }
  return false;
}

}  // namespace hanabi

#endif  // HANABI_CARD_H_
