#include "hanabi/card.h"

namespace hanabi {

namespace {
constexpr char kSuitLetters[kNumSuits] = {'W', 'Y', 'G', 'B', 'R'};
}  // namespace

char SuitLetter(Suit suit) { return kSuitLetters[static_cast<int>(suit)]; }

std::optional<Suit> SuitFromLetter(char letter) {
  for (int s = 0; s < kNumSuits; ++s) {
    if (kSuitLetters[s] == letter) return static_cast<Suit>(s);
  }
  return std::nullopt;
}

std::string ToString(const Card& card) {
  return std::string{SuitLetter(card.suit), static_cast<char>('0' + card.rank)};
}

std::optional<Card> ParseCard(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  auto suit = SuitFromLetter(text[0]);
  const int rank = text[1] - '0';
  if (!suit || rank < 1 || rank > kNumRanks) return std::nullopt;
  return Card{*suit, rank};
}

}  // namespace hanabi
