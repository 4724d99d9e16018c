#ifndef HANABI_KNOWLEDGE_H_
#define HANABI_KNOWLEDGE_H_

#include <compare>
#include <cstdint>

#include "hanabi/card.h"
#include "hanabi/card_knowledge.h"
#include "hanabi/observation.h"

namespace hanabi {

// Exact probability num/den with den > 0.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / den; }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

// Unseen copies of each identity the slot could still be, judged per slot:
// other slots in the same hand are not conditioned on.
struct IdentityDistribution {
  CardCounts weights{};
  int total = 0;

  int weight(const Card& card) const { return weights[card.Index()]; }
};

// Core counting, usable from any point of view: `pool` is the multiset of
// cards the reasoner cannot locate.
IdentityDistribution DistributionFor(const CardKnowledge& knowledge,
                                     const CardCounts& pool);
Ratio PlayableMass(const IdentityDistribution& dist, const Stacks& stacks);
Ratio UselessMass(const IdentityDistribution& dist, const Stacks& stacks,
                  const CardCounts& discard);
// Set reasoning over the distribution's support (identities with a copy
// left): every one of them qualifies.
bool AllPlayable(const IdentityDistribution& dist, const Stacks& stacks);
bool AllUseless(const IdentityDistribution& dist, const Stacks& stacks,
                const CardCounts& discard);

// What `holder` can count as unseen, limited to what the viewer also knows
// the holder sees: the full deck minus discard, stacks and the hands of
// everyone except the viewer and the holder.
CardCounts HolderPoolFromViewer(const Observation& obs, int holder);

// Viewer's own slots, against Observation::UnseenCounts().
IdentityDistribution IdentityDistributionFor(const Observation& obs, int slot);
Ratio PlayabilityRatio(const Observation& obs, int slot);
Ratio UselessnessRatio(const Observation& obs, int slot);
inline double PlayabilityProbability(const Observation& obs, int slot) {
  return PlayabilityRatio(obs, slot).value();
}
inline double UselessnessProbability(const Observation& obs, int slot) {
  return UselessnessRatio(obs, slot).value();
}
bool IsDefinitelyPlayable(const Observation& obs, int slot);
bool IsDefinitelyUseless(const Observation& obs, int slot);

}  // namespace hanabi

#endif  // HANABI_KNOWLEDGE_H_
