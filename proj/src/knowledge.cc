#include "hanabi/knowledge.h"

#include <algorithm>

namespace hanabi {

IdentityDistribution DistributionFor(const CardKnowledge& knowledge,
                                     const CardCounts& pool) {
  IdentityDistribution dist;
  for (int i = 0; i < kNumIdentities; ++i) {
    if (!knowledge.MayBe(Card::FromIndex(i))) continue;
    dist.weights[i] = std::max(pool[i], 0);
    dist.total += dist.weights[i];
  }
  return dist;
}

Ratio PlayableMass(const IdentityDistribution& dist, const Stacks& stacks) {
  if (dist.total == 0) return {0, 1};
  std::int64_t mass = 0;
  for (int i = 0; i < kNumIdentities; ++i) {
    if (dist.weights[i] > 0 && IsPlayable(Card::FromIndex(i), stacks)) {
      mass += dist.weights[i];
    }
  }
  return {mass, dist.total};
}

Ratio UselessMass(const IdentityDistribution& dist, const Stacks& stacks,
                  const CardCounts& discard) {
  if (dist.total == 0) return {0, 1};
  std::int64_t mass = 0;
  for (int i = 0; i < kNumIdentities; ++i) {
    if (dist.weights[i] > 0 && IsUseless(Card::FromIndex(i), stacks, discard)) {
      mass += dist.weights[i];
    }
  }
  return {mass, dist.total};
}

bool AllPlayable(const IdentityDistribution& dist, const Stacks& stacks) {
  if (dist.total == 0) return false;
  for (int i = 0; i < kNumIdentities; ++i) {
    if (dist.weights[i] > 0 && !IsPlayable(Card::FromIndex(i), stacks)) {
      return false;
    }
  }
  return true;
}

bool AllUseless(const IdentityDistribution& dist, const Stacks& stacks,
                const CardCounts& discard) {
  if (dist.total == 0) return false;
  for (int i = 0; i < kNumIdentities; ++i) {
    if (dist.weights[i] > 0 &&
        !IsUseless(Card::FromIndex(i), stacks, discard)) {
      return false;
    }
  }
  return true;
}

CardCounts HolderPoolFromViewer(const Observation& obs, int holder) {
  CardCounts pool = FullDeckCounts();
  const CardCounts stacked = StackCounts(obs.stacks());
  for (int i = 0; i < kNumIdentities; ++i) {
    pool[i] -= obs.discard()[i] + stacked[i];
  }
  for (int p = 0; p < obs.num_players(); ++p) {
    if (p == obs.viewer() || p == holder) continue;
    for (int s = 0; s < obs.hand_size(p); ++s) --pool[obs.card(p, s).Index()];
  }
  return pool;
}

IdentityDistribution IdentityDistributionFor(const Observation& obs,
                                             int slot) {
  return DistributionFor(obs.knowledge(obs.viewer(), slot), obs.UnseenCounts());
}

Ratio PlayabilityRatio(const Observation& obs, int slot) {
  return PlayableMass(IdentityDistributionFor(obs, slot), obs.stacks());
}

Ratio UselessnessRatio(const Observation& obs, int slot) {
  return UselessMass(IdentityDistributionFor(obs, slot), obs.stacks(),
                     obs.discard());
}

bool IsDefinitelyPlayable(const Observation& obs, int slot) {
  return AllPlayable(IdentityDistributionFor(obs, slot), obs.stacks());
}

bool IsDefinitelyUseless(const Observation& obs, int slot) {
  return AllUseless(IdentityDistributionFor(obs, slot), obs.stacks(),
                    obs.discard());
}

}  // namespace hanabi
