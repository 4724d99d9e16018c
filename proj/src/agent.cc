#include "hanabi/agent.h"

#include <stdexcept>

namespace hanabi {

namespace {

using K = RuleKind;
using V = Condition::Var;
using C = Condition::Cmp;

Rule R(RuleKind kind) { return Rule::Simple(kind); }

std::vector<RulePreset> BuildPresets() {
  std::vector<RulePreset> presets;
  presets.push_back({"internal",
                     {R(K::kPlaySafeCard), R(K::kOsawaDiscard),
                      R(K::kTellPlayableCard), R(K::kTellRandomly),
                      R(K::kDiscardRandomly)},
                     MemoryModel::kOwnHandOnly});
  presets.push_back({"outer",
                     {R(K::kPlaySafeCard), R(K::kOsawaDiscard),
                      R(K::kTellPlayableCardOuter), R(K::kTellUnknown),
                      R(K::kDiscardRandomly)},
                     MemoryModel::kAllPlayers});
  presets.push_back({"cautious",
                     {R(K::kPlayIfCertain), R(K::kPlaySafeCard),
                      R(K::kTellAnyoneAboutUsefulCard), R(K::kOsawaDiscard),
                      R(K::kDiscardRandomly)},
                     MemoryModel::kAllPlayers});
  presets.push_back({"iggi",
                     {R(K::kPlayIfCertain), R(K::kPlaySafeCard),
                      R(K::kTellAnyoneAboutUsefulCard), R(K::kOsawaDiscard),
                      R(K::kDiscardOldestFirst)},
                     MemoryModel::kAllPlayers});
  presets.push_back(
      {"piers",
       {Rule::If(Condition::And(Condition::Compare(V::kLives, C::kGt, 1),
                                Condition::Not(Condition::DeckHasCards())),
                 Rule::PlayProbablySafeCard(0.0)),
        R(K::kPlaySafeCard),
        Rule::If(Condition::Compare(V::kLives, C::kGt, 1),
                 Rule::PlayProbablySafeCard(0.6)),
        R(K::kTellAnyoneAboutUsefulCard),
        Rule::If(Condition::Compare(V::kInfo, C::kLt, 4),
                 R(K::kTellDispensable)),
        R(K::kOsawaDiscard), R(K::kDiscardOldestFirst), R(K::kTellRandomly),
        R(K::kDiscardRandomly)},
       MemoryModel::kAllPlayers});
  presets.push_back({"flawed",
                     {R(K::kPlaySafeCard), Rule::PlayProbablySafeCard(0.25),
                      R(K::kTellRandomly), R(K::kOsawaDiscard),
                      R(K::kDiscardOldestFirst), R(K::kDiscardRandomly)},
                     MemoryModel::kAllPlayers});
  presets.push_back(
      {"vdb",
       {Rule::If(Condition::Compare(V::kLives, C::kGt, 1),
                 Rule::PlayProbablySafeCard(0.6), R(K::kPlaySafeCard)),
        Rule::DiscardProbablyUselessCard(1.0),
        R(K::kTellAnyoneAboutUsefulCard), R(K::kTellAnyoneAboutUselessCard),
        Rule::TellMostInformation(true),
        Rule::DiscardProbablyUselessCard(0.0)},
       MemoryModel::kAllPlayers});
  return presets;
}

const std::vector<RulePreset>& Presets() {
  static const std::vector<RulePreset> presets = BuildPresets();
  return presets;
}

}  // namespace

Action LegalRandomAgent::Act(const Observation& obs) {
  const ActionList legal = obs.LegalActions();
  return legal[UniformIndex(rng_, static_cast<int>(legal.size()))];
}

RuleAgent::RuleAgent(std::string name, std::vector<Rule> rules,
                     MemoryModel memory, std::uint64_t seed)
    : name_(std::move(name)),
      rules_(std::move(rules)),
      memory_(memory),
      rng_(seed) {}

Action RuleAgent::Act(const Observation& obs) {
  const RuleContext ctx(obs, memory_);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (auto action = TryFire(rules_[i], ctx, rng_)) {
      last_fired_ = i;
      return *action;
    }
  }
  // No rule fired: hint whatever tells the most, or discard the oldest card
  // with no tokens left. Never a blind play, and deterministic.
  ++fallbacks_;
  last_fired_ = rules_.size();
  const Rule fallback = obs.info_tokens() > 0
                            ? Rule::TellMostInformation(true)
                            : Rule::Simple(RuleKind::kDiscardOldestFirst);
  if (auto action = TryFire(fallback, ctx, rng_)) return *action;
  throw std::logic_error("agent '" + name_ + "' has no non-play fallback");
}

std::optional<RulePreset> FindRulePreset(std::string_view name) {
  for (const RulePreset& preset : Presets()) {
    if (preset.name == name) return preset;
  }
  return std::nullopt;
}

std::vector<std::string> RulePresetNames() {
  std::vector<std::string> names;
  for (const RulePreset& preset : Presets()) names.push_back(preset.name);
  return names;
}

}  // namespace hanabi
