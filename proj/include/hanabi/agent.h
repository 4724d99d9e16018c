#ifndef HANABI_AGENT_H_
#define HANABI_AGENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanabi/observation.h"
#include "hanabi/rng.h"
#include "hanabi/rules.h"

namespace hanabi {

// A policy: maps the observation of the player to move onto a legal action.
// Deterministic given its construction seed and the observations it is fed.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;
  virtual Action Act(const Observation& obs) = 0;
};

class LegalRandomAgent final : public Agent {
 public:
  explicit LegalRandomAgent(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  Action Act(const Observation& obs) override;

 private:
  Rng rng_;
};

// Ordered production rules; the first rule that fires decides.
class RuleAgent final : public Agent {
 public:
  RuleAgent(std::string name, std::vector<Rule> rules, MemoryModel memory,
            std::uint64_t seed);

  std::string name() const override { return name_; }
  // If every rule abstains, falls back to TellMostInformation(new), or to
  // DiscardOldestFirst with no tokens left; see fallbacks().
  Action Act(const Observation& obs) override;

  const std::vector<Rule>& rules() const { return rules_; }
  MemoryModel memory() const { return memory_; }
  // Index into rules() of the rule that produced the last action;
  // rules().size() when the fallback was used.
  std::size_t last_fired_rule() const { return last_fired_; }
  int fallbacks() const { return fallbacks_; }

 private:
  std::string name_;
  std::vector<Rule> rules_;
  MemoryModel memory_;
  Rng rng_;
  std::size_t last_fired_ = 0;
  int fallbacks_ = 0;
};

struct RulePreset {
  std::string name;
  std::vector<Rule> rules;
  MemoryModel memory;
};

// "internal", "outer", "cautious", "iggi", "piers", "flawed", "vdb".
std::optional<RulePreset> FindRulePreset(std::string_view name);
std::vector<std::string> RulePresetNames();

}  // namespace hanabi

#endif  // HANABI_AGENT_H_
