#ifndef HANABI_RULES_H_
#define HANABI_RULES_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanabi/action.h"
#include "hanabi/card_knowledge.h"
#include "hanabi/knowledge.h"
#include "hanabi/observation.h"
#include "hanabi/rng.h"

namespace hanabi {

enum class RuleKind {
  kPlaySafeCard,
  kOsawaDiscard,
  kTellPlayableCard,
  kTellRandomly,
  kDiscardRandomly,
  kTellPlayableCardOuter,
  kTellUnknown,
  kPlayIfCertain,
  kDiscardOldestFirst,
  kIf,
  kPlayProbablySafeCard,
  kDiscardProbablyUselessCard,
  kTellMostInformation,
  kTellDispensable,
  kTellAnyoneAboutUsefulCard,
  kTellAnyoneAboutUselessCard,
};

std::string_view RuleName(RuleKind kind);

// Boolean expression over the public game counters.
struct Condition {
  enum class Op { kConst, kCompare, kDeckHasCards, kNot, kAnd, kOr };
  enum class Var { kLives, kInfo, kDeckSize };
  enum class Cmp { kLt, kLe, kGt, kGe, kEq, kNe };

  Op op = Op::kConst;
  bool constant = true;
  Var var = Var::kLives;
  Cmp cmp = Cmp::kGt;
  int value = 0;
  std::vector<Condition> operands;

  static Condition Const(bool value);
  static Condition Compare(Var var, Cmp cmp, int value);
  static Condition DeckHasCards();
  static Condition Not(Condition operand);
  static Condition And(Condition lhs, Condition rhs);
  static Condition Or(Condition lhs, Condition rhs);

  bool Evaluate(const Observation& obs) const;
  std::string ToString() const;
};

struct Rule {
  RuleKind kind = RuleKind::kPlaySafeCard;
  double threshold = 0.0;  // PlayProbablySafeCard, DiscardProbablyUselessCard
  bool new_info = true;    // TellMostInformation
  std::shared_ptr<const Condition> condition;  // If
  std::shared_ptr<const Rule> then_rule;       // If
  std::shared_ptr<const Rule> else_rule;       // If, optional

  static Rule Simple(RuleKind kind);
  static Rule PlayProbablySafeCard(double threshold);
  static Rule DiscardProbablyUselessCard(double threshold);
  static Rule TellMostInformation(bool new_info = true);
  static Rule If(Condition condition, Rule then_rule);
  static Rule If(Condition condition, Rule then_rule, Rule else_rule);

  // Round-trips through ParseRule.
  std::string ToString() const;
};

// How much an agent remembers about other players' hands.
enum class MemoryModel {
  kOwnHandOnly,  // forgets what others have been told
  kAllPlayers,   // tracks every player's Tell-derived knowledge
};

// The observation as filtered through an agent's memory, with per-decision
// caches. Rules never see hidden state.
class RuleContext {
 public:
  RuleContext(const Observation& obs, MemoryModel memory);

  const Observation& obs() const { return *obs_; }
  MemoryModel memory() const { return memory_; }

  // Knowledge the agent attributes to `player`'s slot. Under kOwnHandOnly,
  // other players' slots read as blank.
  CardKnowledge KnowledgeOf(int player, int slot) const;

  // Pool for the viewer's own slots.
  const CardCounts& Unseen() const;
  // Pool the viewer credits `holder` with when judging what the holder can
  // deduce about their own cards.
  const CardCounts& HolderPool(int holder) const;

  Ratio Playability(int slot) const;
  Ratio Uselessness(int slot) const;
  bool DefinitelyPlayable(int slot) const;
  bool DefinitelyUseless(int slot) const;

  // Whether `holder` could prove their slot playable / useless from the
  // given knowledge.
  bool HolderKnowsPlayable(int holder, const CardKnowledge& k) const;
  bool HolderKnowsUseless(int holder, const CardKnowledge& k) const;

 private:
  const Observation* obs_;
  MemoryModel memory_;
  mutable std::optional<CardCounts> unseen_;
  mutable std::array<std::optional<CardCounts>, kMaxPlayers> holder_pools_;
};

// Fires the rule (returning a legal action) or abstains (nullopt).
std::optional<Action> TryFire(const Rule& rule, const RuleContext& ctx,
                              Rng& rng);

// Convenience overload with full memory.
std::optional<Action> TryFire(const Rule& rule, const Observation& obs,
                              Rng& rng);

}  // namespace hanabi

#endif  // HANABI_RULES_H_
