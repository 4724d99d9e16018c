#include "hanabi/rules.h"

#include <sstream>

namespace hanabi {

namespace {

constexpr std::string_view kRuleNames[] = {
    "PlaySafeCard",
    "OsawaDiscard",
    "TellPlayableCard",
    "TellRandomly",
    "DiscardRandomly",
    "TellPlayableCardOuter",
    "TellUnknown",
    "PlayIfCertain",
    "DiscardOldestFirst",
    "If",
    "PlayProbablySafeCard",
    "DiscardProbablyUselessCard",
    "TellMostInformation",
    "TellDispensable",
    "TellAnyoneAboutUsefulCard",
    "TellAnyoneAboutUselessCard",
};

bool CanTell(const Observation& obs) { return obs.info_tokens() > 0; }
bool CanDiscard(const Observation& obs) {
  return obs.info_tokens() < kMaxInfoTokens;
}

Action TellFor(int target, const Card& card, bool by_suit) {
  return by_suit ? Action::TellSuit(target, card.suit)
                 : Action::TellRank(target, card.rank);
}

// Distinct tells available against `target`, suits first then ranks.
std::vector<Action> TellsAgainst(const Observation& obs, int target) {
  unsigned suits = 0, ranks = 0;
  for (int s = 0; s < obs.hand_size(target); ++s) {
    const Card c = obs.card(target, s);
    suits |= 1u << static_cast<int>(c.suit);
    ranks |= 1u << (c.rank - 1);
  }
  std::vector<Action> tells;
  for (Suit s : kAllSuits) {
    if (suits & (1u << static_cast<int>(s))) {
      tells.push_back(Action::TellSuit(target, s));
    }
  }
  for (int r = 1; r <= kNumRanks; ++r) {
    if (ranks & (1u << (r - 1))) tells.push_back(Action::TellRank(target, r));
  }
  return tells;
}

template <typename T>
std::optional<T> PickUniform(const std::vector<T>& options, Rng& rng) {
  if (options.empty()) return std::nullopt;
  return options[UniformIndex(rng, static_cast<int>(options.size()))];
}

bool AtLeast(const Ratio& r, double threshold) {
  return static_cast<double>(r.num) + 1e-9 >= threshold * r.den;
}

std::optional<Action> PlaySafeCard(const RuleContext& ctx) {
  for (int s = 0; s < ctx.obs().own_hand_size(); ++s) {
    if (ctx.DefinitelyPlayable(s)) return Action::Play(s);
  }
  return std::nullopt;
}

std::optional<Action> OsawaDiscard(const RuleContext& ctx) {
  if (!CanDiscard(ctx.obs())) return std::nullopt;
  for (int s = 0; s < ctx.obs().own_hand_size(); ++s) {
    if (ctx.DefinitelyUseless(s)) return Action::Discard(s);
  }
  return std::nullopt;
}

std::optional<Action> TellPlayable(const RuleContext& ctx, Rng& rng,
                                   bool unknown_only) {
  const Observation& obs = ctx.obs();
  if (!CanTell(obs)) return std::nullopt;
  const int target = obs.PlayerAfter(1);
  std::vector<Action> options;
  for (int s = 0; s < obs.hand_size(target); ++s) {
    const Card c = obs.card(target, s);
    if (!IsPlayable(c, obs.stacks())) continue;
    const CardKnowledge k = ctx.KnowledgeOf(target, s);
    for (bool by_suit : {true, false}) {
      const Action tell = TellFor(target, c, by_suit);
      if (!unknown_only || k.WouldLearn(tell)) options.push_back(tell);
    }
  }
  return PickUniform(options, rng);
}

std::optional<Action> TellRandomly(const RuleContext& ctx, Rng& rng) {
  const Observation& obs = ctx.obs();
  if (!CanTell(obs)) return std::nullopt;
  return PickUniform(TellsAgainst(obs, obs.PlayerAfter(1)), rng);
}

std::optional<Action> TellUnknown(const RuleContext& ctx, Rng& rng) {
  const Observation& obs = ctx.obs();
  if (!CanTell(obs)) return std::nullopt;
  const int target = obs.PlayerAfter(1);
  std::vector<Action> options;
  for (const Action& tell : TellsAgainst(obs, target)) {
    for (int s = 0; s < obs.hand_size(target); ++s) {
      if (tell.Matches(obs.card(target, s)) &&
          ctx.KnowledgeOf(target, s).WouldLearn(tell)) {
        options.push_back(tell);
        break;
      }
    }
  }
  return PickUniform(options, rng);
}

std::optional<Action> DiscardRandomly(const RuleContext& ctx, Rng& rng) {
  const Observation& obs = ctx.obs();
  if (!CanDiscard(obs) || obs.own_hand_size() == 0) return std::nullopt;
  return Action::Discard(UniformIndex(rng, obs.own_hand_size()));
}

std::optional<Action> PlayIfCertain(const RuleContext& ctx) {
  const Observation& obs = ctx.obs();
  for (int s = 0; s < obs.own_hand_size(); ++s) {
    const CardKnowledge& k = obs.knowledge(obs.viewer(), s);
    if (k.FullyKnown() &&
        IsPlayable(Card{k.KnownSuit(), k.KnownRank()}, obs.stacks())) {
      return Action::Play(s);
    }
  }
  return std::nullopt;
}

std::optional<Action> DiscardOldestFirst(const RuleContext& ctx) {
  const Observation& obs = ctx.obs();
  if (!CanDiscard(obs) || obs.own_hand_size() == 0) return std::nullopt;
  int best = 0;
  for (int s = 1; s < obs.own_hand_size(); ++s) {
    if (obs.knowledge(obs.viewer(), s).drawn_turn <
        obs.knowledge(obs.viewer(), best).drawn_turn) {
      best = s;
    }
  }
  return Action::Discard(best);
}

std::optional<Action> PlayProbablySafe(const RuleContext& ctx,
                                       double threshold) {
  const int held = ctx.obs().own_hand_size();
  if (held == 0) return std::nullopt;
  int best = 0;
  Ratio best_p = ctx.Playability(0);
  for (int s = 1; s < held; ++s) {
    const Ratio p = ctx.Playability(s);
    if (p > best_p) {
      best = s;
      best_p = p;
    }
  }
  if (!AtLeast(best_p, threshold)) return std::nullopt;
  return Action::Play(best);
}

std::optional<Action> DiscardProbablyUseless(const RuleContext& ctx,
                                             double threshold) {
  const int held = ctx.obs().own_hand_size();
  if (!CanDiscard(ctx.obs()) || held == 0) return std::nullopt;
  int best = 0;
  Ratio best_p = ctx.Uselessness(0);
  for (int s = 1; s < held; ++s) {
    const Ratio p = ctx.Uselessness(s);
    if (p > best_p) {
      best = s;
      best_p = p;
    }
  }
  if (!AtLeast(best_p, threshold)) return std::nullopt;
  return Action::Discard(best);
}

std::optional<Action> TellMostInformation(const RuleContext& ctx,
                                          bool new_info) {
  const Observation& obs = ctx.obs();
  if (!CanTell(obs)) return std::nullopt;
  std::optional<Action> best;
  int best_score = -1;
  for (int offset = 1; offset < obs.num_players(); ++offset) {
    const int target = obs.PlayerAfter(offset);
    for (const Action& tell : TellsAgainst(obs, target)) {
      int score = 0;
      for (int s = 0; s < obs.hand_size(target); ++s) {
        if (!tell.Matches(obs.card(target, s))) continue;
        if (!new_info || ctx.KnowledgeOf(target, s).WouldLearn(tell)) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = tell;
      }
    }
  }
  return best;
}

std::optional<Action> TellDispensable(const RuleContext& ctx) {
  const Observation& obs = ctx.obs();
  if (!CanTell(obs)) return std::nullopt;
  for (int offset = 1; offset < obs.num_players(); ++offset) {
    const int target = obs.PlayerAfter(offset);
    for (int s = 0; s < obs.hand_size(target); ++s) {
      const Card c = obs.card(target, s);
      if (!IsUseless(c, obs.stacks(), obs.discard())) continue;
      const CardKnowledge k = ctx.KnowledgeOf(target, s);
      if (ctx.HolderKnowsUseless(target, k)) continue;
      for (bool by_suit : {true, false}) {
        const Action tell = TellFor(target, c, by_suit);
        if (!k.WouldLearn(tell)) continue;
        CardKnowledge after = k;
        ApplyTell(after, tell, true);
        if (ctx.HolderKnowsUseless(target, after)) return tell;
      }
    }
  }
  return std::nullopt;
}

// Shared scan for the *Anyone* tells: first other player, in turn order,
// holding a qualifying card they have not fully worked out.
template <typename Qualifies, typename AlreadyKnown>
std::optional<Action> TellAnyoneAbout(const RuleContext& ctx,
                                      Qualifies qualifies,
                                      AlreadyKnown already_known) {
  const Observation& obs = ctx.obs();
  if (!CanTell(obs)) return std::nullopt;
  for (int offset = 1; offset < obs.num_players(); ++offset) {
    const int target = obs.PlayerAfter(offset);
    for (int s = 0; s < obs.hand_size(target); ++s) {
      const Card c = obs.card(target, s);
      if (!qualifies(c)) continue;
      const CardKnowledge k = ctx.KnowledgeOf(target, s);
      if (k.FullyKnown() || already_known(target, k)) continue;
      return TellFor(target, c, /*by_suit=*/!k.SuitKnown());
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view RuleName(RuleKind kind) {
  return kRuleNames[static_cast<int>(kind)];
}

Condition Condition::Const(bool value) {
  Condition c;
  c.op = Op::kConst;
  c.constant = value;
  return c;
}

Condition Condition::Compare(Var var, Cmp cmp, int value) {
  Condition c;
  c.op = Op::kCompare;
  c.var = var;
  c.cmp = cmp;
  c.value = value;
  return c;
}

Condition Condition::DeckHasCards() {
  Condition c;
  c.op = Op::kDeckHasCards;
  return c;
}

Condition Condition::Not(Condition operand) {
  Condition c;
  c.op = Op::kNot;
  c.operands.push_back(std::move(operand));
  return c;
}

Condition Condition::And(Condition lhs, Condition rhs) {
  Condition c;
  c.op = Op::kAnd;
  c.operands.push_back(std::move(lhs));
  c.operands.push_back(std::move(rhs));
  return c;
}

Condition Condition::Or(Condition lhs, Condition rhs) {
  Condition c;
  c.op = Op::kOr;
  c.operands.push_back(std::move(lhs));
  c.operands.push_back(std::move(rhs));
  return c;
}

bool Condition::Evaluate(const Observation& obs) const {
  switch (op) {
    case Op::kConst:
      return constant;
    case Op::kDeckHasCards:
      return obs.deck_has_cards();
    case Op::kNot:
      return !operands[0].Evaluate(obs);
    case Op::kAnd:
      return operands[0].Evaluate(obs) && operands[1].Evaluate(obs);
    case Op::kOr:
      return operands[0].Evaluate(obs) || operands[1].Evaluate(obs);
    case Op::kCompare: {
      int lhs = 0;
      switch (var) {
        case Var::kLives:
          lhs = obs.life_tokens();
          break;
        case Var::kInfo:
          lhs = obs.info_tokens();
          break;
        case Var::kDeckSize:
          lhs = obs.deck_size();
          break;
      }
      switch (cmp) {
        case Cmp::kLt:
          return lhs < value;
        case Cmp::kLe:
          return lhs <= value;
        case Cmp::kGt:
          return lhs > value;
        case Cmp::kGe:
          return lhs >= value;
        case Cmp::kEq:
          return lhs == value;
        case Cmp::kNe:
          return lhs != value;
      }
    }
  }
  return false;
}

std::string Condition::ToString() const {
  switch (op) {
    case Op::kConst:
      return constant ? "true" : "false";
    case Op::kDeckHasCards:
      return "deckHasCards";
    case Op::kNot:
      return "!" + operands[0].ToString();
    case Op::kAnd:
      return "(" + operands[0].ToString() + " & " + operands[1].ToString() +
             ")";
    case Op::kOr:
      return "(" + operands[0].ToString() + " | " + operands[1].ToString() +
             ")";
    case Op::kCompare: {
      static constexpr std::string_view kVars[] = {"lives", "info", "deckSize"};
      static constexpr std::string_view kCmps[] = {"<",  "<=", ">",
                                                   ">=", "==", "!="};
      return std::string(kVars[static_cast<int>(var)]) +
             std::string(kCmps[static_cast<int>(cmp)]) + std::to_string(value);
    }
  }
  return {};
}

Rule Rule::Simple(RuleKind kind) {
  Rule r;
  r.kind = kind;
  return r;
}

Rule Rule::PlayProbablySafeCard(double threshold) {
  Rule r = Simple(RuleKind::kPlayProbablySafeCard);
  r.threshold = threshold;
  return r;
}

Rule Rule::DiscardProbablyUselessCard(double threshold) {
  Rule r = Simple(RuleKind::kDiscardProbablyUselessCard);
  r.threshold = threshold;
  return r;
}

Rule Rule::TellMostInformation(bool new_info) {
  Rule r = Simple(RuleKind::kTellMostInformation);
  r.new_info = new_info;
  return r;
}

Rule Rule::If(Condition condition, Rule then_rule) {
  Rule r = Simple(RuleKind::kIf);
  r.condition = std::make_shared<const Condition>(std::move(condition));
  r.then_rule = std::make_shared<const Rule>(std::move(then_rule));
  return r;
}

Rule Rule::If(Condition condition, Rule then_rule, Rule else_rule) {
  Rule r = If(std::move(condition), std::move(then_rule));
  r.else_rule = std::make_shared<const Rule>(std::move(else_rule));
  return r;
}

std::string Rule::ToString() const {
  std::ostringstream out;
  switch (kind) {
    case RuleKind::kIf:
      out << "If(" << condition->ToString() << "){" << then_rule->ToString()
          << "}";
      if (else_rule) out << "Else{" << else_rule->ToString() << "}";
      break;
    case RuleKind::kPlayProbablySafeCard:
    case RuleKind::kDiscardProbablyUselessCard:
      out << RuleName(kind) << "(" << threshold << ")";
      break;
    case RuleKind::kTellMostInformation:
      out << RuleName(kind) << (new_info ? "(new)" : "(total)");
      break;
    default:
      out << RuleName(kind);
  }
  return out.str();
}

RuleContext::RuleContext(const Observation& obs, MemoryModel memory)
    : obs_(&obs), memory_(memory) {}

CardKnowledge RuleContext::KnowledgeOf(int player, int slot) const {
  const CardKnowledge& real = obs_->knowledge(player, slot);
  if (player == obs_->viewer() || memory_ == MemoryModel::kAllPlayers) {
    return real;
  }
  CardKnowledge blank;
  blank.slot_id = real.slot_id;
  blank.drawn_turn = real.drawn_turn;
  return blank;
}

const CardCounts& RuleContext::Unseen() const {
  if (!unseen_) unseen_ = obs_->UnseenCounts();
  return *unseen_;
}

const CardCounts& RuleContext::HolderPool(int holder) const {
  auto& pool = holder_pools_[holder];
  if (!pool) pool = HolderPoolFromViewer(*obs_, holder);
  return *pool;
}

Ratio RuleContext::Playability(int slot) const {
  return PlayableMass(
      DistributionFor(obs_->knowledge(obs_->viewer(), slot), Unseen()),
      obs_->stacks());
}

Ratio RuleContext::Uselessness(int slot) const {
  return UselessMass(
      DistributionFor(obs_->knowledge(obs_->viewer(), slot), Unseen()),
      obs_->stacks(), obs_->discard());
}

bool RuleContext::DefinitelyPlayable(int slot) const {
  return AllPlayable(
      DistributionFor(obs_->knowledge(obs_->viewer(), slot), Unseen()),
      obs_->stacks());
}

bool RuleContext::DefinitelyUseless(int slot) const {
  return AllUseless(
      DistributionFor(obs_->knowledge(obs_->viewer(), slot), Unseen()),
      obs_->stacks(), obs_->discard());
}

bool RuleContext::HolderKnowsPlayable(int holder,
                                      const CardKnowledge& k) const {
  return AllPlayable(DistributionFor(k, HolderPool(holder)), obs_->stacks());
}

bool RuleContext::HolderKnowsUseless(int holder, const CardKnowledge& k) const {
  return AllUseless(DistributionFor(k, HolderPool(holder)), obs_->stacks(),
                    obs_->discard());
}

std::optional<Action> TryFire(const Rule& rule, const RuleContext& ctx,
                              Rng& rng) {
  const Observation& obs = ctx.obs();
  switch (rule.kind) {
    case RuleKind::kPlaySafeCard:
      return PlaySafeCard(ctx);
    case RuleKind::kOsawaDiscard:
      return OsawaDiscard(ctx);
    case RuleKind::kTellPlayableCard:
      return TellPlayable(ctx, rng, /*unknown_only=*/false);
    case RuleKind::kTellRandomly:
      return TellRandomly(ctx, rng);
    case RuleKind::kDiscardRandomly:
      return DiscardRandomly(ctx, rng);
    case RuleKind::kTellPlayableCardOuter:
      return TellPlayable(ctx, rng, /*unknown_only=*/true);
    case RuleKind::kTellUnknown:
      return TellUnknown(ctx, rng);
    case RuleKind::kPlayIfCertain:
      return PlayIfCertain(ctx);
    case RuleKind::kDiscardOldestFirst:
      return DiscardOldestFirst(ctx);
    case RuleKind::kIf:
      if (rule.condition->Evaluate(obs)) return TryFire(*rule.then_rule, ctx, rng);
      if (rule.else_rule) return TryFire(*rule.else_rule, ctx, rng);
      return std::nullopt;
    case RuleKind::kPlayProbablySafeCard:
      return PlayProbablySafe(ctx, rule.threshold);
    case RuleKind::kDiscardProbablyUselessCard:
      return DiscardProbablyUseless(ctx, rule.threshold);
    case RuleKind::kTellMostInformation:
      return TellMostInformation(ctx, rule.new_info);
    case RuleKind::kTellDispensable:
      return TellDispensable(ctx);
    case RuleKind::kTellAnyoneAboutUsefulCard:
      return TellAnyoneAbout(
          ctx, [&](const Card& c) { return IsPlayable(c, obs.stacks()); },
          [&](int holder, const CardKnowledge& k) {
            return ctx.HolderKnowsPlayable(holder, k);
          });
    case RuleKind::kTellAnyoneAboutUselessCard:
      return TellAnyoneAbout(
          ctx,
          [&](const Card& c) {
            return IsUseless(c, obs.stacks(), obs.discard());
          },
          [&](int holder, const CardKnowledge& k) {
            return ctx.HolderKnowsUseless(holder, k);
          });
  }
  return std::nullopt;
}

std::optional<Action> TryFire(const Rule& rule, const Observation& obs,
                              Rng& rng) {
  return TryFire(rule, RuleContext(obs, MemoryModel::kAllPlayers), rng);
}

}  // namespace hanabi
