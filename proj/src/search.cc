#include "hanabi/search.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

namespace hanabi {

namespace {

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  bool Exhausted(std::int64_t iterations) const {
    if (budget_.kind == SearchBudget::Kind::kIterations) {
      return iterations >= budget_.amount;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
               .count() >= budget_.amount;
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

GameState RunDeterminizer(const SearchConfig& config, const Observation& obs,
                          Rng& rng) {
  return config.determinizer ? config.determinizer(obs, rng)
                             : Determinize(obs, rng);
}

}  // namespace

std::string SearchBudget::ToString() const {
  return std::to_string(amount) +
         (kind == Kind::kIterations ? " iterations" : " ms");
}

GameState Determinize(const Observation& obs, Rng& rng) {
  const CardCounts pool = obs.UnseenCounts();
  const int held = obs.own_hand_size();
  const int viewer = obs.viewer();

  // Most constrained slot first.
  std::vector<int> order(held);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> options(held, 0);
  for (int s = 0; s < held; ++s) {
    for (int i = 0; i < kNumIdentities; ++i) {
      if (obs.knowledge(viewer, s).MayBe(Card::FromIndex(i))) {
        options[s] += pool[i];
      }
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return options[a] < options[b]; });

  constexpr int kMaxAttempts = 1000;
  std::vector<Card> hand(held);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CardCounts remaining = pool;
    bool ok = true;
    for (int s : order) {
      const CardKnowledge& k = obs.knowledge(viewer, s);
      int total = 0;
      for (int i = 0; i < kNumIdentities; ++i) {
        if (k.MayBe(Card::FromIndex(i))) total += remaining[i];
      }
      if (total == 0) {
        ok = false;
        break;
      }
      int pick = UniformIndex(rng, total);
      for (int i = 0; i < kNumIdentities; ++i) {
        if (!k.MayBe(Card::FromIndex(i))) continue;
        if (pick < remaining[i]) {
          hand[s] = Card::FromIndex(i);
          --remaining[i];
          break;
        }
        pick -= remaining[i];
      }
    }
    if (!ok) continue;
    std::vector<Card> deck;
    deck.reserve(obs.deck_size());
    for (int i = 0; i < kNumIdentities; ++i) {
      for (int c = 0; c < remaining[i]; ++c) deck.push_back(Card::FromIndex(i));
    }
    std::shuffle(deck.begin(), deck.end(), rng);
    return obs.Complete(hand, deck);
  }
  throw ConsistencyError("no determinization consistent with knowledge");
}

int ActionId(const Action& action) {
  switch (action.type) {
    case ActionType::kPlay:
      return action.slot;
    case ActionType::kDiscard:
      return kMaxHandSize + action.slot;
    case ActionType::kTellSuit:
      return 2 * kMaxHandSize + action.target * 10 + action.value;
    case ActionType::kTellRank:
      return 2 * kMaxHandSize + action.target * 10 + kNumSuits +
             action.value - 1;
  }
  return -1;
}

int SearchTree::FindChild(int node, const Action& action) const {
  if (!nodes[node].expanded.test(ActionId(action))) return -1;
  for (int child : nodes[node].children) {
    if (nodes[child].action == action) return child;
  }
  return -1;
}

int SearchTree::AddChild(int node, const Action& action, int player) {
  SearchNode child;
  child.action = action;
  child.parent = node;
  child.player = player;
  child.availability = 1;
  const int index = static_cast<int>(nodes.size());
  nodes.push_back(std::move(child));
  nodes[node].children.push_back(index);
  nodes[node].expanded.set(ActionId(action));
  return index;
}

double Ucb1(double total_reward, std::int64_t visits, std::int64_t parent_count,
            double exploration) {
  if (visits == 0) return std::numeric_limits<double>::infinity();
  const double mean = total_reward / visits;
  if (exploration == 0.0 || parent_count <= 1) return mean;
  return mean + exploration * std::sqrt(std::log(static_cast<double>(
                                            parent_count)) /
                                        visits);
}

int SelectUcb1(std::span<const ArmStats> arms, std::int64_t parent_count,
               double exploration) {
  int best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < arms.size(); ++i) {
    const double score =
        Ucb1(arms[i].total_reward, arms[i].visits, parent_count, exploration);
    if (score > best_score) {
      best_score = score;
      best = static_cast<int>(i);
    }
  }
  return best;
}

McsAgent::McsAgent(SearchConfig config, std::unique_ptr<Agent> rollout_policy,
                   std::uint64_t seed)
    : config_(std::move(config)),
      rollout_policy_(std::move(rollout_policy)),
      rng_(seed) {}

std::string McsAgent::name() const {
  return "mcs:" + rollout_policy_->name();
}

Action McsAgent::Act(const Observation& obs) {
  stats_ = {};
  arms_.clear();
  const ActionList legal = obs.LegalActions();
  if (legal.size() == 1) return legal.front();
  arms_.resize(legal.size());

  const BudgetClock clock(config_.budget);
  while (!clock.Exhausted(stats_.iterations)) {
    GameState state = RunDeterminizer(config_, obs, rng_);
    const int arm = SelectUcb1(arms_, stats_.iterations, config_.exploration);
    state.Apply(legal[arm]);
    while (!state.IsTerminal()) {
      state.Apply(rollout_policy_->Act(state.Observe(state.current_player())));
    }
    const double reward = Reward(state);
    arms_[arm].total_reward += reward;
    ++arms_[arm].visits;
    stats_.reward_sum += reward;
    ++stats_.iterations;
  }
  if (stats_.iterations == 0) {
    stats_.fell_back = true;
    return rollout_policy_->Act(obs);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < arms_.size(); ++i) {
    const ArmStats& a = arms_[i];
    const ArmStats& b = arms_[best];
    if (a.visits > b.visits ||
        (a.visits == b.visits && a.visits > 0 &&
         a.total_reward / a.visits > b.total_reward / b.visits)) {
      best = i;
    }
  }
  return legal[best];
}

IsmctsAgent::IsmctsAgent(SearchConfig config, std::uint64_t seed)
    : config_(std::move(config)), rng_(seed) {}

IsmctsAgent::IsmctsAgent(SearchConfig config, std::uint64_t seed, int seat,
                         std::vector<std::unique_ptr<Agent>> models)
    : config_(std::move(config)),
      rng_(seed),
      seat_(seat),
      models_(std::move(models)) {
  if (models_.empty()) throw ConfigError("predictor needs teammate models");
  for (std::size_t s = 0; s < models_.size(); ++s) {
    if (static_cast<int>(s) != seat_ && !models_[s]) {
      throw ConfigError("missing model for seat " + std::to_string(s));
    }
  }
}

std::string IsmctsAgent::name() const {
  return is_predictor() ? "predictor" : "ismcts";
}

Action IsmctsAgent::ModelAction(const GameState& state, int seat) {
  Agent& model = *models_.at(seat);
  const Action action = model.Act(state.Observe(seat));
  if (!state.IsLegal(action)) {
    throw IllegalActionError("model '" + model.name() + "' for seat " +
                             std::to_string(seat) + " chose illegal action '" +
                             Serialize(action) + "'");
  }
  return action;
}

void IsmctsAgent::RunIteration(const Observation& obs, int self) {
  GameState state = RunDeterminizer(config_, obs, rng_);
  std::vector<int> path{0};
  int node = 0;

  // Selection and expansion.
  while (!state.IsTerminal()) {
    const int player = state.current_player();
    if (is_predictor() && player != self) {
      const Action action = ModelAction(state, player);
      int child = tree_.FindChild(node, action);
      state.Apply(action);
      if (child < 0) {
        child = tree_.AddChild(node, action, state.current_player());
        path.push_back(child);
        break;
      }
      node = child;
      path.push_back(child);
      continue;
    }

    const ActionList legal = state.LegalActions();
    ActionList untried;
    int best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (const Action& action : legal) {
      const int child = tree_.FindChild(node, action);
      if (child < 0) {
        untried.push_back(action);
        continue;
      }
      SearchNode& c = tree_.nodes[child];
      ++c.availability;
      const double score =
          Ucb1(c.total_reward, c.visits, c.availability, config_.exploration);
      if (score > best_score) {
        best_score = score;
        best = child;
      }
    }
    if (!untried.empty()) {
      const Action action =
          untried[UniformIndex(rng_, static_cast<int>(untried.size()))];
      state.Apply(action);
      path.push_back(tree_.AddChild(node, action, state.current_player()));
      break;
    }
    state.Apply(tree_.nodes[best].action);
    node = best;
    path.push_back(best);
  }

  // Rollout.
  while (!state.IsTerminal()) {
    const int player = state.current_player();
    if (is_predictor() && player != self) {
      state.Apply(ModelAction(state, player));
    } else {
      const ActionList legal = state.LegalActions();
      state.Apply(legal[UniformIndex(rng_, static_cast<int>(legal.size()))]);
    }
  }

  const double reward = Reward(state);
  for (int n : path) {
    ++tree_.nodes[n].visits;
    tree_.nodes[n].total_reward += reward;
  }
  stats_.reward_sum += reward;
  ++stats_.iterations;
}

Action IsmctsAgent::Act(const Observation& obs) {
  stats_ = {};
  tree_.nodes.clear();
  SearchNode root;
  root.player = obs.viewer();
  tree_.nodes.push_back(std::move(root));

  const ActionList legal = obs.LegalActions();
  if (legal.size() == 1) return legal.front();
  if (is_predictor() &&
      static_cast<int>(models_.size()) != obs.num_players()) {
    throw ConfigError("predictor has models for " +
                      std::to_string(models_.size()) + " seats, game has " +
                      std::to_string(obs.num_players()));
  }

  const BudgetClock clock(config_.budget);
  while (!clock.Exhausted(stats_.iterations)) RunIteration(obs, obs.viewer());

  if (stats_.iterations == 0) {
    stats_.fell_back = true;
    return legal[UniformIndex(rng_, static_cast<int>(legal.size()))];
  }
  int best = -1;
  for (const Action& action : legal) {
    const int child = tree_.FindChild(0, action);
    if (child < 0) continue;
    if (best < 0) {
      best = child;
      continue;
    }
    const SearchNode& a = tree_.nodes[child];
    const SearchNode& b = tree_.nodes[best];
    if (a.visits > b.visits || (a.visits == b.visits && a.mean() > b.mean())) {
      best = child;
    }
  }
  return tree_.nodes[best].action;
}

}  // namespace hanabi
