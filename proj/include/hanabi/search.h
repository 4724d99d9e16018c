#ifndef HANABI_SEARCH_H_
#define HANABI_SEARCH_H_

#include <bitset>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hanabi/agent.h"
#include "hanabi/game_state.h"
#include "hanabi/observation.h"
#include "hanabi/rng.h"

namespace hanabi {

struct SearchBudget {
  enum class Kind { kIterations, kMilliseconds };
  Kind kind = Kind::kMilliseconds;
  std::int64_t amount = 1000;

  static SearchBudget Iterations(std::int64_t n) {
    return {Kind::kIterations, n};
  }
  static SearchBudget Milliseconds(std::int64_t ms) {
    return {Kind::kMilliseconds, ms};
  }
  std::string ToString() const;
};

using Determinizer = std::function<GameState(const Observation&, Rng&)>;

struct SearchConfig {
  // Iteration budgets are bit-reproducible; wall-clock budgets are not.
  SearchBudget budget;
  double exploration = std::sqrt(2.0);
  // Defaults to Determinize when empty.
  Determinizer determinizer;
};

// Samples a fully observable state consistent with the observation: the
// viewer's slots are filled from the unseen pool subject to every slot's
// possibility sets (most constrained slot first, restarting on dead ends)
// and the remaining unseen cards are shuffled into the deck. Throws
// ConsistencyError if no completion is found.
GameState Determinize(const Observation& obs, Rng& rng);

// Dense id for an action, for per-node bookkeeping.
inline constexpr int kNumActionIds = 2 * kMaxHandSize + kMaxPlayers * 10;
int ActionId(const Action& action);

struct SearchNode {
  Action action;    // edge from the parent
  int parent = -1;
  int player = -1;  // who chooses among this node's children
  std::int64_t visits = 0;
  std::int64_t availability = 0;
  double total_reward = 0.0;
  std::vector<int> children;
  std::bitset<kNumActionIds> expanded;

  double mean() const { return visits ? total_reward / visits : 0.0; }
};

// Single shared tree; index 0 is the root.
struct SearchTree {
  std::vector<SearchNode> nodes;

  const SearchNode& root() const { return nodes.front(); }
  int FindChild(int node, const Action& action) const;
  int AddChild(int node, const Action& action, int player);
};

struct SearchStats {
  std::int64_t iterations = 0;
  double reward_sum = 0.0;
  bool fell_back = false;
};

// UCB1 score; unvisited arms score +infinity.
double Ucb1(double total_reward, std::int64_t visits, std::int64_t parent_count,
            double exploration);

// Index of the arm with the highest UCB1 score; ties go to the lowest index.
struct ArmStats {
  double total_reward = 0.0;
  std::int64_t visits = 0;
};
int SelectUcb1(std::span<const ArmStats> arms, std::int64_t parent_count,
               double exploration);

// Reward for a finished game: score / 25.
inline double Reward(const GameState& state) {
  return static_cast<double>(state.Score()) / kMaxScore;
}

// One-step lookahead bandit over the root actions with full-policy
// rollouts.
class McsAgent final : public Agent {
 public:
  McsAgent(SearchConfig config, std::unique_ptr<Agent> rollout_policy,
           std::uint64_t seed);

  std::string name() const override;
  Action Act(const Observation& obs) override;

  const SearchStats& last_stats() const { return stats_; }
  const std::vector<ArmStats>& last_arms() const { return arms_; }

 private:
  SearchConfig config_;
  std::unique_ptr<Agent> rollout_policy_;
  Rng rng_;
  SearchStats stats_;
  std::vector<ArmStats> arms_;
};

// Information-set MCTS. Given teammate models it becomes the predictor
// variant: teammates' moves in selection, expansion and rollout come from
// their models instead of UCB1 or random play.
class IsmctsAgent final : public Agent {
 public:
  IsmctsAgent(SearchConfig config, std::uint64_t seed);
  // `models[s]` is the model for seat s; the searcher's own entry is
  // ignored and may be null. Every other seat needs a model.
  IsmctsAgent(SearchConfig config, std::uint64_t seed, int seat,
              std::vector<std::unique_ptr<Agent>> models);

  std::string name() const override;
  Action Act(const Observation& obs) override;

  bool is_predictor() const { return !models_.empty(); }
  const SearchTree& last_tree() const { return tree_; }
  const SearchStats& last_stats() const { return stats_; }

 private:
  Action ModelAction(const GameState& state, int seat);
  void RunIteration(const Observation& obs, int self);

  SearchConfig config_;
  Rng rng_;
  int seat_ = -1;
  std::vector<std::unique_ptr<Agent>> models_;
  SearchTree tree_;
  SearchStats stats_;
};

}  // namespace hanabi

#endif  // HANABI_SEARCH_H_
