#ifndef HANABI_HARNESS_H_
#define HANABI_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hanabi/game_state.h"
#include "hanabi/search.h"

namespace hanabi {

struct ExperimentConfig {
  std::vector<std::string> agents_under_test;
  std::vector<std::string> paired_agents;
  int n_seeds = 200;
  std::vector<int> player_counts = {2, 3, 4, 5};
  int reruns = 2;
  std::uint64_t seed_base = 0;
  int hand_size = GameState::kDefaultHandSize;
  SearchBudget budget = SearchBudget::Milliseconds(1000);
  double exploration = std::sqrt(2.0);
  std::map<int, std::string> models;  // predictor per-seat overrides
  bool write_traces = true;
  // 0: HANABI_BENCH_THREADS, else the hardware concurrency.
  int threads = 0;

  std::int64_t GamesPerAgent() const {
    return static_cast<std::int64_t>(n_seeds) * player_counts.size() *
           paired_agents.size() * reruns;
  }
};

// Plain "key = value" lines; '#' starts a comment. Lists are comma
// separated. Keys: agents_under_test, paired_agents, n_seeds,
// player_counts, reruns, seed_base, hand_size, budget_ms, budget_iters,
// exploration, models (seat:agent,...), write_traces, threads.
// Throws ConfigError on unknown keys or bad values.
ExperimentConfig ParseExperimentConfig(std::istream& in);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);
// Canonical text form; parses back to an equal config.
std::string ToConfigText(const ExperimentConfig& config);
// Stable short hash of the canonical text.
std::string ConfigHash(const ExperimentConfig& config);

struct GameRecord {
  std::uint64_t seed = 0;  // the experiment seed (not the per-rerun game seed)
  int seed_index = 0;
  int n_players = 0;
  std::string agent_under_test;
  std::string paired_agent;
  int position = 0;
  int rerun = 0;
  int score = 0;
  int turns = 0;
  int lives = 0;
  int info = 0;
  std::string trace_path;
  bool crashed = false;
  std::string error;

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

// Seed i of an experiment.
std::uint64_t ExperimentSeed(std::uint64_t seed_base, int index);
// Seat of the agent under test; depends only on (seed, player count).
int SeatPosition(std::uint64_t seed, int n_players);
// Root seed of one rerun of one seed.
std::uint64_t GameSeed(std::uint64_t seed, int rerun);

struct SeatedGame {
  std::vector<std::string> seats;  // agent name per seat
  std::uint64_t game_seed = 0;
  int hand_size = GameState::kDefaultHandSize;
  SearchConfig search;
  std::string paired_agent = "iggi";  // predictor default model
  std::map<int, std::string> models;
};

// Plays one game to the end. Agent and model streams are derived from the
// game seed. Exceptions from agents propagate.
GameState PlayGame(const SeatedGame& game);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Every (agent under test, pairing, player count, seed, rerun) game, in that
// nesting order. Crashed games are flagged, never fatal. When `trace_dir` is
// non-empty a trace per game is written there.
std::vector<GameRecord> RunFullTest(const ExperimentConfig& config,
                                    const std::filesystem::path& trace_dir = {},
                                    const ProgressFn& progress = {});

// Grouping for aggregates; empty agent/pairing or zero player count in a
// key means "all".
struct GroupKey {
  std::string agent;
  std::string paired;
  int n_players = 0;

  friend bool operator==(const GroupKey&, const GroupKey&) = default;
  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

struct AggregateStats {
  GroupKey key;
  int n = 0;
  double mean = 0.0;
  double sd = 0.0;   // sample standard deviation (n - 1)
  double sem = 0.0;  // sd / sqrt(n); 0 when n == 1
  bool single_sample = false;
  double mean_turns = 0.0;
  double mean_lives = 0.0;
  double mean_info = 0.0;
};

enum class Grouping { kAgent, kAgentPairing, kAgentPlayers, kAgentPairingPlayers };

// Crashed records are skipped. Groups appear in order of first appearance.
std::vector<AggregateStats> Aggregate(std::span<const GameRecord> records,
                                      Grouping grouping);
AggregateStats Summarize(std::span<const double> scores);

// Self-play validation: Internal and Outer at 2 players, VanDenBergh at 3.
struct ValidationConfig {
  int osawa_games = 100;
  int vdb_games = 1000;
  std::uint64_t seed_base = 0;
  int threads = 0;
};
std::vector<AggregateStats> RunValidation(const ValidationConfig& config);
// Self-play of one agent: every seat runs `agent`.
std::vector<double> SelfPlayScores(const std::string& agent, int n_players,
                                   int games, std::uint64_t seed_base,
                                   const SearchConfig& search = {},
                                   int threads = 0);

// Records as JSON lines, one object per record, fixed key order.
std::string ToJsonLine(const GameRecord& record);
GameRecord FromJsonLine(const std::string& line);
void WriteRecords(std::ostream& out, std::span<const GameRecord> records);
std::vector<GameRecord> ReadRecords(std::istream& in);

void WriteAggregatesCsv(std::ostream& out,
                        std::span<const AggregateStats> stats);
// Agents sorted by mean score, with SEM (the overall results layout).
std::string FormatScoreTable(std::span<const AggregateStats> stats);
// Agents x player counts of mean score.
std::string FormatPlayerCountTable(std::span<const AggregateStats> stats);

// Worker count from the override, HANABI_BENCH_THREADS, or hardware.
int ResolveThreads(int requested);

// Runs fn(i) for i in [0, n) on a bounded pool.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace hanabi

#endif  // HANABI_HARNESS_H_
