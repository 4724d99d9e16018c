#include "hanabi/harness.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "hanabi/registry.h"
#include "hanabi/trace.h"

namespace hanabi {

namespace {

std::string Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item = Trim(text.substr(start, end - start));
    if (!item.empty()) items.push_back(std::move(item));
    start = end + 1;
  }
  return items;
}

std::int64_t ParseInt(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + key + ": '" + value + "'");
  }
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  return out;
}

std::string FileSafe(std::string name) {
  for (char& c : name) {
    if (c == ':' || c == '/' || c == ' ' || c == ';' || c == '(' ||
        c == ')' || c == '{' || c == '}') {
      c = '-';
    }
  }
  return name;
}

std::string GroupLabel(const GroupKey& key) {
  return key.agent.empty() ? "*" : key.agent;
}

}  // namespace

ExperimentConfig ParseExperimentConfig(std::istream& in) {
  ExperimentConfig config;
  std::string line;
  bool have_ms = false, have_iters = false;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected key = value");
    }
    const std::string key = Trim(std::string_view(line).substr(0, eq));
    const std::string value = Trim(std::string_view(line).substr(eq + 1));
    if (key == "agents_under_test") {
      config.agents_under_test = SplitList(value);
    } else if (key == "paired_agents") {
      config.paired_agents = SplitList(value);
    } else if (key == "n_seeds") {
      config.n_seeds = static_cast<int>(ParseInt(key, value));
    } else if (key == "player_counts") {
      config.player_counts.clear();
      for (const std::string& item : SplitList(value)) {
        config.player_counts.push_back(static_cast<int>(ParseInt(key, item)));
      }
    } else if (key == "reruns") {
      config.reruns = static_cast<int>(ParseInt(key, value));
    } else if (key == "seed_base") {
      config.seed_base = static_cast<std::uint64_t>(ParseInt(key, value));
    } else if (key == "hand_size") {
      config.hand_size = static_cast<int>(ParseInt(key, value));
    } else if (key == "budget_ms") {
      config.budget = SearchBudget::Milliseconds(ParseInt(key, value));
      have_ms = true;
    } else if (key == "budget_iters") {
      config.budget = SearchBudget::Iterations(ParseInt(key, value));
      have_iters = true;
    } else if (key == "exploration") {
      try {
        config.exploration = std::stod(value);
      } catch (const std::exception&) {
        throw ConfigError("bad number for exploration: '" + value + "'");
      }
    } else if (key == "models") {
      config.models = ParseModelMap(value);
    } else if (key == "write_traces") {
      if (value != "true" && value != "false") {
        throw ConfigError("write_traces must be true or false");
      }
      config.write_traces = value == "true";
    } else if (key == "threads") {
      config.threads = static_cast<int>(ParseInt(key, value));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (have_ms && have_iters) {
    throw ConfigError("set only one of budget_ms and budget_iters");
  }
  if (config.budget.amount <= 0) throw ConfigError("budget must be positive");
  if (config.n_seeds <= 0 || config.reruns <= 0) {
    throw ConfigError("n_seeds and reruns must be positive");
  }
  for (int n : config.player_counts) {
    if (n < kMinPlayers || n > kMaxPlayers) {
      throw ConfigError("player count " + std::to_string(n) + " out of range");
    }
  }
  for (const auto* list : {&config.agents_under_test, &config.paired_agents}) {
    for (const std::string& name : *list) {
      if (!IsKnownAgent(name)) throw ConfigError("unknown agent '" + name + "'");
    }
  }
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return ParseExperimentConfig(in);
}

std::string ToConfigText(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "agents_under_test = " << Join(config.agents_under_test) << '\n'
      << "paired_agents = " << Join(config.paired_agents) << '\n'
      << "n_seeds = " << config.n_seeds << '\n';
  std::vector<std::string> counts;
  for (int n : config.player_counts) counts.push_back(std::to_string(n));
  out << "player_counts = " << Join(counts) << '\n'
      << "reruns = " << config.reruns << '\n'
      << "seed_base = " << config.seed_base << '\n'
      << "hand_size = " << config.hand_size << '\n'
      << (config.budget.kind == SearchBudget::Kind::kIterations
              ? "budget_iters = "
              : "budget_ms = ")
      << config.budget.amount << '\n'
      << "exploration = " << std::setprecision(17) << config.exploration
      << '\n';
  if (!config.models.empty()) {
    std::vector<std::string> models;
    for (const auto& [seat, name] : config.models) {
      models.push_back(std::to_string(seat) + ":" + name);
    }
    out << "models = " << Join(models) << '\n';
  }
  out << "write_traces = " << (config.write_traces ? "true" : "false") << '\n';
  return out.str();
}

std::string ConfigHash(const ExperimentConfig& config) {
  // FNV-1a, 64-bit.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : ToConfigText(config)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str().substr(0, 10);
}

std::uint64_t ExperimentSeed(std::uint64_t seed_base, int index) {
  return DeriveSeed(seed_base, 0x5eed0000ull + static_cast<std::uint64_t>(index));
}

int SeatPosition(std::uint64_t seed, int n_players) {
  return static_cast<int>(DeriveSeed(seed, 0x5ea70000ull + n_players) %
                          static_cast<std::uint64_t>(n_players));
}

std::uint64_t GameSeed(std::uint64_t seed, int rerun) {
  return DeriveSeed(seed, 0x9a3e0000ull + static_cast<std::uint64_t>(rerun));
}

GameState PlayGame(const SeatedGame& game) {
  const int n = static_cast<int>(game.seats.size());
  GameState state = GameState::NewGame(n, game.game_seed, game.hand_size);
  std::vector<std::unique_ptr<Agent>> agents;
  for (int s = 0; s < n; ++s) {
    AgentContext context;
    context.seat = s;
    context.num_players = n;
    context.seed = DeriveSeed(game.game_seed, streams::kSeatBase + s);
    context.model_seed =
        DeriveSeed(game.game_seed, streams::kModelBase + 16 * s);
    context.search = game.search;
    context.paired_agent = game.paired_agent;
    context.models = game.models;
    agents.push_back(MakeAgent(game.seats[s], context));
  }
  while (!state.IsTerminal()) {
    const int player = state.current_player();
    const Action action = agents[player]->Act(state.Observe(player));
    state.Apply(action);
  }
  return state;
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HANABI_BENCH_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(ResolveThreads(threads), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<GameRecord> RunFullTest(const ExperimentConfig& config,
                                    const std::filesystem::path& trace_dir,
                                    const ProgressFn& progress) {
  std::vector<GameRecord> records;
  for (const std::string& agent : config.agents_under_test) {
    for (const std::string& paired : config.paired_agents) {
      for (int n : config.player_counts) {
        for (int i = 0; i < config.n_seeds; ++i) {
          for (int rerun = 0; rerun < config.reruns; ++rerun) {
            GameRecord r;
            r.seed = ExperimentSeed(config.seed_base, i);
            r.seed_index = i;
            r.n_players = n;
            r.agent_under_test = agent;
            r.paired_agent = paired;
            r.position = SeatPosition(r.seed, n);
            r.rerun = rerun;
            records.push_back(std::move(r));
          }
        }
      }
    }
  }

  SearchConfig search;
  search.budget = config.budget;
  search.exploration = config.exploration;
  const bool traces = config.write_traces && !trace_dir.empty();
  if (traces) std::filesystem::create_directories(trace_dir);

  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  ParallelFor(records.size(), config.threads, [&](std::size_t index) {
    GameRecord& r = records[index];
    SeatedGame game;
    game.seats.assign(r.n_players, r.paired_agent);
    game.seats[r.position] = r.agent_under_test;
    game.game_seed = GameSeed(r.seed, r.rerun);
    game.hand_size = config.hand_size;
    game.search = search;
    game.paired_agent = r.paired_agent;
    game.models = config.models;
    try {
      const GameState final_state = PlayGame(game);
      r.score = final_state.Score();
      r.turns = final_state.turn();
      r.lives = final_state.life_tokens();
      r.info = final_state.info_tokens();
      if (traces) {
        const std::string file =
            FileSafe(r.agent_under_test) + "__" + FileSafe(r.paired_agent) +
            "__p" + std::to_string(r.n_players) + "__s" +
            std::to_string(r.seed_index) + "__r" + std::to_string(r.rerun) +
            ".txt";
        r.trace_path = "traces/" + file;
        std::ofstream out(trace_dir / file);
        out << "# players=" << r.n_players << " seed=" << game.game_seed
            << " hand_size=" << game.hand_size
            << " seats=" << Join(game.seats) << '\n';
        WriteTrace(out, final_state.history());
      }
    } catch (const std::exception& e) {
      r.crashed = true;
      r.error = e.what();
    }
    const std::size_t finished = ++done;
    if (progress) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      progress(finished, records.size());
    }
  });
  return records;
}

AggregateStats Summarize(std::span<const double> scores) {
  AggregateStats stats;
  stats.n = static_cast<int>(scores.size());
  if (scores.empty()) return stats;
  double sum = 0.0;
  for (double s : scores) sum += s;
  stats.mean = sum / stats.n;
  if (stats.n == 1) {
    stats.single_sample = true;
    return stats;
  }
  double ss = 0.0;
  for (double s : scores) ss += (s - stats.mean) * (s - stats.mean);
  stats.sd = std::sqrt(ss / (stats.n - 1));
  stats.sem = stats.sd / std::sqrt(static_cast<double>(stats.n));
  return stats;
}

std::vector<AggregateStats> Aggregate(std::span<const GameRecord> records,
                                      Grouping grouping) {
  std::vector<GroupKey> order;
  std::map<GroupKey, std::vector<const GameRecord*>> groups;
  for (const GameRecord& r : records) {
    if (r.crashed) continue;
    GroupKey key{r.agent_under_test, "", 0};
    if (grouping == Grouping::kAgentPairing ||
        grouping == Grouping::kAgentPairingPlayers) {
      key.paired = r.paired_agent;
    }
    if (grouping == Grouping::kAgentPlayers ||
        grouping == Grouping::kAgentPairingPlayers) {
      key.n_players = r.n_players;
    }
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }
  std::vector<AggregateStats> result;
  for (const GroupKey& key : order) {
    const auto& members = groups[key];
    std::vector<double> scores;
    double turns = 0, lives = 0, info = 0;
    for (const GameRecord* r : members) {
      scores.push_back(r->score);
      turns += r->turns;
      lives += r->lives;
      info += r->info;
    }
    AggregateStats stats = Summarize(scores);
    stats.key = key;
    stats.mean_turns = turns / stats.n;
    stats.mean_lives = lives / stats.n;
    stats.mean_info = info / stats.n;
    result.push_back(stats);
  }
  return result;
}

std::vector<double> SelfPlayScores(const std::string& agent, int n_players,
                                   int games, std::uint64_t seed_base,
                                   const SearchConfig& search, int threads) {
  std::vector<double> scores(games);
  ParallelFor(games, threads, [&](std::size_t i) {
    SeatedGame game;
    game.seats.assign(n_players, agent);
    game.game_seed = ExperimentSeed(seed_base, static_cast<int>(i));
    game.search = search;
    game.paired_agent = agent;
    scores[i] = PlayGame(game).Score();
  });
  return scores;
}

std::vector<AggregateStats> RunValidation(const ValidationConfig& config) {
  struct Entry {
    std::string agent;
    int players;
    int games;
  };
  const Entry entries[] = {{"internal", 2, config.osawa_games},
                           {"outer", 2, config.osawa_games},
                           {"vdb", 3, config.vdb_games}};
  std::vector<AggregateStats> result;
  for (const Entry& e : entries) {
    const auto scores = SelfPlayScores(e.agent, e.players, e.games,
                                       config.seed_base, {}, config.threads);
    AggregateStats stats = Summarize(scores);
    stats.key = {e.agent, e.agent, e.players};
    result.push_back(stats);
  }
  return result;
}

std::string ToJsonLine(const GameRecord& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["seed_index"] = r.seed_index;
  j["n_players"] = r.n_players;
  j["agent_under_test"] = r.agent_under_test;
  j["paired_agent"] = r.paired_agent;
  j["position"] = r.position;
  j["rerun"] = r.rerun;
  j["score"] = r.score;
  j["turns"] = r.turns;
  j["lives"] = r.lives;
  j["info"] = r.info;
  j["trace_path"] = r.trace_path;
  j["crashed"] = r.crashed;
  if (r.crashed) j["error"] = r.error;
  return j.dump();
}

GameRecord FromJsonLine(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    GameRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.seed_index = j.at("seed_index").get<int>();
    r.n_players = j.at("n_players").get<int>();
    r.agent_under_test = j.at("agent_under_test").get<std::string>();
    r.paired_agent = j.at("paired_agent").get<std::string>();
    r.position = j.at("position").get<int>();
    r.rerun = j.at("rerun").get<int>();
    r.score = j.at("score").get<int>();
    r.turns = j.at("turns").get<int>();
    r.lives = j.at("lives").get<int>();
    r.info = j.at("info").get<int>();
    r.trace_path = j.value("trace_path", "");
    r.crashed = j.value("crashed", false);
    r.error = j.value("error", "");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad record: ") + e.what());
  }
}

void WriteRecords(std::ostream& out, std::span<const GameRecord> records) {
  for (const GameRecord& r : records) out << ToJsonLine(r) << '\n';
}

std::vector<GameRecord> ReadRecords(std::istream& in) {
  std::vector<GameRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    records.push_back(FromJsonLine(line));
  }
  return records;
}

void WriteAggregatesCsv(std::ostream& out,
                        std::span<const AggregateStats> stats) {
  out << "agent,paired,n_players,n,mean,sd,sem,single_sample,mean_turns,"
         "mean_lives,mean_info\n";
  out << std::setprecision(10);
  for (const AggregateStats& s : stats) {
    out << GroupLabel(s.key) << ','
        << (s.key.paired.empty() ? "*" : s.key.paired) << ','
        << (s.key.n_players == 0 ? "*" : std::to_string(s.key.n_players))
        << ',' << s.n << ',' << s.mean << ',' << s.sd << ',' << s.sem << ','
        << (s.single_sample ? 1 : 0) << ',' << s.mean_turns << ','
        << s.mean_lives << ',' << s.mean_info << '\n';
  }
}

std::string FormatScoreTable(std::span<const AggregateStats> stats) {
  std::vector<AggregateStats> sorted(stats.begin(), stats.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.mean > b.mean; });
  std::ostringstream out;
  out << std::left << std::setw(24) << "Agent" << std::right << std::setw(8)
      << "Score" << std::setw(8) << "SEM" << std::setw(8) << "N"
      << std::setw(8) << "Turns" << std::setw(8) << "Lives" << std::setw(8)
      << "Info" << '\n';
  out << std::fixed << std::setprecision(2);
  for (const AggregateStats& s : sorted) {
    std::string label = GroupLabel(s.key);
    if (!s.key.paired.empty()) label += " + " + s.key.paired;
    if (s.key.n_players) label += " (" + std::to_string(s.key.n_players) + "p)";
    out << std::left << std::setw(24) << label << std::right << std::setw(8)
        << s.mean << std::setw(8) << s.sem << std::setw(8) << s.n
        << std::setw(8) << s.mean_turns << std::setw(8) << s.mean_lives
        << std::setw(8) << s.mean_info << '\n';
  }
  return out.str();
}

std::string FormatPlayerCountTable(std::span<const AggregateStats> stats) {
  std::vector<int> counts;
  std::vector<std::string> agents;
  std::map<std::pair<std::string, int>, double> means;
  for (const AggregateStats& s : stats) {
    if (s.key.n_players == 0) continue;
    if (std::find(counts.begin(), counts.end(), s.key.n_players) ==
        counts.end()) {
      counts.push_back(s.key.n_players);
    }
    if (std::find(agents.begin(), agents.end(), s.key.agent) == agents.end()) {
      agents.push_back(s.key.agent);
    }
    means[{s.key.agent, s.key.n_players}] = s.mean;
  }
  std::sort(counts.begin(), counts.end());
  std::sort(agents.begin(), agents.end());
  std::ostringstream out;
  out << std::left << std::setw(24) << "Agent" << std::right;
  for (int n : counts) out << std::setw(8) << n;
  out << '\n' << std::fixed << std::setprecision(2);
  for (const std::string& agent : agents) {
    out << std::left << std::setw(24) << agent << std::right;
    for (int n : counts) {
      auto it = means.find({agent, n});
      if (it == means.end()) {
        out << std::setw(8) << "-";
      } else {
        out << std::setw(8) << it->second;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hanabi
