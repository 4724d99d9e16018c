#ifndef HANABI_REGISTRY_H_
#define HANABI_REGISTRY_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hanabi/agent.h"
#include "hanabi/search.h"

namespace hanabi {

// Everything needed to seat an agent in one game.
struct AgentContext {
  int seat = 0;
  int num_players = 2;
  std::uint64_t seed = 0;        // the agent's own stream
  std::uint64_t model_seed = 0;  // root for a predictor's teammate models
  SearchConfig search;
  // Predictor models: per-seat overrides, else `paired_agent` for every
  // other seat.
  std::map<int, std::string> models;
  std::string paired_agent = "iggi";
};

// Agent names:
//   random | internal | outer | cautious | iggi | piers | flawed | vdb
//   mcs:<policy>            MCS with <policy> rollouts, e.g. mcs:iggi
//   ismcts
//   predictor               models = paired agent (or per-seat overrides)
//   predictor:<agent>       models = <agent> for every other seat
//   rules:<rule list>       ad-hoc rule agent, see rule_parser.h
// Throws ConfigError for unknown names.
std::unique_ptr<Agent> MakeAgent(std::string_view name,
                                 const AgentContext& context);

bool IsKnownAgent(std::string_view name);
std::vector<std::string> BuiltinAgentNames();

// "1:iggi,2:flawed" -> {1: "iggi", 2: "flawed"}. Throws ConfigError.
std::map<int, std::string> ParseModelMap(std::string_view text);

}  // namespace hanabi

#endif  // HANABI_REGISTRY_H_
