#include "hanabi/registry.h"

#include "hanabi/rule_parser.h"

namespace hanabi {

namespace {

constexpr std::string_view kMcsPrefix = "mcs:";
constexpr std::string_view kPredictorPrefix = "predictor:";
constexpr std::string_view kRulesPrefix = "rules:";

}  // namespace

std::unique_ptr<Agent> MakeAgent(std::string_view name,
                                 const AgentContext& context) {
  if (name == "random" || name == "legal_random") {
    return std::make_unique<LegalRandomAgent>(context.seed);
  }
  if (auto preset = FindRulePreset(name)) {
    return std::make_unique<RuleAgent>(preset->name, preset->rules,
                                       preset->memory, context.seed);
  }
  if (name.starts_with(kRulesPrefix)) {
    return std::make_unique<RuleAgent>(
        std::string(name), ParseRuleList(name.substr(kRulesPrefix.size())),
        MemoryModel::kAllPlayers, context.seed);
  }
  if (name.starts_with(kMcsPrefix)) {
    const std::string_view policy = name.substr(kMcsPrefix.size());
    if (policy.starts_with(kMcsPrefix) || policy == "ismcts" ||
        policy.starts_with("predictor")) {
      throw ConfigError("MCS rollout policy must be a plain agent: " +
                        std::string(policy));
    }
    AgentContext rollout_context = context;
    rollout_context.seed = DeriveSeed(context.seed, 1);
    return std::make_unique<McsAgent>(context.search,
                                      MakeAgent(policy, rollout_context),
                                      DeriveSeed(context.seed, 0));
  }
  if (name == "ismcts") {
    return std::make_unique<IsmctsAgent>(context.search, context.seed);
  }
  if (name == "predictor" || name.starts_with(kPredictorPrefix)) {
    const std::string fallback =
        name == "predictor" ? context.paired_agent
                            : std::string(name.substr(kPredictorPrefix.size()));
    std::vector<std::unique_ptr<Agent>> models(context.num_players);
    for (int s = 0; s < context.num_players; ++s) {
      if (s == context.seat) continue;
      auto it = context.models.find(s);
      const std::string model_name =
          it != context.models.end() ? it->second : fallback;
      if (model_name == "predictor" || model_name.starts_with(kPredictorPrefix)) {
        throw ConfigError("predictor cannot model another predictor");
      }
      AgentContext model_context = context;
      model_context.seat = s;
      model_context.seed = DeriveSeed(context.model_seed, s);
      models[s] = MakeAgent(model_name, model_context);
    }
    return std::make_unique<IsmctsAgent>(context.search, context.seed,
                                         context.seat, std::move(models));
  }
  throw ConfigError("unknown agent '" + std::string(name) + "'");
}

bool IsKnownAgent(std::string_view name) {
  try {
    AgentContext context;
    context.search.budget = SearchBudget::Iterations(1);
    MakeAgent(name, context);
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

std::vector<std::string> BuiltinAgentNames() {
  std::vector<std::string> names = {"random"};
  for (const std::string& n : RulePresetNames()) names.push_back(n);
  names.push_back("mcs:<policy>");
  names.push_back("ismcts");
  names.push_back("predictor");
  return names;
}

std::map<int, std::string> ParseModelMap(std::string_view text) {
  std::map<int, std::string> models;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 ||
        colon + 1 == item.size()) {
      throw ConfigError("bad model entry '" + std::string(item) +
                        "', expected seat:agent");
    }
    int seat = 0;
    try {
      seat = std::stoi(std::string(item.substr(0, colon)));
    } catch (const std::exception&) {
      throw ConfigError("bad seat in '" + std::string(item) + "'");
    }
    models[seat] = std::string(item.substr(colon + 1));
    start = end + 1;
  }
  return models;
}

}  // namespace hanabi
