#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fca/context.hpp"
#include "fca/randomize.hpp"

namespace fca {

inline constexpr std::string_view kEngineVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ClassStats {
  std::size_t total = 0;
  std::map<std::size_t, std::size_t> by_size;
};

struct AnalysisReport {
  std::string dataset;
  std::size_t objects = 0;
  std::size_t attributes = 0;
  std::size_t crosses = 0;
  double density = 0;
  // intents, pseudo_intents, proper_premises, keys, passkeys
  std::map<std::string, ClassStats> classes;
  std::size_t concepts = 0;
  double linearity = 1;
  double distributivity = 1;
};

AnalysisReport analyze(const FormalContext& ctx, std::string dataset);

nlohmann::ordered_json to_json(const AnalysisReport& report);
// class,size,count with one row per class and size, then class,total,count.
std::string to_csv(const AnalysisReport& report);

nlohmann::ordered_json indices_json(const FormalContext& ctx, std::string dataset);

struct TrialConfig {
  std::string dataset;
  RandomizationStrategy strategy = RandomizationStrategy::density;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

nlohmann::ordered_json to_json(const TrialConfig& config, const FormalContext& ctx, const TrialRun& run);
// metric,size,real,min,q1,median,q3,max; size is empty for totals and indices.
std::string to_csv(const TrialRun& run);

}  // namespace fca
