#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fca/context.hpp"

namespace fca {

enum class RandomizationStrategy { density, column_permutation };

std::string_view to_string(RandomizationStrategy s);
// "density" or "column"; throws InputError otherwise.
RandomizationStrategy parse_strategy(std::string_view name);

// Pinned generator: std::mt19937_64, whose output sequence the C++ standard
// fixes. Bounded draws use rejection sampling on top of it rather than
// std::uniform_int_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64+rejection";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Seed of trial i: splitmix64 finalizer applied to seed + (i+1)·golden gamma.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial);

// Same shape and cross count; cross cells are a uniform k-subset of G×M
// chosen by partial Fisher-Yates over the cell indices.
FormalContext density_shuffle(const FormalContext& ctx, std::uint64_t seed);

// Same shape; every column keeps its cross count and gets a uniform subset of
// rows of that size, columns drawn independently.
FormalContext column_shuffle(const FormalContext& ctx, std::uint64_t seed);

FormalContext randomize(const FormalContext& ctx, RandomizationStrategy strategy, std::uint64_t seed);

struct Quartiles {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  friend bool operator==(const Quartiles&, const Quartiles&) = default;
};

// Inclusive linear-interpolation quantile (position p·(n-1) over the sorted
// values). Throws InputError on an empty list.
double quantile(std::span<const double> values, double p);
Quartiles summarize(std::span<const double> values);

struct MetricSelection {
  bool intents = true;
  bool pseudo_intents = true;
  bool proper_premises = true;
  bool keys = true;
  bool passkeys = true;
  bool linearity = true;
  bool distributivity = true;
};

// Comma-separated metric names, e.g. "intents,linearity"; "all" selects all.
MetricSelection parse_metrics(std::string_view list);

// A metric value: per-size counts carry the size, totals and indices do not.
struct MetricKey {
  std::string metric;
  std::optional<std::size_t> size;
  auto operator<=>(const MetricKey&) const = default;
};

using MetricValues = std::map<MetricKey, double>;

// Per-size counts and totals for every selected class, plus the indices.
MetricValues evaluate_metrics(const FormalContext& ctx, const MetricSelection& metrics);

struct TrialSummary {
  std::string metric;
  std::optional<std::size_t> size;
  double real_value = 0;
  std::vector<double> trial_values;
  Quartiles quartiles;
};

// Checksum data for one randomized context.
struct TrialDigest {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t crosses = 0;
  std::vector<std::size_t> column_sums;
};

struct TrialRun {
  std::vector<TrialSummary> summaries;
  std::vector<TrialDigest> digests;
};

// Evaluates `metrics` on the real context and on n_trials randomizations,
// trial i drawn with derive_seed(seed, i). Trials run on `threads` workers
// (0 = hardware concurrency); results do not depend on the thread count.
// Every (metric, size) key seen anywhere gets a summary; absent counts are 0.
TrialRun run_trials(const FormalContext& ctx, RandomizationStrategy strategy, std::size_t n_trials,
                    std::uint64_t seed, const MetricSelection& metrics, unsigned threads = 0);

}  // namespace fca
