#include "fca/randomize.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "fca/charsets.hpp"
#include "fca/errors.hpp"
#include "fca/lattice.hpp"

namespace fca {

std::string_view to_string(RandomizationStrategy s) {
  return s == RandomizationStrategy::density ? "density" : "column";
}

RandomizationStrategy parse_strategy(std::string_view name) {
  if (name == "density") return RandomizationStrategy::density;
  if (name == "column") return RandomizationStrategy::column_permutation;
  throw InputError("unknown randomization strategy '" + std::string(name) + "' (expected density or column)");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FormalContext density_shuffle(const FormalContext& ctx, std::uint64_t seed) {
  const std::size_t n_attr = ctx.num_attributes();
  const std::size_t cells = ctx.num_objects() * n_attr;
  const std::size_t k = ctx.cross_count();
  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.below(cells - i)]);

  std::vector<AttrSet> rows(ctx.num_objects());
  for (std::size_t i = 0; i < k; ++i) rows[order[i] / n_attr].set(order[i] % n_attr);
  return FormalContext(ctx.object_names(), ctx.attribute_names(), std::move(rows));
}

FormalContext column_shuffle(const FormalContext& ctx, std::uint64_t seed) {
  const std::size_t n_obj = ctx.num_objects();
  std::vector<AttrSet> rows(n_obj);
  std::vector<std::size_t> order(n_obj);
  Rng rng(seed);
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
    const std::size_t k = ctx.column(m).count();
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.below(n_obj - i)]);
    for (std::size_t i = 0; i < k; ++i) rows[order[i]].set(m);
  }
  return FormalContext(ctx.object_names(), ctx.attribute_names(), std::move(rows));
}

FormalContext randomize(const FormalContext& ctx, RandomizationStrategy strategy, std::uint64_t seed) {
  return strategy == RandomizationStrategy::density ? density_shuffle(ctx, seed) : column_shuffle(ctx, seed);
}

double quantile(std::span<const double> values, double p) {
  if (values.empty()) throw InputError("quantile of an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Quartiles summarize(std::span<const double> values) {
  if (values.empty()) throw InputError("cannot summarize an empty list");
  return {quantile(values, 0.0), quantile(values, 0.25), quantile(values, 0.5), quantile(values, 0.75),
          quantile(values, 1.0)};
}

MetricSelection parse_metrics(std::string_view list) {
  if (list == "all") return {};
  MetricSelection sel{false, false, false, false, false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const auto name = list.substr(start, end - start);
    if (name == "intents")
      sel.intents = true;
    else if (name == "pseudo_intents")
      sel.pseudo_intents = true;
    else if (name == "proper_premises")
      sel.proper_premises = true;
    else if (name == "keys")
      sel.keys = true;
    else if (name == "passkeys")
      sel.passkeys = true;
    else if (name == "linearity")
      sel.linearity = true;
    else if (name == "distributivity")
      sel.distributivity = true;
    else
      throw InputError("unknown metric '" + std::string(name) + "'");
    start = end + 1;
  }
  return sel;
}

namespace {

void add_class(MetricValues& out, const std::string& name, const std::vector<AttrSet>& sets) {
  out[{name, std::nullopt}] = static_cast<double>(sets.size());
  for (const auto& s : sets) out[{name, s.count()}] += 1.0;
}

}  // namespace

MetricValues evaluate_metrics(const FormalContext& ctx, const MetricSelection& metrics) {
  ClassSelection which;
  which.intents = metrics.intents || metrics.linearity || metrics.distributivity;
  which.pseudo_intents = metrics.pseudo_intents;
  which.keys = metrics.keys;
  which.passkeys = metrics.passkeys;
  which.proper_premises = metrics.proper_premises;
  const auto sets = enumerate_all(ctx, which);

  MetricValues out;
  if (metrics.intents) add_class(out, "intents", sets.intents);
  if (metrics.pseudo_intents) add_class(out, "pseudo_intents", sets.pseudo_intents);
  if (metrics.proper_premises) add_class(out, "proper_premises", sets.proper_premises);
  if (metrics.keys) add_class(out, "keys", sets.keys);
  if (metrics.passkeys) add_class(out, "passkeys", sets.passkeys);
  if (metrics.linearity || metrics.distributivity) {
    const auto lat = build_lattice(sets.intents);
    const auto pairs = count_pairs(lat);
    const auto ratio = [&](std::size_t hits) {
      return pairs.pairs == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(pairs.pairs);
    };
    if (metrics.linearity) out[{"linearity", std::nullopt}] = ratio(pairs.comparable);
    if (metrics.distributivity) out[{"distributivity", std::nullopt}] = ratio(pairs.union_closed);
  }
  return out;
}

TrialRun run_trials(const FormalContext& ctx, RandomizationStrategy strategy, std::size_t n_trials,
                    std::uint64_t seed, const MetricSelection& metrics, unsigned threads) {
  if (n_trials == 0) throw InputError("at least one trial is required");
  const MetricValues real = evaluate_metrics(ctx, metrics);

  std::vector<MetricValues> per_trial(n_trials);
  TrialRun run;
  run.digests.resize(n_trials);

  auto run_one = [&](std::size_t i) {
    const std::uint64_t s = derive_seed(seed, i);
    const FormalContext shuffled = randomize(ctx, strategy, s);
    per_trial[i] = evaluate_metrics(shuffled, metrics);
    TrialDigest& d = run.digests[i];
    d.trial = i;
    d.seed = s;
    d.crosses = shuffled.cross_count();
    for (std::size_t m = 0; m < shuffled.num_attributes(); ++m) d.column_sums.push_back(shuffled.column(m).count());
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < n_trials; i = next++) run_one(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_trials;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_trials));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::set<MetricKey> keys;
  for (const auto& [k, v] : real) keys.insert(k);
  for (const auto& values : per_trial)
    for (const auto& [k, v] : values) keys.insert(k);

  for (const auto& key : keys) {
    TrialSummary s;
    s.metric = key.metric;
    s.size = key.size;
    auto it = real.find(key);
    s.real_value = it == real.end() ? 0.0 : it->second;
    for (const auto& values : per_trial) {
      auto jt = values.find(key);
      s.trial_values.push_back(jt == values.end() ? 0.0 : jt->second);
    }
    s.quartiles = summarize(s.trial_values);
    run.summaries.push_back(std::move(s));
  }
  return run;
}

}  // namespace fca
