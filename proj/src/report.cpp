#include "fca/report.hpp"

#include <charconv>

#include "fca/charsets.hpp"
#include "fca/lattice.hpp"

namespace fca {

namespace {

// Shortest round-trip representation; identical on every run.
std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

ClassStats stats_of(const std::vector<AttrSet>& sets) {
  ClassStats s;
  s.total = sets.size();
  for (const auto& x : sets) ++s.by_size[x.count()];
  return s;
}

nlohmann::ordered_json dataset_json(const std::string& name, const FormalContext& ctx) {
  return {{"name", name},
          {"objects", ctx.num_objects()},
          {"attributes", ctx.num_attributes()},
          {"crosses", ctx.cross_count()},
          {"density", ctx.density()}};
}

nlohmann::ordered_json header(std::string_view kind) {
  return {{"schema_version", kSchemaVersion}, {"engine_version", kEngineVersion}, {"kind", kind}};
}

}  // namespace

AnalysisReport analyze(const FormalContext& ctx, std::string dataset) {
  AnalysisReport r;
  r.dataset = std::move(dataset);
  r.objects = ctx.num_objects();
  r.attributes = ctx.num_attributes();
  r.crosses = ctx.cross_count();
  r.density = ctx.density();

  const auto sets = enumerate_all(ctx);
  r.classes["intents"] = stats_of(sets.intents);
  r.classes["pseudo_intents"] = stats_of(sets.pseudo_intents);
  r.classes["proper_premises"] = stats_of(sets.proper_premises);
  r.classes["keys"] = stats_of(sets.keys);
  r.classes["passkeys"] = stats_of(sets.passkeys);

  const auto lat = build_lattice(sets.intents);
  const auto pairs = count_pairs(lat);
  r.concepts = lat.size();
  if (pairs.pairs > 0) {
    r.linearity = static_cast<double>(pairs.comparable) / static_cast<double>(pairs.pairs);
    r.distributivity = static_cast<double>(pairs.union_closed) / static_cast<double>(pairs.pairs);
  }
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  auto j = header("analysis");
  j["dataset"] = {{"name", report.dataset},
                  {"objects", report.objects},
                  {"attributes", report.attributes},
                  {"crosses", report.crosses},
                  {"density", report.density}};
  auto classes = nlohmann::ordered_json::object();
  for (const auto& [name, stats] : report.classes) {
    auto sizes = nlohmann::ordered_json::object();
    for (const auto& [size, count] : stats.by_size) sizes[std::to_string(size)] = count;
    classes[name] = {{"total", stats.total}, {"by_size", sizes}};
  }
  j["classes"] = classes;
  j["concepts"] = report.concepts;
  j["linearity"] = report.linearity;
  j["distributivity"] = report.distributivity;
  return j;
}

std::string to_csv(const AnalysisReport& report) {
  std::string out = "class,size,count\n";
  for (const auto& [name, stats] : report.classes) {
    for (const auto& [size, count] : stats.by_size)
      out += name + "," + std::to_string(size) + "," + std::to_string(count) + "\n";
    out += name + ",total," + std::to_string(stats.total) + "\n";
  }
  out += "linearity,," + number(report.linearity) + "\n";
  out += "distributivity,," + number(report.distributivity) + "\n";
  return out;
}

nlohmann::ordered_json indices_json(const FormalContext& ctx, std::string dataset) {
  const auto lat = build_lattice(enumerate_intents(ctx));
  const auto pairs = count_pairs(lat);
  auto j = header("indices");
  j["dataset"] = dataset_json(dataset, ctx);
  j["concepts"] = lat.size();
  j["pairs"] = pairs.pairs;
  j["comparable_pairs"] = pairs.comparable;
  j["union_closed_pairs"] = pairs.union_closed;
  j["linearity"] = pairs.pairs == 0 ? 1.0 : static_cast<double>(pairs.comparable) / static_cast<double>(pairs.pairs);
  j["distributivity"] =
      pairs.pairs == 0 ? 1.0 : static_cast<double>(pairs.union_closed) / static_cast<double>(pairs.pairs);
  return j;
}

nlohmann::ordered_json to_json(const TrialConfig& config, const FormalContext& ctx, const TrialRun& run) {
  auto j = header("trials");
  j["dataset"] = dataset_json(config.dataset, ctx);
  j["strategy"] = to_string(config.strategy);
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["rng"] = Rng::kName;
  auto metrics = nlohmann::ordered_json::array();
  for (const auto& s : run.summaries) {
    nlohmann::ordered_json m;
    m["metric"] = s.metric;
    m["size"] = s.size ? nlohmann::ordered_json(*s.size) : nlohmann::ordered_json(nullptr);
    m["real"] = s.real_value;
    m["quartiles"] = {{"min", s.quartiles.min},
                      {"q1", s.quartiles.q1},
                      {"median", s.quartiles.median},
                      {"q3", s.quartiles.q3},
                      {"max", s.quartiles.max}};
    m["values"] = s.trial_values;
    metrics.push_back(std::move(m));
  }
  j["metrics"] = std::move(metrics);
  auto digests = nlohmann::ordered_json::array();
  for (const auto& d : run.digests)
    digests.push_back({{"trial", d.trial}, {"seed", d.seed}, {"crosses", d.crosses}, {"column_sums", d.column_sums}});
  j["digests"] = std::move(digests);
  return j;
}

std::string to_csv(const TrialRun& run) {
  std::string out = "metric,size,real,min,q1,median,q3,max\n";
  for (const auto& s : run.summaries) {
    out += s.metric + "," + (s.size ? std::to_string(*s.size) : std::string()) + "," + number(s.real_value) + "," +
           number(s.quartiles.min) + "," + number(s.quartiles.q1) + "," + number(s.quartiles.median) + "," +
           number(s.quartiles.q3) + "," + number(s.quartiles.max) + "\n";
  }
  return out;
}

}  // namespace fca
