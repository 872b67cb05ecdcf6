// fca-charsets: characteristic attribute sets, lattice indices and
// randomization trials for binary formal contexts.
//
// Exit codes: 0 ok, 2 input error, 3 capacity exceeded, 4 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fca/charsets.hpp"
#include "fca/context.hpp"
#include "fca/descmap.hpp"
#include "fca/errors.hpp"
#include "fca/randomize.hpp"
#include "fca/report.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 2, kCapacityError = 3, kInternalError = 4 };

struct InputOptions {
  std::string path;
  std::string format;  // cxt | csv | "" = by extension
  std::optional<std::size_t> max_attrs;
  std::size_t label_cols = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fca::InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw fca::InputError("cannot write '" + out_path + "'");
  out << text;
}

fca::FormalContext keep_first_attributes(const fca::FormalContext& ctx, std::size_t n) {
  if (n >= ctx.num_attributes()) return ctx;
  std::vector<std::string> names(ctx.attribute_names().begin(),
                                 ctx.attribute_names().begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<fca::AttrSet> rows;
  for (const auto& r : ctx.rows()) rows.push_back(r.prefix(n));
  return fca::FormalContext(ctx.object_names(), std::move(names), std::move(rows));
}

fca::FormalContext load(const InputOptions& opt) {
  std::string format = opt.format;
  if (format.empty()) {
    const auto ext = std::filesystem::path(opt.path).extension().string();
    format = ext == ".csv" ? "csv" : "cxt";
  }
  const std::string text = read_file(opt.path);
  if (format == "csv") return fca::parse_dense_csv(text, opt.max_attrs, opt.label_cols);
  auto ctx = fca::parse_burmeister(text);
  return opt.max_attrs ? keep_first_attributes(ctx, *opt.max_attrs) : ctx;
}

std::string dataset_name(const InputOptions& opt) { return std::filesystem::path(opt.path).stem().string(); }

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("input", opt.path, "Context file (.cxt Burmeister or .csv dense 0/1)")->required();
  cmd->add_option("--format", opt.format, "Input format; inferred from the extension when omitted")
      ->check(CLI::IsMember({"cxt", "csv"}));
  cmd->add_option("--max-attrs", opt.max_attrs, "Keep only the first N attributes at ingestion");
  cmd->add_option("--label-cols", opt.label_cols, "Leading non-attribute CSV columns (first names the object)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic attribute sets of formal contexts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fca::kEngineVersion));

  InputOptions input;
  std::string out_path;
  std::string emit = "json";

  auto* analyze = app.add_subcommand("analyze", "Count every characteristic class by size; lattice indices");
  add_input_options(analyze, input);
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");
  analyze->add_option("--emit", emit, "Report encoding")->check(CLI::IsMember({"json", "csv"}));

  std::string cxt_path;
  auto* describe = app.add_subcommand("describe", "Grouped descriptions context and description lattice context");
  add_input_options(describe, input);
  describe->add_option("--out", out_path, "Write the grouped CSV here instead of stdout");
  describe->add_option("--cxt", cxt_path, "Also write the description lattice context (Burmeister) here");

  std::string strategy = "density";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string metrics = "all";
  unsigned threads = 0;
  auto* randomize = app.add_subcommand("randomize", "Real-vs-randomized metric distributions");
  add_input_options(randomize, input);
  randomize->add_option("--strategy", strategy, "density or column")->check(CLI::IsMember({"density", "column"}));
  randomize->add_option("--trials", trials, "Number of randomized contexts")->check(CLI::PositiveNumber);
  randomize->add_option("--seed", seed, "Base seed (u64)");
  randomize->add_option("--metrics", metrics,
                        "Comma list of intents,pseudo_intents,proper_premises,keys,passkeys,linearity,distributivity "
                        "or all");
  randomize->add_option("--threads", threads, "Worker threads (0 = all cores); output does not depend on it");
  randomize->add_option("--out", out_path, "Write the report here instead of stdout");
  randomize->add_option("--emit", emit, "json report or plot-ready csv")->check(CLI::IsMember({"json", "csv"}));

  auto* indices = app.add_subcommand("indices", "Linearity and distributivity of the concept lattice");
  add_input_options(indices, input);
  indices->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    const auto ctx = load(input);
    const auto name = dataset_name(input);
    if (analyze->parsed()) {
      const auto report = fca::analyze(ctx, name);
      write_output(out_path, emit == "csv" ? fca::to_csv(report) : fca::to_json(report).dump(2) + "\n");
    } else if (describe->parsed()) {
      const auto rows = fca::group_descriptions(ctx);
      write_output(out_path, fca::write_description_csv(rows));
      if (!cxt_path.empty()) {
        std::ofstream out(cxt_path, std::ios::binary);
        if (!out) throw fca::InputError("cannot write '" + cxt_path + "'");
        out << fca::write_burmeister(fca::export_description_lattice_context(rows));
      }
    } else if (randomize->parsed()) {
      const fca::TrialConfig config{name, fca::parse_strategy(strategy), trials, seed};
      const auto run = fca::run_trials(ctx, config.strategy, trials, seed, fca::parse_metrics(metrics), threads);
      write_output(out_path, emit == "csv" ? fca::to_csv(run) : fca::to_json(config, ctx, run).dump(2) + "\n");
    } else if (indices->parsed()) {
      write_output(out_path, fca::indices_json(ctx, name).dump(2) + "\n");
    }
  } catch (const fca::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const fca::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kCapacityError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}
