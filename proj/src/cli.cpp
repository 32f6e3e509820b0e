#include "binmosaic/cli.hpp"

#include "binmosaic/analysis.hpp"
#include "binmosaic/model.hpp"
#include "binmosaic/mosaic.hpp"
#include "binmosaic/render.hpp"
#include "binmosaic/spec_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace binmosaic::cli {

namespace {

// Bad input that should exit with kExitUsage.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // Chain source: a spec file, or inline parameters.
  std::string spec_path;
  std::string initial = "1/2";
  std::string q0 = "1/3";
  std::string q1 = "2/3";
  std::string steps;
  std::size_t n_vars = 0;

  std::uint64_t seed = 0;
  std::uint64_t denominator_bound = 100;
  std::string preset;
  std::uint64_t samples = 100000;
  double tolerance = 0.02;

  std::string out_svg;
  std::string out_report;
  std::string out_spec;
  std::string out_mosaic;

  std::string order;
  std::string policy = "vertical-first";
  int canvas = 512;
  std::string stroke = "1";
  std::string fill = "none";
  int decimals = 6;
  std::string palette;
  std::string title;
};

Rational parse_decimal(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    return Rational::parse(text);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational::parse(text);
  }
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("malformed decimal: \"" + text + "\"");
  }
  const bool negative = !whole.empty() && whole[0] == '-';
  const std::string digits = (whole.empty() || whole == "-" || whole == "+" ? std::string("0") : whole) + frac;
  Rational value = Rational::parse(digits) /
                   Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size())), 1);
  if (negative && value.sign() > 0) {
    value = -value;
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
  if (!out.flush()) {
    throw std::runtime_error("failed writing " + path);
  }
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

void check_distinct_outputs(const RunConfig& cfg) {
  std::vector<std::string> paths;
  for (const auto* p : {&cfg.out_svg, &cfg.out_report, &cfg.out_spec, &cfg.out_mosaic}) {
    if (!p->empty()) {
      paths.push_back(*p);
    }
  }
  std::sort(paths.begin(), paths.end());
  if (std::adjacent_find(paths.begin(), paths.end()) != paths.end()) {
    throw InputError("output paths must be distinct");
  }
}

ChainSpec load_spec(const RunConfig& cfg) {
  try {
    if (!cfg.spec_path.empty()) {
      return parse_chain_spec(read_file(cfg.spec_path));
    }
    const Rational initial = Rational::parse(cfg.initial);
    if (!cfg.steps.empty()) {
      std::vector<std::array<Rational, 2>> steps;
      for (const auto& item : split(cfg.steps, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
          throw std::invalid_argument("step \"" + item + "\" is not q0:q1");
        }
        steps.push_back({Rational::parse(parts[0]), Rational::parse(parts[1])});
      }
      return chain_spec_new(initial, steps);
    }
    const std::size_t n = cfg.n_vars == 0 ? 3 : cfg.n_vars;
    return homogeneous_chain(n, initial, Rational::parse(cfg.q0), Rational::parse(cfg.q1));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::vector<std::size_t> parse_order(const RunConfig& cfg) {
  std::vector<std::size_t> order;
  if (cfg.order.empty()) {
    return order;
  }
  for (const auto& item : split(cfg.order, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      order.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError("malformed --order entry \"" + item + "\"");
    }
  }
  return order;
}

OrientationPolicy parse_policy(const RunConfig& cfg) {
  if (cfg.policy == "vertical-first") {
    return OrientationPolicy::vertical_first;
  }
  if (cfg.policy == "horizontal-first") {
    return OrientationPolicy::horizontal_first;
  }
  throw InputError("unknown policy \"" + cfg.policy + "\"");
}

Style make_style(const RunConfig& cfg) {
  Style style;
  style.canvas_px = cfg.canvas;
  style.decimal_places = cfg.decimals;
  try {
    style.stroke_px = parse_decimal(cfg.stroke);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (cfg.fill == "leaf-shade") {
    style.fill = FillMode::leaf_shade;
  } else if (cfg.fill != "none") {
    throw InputError("unknown fill mode \"" + cfg.fill + "\"");
  }
  if (!cfg.palette.empty() && cfg.palette != "auto") {
    style.palette = split(cfg.palette, ',');
  }
  if (!cfg.title.empty()) {
    style.title = cfg.title;
  }
  try {
    style.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return style;
}

Mosaic make_mosaic(const JointTable& joint, const RunConfig& cfg) {
  try {
    return build_mosaic(joint, parse_order(cfg), parse_policy(cfg));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Fingerprint scoped_fingerprint(const JointTable& joint) {
  if (joint.n_vars() < 2) {
    return Fingerprint{joint.n_vars(), FingerprintScope::full, {}};
  }
  return fingerprint(joint, joint.n_vars() <= kFullFingerprintMaxVars ? FingerprintScope::full
                                                                      : FingerprintScope::adjacent);
}

std::string chain_report(const ChainSpec& spec, const JointTable& joint) {
  ReportMetadata meta = describe_joint(joint);
  meta.chain = spec;
  return render_report(scoped_fingerprint(joint), verify_markov(joint), meta);
}

// Shared by chain, random and render: mosaic outputs for a chain.
void write_mosaic_outputs(const JointTable& joint, const RunConfig& cfg, std::ostream& out,
                          bool svg_to_stdout) {
  const Style style = make_style(cfg);
  const Mosaic mosaic = make_mosaic(joint, cfg);
  if (!cfg.out_svg.empty() || svg_to_stdout) {
    emit(cfg.out_svg, render_svg(mosaic, style), out);
  }
  if (!cfg.out_mosaic.empty()) {
    write_file(cfg.out_mosaic, render_mosaic_json(mosaic));
  }
}

int cmd_chain(const RunConfig& cfg, std::ostream& out) {
  const ChainSpec spec = load_spec(cfg);
  const JointTable joint = chain_joint(spec);
  write_mosaic_outputs(joint, cfg, out, false);
  emit(cfg.out_report, chain_report(spec, joint), out);
  return kExitOk;
}

int cmd_random(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_vars == 0) {
    throw InputError("--n must be at least 1");
  }
  if (cfg.denominator_bound < 2) {
    throw InputError("--denominator-bound must be at least 2");
  }
  ChainSpec spec = [&] {
    try {
      return random_chain(cfg.n_vars, Seed{cfg.seed}, cfg.denominator_bound);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }();
  const JointTable joint = chain_joint(spec);
  if (!cfg.out_spec.empty()) {
    write_file(cfg.out_spec, dump_chain_spec(spec));
  }
  write_mosaic_outputs(joint, cfg, out, false);
  emit(cfg.out_report, chain_report(spec, joint), out);
  return kExitOk;
}

int cmd_ternary(const RunConfig& cfg, std::ostream& out) {
  static const std::map<std::string, JointTable (*)()> presets = {
      {"chain-bac", &preset_chain_bac},
      {"common-cause", &preset_common_cause},
      {"common-effect", &preset_common_effect},
  };
  const auto it = presets.find(cfg.preset);
  if (it == presets.end()) {
    std::string names;
    for (const auto& [name, fn] : presets) {
      names += (names.empty() ? "" : ", ") + name;
    }
    throw InputError("unknown preset \"" + cfg.preset + "\"; valid presets: " + names);
  }
  const JointTable joint = it->second();
  const Style style = make_style(cfg);
  const Mosaic mosaic = make_mosaic(joint, cfg);
  if (!cfg.out_svg.empty()) {
    write_file(cfg.out_svg, render_svg(mosaic, style));
  }
  if (!cfg.out_mosaic.empty()) {
    write_file(cfg.out_mosaic, render_mosaic_json(mosaic));
  }
  ReportMetadata meta = describe_joint(joint);
  meta.preset = cfg.preset;
  meta.variable_names = {"A", "B", "C"};
  emit(cfg.out_report, render_report(fingerprint(joint), verify_markov(joint), meta), out);
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const ChainSpec spec = load_spec(cfg);
  emit(cfg.out_report, chain_report(spec, chain_joint(spec)), out);
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples == 0) {
    throw InputError("--samples must be at least 1");
  }
  if (!(cfg.tolerance >= 0.0)) {
    throw InputError("--tolerance must be nonnegative");
  }
  const ChainSpec spec = load_spec(cfg);
  const JointTable joint = chain_joint(spec);
  const Mosaic mosaic = make_mosaic(joint, cfg);
  const McReport report = monte_carlo_check(mosaic, joint, cfg.samples, Seed{cfg.seed});
  emit(cfg.out_report, render_mc_report(report, cfg.tolerance), out);
  return report.max_deviation() <= cfg.tolerance ? kExitOk : kExitCheckFailed;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  const ChainSpec spec = load_spec(cfg);
  write_mosaic_outputs(chain_joint(spec), cfg, out, true);
  return kExitOk;
}

void add_spec_source(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--spec", cfg.spec_path, "Chain spec JSON file");
  cmd->add_option("--initial", cfg.initial, "P(X_0 = 1) for an inline chain");
  cmd->add_option("--q0", cfg.q0, "P(next = 0 | current = 0) at every step");
  cmd->add_option("--q1", cfg.q1, "P(next = 0 | current = 1) at every step");
  cmd->add_option("--steps", cfg.steps, "Per-step tables as q0:q1,q0:q1,...");
  cmd->add_option("--n", cfg.n_vars, "Number of variables for a homogeneous inline chain");
}

void add_layout(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--order", cfg.order, "Split order as a comma-separated permutation");
  cmd->add_option("--policy", cfg.policy, "vertical-first | horizontal-first");
}

void add_style(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--canvas", cfg.canvas, "Canvas size in px");
  cmd->add_option("--stroke", cfg.stroke, "Stroke width in px");
  cmd->add_option("--fill", cfg.fill, "none | leaf-shade");
  cmd->add_option("--decimals", cfg.decimals, "Decimal places in SVG coordinates");
  cmd->add_option("--palette", cfg.palette, "auto, or comma-separated colors");
  cmd->add_option("--title", cfg.title, "SVG title");
}

void add_outputs(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out-svg", cfg.out_svg, "SVG output path");
  cmd->add_option("--out-report", cfg.out_report, "Report output path (default: stdout)");
  cmd->add_option("--out-mosaic", cfg.out_mosaic, "Mosaic dump JSON path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact area-proportional mosaics of binary Markov chains"};
  app.name("binmosaic");
  app.require_subcommand(1, 1);

  auto* chain = app.add_subcommand("chain", "Chain spec -> SVG and analysis report");
  add_spec_source(chain, cfg);
  add_layout(chain, cfg);
  add_style(chain, cfg);
  add_outputs(chain, cfg);

  auto* random = app.add_subcommand("random", "Seeded random chain -> spec, SVG and report");
  random->add_option("--n", cfg.n_vars, "Number of variables")->required();
  random->add_option("--seed", cfg.seed, "PRNG seed");
  random->add_option("--denominator-bound", cfg.denominator_bound, "Largest denominator drawn");
  random->add_option("--out-spec", cfg.out_spec, "Spec JSON output path");
  add_layout(random, cfg);
  add_style(random, cfg);
  add_outputs(random, cfg);

  auto* ternary = app.add_subcommand("ternary", "Three-variable preset -> SVG and report");
  ternary->add_option("preset", cfg.preset, "common-effect | common-cause | chain-bac")->required();
  add_layout(ternary, cfg);
  add_style(ternary, cfg);
  add_outputs(ternary, cfg);

  auto* analyze = app.add_subcommand("analyze", "Chain spec -> analysis report");
  add_spec_source(analyze, cfg);
  analyze->add_option("--out-report", cfg.out_report, "Report output path (default: stdout)");

  auto* sample = app.add_subcommand("sample", "Monte Carlo check of mosaic areas");
  add_spec_source(sample, cfg);
  add_layout(sample, cfg);
  sample->add_option("--samples", cfg.samples, "Number of uniform points");
  sample->add_option("--seed", cfg.seed, "PRNG seed");
  sample->add_option("--tolerance", cfg.tolerance, "Largest allowed |empirical - exact|");
  sample->add_option("--out-report", cfg.out_report, "Report output path (default: stdout)");

  auto* render = app.add_subcommand("render", "Chain spec -> SVG");
  add_spec_source(render, cfg);
  add_layout(render, cfg);
  add_style(render, cfg);
  render->add_option("--out-svg", cfg.out_svg, "SVG output path (default: stdout)");
  render->add_option("--out-mosaic", cfg.out_mosaic, "Mosaic dump JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_distinct_outputs(cfg);
    if (chain->parsed()) return cmd_chain(cfg, out);
    if (random->parsed()) return cmd_random(cfg, out);
    if (ternary->parsed()) return cmd_ternary(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (sample->parsed()) return cmd_sample(cfg, out);
    if (render->parsed()) return cmd_render(cfg, out);
  } catch (const InputError& e) {
    err << "binmosaic: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "binmosaic: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace binmosaic::cli
