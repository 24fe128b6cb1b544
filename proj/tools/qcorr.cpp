// qcorr: command-line front end for the correlation measures.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain or validation
// error, 4 I/O error.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcorr/bloch.hpp"
#include "qcorr/entanglement.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/optimizer.hpp"
#include "qcorr/report.hpp"
#include "qcorr/states.hpp"

namespace {

using namespace qcorr;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

std::string num(double v) { return report::format_number(v); }
std::string measure_value(double v) { return num(std::clamp(v, 0.0, 1.0)); }

// "2x8" -> (2, 8).
std::pair<int, int> parse_split(const std::string& text) {
  const auto x = text.find('x');
  int m = 0, n = 0;
  char tail = 0;
  if (x == std::string::npos || std::sscanf(text.c_str(), "%dx%d%c", &m, &n, &tail) != 2)
    throw ParseError("bad --split '" + text + "', expected MxN");
  return {m, n};
}

struct Loaded {
  StateSpec spec;
  DensityMatrix rho;
};

Loaded load(const std::string& text, const std::string& split) {
  auto spec = StateSpec::parse(text);
  spec.check();
  auto rho = make_state(spec);
  if (!split.empty()) {
    const auto [m, n] = parse_split(split);
    rho = reinterpret(rho, m, n);
  }
  return {std::move(spec), std::move(rho)};
}

// Writes to --out, or stdout for "-". The file is replaced only once the
// content is complete.
void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

void cmd_info(const std::string& text, const std::string& split) {
  const auto [spec, rho] = load(text, split);
  const auto v = validate(rho);
  std::cout << "state " << spec.to_string() << '\n'
            << "dims " << rho.dim_a() << 'x' << rho.dim_b() << '\n'
            << "hermiticity_defect " << num(v.hermiticity_defect) << '\n'
            << "trace_defect " << num(v.trace_defect) << '\n'
            << "min_eigenvalue " << num(v.min_eigenvalue) << '\n';

  const auto spaces = marginal_eigenspaces(rho);
  std::cout << "marginal_eigenvalues";
  for (const auto& s : spaces)
    for (Eigen::Index k = 0; k < s.basis.cols(); ++k) std::cout << ' ' << num(s.value);
  std::cout << '\n';
  if (static_cast<int>(spaces.size()) == rho.dim_a()) {
    std::cout << "marginal non-degenerate\n";
  } else {
    std::cout << "marginal degenerate multiplicities";
    for (const auto& s : spaces) std::cout << ' ' << s.basis.cols();
    std::cout << '\n';
  }

  std::cout << "ppt " << (is_ppt(rho) ? "true" : "false") << '\n'
            << "negativity " << num(negativity(rho)) << '\n';
  if (spec.family == Family::Horodecki3x3)
    std::cout << "regime " << regime_name(classify_horodecki_3x3(spec.param("beta"))) << '\n';

  const auto bf = bloch::decompose(rho);
  std::cout << "norm_x " << num(bf.x.norm()) << '\n'
            << "norm_y " << num(bf.y.norm()) << '\n'
            << "norm_t " << num(bf.t.norm()) << '\n';
}

struct MeasureOptions {
  std::string which = "both";
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
  bool refine = false;
};

void print_line(const char* measure, const char* source, const MeasureEstimate& e,
                const std::string& extra = {}) {
  std::cout << measure << ' ' << source << ' ' << kind_name(e.kind) << ' ' << measure_value(e.value);
  if (!extra.empty()) std::cout << ' ' << extra;
  std::cout << '\n';
}

void cmd_measure(const std::string& text, const std::string& split, const MeasureOptions& opt) {
  const auto [spec, rho] = load(text, split);
  const auto ev = report::evaluate(spec, rho);
  std::cout << "state " << spec.to_string() << " dims " << rho.dim_a() << 'x' << rho.dim_b() << '\n';

  // Name of the reference measurement behind a bound, for the record.
  const auto refs = report::reference_measurements(spec, rho);
  auto ref_name = [&](const std::optional<MeasureEstimate>& e) -> std::string {
    if (!e || !e->witness) return {};
    for (const auto& r : refs)
      if (r.measurement.basis() == e->witness->basis()) return "measurement=" + r.name;
    return {};
  };

  SamplerConfig cfg;
  if (opt.trials) cfg.trials = *opt.trials;
  cfg.seed = opt.seed;
  cfg.refine = opt.refine;
  const std::string sample_tag = "trials=" + std::to_string(cfg.trials) + " seed=" + std::to_string(cfg.seed) +
                                 " refine=" + (cfg.refine ? "true" : "false");

  if (opt.which == "gd" || opt.which == "both") {
    if (ev.closed) print_line("gd", "closed-form", ev.closed->gd);
    print_line("gd", "bound", ev.gd_lower);
    if (ev.gd_upper) print_line("gd", "reference", *ev.gd_upper, ref_name(ev.gd_upper));
    if (ev.gd_exact) print_line("gd", "computed", *ev.gd_exact);
    if (opt.trials) print_line("gd", "sampler", {sample_gd(rho, cfg).best_value, EstimateKind::Sampled, {}}, sample_tag);
  }
  if (opt.which == "min" || opt.which == "both") {
    if (ev.closed) print_line("min", "closed-form", ev.closed->min);
    print_line("min", "bound", ev.min_upper);
    if (ev.min_lower) print_line("min", "reference", *ev.min_lower, ref_name(ev.min_lower));
    if (ev.min_exact) print_line("min", "computed", *ev.min_exact);
    if (opt.trials)
      print_line("min", "sampler", {sample_min(rho, cfg).best_value, EstimateKind::Sampled, {}}, sample_tag);
  }
}

struct SweepOptions {
  std::string param;
  double from = 0, to = 0, step = 0;
  std::string out = "-";
  std::string format = "csv";
};

void cmd_sweep(const std::string& text, const SweepOptions& opt) {
  const auto base = StateSpec::parse(text);
  const auto rows = report::sweep(base, opt.param, opt.from, opt.to, opt.step);
  std::ostringstream buf;
  if (opt.format == "csv")
    report::write_sweep_csv(buf, opt.param, rows);
  else
    report::write_sweep_json(buf, base, opt.param, rows);
  emit(opt.out, buf.str());
}

struct Figure2Options {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  int bins = 60;
  std::string out = "-";
  std::string format = "csv";
};

void cmd_figure2(const Figure2Options& opt) {
  const auto data = report::figure2(opt.trials, opt.seed, opt.bins);
  std::ostringstream buf;
  if (opt.format == "csv")
    report::write_figure2_csv(buf, data);
  else
    report::write_figure2_json(buf, data);
  emit(opt.out, buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric discord and measurement-induced nonlocality of bipartite states"};
  app.require_subcommand(1);
  const std::string spec_help =
      "state, e.g. tiles, horodecki2x4:a=0.5, werner:m=4,z=0.3 (families: horodecki2x4, horodecki3x3, "
      "horodecki4x4key, pyramid, tiles, benatti, werner, isotropic)";

  std::string spec_text, split;

  auto* info = app.add_subcommand("info", "Dimensions, validation, marginal spectrum, PPT, Bloch norms");
  info->add_option("spec", spec_text, spec_help)->required();
  info->add_option("--split", split, "reinterpret the state as MxN, e.g. 2x8");

  MeasureOptions mopt;
  std::uint64_t trials = 0;
  auto* measure = app.add_subcommand("measure", "Bounds, exact values and sampled estimates");
  measure->add_option("spec", spec_text, spec_help)->required();
  measure->add_option("which", mopt.which, "gd, min or both")
      ->check(CLI::IsMember({"gd", "min", "both"}))
      ->capture_default_str();
  auto* trials_opt = measure->add_option("--trials", trials, "Monte Carlo trials (sampling is off without it)")
                         ->check(CLI::PositiveNumber);
  measure->add_option("--seed", mopt.seed, "sampler seed")->capture_default_str();
  measure->add_flag("--refine", mopt.refine, "local refinement after sampling");
  measure->add_option("--split", split, "reinterpret the state as MxN, e.g. 2x8");

  SweepOptions sopt;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a family on a parameter grid");
  sweep->add_option("spec", spec_text, "base state; the swept parameter may be omitted")->required();
  sweep->add_option("--param", sopt.param, "parameter to sweep")->required();
  sweep->add_option("--from", sopt.from)->required();
  sweep->add_option("--to", sopt.to)->required();
  sweep->add_option("--step", sopt.step)->required();
  sweep->add_option("--out", sopt.out, "output path, - for stdout")->capture_default_str();
  sweep->add_option("--format", sopt.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  Figure2Options fopt;
  auto* figure2 = app.add_subcommand("figure2", "Histogram of sampled GD values for the Tiles state");
  figure2->add_option("--trials", fopt.trials)->check(CLI::PositiveNumber)->capture_default_str();
  figure2->add_option("--seed", fopt.seed)->capture_default_str();
  figure2->add_option("--bins", fopt.bins)->check(CLI::PositiveNumber)->capture_default_str();
  figure2->add_option("--out", fopt.out, "output path, - for stdout")->capture_default_str();
  figure2->add_option("--format", fopt.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) {
      cmd_info(spec_text, split);
    } else if (*measure) {
      if (*trials_opt) mopt.trials = trials;
      cmd_measure(spec_text, split, mopt);
    } else if (*sweep) {
      cmd_sweep(spec_text, sopt);
    } else if (*figure2) {
      cmd_figure2(fopt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DegenerateMarginal& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
