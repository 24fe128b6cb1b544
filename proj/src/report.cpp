#include "qcorr/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/states.hpp"

namespace qcorr::report {
namespace {

Measurement from_real_columns(std::initializer_list<std::initializer_list<double>> columns,
                              int dim) {
  CMatrix lead(dim, static_cast<Eigen::Index>(columns.size()));
  Eigen::Index c = 0;
  for (const auto& col : columns) {
    Eigen::Index r = 0;
    for (double v : col) lead(r++, c) = v;
    lead.col(c).normalize();
    ++c;
  }
  return Measurement::complete(lead);
}

// Reports clamp to the normalized range; internal comparisons never do.
double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

std::string opt_number(const std::optional<MeasureEstimate>& e) {
  return e ? format_number(clamp_unit(e->value)) : std::string();
}

nlohmann::json opt_json(const std::optional<MeasureEstimate>& e) {
  return e ? nlohmann::json(clamp_unit(e->value)) : nlohmann::json(nullptr);
}

}  // namespace

std::vector<NamedMeasurement> reference_measurements(const StateSpec& spec,
                                                     const DensityMatrix& rho) {
  std::vector<NamedMeasurement> out;
  const int m = rho.dim_a();
  out.push_back({"computational", Measurement::computational(m)});
  if (m == 3 && spec.family == Family::Horodecki3x3)
    out.push_back({"trial-p", from_real_columns({{1, 1, 1}, {1, 1, -2}}, 3)});
  if (m == 3 && spec.family == Family::Pyramid)
    out.push_back(
        {"witness-p", from_real_columns({{std::sqrt(3.0), 1, std::sqrt(2.0)}, {0, -std::sqrt(2.0), 1}}, 3)});
  if (m == 4 && spec.family == Family::Horodecki4x4Key)
    out.push_back({"plus-minus",
                   from_real_columns({{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}}, 4)});
  return out;
}

Evaluation evaluate(const StateSpec& spec) { return evaluate(spec, make_state(spec)); }

Evaluation evaluate(const StateSpec& spec, const DensityMatrix& rho) {
  const auto native = make_state(spec);
  const bool native_split = native.dim_a() == rho.dim_a() && native.dim_b() == rho.dim_b();

  Evaluation ev{gd_lower_bound(rho), std::nullopt, std::nullopt, min_upper_bound(rho),
                std::nullopt,        std::nullopt, std::nullopt, negativity(rho),
                is_ppt(rho),         std::nullopt};

  const CMatrix rho_a = marginal(rho);
  for (auto& ref : reference_measurements(spec, rho)) {
    const double d = normalized_distance(rho, ref.measurement);
    if (!ev.gd_upper || d < ev.gd_upper->value)
      ev.gd_upper = MeasureEstimate{d, EstimateKind::UpperBound, ref.measurement};
    if (preserves_marginal(ref.measurement, rho_a) && (!ev.min_lower || d > ev.min_lower->value))
      ev.min_lower = MeasureEstimate{d, EstimateKind::LowerBound, ref.measurement};
  }

  if (rho.dim_a() == 2)
    ev.gd_exact = gd_exact_2xn(rho);
  else if (rho.dim_a() == 3)
    ev.gd_exact = gd_candidate_3x3(rho);
  if (!ev.gd_exact && ev.gd_upper && ev.gd_upper->value - ev.gd_lower.value <= kSandwichTol)
    ev.gd_exact = MeasureEstimate{ev.gd_upper->value, EstimateKind::Exact, ev.gd_upper->witness};

  ev.min_exact = min_exact(rho);
  if (!ev.min_exact && ev.min_lower && ev.min_upper.value - ev.min_lower->value <= kSandwichTol)
    ev.min_exact = MeasureEstimate{ev.min_lower->value, EstimateKind::Exact, ev.min_lower->witness};

  if (native_split) ev.closed = closed_forms(spec);
  if (spec.family == Family::Horodecki3x3) ev.regime = classify_horodecki_3x3(spec.param("beta"));
  return ev;
}

std::vector<double> sweep_grid(double from, double to, double step) {
  if (!(step > 0.0)) throw DomainError("sweep step must be positive");
  if (!(from <= to)) throw DomainError("sweep needs from <= to");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = std::min(from + static_cast<double>(i) * step, to);
  return grid;
}

std::vector<SweepRow> sweep(const StateSpec& base, const std::string& param, double from,
                            double to, double step) {
  const auto& allowed = family_parameters(base.family);
  if (std::find(allowed.begin(), allowed.end(), param) == allowed.end())
    throw DomainError("family '" + std::string(family_name(base.family)) +
                      "' has no parameter '" + param + "'");
  std::vector<SweepRow> rows;
  for (double v : sweep_grid(from, to, step)) {
    StateSpec spec = base;
    spec.params[param] = v;
    rows.push_back({v, evaluate(spec)});
  }
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::string& param,
                     const std::vector<SweepRow>& rows) {
  out << param
      << ",gd_lower,gd_upper,gd_exact,gd_closed,min_upper,min_lower,min_exact,min_closed,"
         "negativity,ppt,regime\n";
  for (const auto& row : rows) {
    const auto& e = row.eval;
    out << format_number(row.param) << ',' << format_number(clamp_unit(e.gd_lower.value)) << ','
        << opt_number(e.gd_upper) << ',' << opt_number(e.gd_exact) << ','
        << (e.closed ? format_number(clamp_unit(e.closed->gd.value)) : "") << ','
        << format_number(clamp_unit(e.min_upper.value)) << ',' << opt_number(e.min_lower) << ','
        << opt_number(e.min_exact) << ','
        << (e.closed ? format_number(clamp_unit(e.closed->min.value)) : "") << ','
        << format_number(e.negativity) << ',' << (e.ppt ? "true" : "false") << ','
        << (e.regime ? regime_name(*e.regime) : "") << '\n';
  }
}

void write_sweep_json(std::ostream& out, const StateSpec& base, const std::string& param,
                      const std::vector<SweepRow>& rows) {
  nlohmann::json doc;
  doc["family"] = std::string(family_name(base.family));
  doc["base"] = base.to_string();
  doc["param"] = param;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    const auto& e = row.eval;
    doc["rows"].push_back({
        {param, row.param},
        {"gd_lower", clamp_unit(e.gd_lower.value)},
        {"gd_upper", opt_json(e.gd_upper)},
        {"gd_exact", opt_json(e.gd_exact)},
        {"gd_closed", e.closed ? nlohmann::json(clamp_unit(e.closed->gd.value)) : nullptr},
        {"min_upper", clamp_unit(e.min_upper.value)},
        {"min_lower", opt_json(e.min_lower)},
        {"min_exact", opt_json(e.min_exact)},
        {"min_closed", e.closed ? nlohmann::json(clamp_unit(e.closed->min.value)) : nullptr},
        {"negativity", e.negativity},
        {"ppt", e.ppt},
        {"regime", e.regime ? nlohmann::json(std::string(regime_name(*e.regime))) : nullptr},
    });
  }
  out << doc.dump(2) << '\n';
}

Figure2Data figure2(std::uint64_t trials, std::uint64_t seed, int bins, unsigned threads) {
  const auto tiles = states::upb_tiles();
  SamplerConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.bins = bins;
  cfg.threads = threads;
  auto rep = sample_gd(tiles, cfg);
  return {gd_lower_bound(tiles).value, rep.best_value, trials, seed, std::move(rep.histogram)};
}

void write_figure2_csv(std::ostream& out, const Figure2Data& data) {
  out << "# bound=" << format_number(data.bound) << ",best=" << format_number(data.best)
      << ",trials=" << data.trials << ",seed=" << data.seed << '\n';
  out << "bin_lower,count\n";
  for (const auto& b : data.histogram) out << format_number(b.lower) << ',' << b.count << '\n';
}

void write_figure2_json(std::ostream& out, const Figure2Data& data) {
  nlohmann::json doc{{"state", "tiles"},       {"bound", data.bound}, {"best", data.best},
                     {"trials", data.trials},  {"seed", data.seed},   {"bins", nlohmann::json::array()}};
  for (const auto& b : data.histogram) doc["bins"].push_back({{"lower", b.lower}, {"count", b.count}});
  out << doc.dump(2) << '\n';
}

}  // namespace qcorr::report
