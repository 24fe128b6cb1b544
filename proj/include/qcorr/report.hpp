#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/entanglement.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/optimizer.hpp"
#include "qcorr/state_spec.hpp"

namespace qcorr::report {

struct NamedMeasurement {
  std::string name;
  Measurement measurement;
};

/// Hand-picked measurements known for a family (always includes the
/// computational basis). Only those matching rho's dim_a are returned.
std::vector<NamedMeasurement> reference_measurements(const StateSpec& spec,
                                                     const DensityMatrix& rho);

/// Everything the deterministic machinery can say about one state.
struct Evaluation {
  MeasureEstimate gd_lower;
  std::optional<MeasureEstimate> gd_upper;  // best reference measurement
  std::optional<MeasureEstimate> gd_exact;
  MeasureEstimate min_upper;
  std::optional<MeasureEstimate> min_lower;  // best admissible reference measurement
  std::optional<MeasureEstimate> min_exact;
  std::optional<ClosedForms> closed;
  double negativity;
  bool ppt;
  std::optional<Regime> regime;
};

/// Tolerance for declaring a bound pair tight.
inline constexpr double kSandwichTol = 1e-9;

Evaluation evaluate(const StateSpec& spec);
/// Same, for a state whose bipartition may differ from the family default.
Evaluation evaluate(const StateSpec& spec, const DensityMatrix& rho);

struct SweepRow {
  double param;
  Evaluation eval;
};

/// Grid from, from+step, ..., to (inclusive within 1e-9 step). Throws
/// DomainError for step <= 0, from > to or a parameter the family lacks.
std::vector<double> sweep_grid(double from, double to, double step);
std::vector<SweepRow> sweep(const StateSpec& base, const std::string& param, double from,
                            double to, double step);

/// 12 significant digits, shortest form ("%.12g").
std::string format_number(double v);

void write_sweep_csv(std::ostream& out, const std::string& param,
                     const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const StateSpec& base, const std::string& param,
                      const std::vector<SweepRow>& rows);

struct Figure2Data {
  double bound;
  double best;
  std::uint64_t trials;
  std::uint64_t seed;
  std::vector<HistogramBin> histogram;
};

/// GD sampling on the Tiles state with its eigenvalue bound.
Figure2Data figure2(std::uint64_t trials, std::uint64_t seed, int bins, unsigned threads = 0);

void write_figure2_csv(std::ostream& out, const Figure2Data& data);
void write_figure2_json(std::ostream& out, const Figure2Data& data);

}  // namespace qcorr::report
