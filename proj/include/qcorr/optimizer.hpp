#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcorr/density_matrix.hpp"
#include "qcorr/measurement.hpp"

namespace qcorr {

/// Counter-based random stream: the stream for (seed, index) is fixed, so
/// trial k draws the same numbers no matter which thread runs it.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on (0, 1).
  double uniform();
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal moved into Q.
CMatrix haar_unitary(int d, RandomStream& stream);

struct SamplerConfig {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// Local random-rotation refinement around the best candidate.
  bool refine = false;
  int bins = 60;
  /// Worker threads; 0 means QCORR_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct HistogramBin {
  double lower;
  std::uint64_t count;
};

/// Equal-width bins over [min, max]; a single bin when all values coincide.
/// Throws DomainError for bins < 1 or an empty sample.
std::vector<HistogramBin> histogram(std::span<const double> values, int bins);

struct SampleReport {
  double best_value;
  Measurement best_measurement;
  std::uint64_t trial_index;  // raw trial that produced the starting point
  bool refined = false;       // true if refinement improved on it
  std::vector<HistogramBin> histogram;  // raw samples only
  std::vector<double> samples;
};

/// Minimizes the normalized distance over Haar-random measurements.
SampleReport sample_gd(const DensityMatrix& rho, const SamplerConfig& cfg);

/// Maximizes the normalized distance over measurements that keep rho^A: a
/// Haar-random basis is drawn inside each eigenspace of rho^A.
SampleReport sample_min(const DensityMatrix& rho, const SamplerConfig& cfg);

unsigned resolve_threads(unsigned requested);

}  // namespace qcorr
