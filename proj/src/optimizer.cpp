#include "qcorr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "distance.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kRefineDomain = 0xA5A5A5A5A5A5A5A5ULL;
constexpr int kRefineRounds = 200;
constexpr int kRefineStreak = 20;
constexpr double kRefineAngle = 0.05;

// Proposes a random basis for trial streams, and a random unitary that moves
// a basis while staying inside the admissible set.
struct Proposal {
  std::function<CMatrix(RandomStream&)> basis;
  std::function<CMatrix(RandomStream&, double)> rotation;
};

CMatrix random_hermitian(int d, RandomStream& stream) {
  CMatrix h(d, d);
  for (int i = 0; i < d; ++i) {
    h(i, i) = stream.normal();
    for (int j = i + 1; j < d; ++j) {
      h(i, j) = Complex(stream.normal(), stream.normal()) / std::numbers::sqrt2;
      h(j, i) = std::conj(h(i, j));
    }
  }
  const double norm = h.norm();
  return norm > 0 ? CMatrix(h / norm) : h;
}

struct Candidate {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t index = 0;
  CMatrix basis;
};

bool better(double a, double b, bool minimize) { return minimize ? a < b : a > b; }

SampleReport run_sampler(const DensityMatrix& rho, const SamplerConfig& cfg,
                         const Proposal& proposal, bool minimize) {
  detail::require_a_not_larger(rho);
  if (cfg.trials < 1) throw DomainError("sampler needs at least one trial");

  std::vector<double> samples(cfg.trials);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(cfg.threads), cfg.trials));
  std::vector<Candidate> local(workers);

  auto work = [&](unsigned w) {
    const std::uint64_t begin = cfg.trials * w / workers;
    const std::uint64_t end = cfg.trials * (w + 1) / workers;
    CMatrix scratch;
    Candidate& best = local[w];
    for (std::uint64_t k = begin; k < end; ++k) {
      RandomStream stream(cfg.seed, k);
      CMatrix basis = proposal.basis(stream);
      const double v = detail::distance_from_basis(rho, basis, scratch);
      samples[k] = v;
      if (std::isnan(best.value) || better(v, best.value, minimize)) {
        best.value = v;
        best.index = k;
        best.basis = std::move(basis);
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  // Chunks are contiguous and ordered, so a strict comparison keeps the
  // lowest trial index among ties.
  Candidate best = std::move(local.front());
  for (unsigned w = 1; w < workers; ++w)
    if (better(local[w].value, best.value, minimize)) best = std::move(local[w]);

  bool refined = false;
  if (cfg.refine) {
    CMatrix scratch;
    double angle = kRefineAngle;
    int streak = 0;
    for (int round = 0; round < kRefineRounds; ++round) {
      RandomStream stream(cfg.seed ^ kRefineDomain, static_cast<std::uint64_t>(round));
      CMatrix trial = proposal.rotation(stream, angle) * best.basis;
      const double v = detail::distance_from_basis(rho, trial, scratch);
      if (better(v, best.value, minimize)) {
        best.value = v;
        best.basis = std::move(trial);
        refined = true;
        streak = 0;
      } else if (++streak == kRefineStreak) {
        angle /= 2.0;
        streak = 0;
      }
    }
  }

  auto hist = histogram(samples, cfg.bins);
  return SampleReport{best.value, Measurement::from_basis(std::move(best.basis)), best.index,
                      refined, std::move(hist), std::move(samples)};
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL))) {}

std::uint64_t RandomStream::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

double RandomStream::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

CMatrix haar_unitary(int d, RandomStream& stream) {
  if (d < 1) throw DimensionError("haar_unitary needs d >= 1");
  CMatrix z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = Complex(stream.normal(), stream.normal()) / std::numbers::sqrt2;
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  for (int k = 0; k < d; ++k) {
    const Complex r = qr.matrixQR()(k, k);
    q.col(k) *= r / std::abs(r);
  }
  return q;
}

std::vector<HistogramBin> histogram(std::span<const double> values, int bins) {
  if (bins < 1) throw DomainError("histogram needs at least one bin");
  if (values.empty()) throw DomainError("histogram of an empty sample");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  // A zero-width range collapses to one bin rather than `bins` copies of it.
  if (!(*hi_it > lo)) return {{lo, static_cast<std::uint64_t>(values.size())}};
  const double width = (*hi_it - lo) / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) out[b] = {lo + b * width, 0};
  for (double v : values) {
    const int b = static_cast<int>((v - lo) / width);
    out[std::clamp(b, 0, bins - 1)].count++;
  }
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCORR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SampleReport sample_gd(const DensityMatrix& rho, const SamplerConfig& cfg) {
  const int m = rho.dim_a();
  Proposal p{
      [m](RandomStream& s) { return haar_unitary(m, s); },
      [m](RandomStream& s, double angle) {
        return linalg::unitary_exp(angle * random_hermitian(m, s));
      },
  };
  return run_sampler(rho, cfg, p, /*minimize=*/true);
}

SampleReport sample_min(const DensityMatrix& rho, const SamplerConfig& cfg) {
  const int m = rho.dim_a();
  const auto spaces = marginal_eigenspaces(rho);
  Proposal p{
      [m, spaces](RandomStream& s) {
        CMatrix basis(m, m);
        Eigen::Index col = 0;
        for (const auto& sp : spaces) {
          const auto k = sp.basis.cols();
          basis.middleCols(col, k) = sp.basis * haar_unitary(static_cast<int>(k), s);
          col += k;
        }
        return basis;
      },
      [m, spaces](RandomStream& s, double angle) {
        CMatrix w = CMatrix::Zero(m, m);
        for (const auto& sp : spaces) {
          const int k = static_cast<int>(sp.basis.cols());
          w += sp.basis * linalg::unitary_exp(angle * random_hermitian(k, s)) * sp.basis.adjoint();
        }
        return w;
      },
  };
  return run_sampler(rho, cfg, p, /*minimize=*/false);
}

}  // namespace qcorr
