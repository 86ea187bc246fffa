#pragma once

#include <cstdint>
#include <vector>

#include "labelsem/classical.hpp"
#include "labelsem/hedge.hpp"
#include "labelsem/label.hpp"

namespace labelsem {

/// Configuration shared by the brute-force verifiers. Estimates are
/// deterministic given (seed, samples): sampling is partitioned into
/// fixed-size blocks with per-block generator streams, so thread count
/// never changes a result.
struct OracleConfig {
  std::uint64_t samples = 1'000'000;  // >= 10'000
  std::uint64_t seed = 7;
  double quad_tol = 1e-9;  // <= 1e-6
  int chain_depth = 2;     // >= 2
  bool parallel = true;

  void validate() const;
};

struct McEstimate {
  double estimate;
  double std_error;  // binomial
  std::uint64_t samples;
  /// Draws whose conditional truncation was degenerate (survival mass 0 at
  /// the conditioning value); such draws keep the conditioning value.
  /// More than 0.1% of them would make the estimate suspect.
  std::uint64_t degenerate;
};

/// P(eps2 >= d(x,P)) where eps1 ~ delta and eps2 is a fresh draw of the
/// same marginal conditioned on eps2 >= eps1 (the dilation construction).
/// Sampling is inverse-CDF on the conditional, never rejection.
McEstimate mc_dilation(const Label& label, const Point& x, const OracleConfig& cfg);

/// Concentration mirror: eps2 conditioned on eps2 <= eps1.
McEstimate mc_concentration(const Label& label, const Point& x, const OracleConfig& cfg);

/// Chain of `depth` >= 2 hedge applications: each stage draws from the
/// previous stage's marginal conditioned above (dilate) or below
/// (concentrate) the chain's current value. Stage two uses the exact
/// inverse-CDF of the truncated base; later stages invert the empirical
/// CDF of the previous stage's sample pool.
McEstimate mc_chain(const Label& label, const Point& x, HedgeKind kind, int depth,
                    const OracleConfig& cfg);

/// Batched variants: one sample sweep scores every grid point (shared
/// draws, per-point binomial errors).
std::vector<McEstimate> mc_dilation_grid(const Label& label, std::span<const Point> xs,
                                         const OracleConfig& cfg);
std::vector<McEstimate> mc_concentration_grid(const Label& label, std::span<const Point> xs,
                                              const OracleConfig& cfg);
std::vector<McEstimate> mc_chain_grid(const Label& label, std::span<const Point> xs,
                                      HedgeKind kind, int depth, const OracleConfig& cfg);

/// Numerical evaluation of the dilation proof integrals, without the
/// logarithmic identity: mu1 (1 + integral_0^d delta/Delta).
double quad_dilation(const Label& label, const Point& x, const OracleConfig& cfg);

/// Concentration mirror: mu1 - (1 - mu1) integral_d^inf delta/(1 - Delta).
double quad_concentration(const Label& label, const Point& x, const OracleConfig& cfg);

/// Max absolute deviation over a sampled grid between the sup/inf
/// definition of the resemblance modifier and the corner-arithmetic
/// trapezoid. Grid resolution must be <= 0.01.
double bosc_supinf_check(const Trapezoid& f, const Trapezoid& z, BoscMode mode,
                         double grid_step = 0.002);

namespace detail {
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t block);
}

}  // namespace labelsem
