#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace labelsem {

using DensityFn = std::function<double(double)>;

/// Probability distribution of a distance threshold, kept as its density
/// and queried through the survival function Delta(d) = P(eps >= d).
///
/// Supports live in [0, inf) and are bounded: [lo, hi] with lo <= hi.
/// Uniform survivals are exact closed forms; piecewise-linear densities
/// integrate analytically; custom densities fall back to adaptive
/// quadrature (abs tol 1e-10) and must declare their support.
class ThresholdDist {
 public:
  enum class Kind { uniform, piecewise, custom };

  static ThresholdDist uniform(double lo, double hi);
  /// knots: ascending (e, density) pairs; density linear between knots,
  /// zero outside. Must integrate to 1 (checked to 1e-9).
  static ThresholdDist piecewise_linear(std::vector<std::pair<double, double>> knots);
  /// Caller-supplied density with explicit support; normalization checked
  /// numerically to 1e-9.
  static ThresholdDist custom(DensityFn density, double lo, double hi);

  Kind kind() const { return kind_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

  /// Delta(d) for d >= 0, clamped to [0,1]. Errors on d < 0.
  double survival(double d) const;

  /// Smallest d with survival(d) <= p. Exact for uniform, bisection to
  /// 1e-12 otherwise. Total on [0,1].
  double inverse_survival(double p) const;

  /// delta(e) for e >= 0; zero outside the support.
  double density(double e) const;

  /// Inverse-CDF sample at a uniform variate u in [0,1). Values are
  /// clamped into the support so u=0 maps to the support lower bound.
  double sample_at(double u) const;

  /// Draw one sample from an explicit generator (callers own the stream,
  /// so parallel use never shares mutable state).
  double sample(std::mt19937_64& rng) const;

  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

 private:
  ThresholdDist() = default;

  double survival_inner(double d) const;  // no domain check, no clamp

  Kind kind_ = Kind::uniform;
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<std::pair<double, double>> knots_;  // piecewise only
  std::vector<double> tail_;                      // piecewise: integral from knot i to hi
  DensityFn density_;                             // custom only

  friend double survival_extended(const ThresholdDist&, double);
};

/// Survival extended to the whole real line: 1 for d < 0 (the support is
/// nonnegative, so the threshold certainly exceeds any negative value).
/// Hedge evaluation uses this after distance transforms.
double survival_extended(const ThresholdDist& t, double d);

namespace detail {
/// Uniform double in [0,1) from the top 53 bits of a 64-bit draw.
inline double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }
}  // namespace detail

}  // namespace labelsem
