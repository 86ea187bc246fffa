#include "labelsem/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "labelsem/quadrature.hpp"

namespace labelsem {

namespace {

constexpr double kNormalizationTol = 1e-9;
constexpr double kCustomQuadTol = 1e-10;
constexpr double kBisectTol = 1e-12;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

ThresholdDist ThresholdDist::uniform(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi)))
    throw std::invalid_argument("ThresholdDist: uniform bounds must be finite");
  if (lo < 0.0) throw std::invalid_argument("ThresholdDist: support must lie in [0, inf)");
  if (!(lo < hi)) throw std::invalid_argument("ThresholdDist: uniform requires lo < hi");
  ThresholdDist t;
  t.kind_ = Kind::uniform;
  t.lo_ = lo;
  t.hi_ = hi;
  return t;
}

ThresholdDist ThresholdDist::piecewise_linear(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw std::invalid_argument("ThresholdDist: need at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto& [e, y] = knots[i];
    if (!(std::isfinite(e) && std::isfinite(y)))
      throw std::invalid_argument("ThresholdDist: knots must be finite");
    if (y < 0.0) throw std::invalid_argument("ThresholdDist: density values must be nonnegative");
    if (i > 0 && !(knots[i - 1].first < e))
      throw std::invalid_argument("ThresholdDist: knot abscissae must be strictly increasing");
  }
  if (knots.front().first < 0.0)
    throw std::invalid_argument("ThresholdDist: support must lie in [0, inf)");

  ThresholdDist t;
  t.kind_ = Kind::piecewise;
  t.lo_ = knots.front().first;
  t.hi_ = knots.back().first;
  t.knots_ = std::move(knots);

  // tail_[i] = exact integral of the density from knot i to the end
  t.tail_.assign(t.knots_.size(), 0.0);
  for (std::size_t i = t.knots_.size() - 1; i-- > 0;) {
    const auto& [e0, y0] = t.knots_[i];
    const auto& [e1, y1] = t.knots_[i + 1];
    t.tail_[i] = t.tail_[i + 1] + 0.5 * (y0 + y1) * (e1 - e0);
  }
  if (std::abs(t.tail_.front() - 1.0) > kNormalizationTol)
    throw std::invalid_argument("ThresholdDist: piecewise density must integrate to 1");
  return t;
}

ThresholdDist ThresholdDist::custom(DensityFn density, double lo, double hi) {
  if (!density) throw std::invalid_argument("ThresholdDist: custom density must be callable");
  if (!(std::isfinite(lo) && std::isfinite(hi)))
    throw std::invalid_argument("ThresholdDist: custom support must be finite");
  if (lo < 0.0) throw std::invalid_argument("ThresholdDist: support must lie in [0, inf)");
  if (!(lo < hi)) throw std::invalid_argument("ThresholdDist: custom requires lo < hi");
  ThresholdDist t;
  t.kind_ = Kind::custom;
  t.lo_ = lo;
  t.hi_ = hi;
  t.density_ = std::move(density);
  const double mass = detail::integrate_adaptive(t.density_, lo, hi, kCustomQuadTol);
  if (std::abs(mass - 1.0) > kNormalizationTol)
    throw std::invalid_argument("ThresholdDist: custom density must integrate to 1 over its support");
  return t;
}

double ThresholdDist::survival_inner(double d) const {
  if (d <= lo_) return 1.0;
  if (d >= hi_) return 0.0;
  switch (kind_) {
    case Kind::uniform:
      return (hi_ - d) / (hi_ - lo_);
    case Kind::piecewise: {
      // locate segment containing d, integrate the linear piece to its end
      auto it = std::upper_bound(knots_.begin(), knots_.end(), d,
                                 [](double v, const auto& kn) { return v < kn.first; });
      const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
      const auto& [e0, y0] = knots_[i];
      const auto& [e1, y1] = knots_[i + 1];
      const double yd = y0 + (y1 - y0) * (d - e0) / (e1 - e0);
      return tail_[i + 1] + 0.5 * (yd + y1) * (e1 - d);
    }
    case Kind::custom:
      return detail::integrate_adaptive(density_, d, hi_, kCustomQuadTol);
  }
  throw std::logic_error("ThresholdDist: unreachable");
}

double ThresholdDist::survival(double d) const {
  if (d < 0.0) throw std::invalid_argument("survival: requires d >= 0");
  return clamp01(survival_inner(d));
}

double survival_extended(const ThresholdDist& t, double d) {
  if (d < 0.0) return 1.0;
  return std::min(1.0, std::max(0.0, t.survival_inner(d)));
}

double ThresholdDist::inverse_survival(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inverse_survival: p must lie in [0,1]");
  if (p >= 1.0) return 0.0;  // survival(0) = 1 <= 1 already
  if (p <= 0.0) return hi_;
  if (kind_ == Kind::uniform) return hi_ - p * (hi_ - lo_);

  // smallest d with survival(d) <= p; the predicate is monotone in d
  double a = lo_, b = hi_;
  while (b - a > kBisectTol) {
    const double m = 0.5 * (a + b);
    if (survival_inner(m) <= p)
      b = m;
    else
      a = m;
  }
  return b;
}

double ThresholdDist::density(double e) const {
  if (e < lo_ || e > hi_) return 0.0;
  switch (kind_) {
    case Kind::uniform:
      return 1.0 / (hi_ - lo_);
    case Kind::piecewise: {
      auto it = std::upper_bound(knots_.begin(), knots_.end(), e,
                                 [](double v, const auto& kn) { return v < kn.first; });
      if (it == knots_.begin()) return knots_.front().second;
      if (it == knots_.end()) return knots_.back().second;
      const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
      const auto& [e0, y0] = knots_[i];
      const auto& [e1, y1] = knots_[i + 1];
      return y0 + (y1 - y0) * (e - e0) / (e1 - e0);
    }
    case Kind::custom:
      return std::max(0.0, density_(e));
  }
  throw std::logic_error("ThresholdDist: unreachable");
}

double ThresholdDist::sample_at(double u) const {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("sample_at: u must lie in [0,1)");
  if (kind_ == Kind::uniform) return lo_ + u * (hi_ - lo_);
  const double d = inverse_survival(1.0 - u);
  return std::min(hi_, std::max(lo_, d));
}

double ThresholdDist::sample(std::mt19937_64& rng) const { return sample_at(detail::uniform01(rng())); }

}  // namespace labelsem
