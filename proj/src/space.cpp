#include "labelsem/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace labelsem {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_finite(std::span<const double> v, const char* what) {
  for (double c : v) {
    if (!std::isfinite(c)) throw std::invalid_argument(std::string(what) + ": entries must be finite");
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  require(!coords_.empty(), "Point: dimension must be >= 1");
  check_finite(coords_, "Point");
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

PrototypeSet PrototypeSet::interval(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi), "PrototypeSet: interval bounds must be finite");
  require(lo <= hi, "PrototypeSet: interval requires lo <= hi");
  return PrototypeSet(Interval{lo, hi});
}

PrototypeSet PrototypeSet::points(std::vector<Point> pts) {
  require(!pts.empty(), "PrototypeSet: prototype set must be nonempty");
  for (const Point& p : pts) {
    require(p.dim() == pts.front().dim(), "PrototypeSet: all prototypes must share one dimension");
  }
  return PrototypeSet(std::move(pts));
}

PrototypeSet PrototypeSet::single(Point p) {
  std::vector<Point> v;
  v.push_back(std::move(p));
  return PrototypeSet(std::move(v));
}

std::size_t PrototypeSet::dim() const {
  if (is_interval()) return 1;
  return as_points().front().dim();
}

PrototypeSet PrototypeSet::translated(std::span<const double> offset) const {
  require(offset.size() == dim(), "PrototypeSet: offset dimension mismatch");
  if (is_interval()) {
    const Interval& iv = as_interval();
    return interval(iv.lo + offset[0], iv.hi + offset[0]);
  }
  std::vector<Point> shifted;
  shifted.reserve(as_points().size());
  for (const Point& p : as_points()) {
    std::vector<double> c(p.coords().begin(), p.coords().end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += offset[i];
    shifted.emplace_back(std::move(c));
  }
  return points(std::move(shifted));
}

Metric Metric::weighted_euclidean(std::vector<double> weights) {
  require(!weights.empty(), "Metric: weights must be nonempty");
  for (double w : weights) {
    require(std::isfinite(w) && w >= 0.0, "Metric: weights must be finite and nonnegative");
  }
  return Metric(Kind::weighted_euclidean, std::move(weights));
}

double distance(const Metric& m, const Point& x, const Point& y) {
  require(x.dim() == y.dim(), "distance: dimension mismatch");
  switch (m.kind()) {
    case Metric::Kind::absolute_1d:
      require(x.dim() == 1, "distance: absolute-1d requires 1-D points");
      return std::abs(x[0] - y[0]);
    case Metric::Kind::euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case Metric::Kind::weighted_euclidean: {
      require(m.weights().size() == x.dim(), "distance: weight dimension mismatch");
      double s = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        const double d = x[i] - y[i];
        s += m.weights()[i] * d * d;
      }
      return std::sqrt(s);
    }
  }
  throw std::logic_error("distance: unreachable");
}

double set_distance(const Metric& m, const Point& x, const PrototypeSet& p) {
  require(x.dim() == p.dim(), "set_distance: dimension mismatch");
  if (p.is_interval()) {
    const Interval& iv = p.as_interval();
    const double v = x[0];
    if (v >= iv.lo && v <= iv.hi) return 0.0;
    const double edge = (v < iv.lo) ? iv.lo : iv.hi;
    return distance(m, x, Point({edge}));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Point& y : p.as_points()) best = std::min(best, distance(m, x, y));
  return best;
}

}  // namespace labelsem
