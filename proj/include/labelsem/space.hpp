#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace labelsem {

/// A point in the conceptual space. Coordinates are unitless reals;
/// every entry must be finite and the dimension at least 1.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

/// Closed 1-D interval [lo, hi].
struct Interval {
  double lo;
  double hi;
};

/// Prototype set of a label: either a finite nonempty set of points, or
/// (1-D only) a closed interval.
class PrototypeSet {
 public:
  static PrototypeSet interval(double lo, double hi);
  static PrototypeSet points(std::vector<Point> pts);
  static PrototypeSet single(Point p);

  std::size_t dim() const;
  bool is_interval() const { return std::holds_alternative<Interval>(rep_); }
  const Interval& as_interval() const { return std::get<Interval>(rep_); }
  std::span<const Point> as_points() const { return std::get<std::vector<Point>>(rep_); }

  /// Prototype translated by the given offset (used by shifting hedges).
  PrototypeSet translated(std::span<const double> offset) const;

 private:
  explicit PrototypeSet(Interval iv) : rep_(iv) {}
  explicit PrototypeSet(std::vector<Point> pts) : rep_(std::move(pts)) {}

  std::variant<Interval, std::vector<Point>> rep_;
};

/// Pseudo-distance on the space. Symmetry, nonnegativity and d(x,x)=0 hold
/// for every kind; the triangle inequality is not required anywhere.
class Metric {
 public:
  enum class Kind { euclidean, weighted_euclidean, absolute_1d };

  static Metric euclidean() { return Metric(Kind::euclidean, {}); }
  static Metric weighted_euclidean(std::vector<double> weights);
  static Metric absolute_1d() { return Metric(Kind::absolute_1d, {}); }

  Kind kind() const { return kind_; }
  std::span<const double> weights() const { return weights_; }

 private:
  Metric(Kind k, std::vector<double> w) : kind_(k), weights_(std::move(w)) {}

  Kind kind_;
  std::vector<double> weights_;
};

double distance(const Metric& m, const Point& x, const Point& y);

/// min over y in P of distance(x, y); for interval prototypes the distance
/// to the nearest endpoint, 0 if x lies inside.
double set_distance(const Metric& m, const Point& x, const PrototypeSet& p);

}  // namespace labelsem
