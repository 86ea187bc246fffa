#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "labelsem/space.hpp"
#include "labelsem/threshold.hpp"

namespace labelsem {

/// A concept label: prototype set, metric and threshold distribution.
/// Appropriateness of a point is the probability that the threshold
/// exceeds the point's distance to the prototype.
class Label {
 public:
  Label(std::string name, PrototypeSet prototype, Metric metric, ThresholdDist threshold);

  /// survival(threshold, set_distance(x, prototype)), in [0,1].
  double appropriateness(const Point& x) const;

  /// True iff set_distance(x, prototype) <= eps.
  bool neighborhood_contains(double eps, const Point& x) const;

  const std::string& name() const { return name_; }
  const PrototypeSet& prototype() const { return prototype_; }
  const Metric& metric() const { return metric_; }
  const ThresholdDist& threshold() const { return threshold_; }
  std::size_t dim() const { return prototype_.dim(); }

 private:
  std::string name_;
  PrototypeSet prototype_;
  Metric metric_;
  ThresholdDist threshold_;
};

/// Product combination of independent labels evaluated at per-label points.
/// Works for anything exposing appropriateness(Point): Label, HedgedLabel.
template <typename LabelLike>
double combine_independent(std::span<const LabelLike> labels, std::span<const Point> parts) {
  if (labels.size() != parts.size())
    throw std::invalid_argument("combine_independent: labels and points differ in length");
  double mu = 1.0;
  for (std::size_t i = 0; i < labels.size(); ++i) mu *= labels[i].appropriateness(parts[i]);
  return mu;
}

}  // namespace labelsem
