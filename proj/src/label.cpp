#include "labelsem/label.hpp"

namespace labelsem {

Label::Label(std::string name, PrototypeSet prototype, Metric metric, ThresholdDist threshold)
    : name_(std::move(name)),
      prototype_(std::move(prototype)),
      metric_(std::move(metric)),
      threshold_(std::move(threshold)) {
  if (metric_.kind() == Metric::Kind::absolute_1d && prototype_.dim() != 1)
    throw std::invalid_argument("Label: absolute-1d metric requires 1-D prototypes");
  if (metric_.kind() == Metric::Kind::weighted_euclidean &&
      metric_.weights().size() != prototype_.dim())
    throw std::invalid_argument("Label: metric weights must match prototype dimension");
}

double Label::appropriateness(const Point& x) const {
  return threshold_.survival(set_distance(metric_, x, prototype_));
}

bool Label::neighborhood_contains(double eps, const Point& x) const {
  if (eps < 0.0) throw std::invalid_argument("neighborhood_contains: eps must be >= 0");
  return set_distance(metric_, x, prototype_) <= eps;
}

}  // namespace labelsem
