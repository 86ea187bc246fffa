#include <doctest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include <cmath>
#include <random>
#include <vector>

#include "labelsem/hedge.hpp"
#include "labelsem/label.hpp"

using namespace labelsem;

namespace {

Label simple() {
  return Label("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
               ThresholdDist::uniform(0, 3));
}

}  // namespace

TEST_CASE("appropriateness of a point label") {
  const Label l = simple();
  CHECK(l.appropriateness(Point({6.5})) == 0.5);
  CHECK(l.appropriateness(Point({5.0})) == 1.0);
  CHECK(l.appropriateness(Point({9.0})) == 0.0);
  CHECK_THROWS_AS(l.appropriateness(Point({1.0, 2.0})), std::invalid_argument);
}

TEST_CASE("neighborhood membership") {
  const Label l = simple();
  CHECK(l.neighborhood_contains(2.0, Point({6.9})));
  CHECK_FALSE(l.neighborhood_contains(2.0, Point({7.1})));
  const Label wide("W", PrototypeSet::interval(4, 6), Metric::euclidean(),
                   ThresholdDist::uniform(0, 3));
  CHECK(wide.neighborhood_contains(0.0, Point({6.0})));
}

TEST_CASE("appropriateness equals threshold coverage probability") {
  const Label l = simple();
  const Point x({6.1});  // mu = 1 - 1.1/3
  const double mu = l.appropriateness(x);
  std::mt19937_64 rng(99);
  const int n = 100'000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += l.neighborhood_contains(l.threshold().sample(rng), x);
  const double p = double(hits) / n;
  const double se = std::sqrt(mu * (1 - mu) / n);
  CHECK(std::abs(p - mu) <= 3 * se);
}

TEST_CASE("appropriateness is nonincreasing in distance") {
  const Label l = simple();
  double prev = 1.0;
  for (int i = 0; i <= 100; ++i) {
    const double mu = l.appropriateness(Point({5.0 + 4.0 * i / 100.0}));
    CHECK(mu <= prev + 1e-15);
    prev = mu;
  }
}

TEST_CASE("independent product combination") {
  // one-sided plateaus modelled as intervals up to a declared domain bound
  const Label tall("tall", PrototypeSet::interval(6.5, 10.0), Metric::euclidean(),
                   ThresholdDist::uniform(0, 1));
  const Label thin("thin", PrototypeSet::interval(0.0, 24.0), Metric::euclidean(),
                   ThresholdDist::uniform(0, 4));
  CHECK(tall.appropriateness(Point({6.0})) == 0.5);
  CHECK(thin.appropriateness(Point({26.0})) == 0.5);

  const std::vector<Label> labels = {tall, thin};
  SUBCASE("both prototypical") {
    const std::vector<Point> xs = {Point({7.0}), Point({20.0})};
    CHECK(combine_independent<Label>(labels, xs) == 1.0);
  }
  SUBCASE("identity factor") {
    const std::vector<Point> xs = {Point({6.0}), Point({20.0})};
    CHECK(combine_independent<Label>(labels, xs) == 0.5);
  }
  SUBCASE("product of two halves") {
    const std::vector<Point> xs = {Point({6.0}), Point({26.0})};
    CHECK(combine_independent<Label>(labels, xs) == 0.25);
  }
  SUBCASE("length mismatch is an error") {
    const std::vector<Point> xs = {Point({6.0})};
    CHECK_THROWS_AS(combine_independent<Label>(labels, xs), std::invalid_argument);
  }
}

TEST_CASE("hedged labels combine through the same interface") {
  const Label tall("tall", PrototypeSet::interval(6.5, 10.0), Metric::euclidean(),
                   ThresholdDist::uniform(0, 1));
  const Label thin("thin", PrototypeSet::interval(0.0, 24.0), Metric::euclidean(),
                   ThresholdDist::uniform(0, 4));
  const std::vector<HedgedLabel> hedged = {apply(HedgeSpec::concentrate(), tall),
                                           apply(HedgeSpec::dilate(), thin)};
  const std::vector<Point> xs = {Point({6.0}), Point({26.0})};
  const double want = concentrate_mu(0.5) * dilate_mu(0.5);
  CHECK(combine_independent<HedgedLabel>(hedged, xs) == doctest::Approx(want).epsilon(1e-14));
}
