#include <doctest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include <cmath>

#include "labelsem/classical.hpp"

using namespace labelsem;

TEST_CASE("powering modifier") {
  CHECK(power_hedge(0.5, 2.0) == 0.25);
  CHECK(power_hedge(1.0, 0.5) == 1.0);
  CHECK(power_hedge(0.25, 0.5) == 0.5);
  CHECK(power_hedge(0.0, 2.0) == 0.0);
}

TEST_CASE("shifting modifier translates the prototype") {
  const Label l("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                ThresholdDist::uniform(0, 3));
  const double off[] = {2.0};
  const Label shifted = shift_hedge(l, off);
  CHECK(shifted.appropriateness(Point({7.0})) == 1.0);
  // mu_shifted(x) = mu(x - a)
  CHECK(shifted.appropriateness(Point({6.5})) == l.appropriateness(Point({4.5})));
  CHECK(shifted.appropriateness(Point({6.5})) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));

  const double back[] = {-1.0};
  const Label iv = shift_hedge(Label("I", PrototypeSet::interval(4, 6), Metric::euclidean(),
                                     ThresholdDist::uniform(0, 3)),
                               back);
  CHECK(iv.prototype().as_interval().lo == 3.0);
  CHECK(iv.prototype().as_interval().hi == 5.0);
}

TEST_CASE("horizon membership") {
  const HorizonModel h(1.0, 2.0, 2.0);
  CHECK(novak_mu(h, 0.5, false) == 1.0);
  CHECK(novak_mu(h, 2.0, false) == 0.0);
  CHECK(novak_mu(h, 1.5, false) == 0.5);
  CHECK(novak_mu(h, 3.0, true) == 0.5);  // support scales to [2, 4]
  CHECK(novak_mu(h, 4.0, true) == 0.0);
  CHECK_THROWS_AS(HorizonModel(2.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(HorizonModel(1.0, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("rescale hedge matches the horizon model") {
  CHECK(novak_equivalence_check(1.0, 2.0, 2.0));
  CHECK(novak_equivalence_check(0.0, 3.0, 1.0));
  CHECK(novak_equivalence_check(1.0, 2.0, 0.5));
}

TEST_CASE("trapezoid membership and validation") {
  const Trapezoid t(2, 4, 6, 8);
  CHECK(t.membership(5.0) == 1.0);
  CHECK(t.membership(3.0) == 0.5);
  CHECK(t.membership(7.0) == 0.5);
  CHECK(t.membership(1.0) == 0.0);
  CHECK(t.membership(9.0) == 0.0);
  CHECK_THROWS_AS(Trapezoid(4, 2, 6, 8), std::invalid_argument);
}

TEST_CASE("resemblance dilation of a trapezoid") {
  const Trapezoid f(2, 4, 6, 8);
  CHECK(bosc_dilate(f, Trapezoid(-1, -0.5, 0.5, 1)) == Trapezoid(1, 3.5, 6.5, 9));
  CHECK(bosc_dilate(f, Trapezoid(0, 0, 0, 0)) == f);
  CHECK(bosc_dilate(Trapezoid(0, 1, 1, 2), Trapezoid(-0.2, -0.1, 0.1, 0.2)) ==
        Trapezoid(-0.2, 0.9, 1.1, 2.2));
  CHECK_THROWS_AS(bosc_dilate(f, Trapezoid(-1, -0.4, 0.5, 1)), std::invalid_argument);
}

TEST_CASE("resemblance concentration of a trapezoid") {
  const Trapezoid f(2, 4, 6, 8);
  CHECK(bosc_concentrate(f, Trapezoid(-1, -0.5, 0.5, 1)) == Trapezoid(3, 4.5, 5.5, 7));
  CHECK(bosc_concentrate(f, Trapezoid(0, 0, 0, 0)) == f);
  CHECK(bosc_concentrate(Trapezoid(0, 2, 6, 8), Trapezoid(-1, -0.5, 0.5, 1)) ==
        Trapezoid(1, 2.5, 5.5, 7));
  // core would degenerate: C - B < 2z
  CHECK_THROWS_AS(bosc_concentrate(Trapezoid(2, 4, 4.5, 8), Trapezoid(-1, -0.5, 0.5, 1)),
                  std::invalid_argument);
}

TEST_CASE("equivalence parameters") {
  const BoscParams dil = bosc_equivalence_params(2.0, 1.0, 2.0, BoscMode::dilate);
  CHECK(dil.z == 1.0);
  CHECK(dil.alpha == 1.0);
  const BoscParams id = bosc_equivalence_params(1.0, 0.5, 2.0, BoscMode::dilate);
  CHECK(id.z == 0.0);
  CHECK(id.alpha == 0.0);
  const BoscParams con = bosc_equivalence_params(0.5, 1.0, 2.0, BoscMode::concentrate);
  CHECK(con.z == 0.5);
  CHECK(con.alpha == 0.5);
  CHECK_THROWS_AS(bosc_equivalence_params(0.5, 1.0, 2.0, BoscMode::dilate),
                  std::invalid_argument);
  CHECK_THROWS_AS(bosc_equivalence_params(2.0, 1.0, 2.0, BoscMode::concentrate),
                  std::invalid_argument);
  // the resemblance construction wants c < z; k=2 sits exactly on the edge
  CHECK_FALSE(bosc_equivalence_params(2.0, 1.0, 2.0, BoscMode::dilate).satisfies_c_lt_z);
  CHECK(bosc_equivalence_params(3.0, 1.0, 2.0, BoscMode::dilate).satisfies_c_lt_z);
}

TEST_CASE("equivalence corners land exactly") {
  const double p = 5.0;
  for (double k : {1.5, 2.0, 3.0}) {
    for (auto [c, a] : {std::pair{1.0, 2.0}, std::pair{2.0, 5.0}}) {
      const Trapezoid base(p - a, p - c, p + c, p + a);
      const Trapezoid got =
          bosc_dilate(base, resemblance_trapezoid(bosc_equivalence_params(k, c, a, BoscMode::dilate)));
      CHECK(got == Trapezoid(p - k * a, p - k * c, p + k * c, p + k * a));
    }
  }
  for (double k : {0.5, 0.8}) {
    for (auto [c, a] : {std::pair{1.0, 2.0}, std::pair{2.0, 5.0}}) {
      const Trapezoid base(p - a, p - c, p + c, p + a);
      const Trapezoid got = bosc_concentrate(
          base, resemblance_trapezoid(bosc_equivalence_params(k, c, a, BoscMode::concentrate)));
      CHECK(got == Trapezoid(p - k * a, p - k * c, p + k * c, p + k * a));
    }
  }
}

TEST_CASE("powering as a threshold map") {
  SUBCASE("identity exponent") {
    const MonotoneFn f = power_as_threshold_fn(3.0, 1.0);
    CHECK(f.forward(1.7) == doctest::Approx(1.7).epsilon(1e-15));
  }
  SUBCASE("square") {
    const MonotoneFn f = power_as_threshold_fn(3.0, 2.0);
    CHECK(f.forward(1.5) == doctest::Approx(3.0 - std::sqrt(4.5)).epsilon(1e-15));
    CHECK(f.forward(0.0) == 0.0);
    CHECK(f.forward(3.0) == 3.0);
    CHECK(f.inverse(f.forward(1.5)) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(f.forward(3.5), std::invalid_argument);
  }
  SUBCASE("hedging with it reproduces mu^k") {
    const Label l("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                  ThresholdDist::uniform(0, 3));
    for (double k : {2.0, 0.5}) {
      const HedgedLabel h = apply(HedgeSpec::rescale(power_as_threshold_fn(3.0, k)), l);
      for (int i = 0; i <= 120; ++i) {
        const double x = 2.0 + 6.0 * i / 120.0;
        CHECK(std::abs(h.appropriateness(Point({x})) -
                       std::pow(l.appropriateness(Point({x})), k)) <= 1e-9);
      }
    }
  }
}
