#include <doctest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include <cmath>

#include "labelsem/oracle.hpp"

using namespace labelsem;

namespace {

Label base_u03() {
  return Label("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
               ThresholdDist::uniform(0, 3));
}

OracleConfig quick() {
  OracleConfig cfg;
  cfg.samples = 200'000;
  cfg.seed = 4242;
  return cfg;
}

void check_within_3sigma(const McEstimate& got, double want) {
  // sigma under the hypothesis that `want` is the true probability
  const double se = std::sqrt(want * (1.0 - want) / double(got.samples));
  if (se == 0.0) {
    CHECK(got.estimate == want);
  } else {
    CHECK(std::abs(got.estimate - want) <= 3.0 * se);
  }
}

}  // namespace

TEST_CASE("config validation") {
  OracleConfig cfg;
  cfg.samples = 100;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OracleConfig{};
  cfg.quad_tol = 1e-3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OracleConfig{};
  cfg.chain_depth = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("dilation sampler agrees with the pointwise map") {
  const Label l = base_u03();
  const OracleConfig cfg = quick();
  check_within_3sigma(mc_dilation(l, Point({6.5}), cfg), dilate_mu(0.5));
  CHECK(mc_dilation(l, Point({5.0}), cfg).estimate == 1.0);
  CHECK(mc_dilation(l, Point({9.0}), cfg).estimate == 0.0);
}

TEST_CASE("concentration sampler agrees with the pointwise map") {
  const Label l = base_u03();
  const OracleConfig cfg = quick();
  check_within_3sigma(mc_concentration(l, Point({6.5}), cfg), concentrate_mu(0.5));
  CHECK(mc_concentration(l, Point({5.0}), cfg).estimate == 1.0);
  CHECK(mc_concentration(l, Point({8.2}), cfg).estimate == 0.0);
}

TEST_CASE("samplers cover plateau and piecewise thresholds") {
  const Label plateau("P", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                      ThresholdDist::uniform(1, 2));
  const Label tri("T", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                  ThresholdDist::piecewise_linear({{0.0, 0.0}, {1.0, 2.0 / 3.0}, {3.0, 0.0}}));
  const OracleConfig cfg = quick();
  for (const Label& l : {plateau, tri}) {
    for (double x : {5.2, 5.9, 6.3, 6.8}) {
      const double mu = l.appropriateness(Point({x}));
      check_within_3sigma(mc_dilation(l, Point({x}), cfg), dilate_mu(mu));
      check_within_3sigma(mc_concentration(l, Point({x}), cfg), concentrate_mu(mu));
    }
  }
}

TEST_CASE("oracle equivalence holds across threshold kinds on a grid") {
  const Label tri("T", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                  ThresholdDist::piecewise_linear({{0.0, 0.0}, {1.0, 2.0 / 3.0}, {3.0, 0.0}}));
  const Label cust("C", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                   ThresholdDist::custom([](double e) { return (3.0 - e) * 2.0 / 9.0; }, 0.0, 3.0));
  OracleConfig cfg = quick();

  // Monte-Carlo sweep for the piecewise kind
  std::vector<Point> xs;
  for (int i = 0; i <= 50; ++i) xs.push_back(Point({5.0 + 0.06 * i}));
  const auto dil = mc_dilation_grid(tri, xs, cfg);
  const auto con = mc_concentration_grid(tri, xs, cfg);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double mu = tri.appropriateness(xs[i]);
    check_within_3sigma(dil[i], dilate_mu(mu));
    check_within_3sigma(con[i], concentrate_mu(mu));
  }

  // quadrature sweep for the custom kind (survival itself is numeric there)
  cfg.quad_tol = 1e-8;
  for (int i = 0; i <= 50; i += 5) {
    const Point x({5.0 + 0.06 * i});
    const double mu = cust.appropriateness(x);
    CHECK(std::abs(quad_dilation(cust, x, cfg) - dilate_mu(mu)) <= 1e-6);
    CHECK(std::abs(quad_concentration(cust, x, cfg) - concentrate_mu(mu)) <= 1e-6);
  }
}

TEST_CASE("degenerate truncations stay rare") {
  const Label l = base_u03();
  const auto r = mc_dilation(l, Point({6.5}), quick());
  CHECK(r.degenerate <= r.samples / 1000);
}

TEST_CASE("estimates are deterministic and thread-count independent") {
  const Label l = base_u03();
  OracleConfig cfg = quick();
  const auto a = mc_dilation(l, Point({6.5}), cfg);
  const auto b = mc_dilation(l, Point({6.5}), cfg);
  CHECK(a.estimate == b.estimate);
  cfg.parallel = false;
  const auto serial = mc_dilation(l, Point({6.5}), cfg);
  CHECK(a.estimate == serial.estimate);

  const std::vector<Point> xs = {Point({5.5}), Point({6.5}), Point({7.5})};
  const auto grid_par = mc_chain_grid(l, xs, HedgeKind::concentrate, 3, quick());
  OracleConfig scfg = quick();
  scfg.parallel = false;
  const auto grid_ser = mc_chain_grid(l, xs, HedgeKind::concentrate, 3, scfg);
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(grid_par[i].estimate == grid_ser[i].estimate);

  OracleConfig other = quick();
  other.seed = 777;
  CHECK(mc_dilation(l, Point({6.5}), other).estimate != a.estimate);
}

TEST_CASE("chain sampler matches the recurrence") {
  const Label l = base_u03();
  OracleConfig cfg = quick();
  cfg.samples = 400'000;
  const Point x({6.5});
  for (HedgeKind kind : {HedgeKind::dilate, HedgeKind::concentrate}) {
    for (int depth : {2, 3}) {
      check_within_3sigma(mc_chain(l, x, kind, depth, cfg), compose_n(kind, 0.5, depth));
    }
  }
  CHECK(mc_chain(l, Point({5.0}), HedgeKind::dilate, 3, cfg).estimate == 1.0);
  CHECK_THROWS_AS(mc_chain(l, x, HedgeKind::dilate, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(mc_chain(l, x, HedgeKind::rescale, 2, cfg), std::invalid_argument);
}

TEST_CASE("chain depth 2 agrees with the pair sampler's target") {
  const Label l = base_u03();
  const OracleConfig cfg = quick();
  const auto chain = mc_chain(l, Point({6.2}), HedgeKind::dilate, 2, cfg);
  const double mu = l.appropriateness(Point({6.2}));
  check_within_3sigma(chain, dilate_mu(dilate_mu(mu)));
}

TEST_CASE("quadrature oracle evaluates the proof integrals") {
  const OracleConfig cfg;
  const Label l = base_u03();
  const Label plateau("P", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
                      ThresholdDist::uniform(1, 2));
  for (const Label& label : {l, plateau}) {
    for (int i = 0; i <= 80; ++i) {
      const Point x({1.0 + 8.0 * i / 80.0});
      const double mu = label.appropriateness(x);
      CHECK(std::abs(quad_dilation(label, x, cfg) - dilate_mu(mu)) <= 1e-6);
      CHECK(std::abs(quad_concentration(label, x, cfg) - concentrate_mu(mu)) <= 1e-6);
    }
  }
  CHECK(quad_dilation(l, Point({5.0}), cfg) == 1.0);
  CHECK(quad_dilation(l, Point({6.5}), cfg) == doctest::Approx(dilate_mu(0.5)).epsilon(1e-9));
}

TEST_CASE("sup/inf sampling stays close to the corner arithmetic") {
  const Trapezoid f(2, 4, 6, 8);
  const Trapezoid z(-1, -0.5, 0.5, 1);
  CHECK(bosc_supinf_check(f, z, BoscMode::dilate) <= 1e-2);
  CHECK(bosc_supinf_check(f, z, BoscMode::concentrate) <= 1e-2);
  CHECK(bosc_supinf_check(f, Trapezoid(0, 0, 0, 0), BoscMode::dilate) == 0.0);
  CHECK_THROWS_AS(bosc_supinf_check(f, z, BoscMode::dilate, 0.5), std::invalid_argument);
}
