#include <doctest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include <cmath>
#include <sstream>

#include "labelsem/curve.hpp"
#include "labelsem/json_io.hpp"

using namespace labelsem;

namespace {

Label base_u03() {
  return Label("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
               ThresholdDist::uniform(0, 3));
}

}  // namespace

TEST_CASE("curve columns follow the chain prefixes") {
  HedgedLabel hl(base_u03());
  hl = std::move(hl).apply(HedgeSpec::dilate());
  const Curve c = compute_curve(CurveRequest{hl, 1.0, 9.0, 161});
  REQUIRE(c.xs.size() == 161);
  REQUIRE(c.columns.size() == 2);
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    CHECK(c.values[1][i] >= c.values[0][i]);  // dilation dominates the base
  }
}

TEST_CASE("bare label curve peaks at the prototype") {
  const Curve c = compute_curve(CurveRequest{HedgedLabel(base_u03()), 1.0, 9.0, 161});
  REQUIRE(c.columns.size() == 1);
  double best = -1.0;
  double arg = 0.0;
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    if (c.values[0][i] > best) {
      best = c.values[0][i];
      arg = c.xs[i];
    }
  }
  CHECK(best == 1.0);
  CHECK(arg == 5.0);
}

TEST_CASE("serial and parallel curve evaluation agree exactly") {
  HedgedLabel hl(base_u03());
  hl = std::move(hl).apply(HedgeSpec::dilate());
  hl = std::move(hl).apply(HedgeSpec::concentrate());
  const CurveRequest req{hl, 1.0, 9.0, 10'001};
  const Curve a = compute_curve(req, false);
  const Curve b = compute_curve(req, true);
  for (std::size_t c = 0; c < a.values.size(); ++c)
    for (std::size_t i = 0; i < a.values[c].size(); ++i)
      CHECK(a.values[c][i] == b.values[c][i]);
}

TEST_CASE("csv round-trips full precision") {
  HedgedLabel hl(base_u03());
  hl = std::move(hl).apply(HedgeSpec::dilate());
  const Curve c = compute_curve(CurveRequest{hl, 1.0, 9.0, 101});
  std::stringstream ss;
  write_csv(c, ss);

  std::string header;
  std::getline(ss, header);
  CHECK(header == "x,mu_base,mu_h1");

  std::string line;
  std::size_t row = 0;
  while (std::getline(ss, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double x = std::stod(line.substr(0, c1));
    const double mu0 = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double mu1 = std::stod(line.substr(c2 + 1));
    CHECK(x == c.xs[row]);
    // re-evaluating the parsed x reproduces the stored values exactly
    CHECK(mu0 == hl.base().appropriateness(Point({x})));
    CHECK(mu1 == hl.appropriateness(Point({x})));
    ++row;
  }
  CHECK(row == 101);
}

TEST_CASE("request validation") {
  const HedgedLabel hl{base_u03()};
  CHECK_THROWS_AS(compute_curve(CurveRequest{hl, 2.0, 1.0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(compute_curve(CurveRequest{hl, 1.0, 9.0, 1}), std::invalid_argument);
}

TEST_CASE("label specs parse from json") {
  const json j = json::parse(R"({
    "name": "tall",
    "prototype": {"interval": [6.5, 6.5]},
    "metric": "euclidean",
    "threshold": {"dist": "uniform", "lo": 0, "hi": 1}
  })");
  const Label l = label_from_json(j);
  CHECK(l.name() == "tall");
  CHECK(l.appropriateness(Point({6.0})) == 0.5);

  const json round = label_to_json(l);
  CHECK(label_from_json(round).appropriateness(Point({6.0})) == 0.5);
}

TEST_CASE("threshold specs parse from json") {
  const ThresholdDist u = threshold_from_json(json::parse(R"({"dist":"uniform","lo":0,"hi":3})"));
  CHECK(u.survival(1.5) == 0.5);
  const ThresholdDist p = threshold_from_json(
      json::parse(R"({"dist":"piecewise","knots":[[0,0],[1,0.6666666666666666],[3,0]]})"));
  CHECK(p.density(1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(threshold_from_json(threshold_to_json(p)).survival(1.0) ==
        doctest::Approx(p.survival(1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(threshold_from_json(json::parse(R"({"dist":"gaussian"})")),
                  std::invalid_argument);
}

TEST_CASE("hedge chains parse from json with aliases") {
  const auto quite = hedge_chain_from_json(json("quite"));
  REQUIRE(quite.size() == 1);
  CHECK(quite[0].kind() == HedgeKind::dilate);

  const auto extremely = hedge_chain_from_json(json("extremely"));
  REQUIRE(extremely.size() == 2);
  CHECK(extremely[0].kind() == HedgeKind::concentrate);
  CHECK(extremely[1].kind() == HedgeKind::concentrate);

  const auto chain = hedge_chain_from_json(json::parse(R"(["quite", {"hedge":"rescale","k":2.0}])"));
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].kind() == HedgeKind::dilate);
  CHECK(chain[1].kind() == HedgeKind::rescale);
  CHECK(chain[1].f()->forward(1.0) == 2.0);

  const auto withf = hedge_chain_from_json(
      json::parse(R"({"hedge":"very","f":{"kind":"linear","k":3.0}})"));
  CHECK(withf[0].kind() == HedgeKind::concentrate_f);

  const auto power = hedge_chain_from_json(
      json::parse(R"({"hedge":"rescale","f":{"kind":"power","b":3.0,"k":2.0}})"));
  CHECK(power[0].f()->forward(3.0) == 3.0);

  const auto with_proto = hedge_chain_from_json(
      json::parse(R"({"hedge":"quite","prototype":{"interval":[4,6]}})"));
  CHECK(with_proto[0].prototype_override().has_value());

  CHECK_THROWS_AS(hedge_chain_from_json(json("forsooth")), std::invalid_argument);
  CHECK_THROWS_AS(hedge_chain_from_json(json::parse(R"({"hedge":"rescale"})")),
                  std::invalid_argument);
}

TEST_CASE("trapezoids serialize as corner arrays") {
  const Trapezoid t = trapezoid_from_json(json::parse("[2,4,6,8]"));
  CHECK(t == Trapezoid(2, 4, 6, 8));
  CHECK(trapezoid_to_json(t).dump() == "[2.0,4.0,6.0,8.0]");
  CHECK_THROWS_AS(trapezoid_from_json(json::parse("[2,4,6]")), std::invalid_argument);
}
