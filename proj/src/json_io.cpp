#include "labelsem/json_io.hpp"

#include <stdexcept>

namespace labelsem {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("json: " + msg); }

double num(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

ThresholdDist threshold_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dist")) bad("threshold needs a \"dist\" field");
  const std::string kind = j.at("dist").get<std::string>();
  if (kind == "uniform") {
    return ThresholdDist::uniform(num(j.at("lo"), "lo"), num(j.at("hi"), "hi"));
  }
  if (kind == "piecewise") {
    std::vector<std::pair<double, double>> knots;
    for (const auto& kn : j.at("knots")) {
      if (!kn.is_array() || kn.size() != 2) bad("piecewise knots must be [e, delta] pairs");
      knots.emplace_back(num(kn[0], "knot e"), num(kn[1], "knot delta"));
    }
    return ThresholdDist::piecewise_linear(std::move(knots));
  }
  bad("unknown threshold dist \"" + kind + "\"");
}

json threshold_to_json(const ThresholdDist& t) {
  switch (t.kind()) {
    case ThresholdDist::Kind::uniform:
      return json{{"dist", "uniform"}, {"lo", t.support_lo()}, {"hi", t.support_hi()}};
    case ThresholdDist::Kind::piecewise: {
      json knots = json::array();
      for (const auto& [e, y] : t.knots()) knots.push_back(json::array({e, y}));
      return json{{"dist", "piecewise"}, {"knots", knots}};
    }
    case ThresholdDist::Kind::custom:
      break;
  }
  bad("custom thresholds are in-process only and do not serialize");
}

Metric metric_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "euclidean") return Metric::euclidean();
    if (s == "absolute-1d") return Metric::absolute_1d();
    bad("unknown metric \"" + s + "\"");
  }
  if (j.is_object() && j.value("kind", "") == "weighted-euclidean") {
    std::vector<double> w;
    for (const auto& v : j.at("weights")) w.push_back(num(v, "weight"));
    return Metric::weighted_euclidean(std::move(w));
  }
  bad("metric must be a name or {\"kind\":\"weighted-euclidean\",...}");
}

json metric_to_json(const Metric& m) {
  switch (m.kind()) {
    case Metric::Kind::euclidean:
      return "euclidean";
    case Metric::Kind::absolute_1d:
      return "absolute-1d";
    case Metric::Kind::weighted_euclidean:
      return json{{"kind", "weighted-euclidean"},
                  {"weights", std::vector<double>(m.weights().begin(), m.weights().end())}};
  }
  bad("unknown metric kind");
}

PrototypeSet prototype_from_json(const json& j) {
  if (!j.is_object()) bad("prototype must be an object");
  if (j.contains("interval")) {
    const auto& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) bad("prototype interval must be [lo, hi]");
    return PrototypeSet::interval(num(iv[0], "lo"), num(iv[1], "hi"));
  }
  if (j.contains("points")) {
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
      std::vector<double> coords;
      for (const auto& c : p) coords.push_back(num(c, "coordinate"));
      pts.emplace_back(std::move(coords));
    }
    return PrototypeSet::points(std::move(pts));
  }
  bad("prototype needs \"interval\" or \"points\"");
}

json prototype_to_json(const PrototypeSet& p) {
  if (p.is_interval())
    return json{{"interval", json::array({p.as_interval().lo, p.as_interval().hi})}};
  json pts = json::array();
  for (const Point& pt : p.as_points())
    pts.push_back(std::vector<double>(pt.coords().begin(), pt.coords().end()));
  return json{{"points", pts}};
}

Label label_from_json(const json& j) {
  if (!j.is_object()) bad("label must be an object");
  return Label(j.value("name", "label"), prototype_from_json(j.at("prototype")),
               metric_from_json(j.value("metric", json("euclidean"))),
               threshold_from_json(j.at("threshold")));
}

json label_to_json(const Label& l) {
  return json{{"name", l.name()},
              {"prototype", prototype_to_json(l.prototype())},
              {"metric", metric_to_json(l.metric())},
              {"threshold", threshold_to_json(l.threshold())}};
}

MonotoneFn monotone_fn_from_json(const json& j) {
  if (j.is_number()) return MonotoneFn::linear_scale(j.get<double>());
  if (!j.is_object()) bad("monotone map must be an object or a scale factor");
  const std::string kind = j.value("kind", "linear");
  if (kind == "linear") return MonotoneFn::linear_scale(num(j.at("k"), "k"));
  if (kind == "affine") return MonotoneFn::affine(num(j.at("k"), "k"), num(j.at("b"), "b"));
  if (kind == "power") return power_as_threshold_fn(num(j.at("b"), "b"), num(j.at("k"), "k"));
  bad("unknown monotone map kind \"" + kind + "\"");
}

std::vector<HedgeSpec> hedge_from_json(const json& j) {
  std::string name;
  const json* obj = nullptr;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else if (j.is_object()) {
    if (!j.contains("hedge")) bad("hedge object needs a \"hedge\" field");
    name = j.at("hedge").get<std::string>();
    obj = &j;
  } else {
    bad("hedge must be a name or an object");
  }

  std::optional<MonotoneFn> f;
  std::optional<PrototypeSet> proto;
  if (obj) {
    if (obj->contains("f")) f = monotone_fn_from_json(obj->at("f"));
    if (obj->contains("k") && !f) f = MonotoneFn::linear_scale(num(obj->at("k"), "k"));
    if (obj->contains("prototype")) proto = prototype_from_json(obj->at("prototype"));
  }

  const auto finish = [&](HedgeSpec spec) {
    if (proto) spec = std::move(spec).with_prototype(*proto);
    return spec;
  };

  std::vector<HedgeSpec> out;
  if (name == "quite" || name == "dilate") {
    out.push_back(finish(f ? HedgeSpec::dilate_f(*f) : HedgeSpec::dilate()));
  } else if (name == "very" || name == "concentrate") {
    out.push_back(finish(f ? HedgeSpec::concentrate_f(*f) : HedgeSpec::concentrate()));
  } else if (name == "extremely") {
    // modelled as "very, very"
    if (f) bad("\"extremely\" takes no threshold map");
    out.push_back(finish(HedgeSpec::concentrate()));
    out.push_back(HedgeSpec::concentrate());
  } else if (name == "rescale") {
    if (!f) bad("\"rescale\" needs \"f\" or \"k\"");
    out.push_back(finish(HedgeSpec::rescale(*f)));
  } else {
    bad("unknown hedge \"" + name + "\"");
  }
  return out;
}

std::vector<HedgeSpec> hedge_chain_from_json(const json& j) {
  std::vector<HedgeSpec> chain;
  if (j.is_array()) {
    for (const auto& e : j) {
      auto part = hedge_from_json(e);
      for (auto& h : part) chain.push_back(std::move(h));
    }
  } else {
    chain = hedge_from_json(j);
  }
  return chain;
}

Trapezoid trapezoid_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) bad("trapezoid must be [A,B,C,D]");
  return Trapezoid(num(j[0], "A"), num(j[1], "B"), num(j[2], "C"), num(j[3], "D"));
}

json trapezoid_to_json(const Trapezoid& t) { return json::array({t.a, t.b, t.c, t.d}); }

}  // namespace labelsem
