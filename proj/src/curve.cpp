#include "labelsem/curve.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace labelsem {

namespace {

void put_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

Curve compute_curve(const CurveRequest& req, bool parallel) {
  if (!(req.lo < req.hi)) throw std::invalid_argument("compute_curve: requires lo < hi");
  if (req.steps < 2) throw std::invalid_argument("compute_curve: requires steps >= 2");
  if (req.label.base().dim() != 1)
    throw std::invalid_argument("compute_curve: curves sweep 1-D labels only");

  const auto chain = req.label.chain();
  const std::size_t ncols = chain.size() + 1;
  Curve out;
  out.xs.resize(static_cast<std::size_t>(req.steps));
  out.columns.resize(ncols);
  out.columns[0] = "mu_base";
  for (std::size_t c = 1; c < ncols; ++c) out.columns[c] = "mu_h" + std::to_string(c);
  out.values.assign(ncols, std::vector<double>(out.xs.size()));

  // one evaluator per chain prefix
  std::vector<HedgedLabel> prefixes;
  prefixes.reserve(ncols);
  prefixes.emplace_back(req.label.base());
  for (std::size_t c = 1; c < ncols; ++c) prefixes.push_back(prefixes.back().apply(chain[c - 1]));

  const double step = (req.hi - req.lo) / static_cast<double>(req.steps - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < req.steps; ++i) {
    const double x = req.lo + step * static_cast<double>(i);
    out.xs[static_cast<std::size_t>(i)] = x;
    const Point p({x});
    for (std::size_t c = 0; c < ncols; ++c)
      out.values[c][static_cast<std::size_t>(i)] = prefixes[c].appropriateness(p);
  }
  (void)parallel;
  return out;
}

void write_csv(const Curve& curve, std::ostream& os) {
  os << "x";
  for (const auto& name : curve.columns) os << "," << name;
  os << "\n";
  for (std::size_t i = 0; i < curve.xs.size(); ++i) {
    put_double(os, curve.xs[i]);
    for (const auto& col : curve.values) {
      os << ",";
      put_double(os, col[i]);
    }
    os << "\n";
  }
}

void write_json(const Curve& curve, std::ostream& os) {
  os << "{\n  \"x\": [";
  for (std::size_t i = 0; i < curve.xs.size(); ++i) {
    if (i) os << ", ";
    put_double(os, curve.xs[i]);
  }
  os << "]";
  for (std::size_t c = 0; c < curve.columns.size(); ++c) {
    os << ",\n  \"" << curve.columns[c] << "\": [";
    for (std::size_t i = 0; i < curve.values[c].size(); ++i) {
      if (i) os << ", ";
      put_double(os, curve.values[c][i]);
    }
    os << "]";
  }
  os << "\n}\n";
}

}  // namespace labelsem
