#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "labelsem/hedge.hpp"

namespace labelsem {

/// A 1-D membership sweep: `steps` evenly spaced x values over [lo, hi],
/// one value column per chain prefix (base first).
struct CurveRequest {
  HedgedLabel label;
  double lo;
  double hi;
  int steps;
};

struct Curve {
  std::vector<double> xs;
  std::vector<std::string> columns;           // "mu_base", "mu_h1", ...
  std::vector<std::vector<double>> values;    // values[column][row]
};

/// Evaluates the curve; `parallel` selects the OpenMP row loop, the serial
/// path is the reference the tests compare against (results are identical).
Curve compute_curve(const CurveRequest& req, bool parallel = true);

/// CSV with a header row; full double precision (%.17g) so files round-trip.
void write_csv(const Curve& curve, std::ostream& os);

/// Column-oriented JSON object with the same precision guarantees.
void write_json(const Curve& curve, std::ostream& os);

}  // namespace labelsem
