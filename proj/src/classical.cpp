#include "labelsem/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace labelsem {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// z and alpha of a symmetric resemblance trapezoid (-z-alpha, -z, z, z+alpha)
struct ZAlpha {
  double z;
  double alpha;
  double z_plus_alpha;
};

ZAlpha split_symmetric(const Trapezoid& z) {
  require(z.b == -z.c && z.a == -z.d, "bosc: Z must be symmetric about 0");
  require(z.c >= 0.0, "bosc: Z half-width must be nonnegative");
  return ZAlpha{z.c, z.d - z.c, z.d};
}

}  // namespace

Trapezoid::Trapezoid(double A, double B, double C, double D) : a(A), b(B), c(C), d(D) {
  require(std::isfinite(A) && std::isfinite(B) && std::isfinite(C) && std::isfinite(D),
          "Trapezoid: corners must be finite");
  require(A <= B && B <= C && C <= D, "Trapezoid: corners must satisfy A <= B <= C <= D");
}

double Trapezoid::membership(double x) const {
  if (x <= a || x >= d) {
    // closed core also covers the degenerate rectangle edges
    if (x == a && a == b) return 1.0;
    if (x == d && c == d) return 1.0;
    return 0.0;
  }
  if (x < b) return (x - a) / (b - a);
  if (x <= c) return 1.0;
  return (d - x) / (d - c);
}

HorizonModel::HorizonModel(double c, double a, double sigma) : c(c), a(a), sigma(sigma) {
  require(c >= 0.0 && c < a, "HorizonModel: requires 0 <= c < a");
  require(sigma > 0.0, "HorizonModel: requires sigma > 0");
}

double power_hedge(double m, double k) {
  require(m >= 0.0 && m <= 1.0, "power_hedge: m must lie in [0,1]");
  require(k > 0.0, "power_hedge: k must be > 0");
  return std::pow(m, k);
}

Label shift_hedge(const Label& label, std::span<const double> offset) {
  return Label(label.name() + "+shift", label.prototype().translated(offset), label.metric(),
               label.threshold());
}

double novak_mu(const HorizonModel& h, double x, bool hedged) {
  const double c = hedged ? h.sigma * h.c : h.c;
  const double span = hedged ? h.sigma * (h.a - h.c) : (h.a - h.c);
  if (x <= c) return 1.0;
  const double v = 1.0 - (x - c) / span;
  return std::max(0.0, v);
}

bool novak_equivalence_check(double c, double a, double k, int grid_points, double tol) {
  require(c >= 0.0 && c < a, "novak_equivalence_check: requires 0 <= c < a");
  require(k > 0.0, "novak_equivalence_check: requires k > 0");
  require(grid_points >= 2, "novak_equivalence_check: need at least 2 grid points");

  const Label base("novak", PrototypeSet::single(Point({0.0})), Metric::absolute_1d(),
                   ThresholdDist::uniform(c, a));
  const HedgedLabel hedged = apply(HedgeSpec::rescale(MonotoneFn::linear_scale(k)), base);
  const HorizonModel horizon(c, a, k);

  const double hi = k * a + 1.0;  // past the hedged support
  double max_dev = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = hi * static_cast<double>(i) / (grid_points - 1);
    const double dev = std::abs(hedged.appropriateness(Point({x})) - novak_mu(horizon, x, true));
    max_dev = std::max(max_dev, dev);
  }
  return max_dev <= tol;
}

Trapezoid bosc_dilate(const Trapezoid& f, const Trapezoid& z) {
  const ZAlpha za = split_symmetric(z);
  return Trapezoid(f.a - za.z_plus_alpha, f.b - za.z, f.c + za.z, f.d + za.z_plus_alpha);
}

Trapezoid bosc_concentrate(const Trapezoid& f, const Trapezoid& z) {
  const ZAlpha za = split_symmetric(z);
  require(f.c - f.b >= 2.0 * za.z, "bosc_concentrate: requires C - B >= 2z (core would degenerate)");
  return Trapezoid(f.a + za.z_plus_alpha, f.b + za.z, f.c - za.z, f.d - za.z_plus_alpha);
}

BoscParams bosc_equivalence_params(double k, double c, double a, BoscMode mode) {
  require(c >= 0.0 && c < a, "bosc_equivalence_params: requires 0 <= c < a");
  if (mode == BoscMode::dilate)
    require(k >= 1.0, "bosc_equivalence_params: dilation requires k >= 1");
  else
    require(k > 0.0 && k <= 1.0, "bosc_equivalence_params: concentration requires 0 < k <= 1");

  // Evaluated as k*c - c rather than (k-1)*c: the grouped form keeps the
  // corner arithmetic exact in doubles whenever k*c and k*a are.
  double z, alpha;
  if (mode == BoscMode::dilate) {
    z = k * c - c;
    alpha = (k * a - a) - z;
  } else {
    z = c - k * c;
    alpha = (a - k * a) - z;
  }
  return BoscParams{z, alpha, c < z};
}

Trapezoid resemblance_trapezoid(const BoscParams& p) {
  require(p.z >= 0.0 && p.alpha >= 0.0, "resemblance_trapezoid: z and alpha must be nonnegative");
  const double zpa = p.z + p.alpha;
  return Trapezoid(-zpa, -p.z, p.z, zpa);
}

MonotoneFn power_as_threshold_fn(double b, double k) {
  require(b > 0.0, "power_as_threshold_fn: requires b > 0");
  require(k > 0.0, "power_as_threshold_fn: requires k > 0");
  const double bk1 = std::pow(b, k - 1.0);
  auto forward = [b, k, bk1](double e) { return b - std::pow(bk1 * (b - e), 1.0 / k); };
  auto inverse = [b, k, bk1](double d) { return b - std::pow(b - d, k) / bk1; };
  return MonotoneFn::custom(std::move(forward), std::move(inverse), 0.0, b);
}

}  // namespace labelsem
