#pragma once

#include <span>

#include "labelsem/hedge.hpp"
#include "labelsem/label.hpp"

namespace labelsem {

/// Trapezoidal fuzzy set (A, B, C, D): membership 1 on the core [B, C],
/// linear ramps on [A, B] and [C, D], 0 outside the support [A, D].
struct Trapezoid {
  double a, b, c, d;

  Trapezoid(double A, double B, double C, double D);
  double membership(double x) const;
  bool operator==(const Trapezoid&) const = default;
};

/// Linear horizon model: certainly-applicable region bound c, upper limit a,
/// horizon shift factor sigma.
struct HorizonModel {
  double c, a, sigma;

  HorizonModel(double c, double a, double sigma);
};

/// Classical powering modifier m^k (k = 2 concentration, k = 1/2 dilation).
double power_hedge(double m, double k);

/// Shifting modifier: prototype translated by `offset`, so the hedged
/// membership satisfies mu_shifted(x) = mu(x - offset).
Label shift_hedge(const Label& label, std::span<const double> offset);

/// Piecewise-linear horizon membership; hedged=true evaluates the shifted
/// horizon (sigma c, sigma a).
double novak_mu(const HorizonModel& h, double x, bool hedged);

/// True iff the rescale hedge f(eps) = k eps on the label (P = 0,
/// eps ~ U[c, a]) matches the hedged horizon membership with sigma = k
/// within tol at every grid point.
bool novak_equivalence_check(double c, double a, double k, int grid_points = 500,
                             double tol = 1e-9);

/// Resemblance-based dilation: Z must be symmetric about 0, i.e.
/// Z = (-z-alpha, -z, z, z+alpha). Corners widen to
/// (A-z-alpha, B-z, C+z, D+z+alpha).
Trapezoid bosc_dilate(const Trapezoid& f, const Trapezoid& z);

/// Resemblance-based concentration; requires C - B >= 2z. Corners narrow to
/// (A+z+alpha, B+z, C-z, D-z-alpha).
Trapezoid bosc_concentrate(const Trapezoid& f, const Trapezoid& z);

enum class BoscMode { dilate, concentrate };

struct BoscParams {
  double z;
  double alpha;
  /// The resemblance construction wants c < z; the mapping can violate
  /// that for k near 1, so the condition is reported, not enforced.
  bool satisfies_c_lt_z;
};

/// Parameters (z, alpha) such that the Bosc modifier applied to the
/// trapezoid (P-a, P-c, P+c, P+a) lands exactly on (P-ka, P-kc, P+kc, P+ka).
/// Dilation requires k >= 1, concentration 0 < k <= 1.
BoscParams bosc_equivalence_params(double k, double c, double a, BoscMode mode);

/// Z = (-z-alpha, -z, z, z+alpha) for use with the bosc modifiers.
Trapezoid resemblance_trapezoid(const BoscParams& p);

/// Threshold map f(eps) = b - (b^{k-1} (b - eps))^{1/k} on [0, b]: a rescale
/// hedge with this map applied to a label with eps ~ U[0, b] reproduces the
/// powering modifier mu^k.
MonotoneFn power_as_threshold_fn(double b, double k);

}  // namespace labelsem
