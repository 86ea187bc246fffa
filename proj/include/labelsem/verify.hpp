#pragma once

#include <string>
#include <vector>

#include "labelsem/oracle.hpp"

namespace labelsem::verify {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Closed-form dilation/concentration against the proof-integral quadrature
/// (tol 1e-6) and the Monte-Carlo construction (3 sigma) for the labels
/// (P=5, U[0,3]) and (P=5, U[1,2]) on a 161-point grid over [1,9]. The
/// whole sweep must finish within 60 s.
CheckResult check_closed_vs_oracles(HedgeKind kind, const OracleConfig& cfg);

/// Bosc worked example: F=(2,4,6,8), Z=(-1,-0.5,0.5,1) must land exactly on
/// (1,3.5,6.5,9) and (3,4.5,5.5,7); also sup/inf sampling within 1e-2.
CheckResult check_bosc_worked_example();

/// Corner arithmetic with the equivalence parameters must land exactly on
/// (P-ka, P-kc, P+kc, P+ka) for k in {1.5,2,3} x (c,a) in {(1,2),(2,5)}
/// (dilation) and k in {0.5,0.8} (concentration, subject to C-B >= 2z).
CheckResult check_bosc_equivalence();

/// Rescale hedge f(eps)=k eps on (P=0, U[c,a]) equals the shifted-horizon
/// membership with sigma=k within 1e-9 on 500-point grids, for
/// k in {0.5,1,2} x (c,a) in {(1,2),(0,3),(2,5)}.
CheckResult check_novak_equivalence();

/// (P=5, U[1,2]): eps*2 and eps*0.5 reproduce the displayed piecewise
/// forms exactly, breakpoints included.
CheckResult check_deterministic_example();

/// Rescale with the powering threshold map reproduces mu^k within 1e-9 on
/// [2,8] for b=3, k in {2, 0.5}.
CheckResult check_powering_equivalence();

/// compose_n against mc_chain at depths 2 and 3 (3 sigma) and exactness of
/// deterministic linear chains.
CheckResult check_composition(const OracleConfig& cfg);

/// iterate_to_limit reaches the limit profile within 1e-6; fixed points are
/// preserved exactly; deterministic rescale limits behave as the indicator
/// of the prototype (contraction) or all-ones (dilation).
CheckResult check_limits();

/// Duality, monotonicity, strict expansion/contraction and the
/// prototype-monotonicity corollary at 1e-12 over 10^4 sampled values.
CheckResult check_properties(std::uint64_t seed);

/// Scope names accepted by the CLI: dilate, concentrate, chain, bosc,
/// novak, power, deterministic, limits, properties, all.
std::vector<CheckResult> run_scope(const std::string& scope, const OracleConfig& cfg);

}  // namespace labelsem::verify
