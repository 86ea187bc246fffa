#include "labelsem/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace labelsem::verify {

namespace {

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Label label_u03() {
  return Label("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
               ThresholdDist::uniform(0.0, 3.0));
}

Label label_u12() {
  return Label("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
               ThresholdDist::uniform(1.0, 2.0));
}

// sigma of a Monte-Carlo estimate under the hypothesis that `want` is the
// true probability; zero only when the estimate must be exact
double null_se(double want, std::uint64_t n) {
  return std::sqrt(want * (1.0 - want) / static_cast<double>(n));
}

// Two-sided consistency test at the 3-sigma confidence level (0.27%).
// Normal approximation in the bulk; where the expected hit or miss count
// drops under 100 the binomial tail is Poisson and the +-3 sigma band is
// meaningless (an exact estimator with lambda ~ 1 routinely lands
// "4 sigma" out), so test the equal-tails Poisson probabilities instead.
bool mc_consistent(double want, double est, std::uint64_t n) {
  if (want <= 0.0 || want >= 1.0) return est == want;
  const double np = want * static_cast<double>(n);
  const double nq = (1.0 - want) * static_cast<double>(n);
  if (std::min(np, nq) >= 100.0) {
    return std::abs(est - want) <= 3.0 * null_se(want, n);
  }
  const bool hits_rare = np <= nq;
  const double lambda = hits_rare ? np : nq;
  const double count = std::round((hits_rare ? est : 1.0 - est) * static_cast<double>(n));
  // P(X <= count) and P(X >= count) for X ~ Poisson(lambda)
  constexpr double kAlphaHalf = 0.00135;  // one side of the 3-sigma level
  double pmf = std::exp(-lambda);
  double cdf_below = 0.0;  // P(X < count)
  double cdf_upto = 0.0;   // P(X <= count)
  const int kmax = static_cast<int>(count) + 1;
  for (int k = 0; k <= kmax; ++k) {
    if (k < count) cdf_below += pmf;
    if (k <= count) cdf_upto += pmf;
    pmf *= lambda / (k + 1);
  }
  const double p_le = cdf_upto;
  const double p_ge = 1.0 - cdf_below;
  return p_le >= kAlphaHalf && p_ge >= kAlphaHalf;
}

std::vector<Point> grid_points(double lo, double hi, int n) {
  std::vector<Point> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) xs.push_back(Point({lo + step * i}));
  return xs;
}

double closed_hedge(HedgeKind kind, double m) {
  return kind == HedgeKind::dilate ? dilate_mu(m) : concentrate_mu(m);
}

}  // namespace

CheckResult check_closed_vs_oracles(HedgeKind kind, const OracleConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const char* kname = kind == HedgeKind::dilate ? "dilate" : "concentrate";
  const auto xs = grid_points(1.0, 9.0, 161);

  double max_quad = 0.0;
  double worst_sigmas = 0.0;
  bool mc_ok = true;
  for (const Label& label : {label_u03(), label_u12()}) {
    const auto mc = (kind == HedgeKind::dilate) ? mc_dilation_grid(label, xs, cfg)
                                                : mc_concentration_grid(label, xs, cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double mu1 = label.appropriateness(xs[i]);
      const double closed = closed_hedge(kind, mu1);
      const double quad = (kind == HedgeKind::dilate) ? quad_dilation(label, xs[i], cfg)
                                                      : quad_concentration(label, xs[i], cfg);
      max_quad = std::max(max_quad, std::abs(closed - quad));
      if (!mc_consistent(closed, mc[i].estimate, cfg.samples)) mc_ok = false;
      const double se = null_se(closed, cfg.samples);
      if (se > 0.0)
        worst_sigmas = std::max(worst_sigmas, std::abs(closed - mc[i].estimate) / se);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = max_quad <= 1e-6 && mc_ok && secs <= 60.0;
  return CheckResult{std::string(kname) + " closed form vs oracles", pass,
                     fmt("max|closed-quad|=%.3g (tol 1e-06), worst MC dev=%.2f sigma (tol 3), "
                         "%.1f s (tol 60)",
                         max_quad, worst_sigmas, secs)};
}

CheckResult check_bosc_worked_example() {
  const Trapezoid f(2, 4, 6, 8);
  const Trapezoid z(-1, -0.5, 0.5, 1);
  const Trapezoid dil = bosc_dilate(f, z);
  const Trapezoid con = bosc_concentrate(f, z);
  const bool corners = dil == Trapezoid(1, 3.5, 6.5, 9) && con == Trapezoid(3, 4.5, 5.5, 7);
  const double dev_d = bosc_supinf_check(f, z, BoscMode::dilate);
  const double dev_c = bosc_supinf_check(f, z, BoscMode::concentrate);
  const bool pass = corners && dev_d <= 1e-2 && dev_c <= 1e-2;
  return CheckResult{"bosc worked example", pass,
                     std::string(corners ? "corners exact" : "corners WRONG") +
                         fmt(", sup dev=%.3g, inf dev=%.3g (tol 1e-02)", dev_d, dev_c)};
}

CheckResult check_bosc_equivalence() {
  const double p = 5.0;
  int checked = 0, exact = 0;
  const auto run = [&](double k, double c, double a, BoscMode mode) {
    const Trapezoid base(p - a, p - c, p + c, p + a);
    const BoscParams params = bosc_equivalence_params(k, c, a, mode);
    const Trapezoid z = resemblance_trapezoid(params);
    const Trapezoid got = (mode == BoscMode::dilate) ? bosc_dilate(base, z) : bosc_concentrate(base, z);
    const Trapezoid want(p - k * a, p - k * c, p + k * c, p + k * a);
    ++checked;
    if (got == want) ++exact;
  };
  for (double k : {1.5, 2.0, 3.0})
    for (auto [c, a] : {std::pair{1.0, 2.0}, std::pair{2.0, 5.0}}) run(k, c, a, BoscMode::dilate);
  for (double k : {0.5, 0.8})
    for (auto [c, a] : {std::pair{1.0, 2.0}, std::pair{2.0, 5.0}})
      run(k, c, a, BoscMode::concentrate);
  const bool pass = exact == checked;
  return CheckResult{"bosc equivalence mapping", pass,
                     fmt("%g/%g parameter sets land exactly on (P-ka,P-kc,P+kc,P+ka)",
                         double(exact), double(checked))};
}

CheckResult check_novak_equivalence() {
  int checked = 0, ok = 0;
  for (double k : {0.5, 1.0, 2.0}) {
    for (auto [c, a] : {std::pair{1.0, 2.0}, std::pair{0.0, 3.0}, std::pair{2.0, 5.0}}) {
      ++checked;
      if (novak_equivalence_check(c, a, k, 500, 1e-9)) ++ok;
    }
  }
  const bool pass = ok == checked;
  return CheckResult{"novak linear equivalence", pass,
                     fmt("%g/%g parameter sets within 1e-09 on 500-point grids", double(ok),
                         double(checked))};
}

CheckResult check_deterministic_example() {
  const Label base = label_u12();
  const HedgedLabel quite = apply(HedgeSpec::rescale(MonotoneFn::linear_scale(2.0)), base);
  const HedgedLabel very = apply(HedgeSpec::rescale(MonotoneFn::linear_scale(0.5)), base);

  const auto expect_quite = [](double d) {
    if (d < 2.0) return 1.0;
    if (d <= 4.0) return (4.0 - d) / 2.0;
    return 0.0;
  };
  const auto expect_very = [](double d) {
    if (d < 0.5) return 1.0;
    if (d <= 1.0) return (1.0 - d) / 0.5;
    return 0.0;
  };

  int mismatches = 0;
  // step 1/64 keeps x, |x-5| and the breakpoints exactly representable
  for (int i = 0; i <= 10 * 64; ++i) {
    const double x = i / 64.0;
    const double d = std::abs(x - 5.0);
    if (quite.appropriateness(Point({x})) != expect_quite(d)) ++mismatches;
    if (very.appropriateness(Point({x})) != expect_very(d)) ++mismatches;
  }
  return CheckResult{"deterministic U[1,2] example", mismatches == 0,
                     fmt("%g exact mismatches over 641 grid points x 2 hedges", double(mismatches))};
}

CheckResult check_powering_equivalence() {
  double max_dev = 0.0;
  for (double k : {2.0, 0.5}) {
    const Label base = label_u03();
    const HedgedLabel hedged = apply(HedgeSpec::rescale(power_as_threshold_fn(3.0, k)), base);
    for (int i = 0; i <= 600; ++i) {
      const double x = 2.0 + 6.0 * i / 600.0;
      const double want = std::pow(base.appropriateness(Point({x})), k);
      max_dev = std::max(max_dev, std::abs(hedged.appropriateness(Point({x})) - want));
    }
  }
  return CheckResult{"powering equivalence", max_dev <= 1e-9,
                     fmt("max|rescale - mu^k| = %.3g (tol 1e-09)", max_dev)};
}

CheckResult check_composition(const OracleConfig& cfg) {
  const Label base = label_u03();
  const std::vector<Point> xs = {Point({5.9}), Point({6.5}), Point({7.1})};

  bool mc_ok = true;
  double worst_sigmas = 0.0;
  for (HedgeKind kind : {HedgeKind::dilate, HedgeKind::concentrate}) {
    for (int depth : {2, 3}) {
      const auto mc = mc_chain_grid(base, xs, kind, depth, cfg);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double want = compose_n(kind, base.appropriateness(xs[i]), depth);
        if (!mc_consistent(want, mc[i].estimate, cfg.samples)) mc_ok = false;
        const double np = want * static_cast<double>(cfg.samples);
        const double nq = (1.0 - want) * static_cast<double>(cfg.samples);
        if (std::min(np, nq) >= 100.0)
          worst_sigmas =
              std::max(worst_sigmas, std::abs(mc[i].estimate - want) / null_se(want, cfg.samples));
      }
    }
  }

  // deterministic chains: n rescale(k) hedges equal survival(d / k^n) exactly
  int mismatches = 0;
  for (double k : {2.0, 0.5}) {
    for (int n : {2, 3, 5}) {
      HedgedLabel chained(base);
      for (int i = 0; i < n; ++i)
        chained = std::move(chained).apply(HedgeSpec::rescale(MonotoneFn::linear_scale(k)));
      for (int i = 0; i <= 160; ++i) {
        const double x = 1.0 + 8.0 * i / 160.0;
        const double d = std::abs(x - 5.0);
        const double want = survival_extended(base.threshold(), d / std::pow(k, n));
        if (chained.appropriateness(Point({x})) != want) ++mismatches;
      }
    }
  }

  const bool pass = mc_ok && mismatches == 0;
  return CheckResult{"composition", pass,
                     fmt("worst chain MC dev=%.2f sigma (tol 3), %g deterministic mismatches",
                         worst_sigmas, double(mismatches))};
}

CheckResult check_limits() {
  bool ok = true;
  std::string why;

  for (HedgeKind kind : {HedgeKind::dilate, HedgeKind::concentrate}) {
    for (double m0 : {0.01, 0.5, 0.99}) {
      const auto r = iterate_to_limit(kind, m0, 1e-6);
      if (std::abs(r.value - limit_profile(kind, m0)) >= 1e-6) ok = false;
    }
    // fixed points exactly preserved
    if (compose_n(kind, 0.0, 50) != 0.0 || compose_n(kind, 1.0, 50) != 1.0) ok = false;
    if (iterate_to_limit(kind, kind == HedgeKind::dilate ? 1.0 : 0.0, 1e-6).steps != 0) ok = false;
  }

  // deterministic rescale limits on a grid: contraction -> indicator of the
  // prototype, dilation -> all ones
  const Label base = label_u03();
  const int n = 100;
  double worst = 0.0;
  for (double k : {0.5, 2.0}) {
    HedgedLabel chained(base);
    for (int i = 0; i < n; ++i)
      chained = std::move(chained).apply(HedgeSpec::rescale(MonotoneFn::linear_scale(k)));
    for (int i = 0; i <= 120; ++i) {
      const double x = 2.0 + 6.0 * i / 120.0;
      const double d = std::abs(x - 5.0);
      const double limit = (k < 1.0) ? (d == 0.0 ? 1.0 : 0.0) : 1.0;
      worst = std::max(worst, std::abs(chained.appropriateness(Point({x})) - limit));
    }
  }
  if (worst > 1e-6) ok = false;

  return CheckResult{"limits of composition", ok,
                     fmt("limits within 1e-06, fixed points exact, rescale-limit dev=%.3g", worst)};
}

CheckResult check_properties(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto u01 = [&rng] { return detail::uniform01(rng()); };
  const double tol = 1e-12;
  int failures = 0;

  for (int i = 0; i < 10'000; ++i) {
    double m = u01();
    if (i == 0) m = 0.0;
    if (i == 1) m = 1.0;
    if (i == 2) m = 1e-15;
    if (i == 3) m = 1.0 - 1e-15;

    // duality
    if (std::abs(concentrate_mu(m) - (1.0 - dilate_mu(1.0 - m))) > tol) ++failures;
    // strict expansion/contraction inside (0,1)
    if (m > 0.0 && m < 1.0) {
      if (!(dilate_mu(m) > m)) ++failures;
      if (!(concentrate_mu(m) < m)) ++failures;
    }
    // monotonicity against a second sample
    const double m2 = u01();
    const double lo = std::min(m, m2), hi = std::max(m, m2);
    if (dilate_mu(lo) > dilate_mu(hi) + tol) ++failures;
    if (concentrate_mu(lo) > concentrate_mu(hi) + tol) ++failures;
  }
  // fixed points are exactly {0,1}
  if (dilate_mu(0.0) != 0.0 || dilate_mu(1.0) != 1.0) ++failures;
  if (concentrate_mu(0.0) != 0.0 || concentrate_mu(1.0) != 1.0) ++failures;

  // prototype-monotonicity corollary on a grid: expanding the prototype
  // dominates plain dilation, shrinking it is dominated by concentration
  const ThresholdDist t = ThresholdDist::uniform(0.0, 3.0);
  const Label narrow("n", PrototypeSet::interval(4.5, 5.5), Metric::euclidean(), t);
  const Label wide("w", PrototypeSet::interval(4.0, 6.0), Metric::euclidean(), t);
  const HedgedLabel dil_wide =
      apply(HedgeSpec::dilate().with_prototype(PrototypeSet::interval(4.0, 6.0)), narrow);
  const HedgedLabel con_narrow =
      apply(HedgeSpec::concentrate().with_prototype(PrototypeSet::interval(4.5, 5.5)), wide);
  for (int i = 0; i <= 400; ++i) {
    const double x = 0.5 + 9.0 * i / 400.0;
    const Point p({x});
    if (dil_wide.appropriateness(p) < dilate_mu(narrow.appropriateness(p)) - tol) ++failures;
    if (con_narrow.appropriateness(p) > concentrate_mu(wide.appropriateness(p)) + tol) ++failures;
  }

  return CheckResult{"hedge map property suite", failures == 0,
                     fmt("%g failures over 10^4 samples (tol 1e-12)", double(failures))};
}

std::vector<CheckResult> run_scope(const std::string& scope, const OracleConfig& cfg) {
  std::vector<CheckResult> out;
  const bool all = scope == "all";
  if (all || scope == "dilate") out.push_back(check_closed_vs_oracles(HedgeKind::dilate, cfg));
  if (all || scope == "concentrate")
    out.push_back(check_closed_vs_oracles(HedgeKind::concentrate, cfg));
  if (all || scope == "chain") out.push_back(check_composition(cfg));
  if (all || scope == "bosc") {
    out.push_back(check_bosc_worked_example());
    out.push_back(check_bosc_equivalence());
  }
  if (all || scope == "novak") out.push_back(check_novak_equivalence());
  if (all || scope == "power") out.push_back(check_powering_equivalence());
  if (all || scope == "deterministic") out.push_back(check_deterministic_example());
  if (all || scope == "limits") out.push_back(check_limits());
  if (all || scope == "properties") out.push_back(check_properties(cfg.seed));
  if (out.empty()) throw std::invalid_argument("verify: unknown scope \"" + scope + "\"");
  return out;
}

}  // namespace labelsem::verify
