#include "labelsem/quadrature.hpp"

#include <cmath>

namespace labelsem::detail {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
};

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const SimpsonState& st, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;  // Richardson correction
  }
  if (depth >= st.max_depth) {
    throw ConvergenceError("integrate_adaptive: recursion depth exhausted", left + right, depth);
  }
  return recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: requires a <= b");
  if (a == b) return 0.0;
  SimpsonState st{f, max_depth};
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, a, b);
  return recurse(st, a, b, fa, fm, fb, whole, abs_tol, 0);
}

}  // namespace labelsem::detail
