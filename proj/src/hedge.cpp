#include "labelsem/hedge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace labelsem {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

void check_unit(double m, const char* who) {
  if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument(std::string(who) + ": m must lie in [0,1]");
}

// sum_{j>=2} u^j / (j (j-1)) for small u; equals u + (1-u) ln(1-u).
// Truncated after u^8: relative error below u^7/36, i.e. < 3e-16 at u = 1e-2.
double contract_series(double u) {
  const double u2 = u * u;
  return u2 * (1.0 / 2.0 +
               u * (1.0 / 6.0 +
                    u * (1.0 / 12.0 +
                         u * (1.0 / 20.0 + u * (1.0 / 30.0 + u * (1.0 / 42.0 + u / 56.0))))));
}

// m + (1-m) ln(1-m) evaluated stably for m in [0, 1/2]: the direct form
// cancels catastrophically near 0, so switch to the series there.
double contract_small(double m) {
  if (m < 1e-2) return contract_series(m);
  return m + (1.0 - m) * std::log1p(-m);
}

constexpr double kRoundtripTol = 1e-10;
constexpr double kBisectTol = 1e-12;

}  // namespace

double dilate_mu(double m) {
  check_unit(m, "dilate_mu");
  if (m <= 0.0) return 0.0;
  if (m >= 1.0) return 1.0;
  if (m >= 0.5) {
    const double q = 1.0 - m;  // exact for m >= 0.5
    return clamp01(1.0 - contract_small(q));
  }
  return clamp01(m - m * std::log(m));
}

double concentrate_mu(double m) {
  check_unit(m, "concentrate_mu");
  if (m >= 1.0) return 1.0;
  if (m <= 0.0) return 0.0;
  if (m <= 0.5) return clamp01(contract_small(m));
  return clamp01(m + (1.0 - m) * std::log1p(-m));
}

MonotoneFn MonotoneFn::linear_scale(double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw std::invalid_argument("MonotoneFn: linear scale requires k > 0");
  MonotoneFn f;
  f.form_ = Form::linear;
  f.k_ = k;
  f.increasing_ = true;
  return f;
}

MonotoneFn MonotoneFn::affine(double k, double b) {
  if (k == 0.0 || !std::isfinite(k) || !std::isfinite(b))
    throw std::invalid_argument("MonotoneFn: affine requires finite k != 0");
  MonotoneFn f;
  f.form_ = Form::affine;
  f.k_ = k;
  f.b_ = b;
  f.increasing_ = k > 0.0;
  return f;
}

MonotoneFn MonotoneFn::custom(std::function<double(double)> forward,
                              std::function<double(double)> inverse, double domain_lo,
                              double domain_hi) {
  if (!forward || !inverse) throw std::invalid_argument("MonotoneFn: callables required");
  if (!(domain_lo < domain_hi)) throw std::invalid_argument("MonotoneFn: domain_lo < domain_hi required");
  MonotoneFn f;
  f.form_ = Form::custom;
  f.fwd_ = std::move(forward);
  f.inv_ = std::move(inverse);
  f.has_domain_ = true;
  f.dom_lo_ = domain_lo;
  f.dom_hi_ = domain_hi;
  const double a = f.fwd_(domain_lo), b = f.fwd_(domain_hi);
  f.increasing_ = a < b;
  f.img_lo_ = std::min(a, b);
  f.img_hi_ = std::max(a, b);
  if (f.img_lo_ == f.img_hi_) throw std::invalid_argument("MonotoneFn: forward map is not strictly monotone");
  return f;
}

MonotoneFn MonotoneFn::custom_bracketed(std::function<double(double)> forward, double domain_lo,
                                        double domain_hi) {
  if (!forward) throw std::invalid_argument("MonotoneFn: callable required");
  if (!(domain_lo < domain_hi)) throw std::invalid_argument("MonotoneFn: domain_lo < domain_hi required");
  MonotoneFn f;
  f.form_ = Form::custom;
  f.fwd_ = std::move(forward);
  f.has_domain_ = true;
  f.dom_lo_ = domain_lo;
  f.dom_hi_ = domain_hi;
  const double a = f.fwd_(domain_lo), b = f.fwd_(domain_hi);
  f.increasing_ = a < b;
  f.img_lo_ = std::min(a, b);
  f.img_hi_ = std::max(a, b);
  if (f.img_lo_ == f.img_hi_) throw std::invalid_argument("MonotoneFn: forward map is not strictly monotone");
  return f;
}

double MonotoneFn::forward(double e) const {
  switch (form_) {
    case Form::linear:
      return k_ * e;
    case Form::affine:
      return k_ * e + b_;
    case Form::custom:
      if (e < dom_lo_ || e > dom_hi_)
        throw std::invalid_argument("MonotoneFn: argument outside declared domain");
      return fwd_(e);
  }
  throw std::logic_error("MonotoneFn: unreachable");
}

double MonotoneFn::inverse(double d) const {
  switch (form_) {
    case Form::linear:
      return d / k_;
    case Form::affine:
      return (d - b_) / k_;
    case Form::custom: {
      if (d < img_lo_ || d > img_hi_)
        throw std::invalid_argument("MonotoneFn: value outside image, not invertible there");
      if (inv_) return inv_(d);
      // bisection on the declared bracket
      double a = dom_lo_, b = dom_hi_;
      while (b - a > kBisectTol) {
        const double m = 0.5 * (a + b);
        const bool go_right = increasing_ ? (fwd_(m) < d) : (fwd_(m) > d);
        if (go_right)
          a = m;
        else
          b = m;
      }
      return 0.5 * (a + b);
    }
  }
  throw std::logic_error("MonotoneFn: unreachable");
}

void MonotoneFn::validate_roundtrip(double lo, double hi) const {
  if (has_domain_) {
    lo = std::max(lo, dom_lo_);
    hi = std::min(hi, dom_hi_);
  }
  if (!(lo <= hi)) return;
  const int kProbes = 17;
  const double scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  for (int i = 0; i <= kProbes; ++i) {
    const double e = lo + (hi - lo) * static_cast<double>(i) / kProbes;
    const double back = inverse(forward(e));
    if (std::abs(back - e) > kRoundtripTol * scale)
      throw std::invalid_argument("MonotoneFn: inverse(forward(e)) != e, f non-invertible on required range");
  }
}

HedgeSpec HedgeSpec::dilate() { return HedgeSpec(HedgeKind::dilate, std::nullopt); }
HedgeSpec HedgeSpec::concentrate() { return HedgeSpec(HedgeKind::concentrate, std::nullopt); }
HedgeSpec HedgeSpec::dilate_f(MonotoneFn f) { return HedgeSpec(HedgeKind::dilate_f, std::move(f)); }
HedgeSpec HedgeSpec::concentrate_f(MonotoneFn f) {
  return HedgeSpec(HedgeKind::concentrate_f, std::move(f));
}
HedgeSpec HedgeSpec::rescale(MonotoneFn f) { return HedgeSpec(HedgeKind::rescale, std::move(f)); }

HedgeSpec HedgeSpec::with_prototype(PrototypeSet p) && {
  proto_ = std::move(p);
  return std::move(*this);
}

HedgeSpec HedgeSpec::with_prototype(PrototypeSet p) const& {
  HedgeSpec copy = *this;
  copy.proto_ = std::move(p);
  return copy;
}

HedgedLabel::HedgedLabel(Label base) : base_(std::move(base)) {}

HedgedLabel::HedgedLabel(Label base, std::vector<HedgeSpec> chain)
    : base_(std::move(base)), chain_(std::move(chain)) {
  for (const HedgeSpec& h : chain_) {
    if (h.prototype_override() && h.prototype_override()->dim() != base_.dim())
      throw std::invalid_argument("HedgedLabel: prototype override dimension mismatch");
    if (h.f()) {
      // the map must be invertible where the threshold lives
      h.f()->validate_roundtrip(base_.threshold().support_lo(), base_.threshold().support_hi());
    }
  }
}

HedgedLabel HedgedLabel::apply(HedgeSpec h) const& {
  std::vector<HedgeSpec> chain = chain_;
  chain.push_back(std::move(h));
  return HedgedLabel(base_, std::move(chain));
}

HedgedLabel HedgedLabel::apply(HedgeSpec h) && {
  chain_.push_back(std::move(h));
  return HedgedLabel(std::move(base_), std::move(chain_));
}

HedgeEval HedgedLabel::evaluate(const Point& x) const {
  // last prototype override wins for the whole evaluation
  const PrototypeSet* proto = &base_.prototype();
  for (const HedgeSpec& h : chain_) {
    if (h.prototype_override()) proto = &*h.prototype_override();
  }
  double d = set_distance(base_.metric(), x, *proto);

  // distance transforms innermost-first: reverse chain order
  bool clamped = false;
  enum class Pin { none, low, high } pin = Pin::none;  // d irrevocably out of range
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
    const auto& f = it->f();
    if (!f) continue;
    if (pin != Pin::none) {
      // a pinned value stays pinned; a decreasing map flips which side
      if (!f->increasing()) pin = (pin == Pin::low) ? Pin::high : Pin::low;
      continue;
    }
    if (f->has_domain() && (d < f->image_lo() || d > f->image_hi())) {
      // no preimage: the transformed distance lies below/above every
      // threshold the map can produce
      clamped = true;
      const bool below = d < f->image_lo();
      pin = (f->increasing() ? below : !below) ? Pin::low : Pin::high;
      continue;
    }
    d = f->inverse(d);
  }

  double mu;
  if (pin == Pin::low)
    mu = 1.0;
  else if (pin == Pin::high)
    mu = 0.0;
  else {
    if (d < 0.0) clamped = true;
    mu = survival_extended(base_.threshold(), d);
  }

  // pointwise maps outermost, in chain order
  for (const HedgeSpec& h : chain_) {
    if (!h.applies_pointwise_map()) continue;
    mu = h.is_dilating() ? dilate_mu(mu) : concentrate_mu(mu);
  }
  return HedgeEval{mu, clamped};
}

HedgedLabel apply(HedgeSpec h, const Label& label) {
  return HedgedLabel(label).apply(std::move(h));
}

HedgedLabel apply(HedgeSpec h, const HedgedLabel& label) { return label.apply(std::move(h)); }

double hedged_appropriateness(const HedgedLabel& hl, const Point& x) {
  return hl.appropriateness(x);
}

double compose_n(HedgeKind kind, double m0, int n) {
  if (kind != HedgeKind::dilate && kind != HedgeKind::concentrate)
    throw std::invalid_argument("compose_n: kind must be dilate or concentrate");
  if (n < 1) throw std::invalid_argument("compose_n: n must be >= 1");
  check_unit(m0, "compose_n");
  double m = m0;
  for (int i = 0; i < n; ++i) m = (kind == HedgeKind::dilate) ? dilate_mu(m) : concentrate_mu(m);
  return m;
}

double limit_profile(HedgeKind kind, double m0) {
  check_unit(m0, "limit_profile");
  if (kind == HedgeKind::dilate) return m0 > 0.0 ? 1.0 : 0.0;
  if (kind == HedgeKind::concentrate) return m0 < 1.0 ? 0.0 : 1.0;
  throw std::invalid_argument("limit_profile: kind must be dilate or concentrate");
}

IterationResult iterate_to_limit(HedgeKind kind, double m0, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_to_limit: tol must be > 0");
  const double target = limit_profile(kind, m0);
  double m = m0;
  int steps = 0;
  while (std::abs(m - target) >= tol) {
    if (steps >= max_iter)
      throw ConvergenceError("iterate_to_limit: max_iter exceeded", m, steps);
    m = (kind == HedgeKind::dilate) ? dilate_mu(m) : concentrate_mu(m);
    ++steps;
  }
  return IterationResult{m, steps};
}

}  // namespace labelsem
