#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "labelsem/label.hpp"
#include "labelsem/quadrature.hpp"

namespace labelsem {

/// Pointwise dilation map m -> m - m ln m ("quite"), with the continuous
/// extension 0 at m = 0. Strictly expanding on (0,1), fixed points {0,1}.
/// Accurate to ~1e-12 relative across (1e-15, 1-1e-15).
double dilate_mu(double m);

/// Pointwise concentration map m -> m + (1-m) ln(1-m) ("very"), with the
/// continuous extension 1 at m = 1. Dual of dilate_mu.
double concentrate_mu(double m);

/// Strictly monotone map of threshold values, with a resolvable inverse:
/// closed form for linear/affine, declared inverse or bisection on a
/// declared bracket (to 1e-12) for custom forms. A custom form may declare
/// the domain on which the forward map is valid; the image bounds then
/// drive out-of-range handling during hedge evaluation.
class MonotoneFn {
 public:
  static MonotoneFn linear_scale(double k);  // f(e) = k e, k > 0
  static MonotoneFn affine(double k, double b);  // f(e) = k e + b, k != 0
  static MonotoneFn custom(std::function<double(double)> forward,
                           std::function<double(double)> inverse,
                           double domain_lo, double domain_hi);
  static MonotoneFn custom_bracketed(std::function<double(double)> forward,
                                     double domain_lo, double domain_hi);

  double forward(double e) const;

  /// Inverse at d. Throws std::invalid_argument when d lies outside the
  /// image of a domain-restricted custom form.
  double inverse(double d) const;

  bool increasing() const { return increasing_; }
  bool has_domain() const { return has_domain_; }
  double domain_lo() const { return dom_lo_; }
  double domain_hi() const { return dom_hi_; }
  double image_lo() const { return img_lo_; }
  double image_hi() const { return img_hi_; }

  /// Checks inverse(forward(e)) = e within 1e-10 on a sample of [lo, hi].
  /// Throws std::invalid_argument on failure.
  void validate_roundtrip(double lo, double hi) const;

 private:
  enum class Form { linear, affine, custom };
  MonotoneFn() = default;

  Form form_ = Form::linear;
  double k_ = 1.0;
  double b_ = 0.0;
  std::function<double(double)> fwd_;
  std::function<double(double)> inv_;  // empty => bisection on the domain
  bool increasing_ = true;
  bool has_domain_ = false;
  double dom_lo_ = 0.0, dom_hi_ = 0.0;
  double img_lo_ = 0.0, img_hi_ = 0.0;
};

enum class HedgeKind { dilate, concentrate, dilate_f, concentrate_f, rescale };

/// Descriptor of one hedge application. dilate/concentrate are the
/// parameter-free probabilistic hedges; the _f variants compose a strictly
/// monotone threshold map with them; rescale is the purely deterministic
/// threshold map. Any kind may also override the prototype.
class HedgeSpec {
 public:
  static HedgeSpec dilate();       // "quite"
  static HedgeSpec concentrate();  // "very"
  static HedgeSpec dilate_f(MonotoneFn f);
  static HedgeSpec concentrate_f(MonotoneFn f);
  static HedgeSpec rescale(MonotoneFn f);

  HedgeSpec with_prototype(PrototypeSet p) &&;
  HedgeSpec with_prototype(PrototypeSet p) const&;

  HedgeKind kind() const { return kind_; }
  const std::optional<PrototypeSet>& prototype_override() const { return proto_; }
  const std::optional<MonotoneFn>& f() const { return f_; }
  bool applies_pointwise_map() const {
    return kind_ == HedgeKind::dilate || kind_ == HedgeKind::concentrate ||
           kind_ == HedgeKind::dilate_f || kind_ == HedgeKind::concentrate_f;
  }
  bool is_dilating() const {
    return kind_ == HedgeKind::dilate || kind_ == HedgeKind::dilate_f;
  }

 private:
  HedgeSpec(HedgeKind k, std::optional<MonotoneFn> f) : kind_(k), f_(std::move(f)) {}

  HedgeKind kind_;
  std::optional<MonotoneFn> f_;
  std::optional<PrototypeSet> proto_;
};

struct HedgeEval {
  double mu;
  /// Set when a transformed distance left the threshold's meaningful range
  /// and the survival was clamped to 0 or 1.
  bool clamped;
};

/// A label with an ordered chain of hedges. Evaluation folds the chain:
/// the last prototype override wins, the f-inverses apply to the distance
/// innermost-first (reverse chain order), and the pointwise dilation /
/// concentration maps apply outermost in chain order. Like-kind chains
/// reduce exactly to the known recurrences; mixed chains are an extension
/// with these fold semantics.
class HedgedLabel {
 public:
  explicit HedgedLabel(Label base);
  HedgedLabel(Label base, std::vector<HedgeSpec> chain);

  HedgedLabel apply(HedgeSpec h) const&;
  HedgedLabel apply(HedgeSpec h) &&;

  double appropriateness(const Point& x) const { return evaluate(x).mu; }
  HedgeEval evaluate(const Point& x) const;

  const Label& base() const { return base_; }
  std::span<const HedgeSpec> chain() const { return chain_; }

 private:
  Label base_;
  std::vector<HedgeSpec> chain_;
};

HedgedLabel apply(HedgeSpec h, const Label& label);
HedgedLabel apply(HedgeSpec h, const HedgedLabel& label);
double hedged_appropriateness(const HedgedLabel& hl, const Point& x);

/// n-fold application of dilate_mu / concentrate_mu to m0 (n >= 1).
double compose_n(HedgeKind kind, double m0, int n);

/// Limit of infinite composition: dilation sends (0,1] to 1, concentration
/// sends [0,1) to 0; the complementary fixed point is preserved.
double limit_profile(HedgeKind kind, double m0);

struct IterationResult {
  double value;
  int steps;
};

/// Iterates the hedge map from m0 until within tol of the limit, reporting
/// the step count. Throws ConvergenceError (carrying the last value) if
/// max_iter is exceeded.
IterationResult iterate_to_limit(HedgeKind kind, double m0, double tol, int max_iter = 1000);

}  // namespace labelsem
