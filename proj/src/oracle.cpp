#include "labelsem/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "labelsem/quadrature.hpp"

namespace labelsem {

namespace {

constexpr std::uint64_t kBlock = 1u << 14;

double u01(std::mt19937_64& rng) { return detail::uniform01(rng()); }

/// Unbiased-enough bounded draw (Lemire multiply-shift); bias is O(n/2^64).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

std::vector<double> grid_distances(const Label& label, std::span<const Point> xs) {
  std::vector<double> ds(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ds[i] = set_distance(label.metric(), xs[i], label.prototype());
  return ds;
}

struct RankedDistances {
  std::vector<double> sorted;       // ascending
  std::vector<std::size_t> order;   // sorted[i] belongs to grid point order[i]
};

RankedDistances rank_distances(const std::vector<double>& ds) {
  RankedDistances r;
  r.order.resize(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) r.order[i] = i;
  std::sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) { return ds[a] < ds[b]; });
  r.sorted.resize(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) r.sorted[i] = ds[r.order[i]];
  return r;
}

std::vector<McEstimate> finalize(const std::vector<std::uint64_t>& hist,
                                 const RankedDistances& ranked, std::uint64_t n,
                                 std::uint64_t degenerate) {
  // hist[u] counted samples whose threshold covers exactly the first u
  // sorted grid points; suffix-sum back into per-point hit counts.
  const std::size_t npts = ranked.sorted.size();
  std::vector<McEstimate> out(npts);
  std::uint64_t hits = 0;
  for (std::size_t j = npts; j-- > 0;) {
    hits += hist[j + 1];
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    out[ranked.order[j]] =
        McEstimate{p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, degenerate};
  }
  return out;
}

template <typename PerSample>
void run_blocks(const OracleConfig& cfg, std::uint64_t stream, std::vector<std::uint64_t>& hist,
                std::uint64_t& degenerate, PerSample&& per_sample) {
  const std::uint64_t nblocks = (cfg.samples + kBlock - 1) / kBlock;
  const std::size_t bins = hist.size();
  std::uint64_t degen_total = 0;

#ifdef _OPENMP
#pragma omp parallel if (cfg.parallel) reduction(+ : degen_total)
#endif
  {
    std::vector<std::uint64_t> local(bins, 0);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
      std::mt19937_64 rng(detail::mix_seed(cfg.seed, stream, static_cast<std::uint64_t>(b)));
      const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t hi = std::min(lo + kBlock, cfg.samples);
      for (std::uint64_t s = lo; s < hi; ++s) degen_total += per_sample(rng, local);
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      for (std::size_t i = 0; i < bins; ++i) hist[i] += local[i];
    }
  }
  degenerate = degen_total;
}

enum class TruncSide { above, below };

/// One conditional draw from the base marginal truncated at e1:
/// above  -> eps2 in [e1, inf),  Delta(eps2) = (1-u) Delta(e1)
/// below  -> eps2 in [0, e1],    F(eps2) = u F(e1)
/// Returns {e2, degenerate}.
std::pair<double, bool> truncated_base_draw(const ThresholdDist& t, double e1, double u,
                                            TruncSide side) {
  const double s1 = t.survival(e1);
  if (side == TruncSide::above) {
    if (s1 <= 0.0) return {e1, true};
    return {t.inverse_survival(s1 * (1.0 - u)), false};
  }
  const double f1 = 1.0 - s1;
  if (f1 <= 0.0) return {e1, true};
  return {t.inverse_survival(1.0 - u * f1), false};
}

std::vector<McEstimate> mc_pair_grid(const Label& label, std::span<const Point> xs,
                                     const OracleConfig& cfg, TruncSide side) {
  cfg.validate();
  const ThresholdDist& t = label.threshold();
  const RankedDistances ranked = rank_distances(grid_distances(label, xs));
  std::vector<std::uint64_t> hist(xs.size() + 1, 0);
  std::uint64_t degenerate = 0;

  run_blocks(cfg, /*stream=*/1, hist, degenerate,
             [&](std::mt19937_64& rng, std::vector<std::uint64_t>& local) -> std::uint64_t {
               const double e1 = t.sample_at(u01(rng));
               const auto [e2, degen] = truncated_base_draw(t, e1, u01(rng), side);
               const auto u = std::upper_bound(ranked.sorted.begin(), ranked.sorted.end(), e2) -
                              ranked.sorted.begin();
               ++local[static_cast<std::size_t>(u)];
               return degen ? 1 : 0;
             });
  return finalize(hist, ranked, cfg.samples, degenerate);
}

}  // namespace

namespace detail {

// splitmix64 finalizer over (seed, stream, block)
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t block) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1) + 0xbf58476d1ce4e5b9ull * (block + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

void OracleConfig::validate() const {
  if (samples < 10'000) throw std::invalid_argument("OracleConfig: samples must be >= 10^4");
  if (!(quad_tol > 0.0 && quad_tol <= 1e-6))
    throw std::invalid_argument("OracleConfig: quad_tol must lie in (0, 1e-6]");
  if (chain_depth < 2) throw std::invalid_argument("OracleConfig: chain_depth must be >= 2");
}

std::vector<McEstimate> mc_dilation_grid(const Label& label, std::span<const Point> xs,
                                         const OracleConfig& cfg) {
  return mc_pair_grid(label, xs, cfg, TruncSide::above);
}

std::vector<McEstimate> mc_concentration_grid(const Label& label, std::span<const Point> xs,
                                              const OracleConfig& cfg) {
  return mc_pair_grid(label, xs, cfg, TruncSide::below);
}

McEstimate mc_dilation(const Label& label, const Point& x, const OracleConfig& cfg) {
  return mc_dilation_grid(label, std::span<const Point>(&x, 1), cfg).front();
}

McEstimate mc_concentration(const Label& label, const Point& x, const OracleConfig& cfg) {
  return mc_concentration_grid(label, std::span<const Point>(&x, 1), cfg).front();
}

std::vector<McEstimate> mc_chain_grid(const Label& label, std::span<const Point> xs,
                                      HedgeKind kind, int depth, const OracleConfig& cfg) {
  cfg.validate();
  if (kind != HedgeKind::dilate && kind != HedgeKind::concentrate)
    throw std::invalid_argument("mc_chain: kind must be dilate or concentrate");
  if (depth < 2) throw std::invalid_argument("mc_chain: depth must be >= 2");

  const ThresholdDist& t = label.threshold();
  const std::uint64_t n = cfg.samples;
  const TruncSide side = (kind == HedgeKind::dilate) ? TruncSide::above : TruncSide::below;
  std::vector<double> pool(n);
  std::uint64_t degenerate = 0;

  const std::uint64_t nblocks = (n + kBlock - 1) / kBlock;
  const auto for_blocks = [&](std::uint64_t stream, auto&& body) {
    std::uint64_t degen_total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (cfg.parallel) reduction(+ : degen_total)
#endif
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
      std::mt19937_64 rng(detail::mix_seed(cfg.seed, stream, static_cast<std::uint64_t>(b)));
      const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t hi = std::min(lo + kBlock, n);
      for (std::uint64_t j = lo; j < hi; ++j) degen_total += body(rng, j);
    }
    degenerate += degen_total;
  };

  // stage 1: the base threshold
  for_blocks(1, [&](std::mt19937_64& rng, std::uint64_t j) -> std::uint64_t {
    pool[j] = t.sample_at(u01(rng));
    return 0;
  });

  // stage 2: exact inverse-CDF of the truncated base
  for_blocks(2, [&](std::mt19937_64& rng, std::uint64_t j) -> std::uint64_t {
    const auto [e2, degen] = truncated_base_draw(t, pool[j], u01(rng), side);
    pool[j] = e2;
    return degen ? 1 : 0;
  });

  // stages 3..depth+1: inverse-CDF of the empirical previous-stage marginal
  std::vector<double> sorted(n);
  for (int stage = 3; stage <= depth + 1; ++stage) {
    sorted.assign(pool.begin(), pool.end());
    std::sort(sorted.begin(), sorted.end());
    for_blocks(static_cast<std::uint64_t>(stage),
               [&](std::mt19937_64& rng, std::uint64_t j) -> std::uint64_t {
                 if (side == TruncSide::above) {
                   const auto k = std::lower_bound(sorted.begin(), sorted.end(), pool[j]) -
                                  sorted.begin();
                   pool[j] = sorted[static_cast<std::size_t>(k) +
                                    bounded(rng, n - static_cast<std::uint64_t>(k))];
                 } else {
                   const auto k = std::upper_bound(sorted.begin(), sorted.end(), pool[j]) -
                                  sorted.begin();
                   pool[j] = sorted[bounded(rng, static_cast<std::uint64_t>(k))];
                 }
                 return 0;
               });
  }

  // score the final thresholds against every grid distance
  const RankedDistances ranked = rank_distances(grid_distances(label, xs));
  std::vector<std::uint64_t> hist(xs.size() + 1, 0);
  for (std::uint64_t j = 0; j < n; ++j) {
    const auto u = std::upper_bound(ranked.sorted.begin(), ranked.sorted.end(), pool[j]) -
                   ranked.sorted.begin();
    ++hist[static_cast<std::size_t>(u)];
  }
  return finalize(hist, ranked, n, degenerate);
}

McEstimate mc_chain(const Label& label, const Point& x, HedgeKind kind, int depth,
                    const OracleConfig& cfg) {
  return mc_chain_grid(label, std::span<const Point>(&x, 1), kind, depth, cfg).front();
}

double quad_dilation(const Label& label, const Point& x, const OracleConfig& cfg) {
  cfg.validate();
  const ThresholdDist& t = label.threshold();
  const double d = set_distance(label.metric(), x, label.prototype());
  const double mu1 = t.survival(d);
  if (mu1 <= 0.0) return 0.0;
  if (d <= t.support_lo()) return mu1;  // integrand vanishes below the support

  // Delta(t) >= mu1 > 0 on [lo, d], so the integrand is bounded; keep a
  // 1e-12 offset from the support's upper end where Delta -> 0.
  const double hi = std::min(d, t.support_hi() - 1e-12);
  const double integral = detail::integrate_adaptive(
      [&](double e) { return t.density(e) / t.survival(e); }, t.support_lo(), hi, cfg.quad_tol);
  return std::min(1.0, mu1 * (1.0 + integral));
}

double quad_concentration(const Label& label, const Point& x, const OracleConfig& cfg) {
  cfg.validate();
  const ThresholdDist& t = label.threshold();
  const double d = set_distance(label.metric(), x, label.prototype());
  const double mu1 = t.survival(d);
  if (mu1 >= 1.0) return 1.0;
  if (d >= t.support_hi()) return mu1;  // integral over an empty range

  // 1 - Delta(t) >= 1 - mu1 > 0 on [d, hi]
  const double lo = std::min(std::max(d, t.support_lo() + 1e-12), t.support_hi());
  const double integral = detail::integrate_adaptive(
      [&](double e) { return t.density(e) / (1.0 - t.survival(e)); }, lo, t.support_hi(),
      cfg.quad_tol);
  return std::max(0.0, mu1 - (1.0 - mu1) * integral);
}

double bosc_supinf_check(const Trapezoid& f, const Trapezoid& z, BoscMode mode, double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.01))
    throw std::invalid_argument("bosc_supinf_check: grid resolution must be <= 0.01");

  const Trapezoid corner = (mode == BoscMode::dilate) ? bosc_dilate(f, z) : bosc_concentrate(f, z);
  const double margin = z.d + 1.0;
  const double lo = std::min(f.a, corner.a) - margin;
  const double hi = std::max(f.d, corner.d) + margin;
  const auto npts = static_cast<std::size_t>(std::ceil((hi - lo) / grid_step)) + 1;

  // shared grid for s and r keeps r == s exactly representable
  std::vector<double> fx(npts);
  for (std::size_t i = 0; i < npts; ++i) fx[i] = f.membership(lo + grid_step * static_cast<double>(i));

  const auto w = static_cast<long long>(std::ceil(z.d / grid_step)) + 1;
  double max_dev = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : max_dev)
#endif
  for (long long i = 0; i < static_cast<long long>(npts); ++i) {
    const double s = lo + grid_step * static_cast<double>(i);
    double acc = (mode == BoscMode::dilate) ? 0.0 : 1.0;
    const long long j0 = std::max(0ll, i - w);
    const long long j1 = std::min(static_cast<long long>(npts) - 1, i + w);
    for (long long j = j0; j <= j1; ++j) {
      const double r = lo + grid_step * static_cast<double>(j);
      const double e = z.membership(s - r);
      if (mode == BoscMode::dilate) {
        acc = std::max(acc, std::min(fx[static_cast<std::size_t>(j)], e));
      } else {
        // Goedel implication from resemblance to membership
        const double fv = fx[static_cast<std::size_t>(j)];
        acc = std::min(acc, e <= fv ? 1.0 : fv);
      }
    }
    max_dev = std::max(max_dev, std::abs(acc - corner.membership(s)));
  }
  return max_dev;
}

}  // namespace labelsem
