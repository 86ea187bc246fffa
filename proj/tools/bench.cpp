// Compares the OpenMP sampling/evaluation kernels against their serial
// reference paths. Both paths partition work identically, so results must
// agree bit for bit; the table reports times, speedup and the residual.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "labelsem/curve.hpp"
#include "labelsem/oracle.hpp"

using namespace labelsem;

namespace {

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

struct Row {
  const char* name;
  double serial_s;
  double parallel_s;
  double residual;
};

void print(const Row& r) {
  std::printf("%-28s %10.3f s %10.3f s   %5.2fx   max|diff| = %g\n", r.name, r.serial_s,
              r.parallel_s, r.serial_s / r.parallel_s, r.residual);
}

Label demo_label() {
  return Label("L", PrototypeSet::single(Point({5.0})), Metric::euclidean(),
               ThresholdDist::uniform(0.0, 3.0));
}

std::vector<Point> grid(double lo, double hi, int n) {
  std::vector<Point> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Point({lo + (hi - lo) * i / (n - 1)}));
  return xs;
}

Row bench_mc_pair(std::uint64_t samples) {
  const Label label = demo_label();
  const auto xs = grid(1.0, 9.0, 161);
  OracleConfig cfg;
  cfg.samples = samples;

  cfg.parallel = false;
  double t0 = now();
  const auto serial = mc_dilation_grid(label, xs, cfg);
  const double ts = now() - t0;

  cfg.parallel = true;
  t0 = now();
  const auto parallel = mc_dilation_grid(label, xs, cfg);
  const double tp = now() - t0;

  double dev = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    dev = std::max(dev, std::abs(serial[i].estimate - parallel[i].estimate));
  return Row{"mc dilation, 161-pt grid", ts, tp, dev};
}

Row bench_mc_chain(std::uint64_t samples) {
  const Label label = demo_label();
  const auto xs = grid(1.0, 9.0, 161);
  OracleConfig cfg;
  cfg.samples = samples;

  cfg.parallel = false;
  double t0 = now();
  const auto serial = mc_chain_grid(label, xs, HedgeKind::concentrate, 3, cfg);
  const double ts = now() - t0;

  cfg.parallel = true;
  t0 = now();
  const auto parallel = mc_chain_grid(label, xs, HedgeKind::concentrate, 3, cfg);
  const double tp = now() - t0;

  double dev = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    dev = std::max(dev, std::abs(serial[i].estimate - parallel[i].estimate));
  return Row{"mc chain depth 3", ts, tp, dev};
}

Row bench_curve(int steps) {
  const Label label = demo_label();
  HedgedLabel hl(label);
  hl = std::move(hl).apply(HedgeSpec::dilate());
  hl = std::move(hl).apply(HedgeSpec::concentrate());
  const CurveRequest req{hl, 1.0, 9.0, steps};

  double t0 = now();
  const Curve serial = compute_curve(req, /*parallel=*/false);
  const double ts = now() - t0;

  t0 = now();
  const Curve parallel = compute_curve(req, /*parallel=*/true);
  const double tp = now() - t0;

  double dev = 0.0;
  for (std::size_t c = 0; c < serial.values.size(); ++c)
    for (std::size_t i = 0; i < serial.values[c].size(); ++i)
      dev = std::max(dev, std::abs(serial.values[c][i] - parallel.values[c][i]));
  return Row{"curve eval, quite+very", ts, tp, dev};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t samples = 4'000'000;
  int steps = 4'000'000;
  if (argc > 1) samples = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) steps = static_cast<int>(std::strtol(argv[2], nullptr, 10));

#ifdef _OPENMP
  std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled in this build\n");
#endif
  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial", "parallel", "speedup");

  print(bench_mc_pair(samples));
  print(bench_mc_chain(samples));
  print(bench_curve(steps));
  return 0;
}
