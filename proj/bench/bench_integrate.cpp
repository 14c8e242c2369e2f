// Times the OpenMP quadrature and Monte Carlo kernels against the serial
// reference paths and checks that the results are bit-identical.
//
//   ./bench_integrate [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bergman/kernels.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/transforms.hpp"

using namespace bergman;

namespace {

template <typename Fn>
double time_ms(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
  std::printf("%-34s %12s %12s %9s %s\n", "kernel", "serial ms", "parallel ms", "speedup",
              "bitwise");

  {
    const QuadratureRule rule = build_rule(RuleDomain::Disk, 1.0, 96, 192);
    const Quaternion q{0.2, 0.1, -0.1, 0.05};
    const PlanarQuatFn f = [&](double x, double y) {
      const Quaternion r{x, y, 0, 0};
      return bergman_fueter_kernel(q, r) * (r * (r * r));
    };
    Quaternion a, b;
    const double ts = time_ms(repeats, [&] { a = integrate_slice_serial(f, rule); });
    const double tp = time_ms(repeats, [&] { b = integrate_slice(f, rule); });
    std::printf("%-34s %12.2f %12.2f %8.2fx %s\n", "bf-transform integrand (96x192)", ts, tp,
                ts / tp, a == b ? "equal" : "DIFFER");
  }

  {
    const QuadratureRule rule = build_rule(RuleDomain::Disk, 1.0, 256, 512);
    const Quaternion q{0.4, 0.3, 0, 0};
    const PlanarQuatFn f = [&](double x, double y) {
      const Quaternion zeta{x, y, 0, 0};
      return ball_kernel(q, zeta, BallForm::I) * zeta;
    };
    Quaternion a, b;
    const double ts = time_ms(repeats, [&] { a = integrate_slice_serial(f, rule); });
    const double tp = time_ms(repeats, [&] { b = integrate_slice(f, rule); });
    std::printf("%-34s %12.2f %12.2f %8.2fx %s\n", "reproducing integrand (256x512)", ts, tp,
                ts / tp, a == b ? "equal" : "DIFFER");
  }

  {
    const SliceFunction f = SliceFunction::polynomial(
        {Quaternion{0.1, 0.2, 0, 0}, Quaternion::one(), Quaternion::j(), Quaternion::i()});
    const QuatFn fn = [&](const Quaternion& p) { return f(p); };
    McResult a, b;
    const double ts = time_ms(
        repeats, [&] { a = volume_integral_mc_serial(fn, Domain::UnitBall, 4000000, 7); });
    const double tp =
        time_ms(repeats, [&] { b = volume_integral_mc(fn, Domain::UnitBall, 4000000, 7); });
    std::printf("%-34s %12.2f %12.2f %8.2fx %s\n", "monte carlo (4M proposals)", ts, tp,
                ts / tp,
                (a.estimate == b.estimate && a.stderr_est == b.stderr_est) ? "equal"
                                                                           : "DIFFER");
  }

  return 0;
}
