#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/fd_ops.hpp"

using namespace bergman;

namespace {

struct Rng {
  std::mt19937_64 eng{99};
  double uniform(double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  }
  Quaternion in_ball(double rad) {
    for (;;) {
      Quaternion q{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (norm_sq(q) <= 1.0) return rad * q;
    }
  }
};

SliceFunction monomial(int n) {
  std::vector<Quaternion> cs(static_cast<std::size_t>(n) + 1);
  cs.back() = Quaternion::one();
  return SliceFunction::polynomial(std::move(cs));
}

const UnitImaginary kI;
const UnitImaginary kJ{0, 1, 0};

}  // namespace

TEST_CASE("scheme validation") {
  CHECK_THROWS_AS(FDScheme(1e-7, 4), BadParameter);
  CHECK_THROWS_AS(FDScheme(0.5, 4), BadParameter);
  CHECK_THROWS_AS(FDScheme(1e-3, 3), BadParameter);
}

TEST_CASE("slice CR residual of the identity vanishes") {
  const auto f = monomial(1);
  const SlicePoint z{0.2, 0.3, kI};
  CHECK(abs(cr_slice_fd(f, z, default_derivative_scheme())) <= 1e-10);
}

TEST_CASE("slice CR residual detects the anti-holomorphic stem") {
  // F(z) = conj z is not holomorphic; the residual is exactly 2.
  const auto f = SliceFunction::stem(StemPair(
      ComplexFunction::evaluator([](Complex z) { return std::conj(z); }), ComplexFunction(),
      kI, kJ));
  const SlicePoint z{0.1, 0.4, kI};
  CHECK(abs(cr_slice_fd(f, z, default_derivative_scheme()) - Quaternion::real(2.0)) <= 1e-8);
}

TEST_CASE("kernel sections have small CR residual") {
  Rng rng;
  const auto f = SliceFunction::kernel_section(
      KernelId::BallFormI, Quaternion{0, 0, 0.4, 0});
  for (int k = 0; k < 10; ++k) {
    const SlicePoint z{rng.uniform(-0.5, 0.5), rng.uniform(0.05, 0.5), kI};
    CHECK(abs(cr_slice_fd(f, z, default_derivative_scheme())) <= 1e-6);
  }
}

TEST_CASE("every variant is slice regular under the CR oracle") {
  Rng rng;
  std::vector<SliceFunction> variants;
  variants.push_back(monomial(3));
  variants.push_back(SliceFunction::intrinsic_rational({1.0}, {1.0, -0.5}));
  variants.push_back(SliceFunction::stem(StemPair(
      ComplexFunction::polynomial({{0.2, -0.1}, {1, 1}, {0, 0.5}}),
      ComplexFunction::polynomial({{0.4, 0}, {0, -1}}), kI, kJ)));
  variants.push_back(
      SliceFunction::kernel_section(KernelId::BallFormII, Quaternion{0.1, 0.3, 0, 0}));
  for (const auto& f : variants) {
    for (int k = 0; k < 10; ++k) {
      const SlicePoint z{rng.uniform(-0.4, 0.4), rng.uniform(0.05, 0.4), kI};
      CHECK(abs(cr_slice_fd(f, z, default_derivative_scheme())) <= 1e-6);
    }
  }
}

TEST_CASE("laplacian of harmonic and simple functions") {
  const auto id = monomial(1);
  CHECK(abs(laplacian_fd(id, Quaternion{0.1, 0.2, 0, 0}, default_laplacian_scheme())) <=
        1e-10);

  const auto sq = monomial(2);
  CHECK(abs(laplacian_fd(sq, Quaternion{0.1, -0.2, 0.3, 0}, default_laplacian_scheme()) -
            Quaternion::real(-4.0)) <= 1e-9);

  // Re(q)^2 has Laplacian 2; not slice regular, evaluated through a callable.
  const QuatFn resq = [](const Quaternion& q) { return Quaternion::real(q.w * q.w); };
  CHECK(abs(laplacian_fd(resq, Quaternion{0.3, 0.1, 0.2, -0.1}, default_laplacian_scheme()) -
            Quaternion::real(2.0)) <= 1e-9);
}

TEST_CASE("cauchy-fueter values on reference functions") {
  const QuatFn c = [](const Quaternion&) { return Quaternion{0.7, -0.2, 0.1, 0.5}; };
  CHECK(abs(cauchy_fueter_fd(c, Quaternion::zero(), default_derivative_scheme())) <= 1e-12);

  const auto id = monomial(1);
  CHECK(abs(cauchy_fueter_fd(id, Quaternion{0.1, 0.1, 0.1, 0.1},
                             default_derivative_scheme()) -
            Quaternion::real(-2.0)) <= 1e-10);

  // Fueter variable x1 - x0 i is Fueter regular.
  const QuatFn fv = [](const Quaternion& q) { return Quaternion{q.x, -q.w, 0, 0}; };
  CHECK(abs(cauchy_fueter_fd(fv, Quaternion{0.2, -0.3, 0.4, 0.1},
                             default_derivative_scheme())) <= 1e-10);
}

TEST_CASE("convergence order of the laplacian stencils") {
  // q^6 has nonvanishing high derivatives, so the truncation term is visible
  // for both stencil orders (cubics are differenced exactly).
  const auto f = monomial(6);
  const Quaternion q{0.21, 0.13, -0.17, 0.08};

  for (int order : {2, 4}) {
    const double h0 = 2e-2;
    const Quaternion l1 = laplacian_fd(f, q, FDScheme(h0, order));
    const Quaternion l2 = laplacian_fd(f, q, FDScheme(h0 / 2, order));
    const Quaternion l3 = laplacian_fd(f, q, FDScheme(h0 / 4, order));
    const double scale = order == 2 ? 4.0 : 16.0;
    const Quaternion limit = (1.0 / (scale - 1.0)) * (scale * l3 - l2);
    const double e1 = abs(l1 - limit);
    const double e2 = abs(l2 - limit);
    const double required = order == 2 ? 3.5 : 14.0;
    CHECK(e1 / e2 >= required);
  }
}

TEST_CASE("fueter map consistency: laplacians of slice regular functions") {
  Rng rng;
  const FDScheme outer(1e-2, 4);
  for (int k = 0; k < 10; ++k) {
    std::vector<Quaternion> cs(5);
    for (auto& c : cs) c = Quaternion{rng.uniform(-1, 1), rng.uniform(-1, 1),
                                      rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const SliceFunction f = SliceFunction::polynomial(cs);
    const QuatFn lap = [&f](const Quaternion& p) {
      return laplacian_fd(f, p, default_laplacian_scheme());
    };
    for (int t = 0; t < 10; ++t) {
      const Quaternion q = rng.in_ball(0.5);
      CHECK(abs(cauchy_fueter_fd(lap, q, outer)) <= 1e-3);
    }
  }
}

TEST_CASE("interior margin is enforced for domain-tagged functions") {
  const auto f = SliceFunction::kernel_section(KernelId::BallFormI, Quaternion::real(0.1));
  const FDScheme s(5e-3, 4);
  CHECK_THROWS_AS(laplacian_fd(f, Quaternion::real(0.999), s), DomainError);
  CHECK_THROWS_AS(cr_slice_fd(f, SlicePoint{0.999, 0.0, kI}, s), DomainError);
  CHECK_NOTHROW(laplacian_fd(f, Quaternion::real(0.5), s));
}
