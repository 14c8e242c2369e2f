#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/transforms.hpp"

using namespace bergman;

namespace {

struct Rng {
  std::mt19937_64 eng{5150};
  double uniform(double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  }
  Quaternion in_ball(double rad) {
    for (;;) {
      Quaternion q{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (norm_sq(q) <= 1.0) return rad * q;
    }
  }
  UnitImaginary unit_im() {
    for (;;) {
      double a = uniform(-1, 1), b = uniform(-1, 1), c = uniform(-1, 1);
      if (a * a + b * b + c * c > 0.01) return {a, b, c};
    }
  }
  SliceFunction poly(int degree) {
    std::vector<Quaternion> cs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : cs)
      c = Quaternion{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    return SliceFunction::polynomial(std::move(cs));
  }
};

SliceFunction monomial(int n) {
  std::vector<Quaternion> cs(static_cast<std::size_t>(n) + 1);
  cs.back() = Quaternion::one();
  return SliceFunction::polynomial(std::move(cs));
}

const UnitImaginary kI;

}  // namespace

TEST_CASE("reproducing integral hits constants and monomials") {
  const SliceRuleParams p{64, 128};
  const auto one = SliceFunction::constant(Quaternion::one());
  const TransformReport r1 = reproduce(one, Quaternion{0.3, 0.2, 0, 0}, Domain::UnitBall, kI, p);
  CHECK(abs(r1.value - Quaternion::one()) <= 1e-8);

  const Quaternion q{0, 0, 0.4, 0};
  for (int n = 1; n <= 5; ++n) {
    const TransformReport r = reproduce(monomial(n), q, Domain::UnitBall, kI, p);
    CHECK(r.rel_error <= 1e-7);
  }
}

TEST_CASE("reproducing integral is right linear and slice independent") {
  const SliceRuleParams p{64, 128};
  const auto fj = SliceFunction::polynomial({Quaternion::zero(), Quaternion::j()});
  const Quaternion q{0.3, 0, 0, 0.4};
  const TransformReport r = reproduce(fj, q, Domain::UnitBall, kI, p);
  // f(q) = q * j evaluated directly.
  CHECK(abs(r.value - q * Quaternion::j()) <= 1e-7);

  Rng rng;
  for (int k = 0; k < 5; ++k) {
    const SliceFunction f = rng.poly(3);
    const Quaternion target = rng.in_ball(0.6);
    const Quaternion a = reproduce(f, target, Domain::UnitBall, kI, p).value;
    const Quaternion b = reproduce(f, target, Domain::UnitBall, rng.unit_im(), p).value;
    CHECK(abs(a - b) <= 1e-8);
  }
}

TEST_CASE("reproducing integral respects right multiplication by a constant") {
  const SliceRuleParams p{64, 128};
  Rng rng;
  const SliceFunction f = rng.poly(3);
  const Quaternion c = rng.in_ball(1.0);
  std::vector<Quaternion> cs;
  for (const auto& coeff : std::get<SliceFunction::Polynomial>(f.repr()).coeffs)
    cs.push_back(coeff * c);
  const SliceFunction fc = SliceFunction::polynomial(cs);
  const Quaternion q = rng.in_ball(0.5);
  const Quaternion lhs = reproduce(fc, q, Domain::UnitBall, kI, p).value;
  const Quaternion rhs = reproduce(f, q, Domain::UnitBall, kI, p).value * c;
  CHECK(abs(lhs - rhs) <= 1e-10);
}

TEST_CASE("reproducing integral on the half space") {
  SliceRuleParams p{96, 128};
  const auto f = SliceFunction::intrinsic_rational({1.0}, {1.0, 1.0}, 3)
                     .with_domain(Domain::HalfSpace);
  const TransformReport r = reproduce(f, Quaternion{1.0, 0.3, 0, 0}, Domain::HalfSpace, kI, p);
  CHECK(r.rel_error <= 1e-4);
}

TEST_CASE("reproducing target preconditions") {
  const SliceRuleParams p{16, 32};
  const auto one = SliceFunction::constant(Quaternion::one());
  CHECK_THROWS_AS(reproduce(one, Quaternion::real(0.95), Domain::UnitBall, kI, p),
                  DomainError);
  CHECK_THROWS_AS(reproduce(one, Quaternion::real(0.05), Domain::HalfSpace, kI, p),
                  DomainError);
}

TEST_CASE("bergman-fueter transform reproduces laplacians") {
  const auto fid = monomial(1);
  const TransformReport r1 =
      bergman_fueter_transform(fid, Quaternion{0.2, 0.1, -0.1, 0}, kI);
  CHECK(abs(r1.value) <= 1e-6);

  const auto f2 = monomial(2);
  const TransformReport r2 = bergman_fueter_transform(f2, Quaternion{0.2, 0.1, 0, 0}, kI);
  CHECK(abs(r2.value - Quaternion::real(-4.0)) <= 1e-4);

  const auto f3 = monomial(3);
  const TransformReport r3 = bergman_fueter_transform(f3, Quaternion{0, 0, 0.3, 0}, kI);
  CHECK(r3.rel_error <= 1e-4);
}

TEST_CASE("contour transform values and convergence") {
  const auto fid = monomial(1);
  const TransformReport r1 =
      fueter_contour_transform(fid, Quaternion{0, 0.2, 0, 0}, kI, 0.8, 512);
  CHECK(abs(r1.value) <= 1e-8);

  const auto f2 = monomial(2);
  const TransformReport r2 =
      fueter_contour_transform(f2, Quaternion{0.1, 0, 0.2, 0}, kI, 0.8, 512);
  CHECK(abs(r2.value - Quaternion::real(-4.0)) <= 1e-6);

  // Spectral accuracy: doubling the node count changes nothing measurable.
  const Quaternion q{0.15, 0.1, 0, 0.05};
  const auto f3 = monomial(3);
  const Quaternion a = fueter_contour_transform(f3, q, kI, 0.8, 256).value;
  const Quaternion b = fueter_contour_transform(f3, q, kI, 0.8, 512).value;
  CHECK(abs(a - b) <= 1e-10);
}

TEST_CASE("contour transform agrees with the area transform") {
  Rng rng;
  for (int k = 0; k < 10; ++k) {
    const SliceFunction f = rng.poly(4);
    const Quaternion q = rng.in_ball(0.6);
    const Quaternion area = bergman_fueter_transform(f, q, kI).value;
    const Quaternion contour = fueter_contour_transform(f, q, kI, 0.8, 512).value;
    CHECK(abs(area - contour) <= 1e-3 * std::max(1.0, abs(area)));
  }
}

TEST_CASE("contour guards") {
  const auto f = monomial(2);
  CHECK_THROWS_AS(fueter_contour_transform(f, Quaternion::real(0.78), kI, 0.8, 256),
                  ContourTooClose);
  CHECK_THROWS_AS(fueter_contour_transform(f, Quaternion::real(0.9), kI, 0.8, 256),
                  BadParameter);
  CHECK_THROWS_AS(fueter_contour_transform(f, Quaternion::real(0.1), kI, 1.2, 256),
                  BadParameter);
}

TEST_CASE("transform report bookkeeping") {
  const TransformReport r = make_report(Quaternion::real(1.5), Quaternion::real(1.0));
  CHECK(r.abs_error == doctest::Approx(0.5));
  CHECK(r.rel_error == doctest::Approx(0.5));
  const TransformReport s = make_report(Quaternion::real(0.1), Quaternion::zero());
  CHECK(s.rel_error == doctest::Approx(0.1));  // reference below 1 uses the absolute scale
}
