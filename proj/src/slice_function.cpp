#include "bergman/slice_function.hpp"

#include <cmath>

namespace bergman {

bool contains(Domain d, const Quaternion& q) {
  switch (d) {
    case Domain::UnitBall: return norm_sq(q) < 1.0;
    case Domain::HalfSpace: return real_part(q) > 0.0;
  }
  return false;
}

double boundary_margin(Domain d, const Quaternion& q) {
  switch (d) {
    case Domain::UnitBall: return 1.0 - abs(q);
    case Domain::HalfSpace: return real_part(q);
  }
  return 0.0;
}

double planar_boundary_margin(Domain d, double x, double y) {
  switch (d) {
    case Domain::UnitBall: return 1.0 - std::hypot(x, y);
    case Domain::HalfSpace: return x;
  }
  return 0.0;
}

Quaternion extend_via_representation(const StemPair& stem, const Quaternion& q) {
  const SlicePoint sp = slice_decompose(q);
  if (stem.domain && !contains(*stem.domain, q))
    throw DomainError("extension point lies outside the stem's planar domain");

  const Complex zp{sp.re, sp.im};
  const Complex zm{sp.re, -sp.im};
  const Quaternion qi = stem.unit_i.as_quaternion();
  const Quaternion qj = stem.unit_j.as_quaternion();

  const Quaternion f_plus = embed(stem.F(zp), stem.unit_i) + embed(stem.G(zp), stem.unit_i) * qj;
  const Quaternion f_minus = embed(stem.F(zm), stem.unit_i) + embed(stem.G(zm), stem.unit_i) * qj;

  const Quaternion iq = sp.unit.as_quaternion();
  const Quaternion one = Quaternion::one();
  return 0.5 * ((one + iq * qi) * f_minus + (one - iq * qi) * f_plus);
}

SliceFunction SliceFunction::polynomial(std::vector<Quaternion> coeffs) {
  return SliceFunction(Polynomial{std::move(coeffs)}, std::nullopt);
}

SliceFunction SliceFunction::intrinsic_rational(std::vector<double> num,
                                                std::vector<double> den, int den_pow) {
  if (den.empty()) throw BadParameter("intrinsic rational needs denominator coefficients");
  if (den_pow < 0) throw BadParameter("denominator power must be >= 0");
  return SliceFunction(Rational{std::move(num), std::move(den), den_pow}, std::nullopt);
}

SliceFunction SliceFunction::stem(StemPair pair) {
  auto dom = pair.domain;
  return SliceFunction(Stem{std::move(pair)}, dom);
}

SliceFunction SliceFunction::kernel_section(KernelId kernel, const Quaternion& r) {
  Domain dom = Domain::UnitBall;
  if (kernel == KernelId::HalfSpaceA || kernel == KernelId::HalfSpaceB)
    dom = Domain::HalfSpace;
  return SliceFunction(Section{kernel, r}, dom);
}

SliceFunction SliceFunction::with_domain(Domain d) const {
  SliceFunction out = *this;
  out.domain_ = d;
  if (auto* s = std::get_if<Stem>(&out.impl_)) s->pair.domain = d;
  return out;
}

namespace {

// Horner from the left: acc = q*acc + c_k builds sum_n q^n c_n.
Quaternion eval_quaternion_poly(const std::vector<Quaternion>& c, const Quaternion& q) {
  if (c.empty()) return Quaternion::zero();
  Quaternion acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = q * acc + c[k];
  return acc;
}

Quaternion eval_real_poly_quat(const std::vector<double>& c, const Quaternion& q) {
  if (c.empty()) return Quaternion::zero();
  Quaternion acc = Quaternion::real(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = q * acc + Quaternion::real(c[k]);
  return acc;
}

}  // namespace

Quaternion SliceFunction::operator()(const Quaternion& q) const {
  if (domain_ && !contains(*domain_, q))
    throw DomainError("evaluation point outside the function's domain");

  if (const auto* p = std::get_if<Polynomial>(&impl_)) return eval_quaternion_poly(p->coeffs, q);
  if (const auto* r = std::get_if<Rational>(&impl_)) {
    const Quaternion den = eval_real_poly_quat(r->den, q);
    if (!(abs(den) > 1e-300)) throw ZeroDivisor("intrinsic rational evaluated at a pole");
    const Quaternion num = eval_real_poly_quat(r->num, q);
    return num * integer_power(inverse(den), static_cast<unsigned>(r->den_pow));
  }
  if (const auto* s = std::get_if<Stem>(&impl_)) return extend_via_representation(s->pair, q);
  const auto& sec = std::get<Section>(impl_);
  return kernel_eval(sec.kernel, q, sec.r);
}

StemPair split(const SliceFunction& f, const UnitImaginary& unit_i,
               const UnitImaginary& unit_j) {
  const UnitImaginary uj = orthonormalized(unit_j, unit_i);
  const Quaternion qi = unit_i.as_quaternion();
  const Quaternion qj = uj.as_quaternion();
  const Quaternion qk = qi * qj;

  SliceFunction fc = f;
  auto F = ComplexFunction::evaluator([fc, unit_i, qi](Complex z) {
    const Quaternion v = fc(embed(z, unit_i));
    return Complex{dot4(v, Quaternion::one()), dot4(v, qi)};
  });
  auto G = ComplexFunction::evaluator([fc, unit_i, qj, qk](Complex z) {
    const Quaternion v = fc(embed(z, unit_i));
    return Complex{dot4(v, qj), dot4(v, qk)};
  });
  return StemPair(std::move(F), std::move(G), unit_i, uj, f.domain());
}

FourComponents four_component_decompose(const SliceFunction& f, const UnitImaginary& unit_i,
                                        const UnitImaginary& unit_j) {
  StemPair s = split(f, unit_i, unit_j);
  auto [h0, h1] = intrinsic_parts(s.F);
  auto [h2, h3] = intrinsic_parts(s.G);
  return FourComponents{std::move(h0), std::move(h1), std::move(h2), std::move(h3),
                        s.unit_i, s.unit_j};
}

Quaternion reconstruct(const FourComponents& parts, const Quaternion& q) {
  const Quaternion qi = parts.unit_i.as_quaternion();
  const Quaternion qj = parts.unit_j.as_quaternion();
  const Quaternion qk = qi * qj;
  auto extend_one = [&](const ComplexFunction& h) {
    return extend_via_representation(
        StemPair(h, ComplexFunction(), parts.unit_i, parts.unit_j), q);
  };
  return extend_one(parts.h0) + extend_one(parts.h1) * qi + extend_one(parts.h2) * qj +
         extend_one(parts.h3) * qk;
}

}  // namespace bergman
