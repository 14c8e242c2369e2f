#include "bergman/complex_function.hpp"

#include <cmath>

namespace bergman {

namespace {

Complex eval_poly(const std::vector<Complex>& c, Complex z) {
  if (c.empty()) return {0.0, 0.0};
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

Complex eval_real_poly(const std::vector<double>& c, Complex z) {
  if (c.empty()) return {0.0, 0.0};
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

}  // namespace

ComplexFunction ComplexFunction::polynomial(std::vector<Complex> coeffs) {
  return ComplexFunction(Poly{std::move(coeffs)});
}

ComplexFunction ComplexFunction::rational(std::vector<double> num, std::vector<double> den,
                                          int den_pow) {
  if (den.empty()) throw BadParameter("rational denominator has no coefficients");
  if (den_pow < 0) throw BadParameter("rational denominator power must be >= 0");
  return ComplexFunction(Rational{std::move(num), std::move(den), den_pow});
}

ComplexFunction ComplexFunction::evaluator(Evaluator fn) {
  if (!fn) throw BadParameter("null complex evaluator");
  return ComplexFunction(std::move(fn));
}

Complex ComplexFunction::operator()(Complex z) const {
  if (const auto* p = std::get_if<Poly>(&impl_)) return eval_poly(p->coeffs, z);
  if (const auto* r = std::get_if<Rational>(&impl_)) {
    const Complex d = eval_real_poly(r->den, z);
    if (!(std::abs(d) > 1e-300)) throw ZeroDivisor("rational evaluated at a pole");
    Complex acc = eval_real_poly(r->num, z);
    for (int k = 0; k < r->den_pow; ++k) acc /= d;
    return acc;
  }
  return std::get<Evaluator>(impl_)(z);
}

bool ComplexFunction::is_zero() const {
  const auto* p = std::get_if<Poly>(&impl_);
  if (!p) return false;
  for (const Complex& c : p->coeffs)
    if (c != Complex{0.0, 0.0}) return false;
  return true;
}

ComplexFunction reflect(const ComplexFunction& f) {
  if (const auto* p = std::get_if<ComplexFunction::Poly>(&f.repr())) {
    std::vector<Complex> coeffs = p->coeffs;
    for (Complex& c : coeffs) c = std::conj(c);
    return ComplexFunction::polynomial(std::move(coeffs));
  }
  if (std::holds_alternative<ComplexFunction::Rational>(f.repr())) return f;
  ComplexFunction g = f;
  return ComplexFunction::evaluator(
      [g](Complex z) { return std::conj(g(std::conj(z))); });
}

std::pair<ComplexFunction, ComplexFunction> intrinsic_parts(const ComplexFunction& f) {
  if (const auto* p = std::get_if<ComplexFunction::Poly>(&f.repr())) {
    std::vector<Complex> re(p->coeffs.size()), im(p->coeffs.size());
    for (std::size_t k = 0; k < p->coeffs.size(); ++k) {
      re[k] = Complex{p->coeffs[k].real(), 0.0};
      im[k] = Complex{p->coeffs[k].imag(), 0.0};
    }
    return {ComplexFunction::polynomial(std::move(re)),
            ComplexFunction::polynomial(std::move(im))};
  }
  if (std::holds_alternative<ComplexFunction::Rational>(f.repr()))
    return {f, ComplexFunction()};
  ComplexFunction g = f;
  auto f1 = ComplexFunction::evaluator([g](Complex z) {
    return 0.5 * (g(z) + std::conj(g(std::conj(z))));
  });
  auto f2 = ComplexFunction::evaluator([g](Complex z) {
    return Complex{0.0, -0.5} * (g(z) - std::conj(g(std::conj(z))));
  });
  return {f1, f2};
}

Complex schwarz_extend(const ComplexFunction& f_plus, Complex z) {
  // Probe the boundary limit at x = Re(z) by quadratic extrapolation from
  // three heights; the sampled-check parameters are delta = 1e-3, tol = 1e-6.
  const double delta = 1e-3;
  const double tol = 1e-6;
  const double x = z.real();
  const Complex s1 = f_plus(Complex{x, delta});
  const Complex s2 = f_plus(Complex{x, delta / 2.0});
  const Complex s3 = f_plus(Complex{x, delta / 4.0});
  const Complex limit = (1.0 / 3.0) * s1 - 2.0 * s2 + (8.0 / 3.0) * s3;
  if (std::abs(limit.imag()) > tol * (1.0 + std::abs(limit)))
    throw BoundaryLimitNotReal("boundary limit near Re(z) has non-real part");

  if (z.imag() > 0.0) return f_plus(z);
  if (z.imag() < 0.0) return std::conj(f_plus(std::conj(z)));
  return Complex{limit.real(), 0.0};
}

}  // namespace bergman
