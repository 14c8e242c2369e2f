#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "bergman/quaternion.hpp"

namespace bergman {

/// Evaluatable holomorphic function of one complex variable. Three concrete
/// shapes: a polynomial with complex coefficients, a rational with real
/// coefficients p(z) (d(z))^{-m}, and an opaque evaluator (used for
/// restrictions obtained by splitting slice functions).
class ComplexFunction {
 public:
  struct Poly {
    std::vector<Complex> coeffs;  // sum_k coeffs[k] z^k
  };
  struct Rational {
    std::vector<double> num;
    std::vector<double> den;
    int den_pow = 1;
  };
  using Evaluator = std::function<Complex(Complex)>;

  /// The zero function.
  ComplexFunction() : impl_(Poly{}) {}

  static ComplexFunction polynomial(std::vector<Complex> coeffs);
  static ComplexFunction rational(std::vector<double> num, std::vector<double> den,
                                  int den_pow = 1);
  static ComplexFunction evaluator(Evaluator fn);
  static ComplexFunction constant(Complex c) { return polynomial({c}); }

  Complex operator()(Complex z) const;

  /// True when the representation is a structurally zero polynomial.
  bool is_zero() const;

  const std::variant<Poly, Rational, Evaluator>& repr() const { return impl_; }

 private:
  explicit ComplexFunction(std::variant<Poly, Rational, Evaluator> impl)
      : impl_(std::move(impl)) {}

  std::variant<Poly, Rational, Evaluator> impl_;
};

/// z -> conj(f(conj z)). Intrinsic functions are the fixed points of this map.
ComplexFunction reflect(const ComplexFunction& f);

/// Splits f into intrinsic components f = f1 + f2 * i:
///   f1(z) = (f(z) + conj(f(conj z))) / 2
///   f2(z) = -i (f(z) - conj(f(conj z))) / 2
/// Polynomials split exactly by coefficient; everything else evaluates the
/// two-point formula.
std::pair<ComplexFunction, ComplexFunction> intrinsic_parts(const ComplexFunction& f);

/// Mirror extension across the real axis of a function holomorphic on the
/// upper half plane with real boundary values:
///   f(z) for Im z > 0, conj(f(conj z)) for Im z < 0, the boundary limit on
///   the axis. Each call probes f near Re(z) on the axis and throws
///   BoundaryLimitNotReal when the extrapolated boundary value has a
///   non-real part (the input is then not extendable this way).
Complex schwarz_extend(const ComplexFunction& f_plus, Complex z);

}  // namespace bergman
