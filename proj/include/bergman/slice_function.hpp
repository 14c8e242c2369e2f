#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "bergman/complex_function.hpp"
#include "bergman/kernels.hpp"
#include "bergman/quaternion.hpp"

namespace bergman {

using QuatFn = std::function<Quaternion(const Quaternion&)>;

/// Built-in axially symmetric domains.
enum class Domain { UnitBall, HalfSpace };

bool contains(Domain d, const Quaternion& q);

/// Distance from q to the domain boundary (negative outside).
double boundary_margin(Domain d, const Quaternion& q);

/// Distance from a planar slice point to the boundary of the slice region.
double planar_boundary_margin(Domain d, double x, double y);

/// Holomorphic pair (F, G) describing a slice restriction F(z) + G(z) * j on
/// the plane of unit_i. The constructor re-orthonormalizes unit_j against
/// unit_i; the Splitting decomposition needs exact orthogonality.
struct StemPair {
  ComplexFunction F;
  ComplexFunction G;
  UnitImaginary unit_i;
  UnitImaginary unit_j;
  std::optional<Domain> domain;

  StemPair(ComplexFunction F_, ComplexFunction G_, UnitImaginary i, UnitImaginary j,
           std::optional<Domain> dom = std::nullopt)
      : F(std::move(F_)), G(std::move(G_)), unit_i(i), unit_j(orthonormalized(j, i)),
        domain(dom) {}
};

/// Two-point extension of a stem to the whole domain:
///   P[f](q) = 1/2 [ (1 + I_q i) f(x - i y) + (1 - I_q i) f(x + i y) ]
/// with q = x + I_q y and f(z) = F(z) + G(z) j evaluated on the base slice.
/// Restricted to the base slice this reproduces f exactly.
Quaternion extend_via_representation(const StemPair& stem, const Quaternion& q);

/// Slice regular function in one of four evaluatable shapes.
class SliceFunction {
 public:
  /// sum_n q^n coeffs[n]; coefficients multiply on the right of the powers.
  struct Polynomial {
    std::vector<Quaternion> coeffs;
  };
  /// num(q) (den(q))^{-den_pow} with real coefficients (an intrinsic rational).
  struct Rational {
    std::vector<double> num;
    std::vector<double> den;
    int den_pow = 1;
  };
  struct Stem {
    StemPair pair;
  };
  /// q -> kernel(q, r) for a fixed second argument.
  struct Section {
    KernelId kernel;
    Quaternion r;
  };

  static SliceFunction polynomial(std::vector<Quaternion> coeffs);
  static SliceFunction constant(const Quaternion& c) { return polynomial({c}); }
  static SliceFunction intrinsic_rational(std::vector<double> num, std::vector<double> den,
                                          int den_pow = 1);
  static SliceFunction stem(StemPair pair);
  static SliceFunction kernel_section(KernelId kernel, const Quaternion& r);

  /// Direct evaluation; throws DomainError outside an attached domain and
  /// ZeroDivisor at rational poles.
  Quaternion operator()(const Quaternion& q) const;

  std::optional<Domain> domain() const { return domain_; }
  SliceFunction with_domain(Domain d) const;

  const std::variant<Polynomial, Rational, Stem, Section>& repr() const { return impl_; }

 private:
  SliceFunction(std::variant<Polynomial, Rational, Stem, Section> impl,
                std::optional<Domain> dom)
      : impl_(std::move(impl)), domain_(dom) {}

  std::variant<Polynomial, Rational, Stem, Section> impl_;
  std::optional<Domain> domain_;
};

/// Splitting of f on the slice of unit_i: returns holomorphic F, G with
/// f|slice = F + G * j. The returned stem evaluates f at embedded points and
/// projects onto the orthonormal basis {1, i, j, ij}.
StemPair split(const SliceFunction& f, const UnitImaginary& unit_i,
               const UnitImaginary& unit_j);

/// Intrinsic stems h0..h3 with
///   f = P[h0] + P[h1] i + P[h2] j + P[h3] ij
/// obtained by splitting and then taking intrinsic parts of F and G.
struct FourComponents {
  ComplexFunction h0, h1, h2, h3;
  UnitImaginary unit_i, unit_j;
};

FourComponents four_component_decompose(const SliceFunction& f, const UnitImaginary& unit_i,
                                        const UnitImaginary& unit_j);

/// Evaluates the four-component representation at q.
Quaternion reconstruct(const FourComponents& parts, const Quaternion& q);

}  // namespace bergman
