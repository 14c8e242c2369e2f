#pragma once

#include <cmath>
#include <complex>

#include "bergman/errors.hpp"

namespace bergman {

using Complex = std::complex<double>;

/// Quaternion w + x*i + y*j + z*k with double components.
///
/// All operations below are pure functions of their arguments; the Hamilton
/// product keeps the exact operand order (multiplication does not commute).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

constexpr Quaternion operator/(const Quaternion& a, double s) {
  return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product in the exact order given: mul(a,b) != mul(b,a) in general.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double real_part(const Quaternion& q) { return q.w; }

constexpr double imag_norm_sq(const Quaternion& q) {
  return q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double imag_norm(const Quaternion& q) { return std::sqrt(imag_norm_sq(q)); }

/// Euclidean R^4 inner product; used to split values along an orthonormal
/// quaternion basis.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// conj(q)/|q|^2, so that mul(q, inverse(q)) == 1. Throws ZeroDivisor when
/// |q| <= eps; the default threshold rejects only an exact (or underflowed)
/// zero.
inline Quaternion inverse(const Quaternion& q, double eps = 1e-300) {
  const double a = abs(q);
  if (!(a > eps)) throw ZeroDivisor("quaternion modulus below epsilon in inverse()");
  return conj(q) / norm_sq(q);
}

/// q^n by repeated Hamilton product; n == 0 gives 1.
inline Quaternion integer_power(const Quaternion& q, unsigned n) {
  Quaternion acc = Quaternion::one();
  for (unsigned k = 0; k < n; ++k) acc = acc * q;
  return acc;
}

/// Unit imaginary direction; as a quaternion it squares to -1.
class UnitImaginary {
 public:
  /// Defaults to the first basis unit i.
  constexpr UnitImaginary() : x_(1.0), y_(0.0), z_(0.0) {}

  /// Normalizes the given direction. Throws BadParameter on a near-zero vector.
  UnitImaginary(double ux, double uy, double uz) {
    const double n = std::sqrt(ux * ux + uy * uy + uz * uz);
    if (!(n > 1e-14))
      throw BadParameter("unit imaginary direction has near-zero length");
    x_ = ux / n;
    y_ = uy / n;
    z_ = uz / n;
  }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  constexpr Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }

  friend constexpr bool operator==(const UnitImaginary&, const UnitImaginary&) = default;

  /// Adopts components that are already unit length (within roundoff) without
  /// renormalizing; keeps decompose/embed round trips at the one-ulp level.
  static UnitImaginary unchecked(double ux, double uy, double uz) {
    UnitImaginary u;
    u.x_ = ux;
    u.y_ = uy;
    u.z_ = uz;
    return u;
  }

 private:
  double x_, y_, z_;
};

inline double dot(const UnitImaginary& a, const UnitImaginary& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

/// Gram-Schmidt step: the component of `v` orthogonal to `against`,
/// renormalized. Throws BadParameter when the two are (near) parallel.
inline UnitImaginary orthonormalized(const UnitImaginary& v, const UnitImaginary& against) {
  const double d = dot(v, against);
  const double ux = v.x() - d * against.x();
  const double uy = v.y() - d * against.y();
  const double uz = v.z() - d * against.z();
  return UnitImaginary(ux, uy, uz);
}

/// Planar coordinates of a point on its slice: q = re + unit * im, im >= 0.
struct SlicePoint {
  double re = 0.0;
  double im = 0.0;
  UnitImaginary unit;

  Quaternion embed() const {
    return {re, unit.x() * im, unit.y() * im, unit.z() * im};
  }
};

/// Canonical slice coordinates of q. Real points get unit = i by convention;
/// any choice gives the same extended value through the two-point extension
/// formula.
inline SlicePoint slice_decompose(const Quaternion& q) {
  const double m = imag_norm(q);
  if (m == 0.0) return {q.w, 0.0, UnitImaginary()};
  return {q.w, m, UnitImaginary::unchecked(q.x / m, q.y / m, q.z / m)};
}

/// Embeds a complex number a+bi into the slice plane of `u`: a + u*b.
inline Quaternion embed(Complex c, const UnitImaginary& u) {
  return {c.real(), u.x() * c.imag(), u.y() * c.imag(), u.z() * c.imag()};
}

}  // namespace bergman
