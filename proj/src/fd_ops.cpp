#include "bergman/fd_ops.hpp"

namespace bergman {

namespace {

// First derivative along direction `dir` at base point p.
Quaternion first_derivative(const QuatFn& f, const Quaternion& p, const Quaternion& dir,
                            const FDScheme& s) {
  const double h = s.h;
  if (s.order == 2) {
    return (f(p + h * dir) - f(p - h * dir)) / (2.0 * h);
  }
  const Quaternion fp1 = f(p + h * dir);
  const Quaternion fm1 = f(p - h * dir);
  const Quaternion fp2 = f(p + (2.0 * h) * dir);
  const Quaternion fm2 = f(p - (2.0 * h) * dir);
  return (-1.0 * fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
}

// Second derivative along `dir`, reusing the center value.
Quaternion second_derivative(const QuatFn& f, const Quaternion& p, const Quaternion& f0,
                             const Quaternion& dir, const FDScheme& s) {
  const double h = s.h;
  if (s.order == 2) {
    return (f(p + h * dir) - 2.0 * f0 + f(p - h * dir)) / (h * h);
  }
  const Quaternion fp1 = f(p + h * dir);
  const Quaternion fm1 = f(p - h * dir);
  const Quaternion fp2 = f(p + (2.0 * h) * dir);
  const Quaternion fm2 = f(p - (2.0 * h) * dir);
  return (-1.0 * fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
}

void check_planar_margin(const SliceFunction& f, const SlicePoint& z, const FDScheme& s) {
  if (!f.domain()) return;
  if (planar_boundary_margin(*f.domain(), z.re, z.im) <= s.order * s.h)
    throw DomainError("FD stencil neighborhood leaves the slice domain");
}

void check_margin(const SliceFunction& f, const Quaternion& q, const FDScheme& s) {
  if (!f.domain()) return;
  if (boundary_margin(*f.domain(), q) <= s.order * s.h)
    throw DomainError("FD stencil neighborhood leaves the domain");
}

}  // namespace

Quaternion cr_slice_fd(const QuatFn& f, const SlicePoint& z, const FDScheme& s) {
  const Quaternion u = z.unit.as_quaternion();
  const Quaternion ex = Quaternion::one();
  const Quaternion p = z.embed();
  const Quaternion dfdx = first_derivative(f, p, ex, s);
  const Quaternion dfdy = first_derivative(f, p, u, s);
  return dfdx + u * dfdy;
}

Quaternion cr_slice_fd_right(const QuatFn& f, const SlicePoint& z, const FDScheme& s) {
  const Quaternion u = z.unit.as_quaternion();
  const Quaternion p = z.embed();
  const Quaternion dfdx = first_derivative(f, p, Quaternion::one(), s);
  const Quaternion dfdy = first_derivative(f, p, u, s);
  return dfdx - dfdy * u;
}

Quaternion laplacian_fd(const QuatFn& f, const Quaternion& q, const FDScheme& s) {
  static const Quaternion axes[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                     Quaternion::k()};
  const Quaternion f0 = f(q);
  Quaternion acc = Quaternion::zero();
  for (const Quaternion& dir : axes) acc = acc + second_derivative(f, q, f0, dir, s);
  return acc;
}

Quaternion cauchy_fueter_fd(const QuatFn& f, const Quaternion& q, const FDScheme& s) {
  static const Quaternion axes[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                     Quaternion::k()};
  Quaternion acc = Quaternion::zero();
  for (const Quaternion& dir : axes) acc = acc + dir * first_derivative(f, q, dir, s);
  return acc;
}

Quaternion cr_slice_fd(const SliceFunction& f, const SlicePoint& z, const FDScheme& s) {
  check_planar_margin(f, z, s);
  return cr_slice_fd([&f](const Quaternion& q) { return f(q); }, z, s);
}

Quaternion cr_slice_fd_right(const SliceFunction& f, const SlicePoint& z, const FDScheme& s) {
  check_planar_margin(f, z, s);
  return cr_slice_fd_right([&f](const Quaternion& q) { return f(q); }, z, s);
}

Quaternion laplacian_fd(const SliceFunction& f, const Quaternion& q, const FDScheme& s) {
  check_margin(f, q, s);
  return laplacian_fd([&f](const Quaternion& p) { return f(p); }, q, s);
}

Quaternion cauchy_fueter_fd(const SliceFunction& f, const Quaternion& q, const FDScheme& s) {
  check_margin(f, q, s);
  return cauchy_fueter_fd([&f](const Quaternion& p) { return f(p); }, q, s);
}

}  // namespace bergman
