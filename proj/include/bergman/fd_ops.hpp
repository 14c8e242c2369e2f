#pragma once

#include <functional>

#include "bergman/quaternion.hpp"
#include "bergman/slice_function.hpp"

namespace bergman {

/// Central finite-difference configuration shared by all verification
/// oracles. Order 2 or 4; step h restricted to [1e-6, 1e-1].
struct FDScheme {
  double h = 1e-3;
  int order = 4;

  FDScheme() = default;
  FDScheme(double h_, int order_) : h(h_), order(order_) {
    if (!(h >= 1e-6 && h <= 1e-1)) throw BadParameter("FD step h outside [1e-6, 1e-1]");
    if (order != 2 && order != 4) throw BadParameter("FD order must be 2 or 4");
  }
};

inline FDScheme default_derivative_scheme() { return FDScheme(1e-3, 4); }
inline FDScheme default_laplacian_scheme() { return FDScheme(5e-3, 4); }

/// (d/dx + i d/dy) f restricted to the slice of z; near zero iff f is slice
/// regular there.
Quaternion cr_slice_fd(const QuatFn& f, const SlicePoint& z, const FDScheme& s);

/// Right-acting variant f (d/dx - d/dy * i): the unit multiplies the
/// y-derivative on the right. Near zero iff f is slice anti-regular on the
/// right.
Quaternion cr_slice_fd_right(const QuatFn& f, const SlicePoint& z, const FDScheme& s);

/// Componentwise 4-D Laplacian.
Quaternion laplacian_fd(const QuatFn& f, const Quaternion& q, const FDScheme& s);

/// Left Cauchy-Fueter operator d/dx0 + i d/dx1 + j d/dx2 + k d/dx3; near zero
/// iff f is Fueter regular at q.
Quaternion cauchy_fueter_fd(const QuatFn& f, const Quaternion& q, const FDScheme& s);

// SliceFunction overloads enforce the interior-margin precondition against
// the function's domain (when one is attached) and throw DomainError when a
// stencil would leave it.
Quaternion cr_slice_fd(const SliceFunction& f, const SlicePoint& z, const FDScheme& s);
Quaternion cr_slice_fd_right(const SliceFunction& f, const SlicePoint& z, const FDScheme& s);
Quaternion laplacian_fd(const SliceFunction& f, const Quaternion& q, const FDScheme& s);
Quaternion cauchy_fueter_fd(const SliceFunction& f, const Quaternion& q, const FDScheme& s);

}  // namespace bergman
