#pragma once

#include "bergman/fd_ops.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/slice_function.hpp"

namespace bergman {

/// Result of an integral transform together with the oracle value it is
/// checked against (when one exists) and the rule parameters used.
struct TransformReport {
  Quaternion value;
  Quaternion reference;
  bool has_reference = false;
  double abs_error = 0.0;
  double rel_error = 0.0;  // abs_error / max(|reference|, 1)
  int n_r = 0;
  int n_theta = 0;
  int n_nodes = 0;
  double contour_radius = 0.0;
};

TransformReport make_report(const Quaternion& value, const Quaternion& reference);

/// Reproducing integral: quadrature of K(q, .) f over the slice of unit_i,
/// kernel on the left. The value does not depend on the slice. reference is
/// the direct evaluation f(q). Requires |q| <= 0.9 on the ball and
/// Re(q) >= 0.1 on the half space.
TransformReport reproduce(const SliceFunction& f, const Quaternion& q, Domain dom,
                          const UnitImaginary& unit_i, const SliceRuleParams& p);

/// Area transform against the Laplacian of the ball kernel; maps f to the
/// Fueter regular function Delta f. reference is the FD Laplacian of f at q.
TransformReport bergman_fueter_transform(const SliceFunction& f, const Quaternion& q,
                                         const UnitImaginary& unit_i, int n_r = 96,
                                         int n_theta = 192);

/// -4 (s - conj q)(s^2 - 2 Re[q] s + |q|^2)^{-2}.
Quaternion fueter_kernel(const Quaternion& s, const Quaternion& q);

/// Contour realization of the same map: trapezoid rule for
///   (1/2pi) int F(s, q) ds_i f(s), ds_i = -ds * i,
/// over the circle s = rho e^{i theta} in the slice of unit_i. Requires
/// |q| < rho < 1 with a gap of at least 0.05 (ContourTooClose otherwise).
TransformReport fueter_contour_transform(const SliceFunction& f, const Quaternion& q,
                                         const UnitImaginary& unit_i, double rho,
                                         int n_nodes);

}  // namespace bergman
