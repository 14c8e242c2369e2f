#pragma once

#include <string>

#include "bergman/quaternion.hpp"

namespace bergman {

enum class KernelId {
  Disk,
  BallFormI,
  BallFormII,
  HalfSpaceA,
  HalfSpaceB,
  QFactor,
  BergmanFueter,
};

enum class BallForm { I, II };
enum class HalfSpaceForm { A, B };

const char* kernel_name(KernelId id);
KernelId kernel_from_name(const std::string& name);

/// Bergman kernel of the unit disk, (1/pi) (1 - z conj(zeta))^{-2}.
Complex disk_kernel(Complex z, Complex zeta);

/// Bergman kernel of the unit ball in the quaternions. The two closed forms
/// agree pointwise (exercised by tests, never assumed):
///   I : (1/pi) (1 - 2 conj(q)conj(r) + conj(q)^2 conj(r)^2)
///             (1 - 2 Re[q] conj(r) + |q|^2 conj(r)^2)^{-2}
///   II: (1/pi) (1 - 2 q Re[r] + q^2 |r|^2)^{-2} (1 - 2 q r + q^2 r^2)
/// Products are evaluated strictly in the written order.
Quaternion ball_kernel(const Quaternion& q, const Quaternion& r, BallForm form);

/// Bergman kernel of the right half space Re(q) > 0:
///   A: (1/pi) (conj(q)^2 + 2 conj(q)conj(r) + conj(r)^2)
///            (|q|^2 + 2 Re[q] conj(r) + conj(r)^2)^{-2}
///   B: (1/pi) (q^2 + 2 Re[r] q + |r|^2)^{-2} (q^2 + 2 q r + r^2)
Quaternion halfspace_kernel(const Quaternion& q, const Quaternion& r, HalfSpaceForm form);

/// (1 - 2 Re[q] conj(r) + |q|^2 conj(r)^2)^{-1}. Real coefficients in
/// conj(r), so the value lies in the slice plane of r.
Quaternion q_factor(const Quaternion& q, const Quaternion& r);

/// Laplacian (in q) of the ball kernel:
///   -(4/pi) [Q^2 + 2 (1 - 2 conj(q)conj(r) + conj(q)^2 conj(r)^2) Q^3] conj(r)^2
/// with Q = q_factor(q, r). Fueter regular in q.
Quaternion bergman_fueter_kernel(const Quaternion& q, const Quaternion& r);

/// Dispatch by id; Disk uses the quaternion form (1/pi)(1 - q conj(r))^{-2},
/// which restricts to the planar disk kernel on any slice.
Quaternion kernel_eval(KernelId id, const Quaternion& q, const Quaternion& r);

}  // namespace bergman
