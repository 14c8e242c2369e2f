#include "bergman/kernels.hpp"

#include <cmath>
#include <numbers>

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;

// Modulus threshold under which a real-coefficient denominator factor is
// treated as singular.
constexpr double kSingularTol = 1e-12;

Quaternion inv_square(const Quaternion& b, const char* which) {
  if (abs(b) < kSingularTol) throw SingularKernel(std::string(which) + " factor is singular");
  return inverse(b * b);
}

}  // namespace

const char* kernel_name(KernelId id) {
  switch (id) {
    case KernelId::Disk: return "disk";
    case KernelId::BallFormI: return "ball_I";
    case KernelId::BallFormII: return "ball_II";
    case KernelId::HalfSpaceA: return "halfspace_A";
    case KernelId::HalfSpaceB: return "halfspace_B";
    case KernelId::QFactor: return "q_factor";
    case KernelId::BergmanFueter: return "bergman_fueter";
  }
  return "unknown";
}

KernelId kernel_from_name(const std::string& name) {
  if (name == "disk") return KernelId::Disk;
  if (name == "ball_I") return KernelId::BallFormI;
  if (name == "ball_II") return KernelId::BallFormII;
  if (name == "halfspace_A") return KernelId::HalfSpaceA;
  if (name == "halfspace_B") return KernelId::HalfSpaceB;
  if (name == "q_factor") return KernelId::QFactor;
  if (name == "bergman_fueter") return KernelId::BergmanFueter;
  throw BadParameter("unknown kernel name '" + name + "'");
}

Complex disk_kernel(Complex z, Complex zeta) {
  const Complex d = 1.0 - z * std::conj(zeta);
  if (std::abs(d) < kSingularTol) throw SingularKernel("disk kernel denominator vanishes");
  return 1.0 / (kPi * d * d);
}

Quaternion ball_kernel(const Quaternion& q, const Quaternion& r, BallForm form) {
  const Quaternion one = Quaternion::one();
  if (form == BallForm::I) {
    const Quaternion qc = conj(q);
    const Quaternion rc = conj(r);
    const Quaternion a = one - 2.0 * (qc * rc) + (qc * qc) * (rc * rc);
    const Quaternion b = one - (2.0 * real_part(q)) * rc + norm_sq(q) * (rc * rc);
    return (1.0 / kPi) * (a * inv_square(b, "ball form I"));
  }
  const Quaternion c = one - (2.0 * real_part(r)) * q + norm_sq(r) * (q * q);
  const Quaternion d = one - 2.0 * (q * r) + (q * q) * (r * r);
  return (1.0 / kPi) * (inv_square(c, "ball form II") * d);
}

Quaternion halfspace_kernel(const Quaternion& q, const Quaternion& r, HalfSpaceForm form) {
  if (form == HalfSpaceForm::A) {
    const Quaternion qc = conj(q);
    const Quaternion rc = conj(r);
    const Quaternion a = qc * qc + 2.0 * (qc * rc) + rc * rc;
    const Quaternion b =
        Quaternion::real(norm_sq(q)) + (2.0 * real_part(q)) * rc + rc * rc;
    return (1.0 / kPi) * (a * inv_square(b, "half-space form A"));
  }
  const Quaternion c = q * q + (2.0 * real_part(r)) * q + Quaternion::real(norm_sq(r));
  const Quaternion d = q * q + 2.0 * (q * r) + r * r;
  return (1.0 / kPi) * (inv_square(c, "half-space form B") * d);
}

Quaternion q_factor(const Quaternion& q, const Quaternion& r) {
  const Quaternion rc = conj(r);
  const Quaternion b =
      Quaternion::one() - (2.0 * real_part(q)) * rc + norm_sq(q) * (rc * rc);
  if (abs(b) < kSingularTol) throw SingularKernel("Q factor is singular");
  return inverse(b);
}

Quaternion bergman_fueter_kernel(const Quaternion& q, const Quaternion& r) {
  const Quaternion qc = conj(q);
  const Quaternion rc = conj(r);
  const Quaternion qf = q_factor(q, r);
  const Quaternion a = Quaternion::one() - 2.0 * (qc * rc) + (qc * qc) * (rc * rc);
  const Quaternion bracket = qf * qf + 2.0 * (a * (qf * (qf * qf)));
  return (-4.0 / kPi) * (bracket * (rc * rc));
}

Quaternion kernel_eval(KernelId id, const Quaternion& q, const Quaternion& r) {
  switch (id) {
    case KernelId::Disk: {
      const Quaternion d = Quaternion::one() - q * conj(r);
      if (abs(d) < kSingularTol) throw SingularKernel("disk kernel denominator vanishes");
      return (1.0 / kPi) * inverse(d * d);
    }
    case KernelId::BallFormI: return ball_kernel(q, r, BallForm::I);
    case KernelId::BallFormII: return ball_kernel(q, r, BallForm::II);
    case KernelId::HalfSpaceA: return halfspace_kernel(q, r, HalfSpaceForm::A);
    case KernelId::HalfSpaceB: return halfspace_kernel(q, r, HalfSpaceForm::B);
    case KernelId::QFactor: return q_factor(q, r);
    case KernelId::BergmanFueter: return bergman_fueter_kernel(q, r);
  }
  throw BadParameter("unknown kernel id");
}

}  // namespace bergman
