#include "bergman/transforms.hpp"

#include <cmath>
#include <numbers>

#include "bergman/kernels.hpp"
#include "bergman/parallel.hpp"

namespace bergman {

namespace {
constexpr double kPi = std::numbers::pi;
}

TransformReport make_report(const Quaternion& value, const Quaternion& reference) {
  TransformReport rep;
  rep.value = value;
  rep.reference = reference;
  rep.has_reference = true;
  rep.abs_error = abs(value - reference);
  rep.rel_error = rep.abs_error / std::max(abs(reference), 1.0);
  return rep;
}

TransformReport reproduce(const SliceFunction& f, const Quaternion& q, Domain dom,
                          const UnitImaginary& unit_i, const SliceRuleParams& p) {
  if (dom == Domain::UnitBall && !(abs(q) <= 0.9))
    throw DomainError("reproducing target must satisfy |q| <= 0.9 on the ball");
  if (dom == Domain::HalfSpace && !(real_part(q) >= 0.1))
    throw DomainError("reproducing target must satisfy Re(q) >= 0.1 on the half space");

  auto compute = [&](int nr, int nt) {
    SliceRuleParams pp = p;
    pp.n_r = nr;
    pp.n_theta = nt;
    const QuadratureRule rule = slice_rule(dom, false, pp);
    return integrate_slice(
        [&](double x, double y) {
          const Quaternion zeta = embed(Complex{x, y}, unit_i);
          const Quaternion kv = dom == Domain::UnitBall
                                    ? ball_kernel(q, zeta, BallForm::I)
                                    : halfspace_kernel(q, zeta, HalfSpaceForm::A);
          return kv * f(zeta);
        },
        rule);
  };
  Quaternion value = compute(p.n_r, p.n_theta);
  if (p.check_divergence) {
    const Quaternion refined = compute(2 * p.n_r, 2 * p.n_theta);
    if (abs(refined - value) > 0.1 * std::max(abs(refined), 1e-30))
      throw DivergenceSuspected("reproducing integral moved more than 10% under refinement");
    value = refined;
  }

  TransformReport rep = make_report(value, f(q));
  rep.n_r = p.n_r;
  rep.n_theta = p.n_theta;
  return rep;
}

TransformReport bergman_fueter_transform(const SliceFunction& f, const Quaternion& q,
                                         const UnitImaginary& unit_i, int n_r, int n_theta) {
  if (!(abs(q) <= 0.9)) throw DomainError("transform target must satisfy |q| <= 0.9");

  const QuadratureRule rule = build_rule(RuleDomain::Disk, 1.0, n_r, n_theta);
  const Quaternion value = integrate_slice(
      [&](double x, double y) {
        const Quaternion r = embed(Complex{x, y}, unit_i);
        return bergman_fueter_kernel(q, r) * f(r);
      },
      rule);

  TransformReport rep = make_report(value, laplacian_fd(f, q, default_laplacian_scheme()));
  rep.n_r = n_r;
  rep.n_theta = n_theta;
  return rep;
}

Quaternion fueter_kernel(const Quaternion& s, const Quaternion& q) {
  const Quaternion b =
      s * s - (2.0 * real_part(q)) * s + Quaternion::real(norm_sq(q));
  if (abs(b) < 1e-12) throw SingularKernel("Fueter kernel denominator vanishes");
  return -4.0 * ((s - conj(q)) * inverse(b * b));
}

TransformReport fueter_contour_transform(const SliceFunction& f, const Quaternion& q,
                                         const UnitImaginary& unit_i, double rho,
                                         int n_nodes) {
  if (!(rho > 0.0 && rho < 1.0)) throw BadParameter("contour radius must lie in (0, 1)");
  if (n_nodes < 8) throw BadParameter("contour rule needs at least 8 nodes");
  if (!(abs(q) < rho)) throw BadParameter("target must lie strictly inside the contour");
  if (rho - abs(q) < 0.05)
    throw ContourTooClose("contour passes within 0.05 of the target");

  const Quaternion ui = unit_i.as_quaternion();
  std::vector<Quaternion> vals;
  detail::fill_indexed(
      vals, static_cast<std::size_t>(n_nodes),
      [&](std::size_t k) {
        const double theta = 2.0 * kPi * static_cast<double>(k) / n_nodes;
        const double c = std::cos(theta);
        const double sn = std::sin(theta);
        const Quaternion s = rho * (Quaternion::real(c) + ui * sn);
        const Quaternion sprime = rho * (Quaternion::real(-sn) + ui * c);
        const Quaternion ds_i = -1.0 * (sprime * ui);
        return fueter_kernel(s, q) * ds_i * f(s);
      },
      true);
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (!is_finite(vals[k]))
      throw NonFiniteSample("non-finite contour sample at node " + std::to_string(k));
  const Quaternion value = (1.0 / n_nodes) * detail::pairwise_sum(vals);

  TransformReport rep = make_report(value, laplacian_fd(f, q, default_laplacian_scheme()));
  rep.n_nodes = n_nodes;
  rep.contour_radius = rho;
  return rep;
}

}  // namespace bergman
