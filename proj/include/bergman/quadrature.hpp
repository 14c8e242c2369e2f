#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bergman/quaternion.hpp"
#include "bergman/slice_function.hpp"

namespace bergman {

enum class RuleDomain { Disk, HalfDisk, HalfPlane, UpperHalfPlane };

enum class Weight { None, Rho, Delta };

/// Tensor rule on a planar slice region. Disk rules are Gauss-Legendre in
/// radius (weighted by r) times midpoint-offset angles, so the angular part
/// is spectral for periodic integrands and no node lands on the real axis
/// when n_theta is even. Half-plane rules compress nodes exponentially
/// toward Re = 0 and toward the axis.
struct QuadratureRule {
  RuleDomain domain = RuleDomain::Disk;
  double extent = 1.0;  // disk radius, or half-plane truncation
  int n_r = 0;
  int n_theta = 0;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  double area() const;
};

/// Builds a rule. `extent` is the disk radius rho (0 < rho <= 1) or the
/// half-plane truncation R > 0. Requires n_r >= 1 and n_theta >= 4.
QuadratureRule build_rule(RuleDomain domain, double extent, int n_r, int n_theta);

/// Truncation radius R such that the half-plane tail of an integrand decaying
/// like |q|^{-decay} (decay > 2) stays below `tail_bound`:
///   integral over |q| > R of |q|^{-p} is pi R^{2-p} / (p-2).
double halfplane_truncation_for_decay(double decay, double tail_bound);

using PlanarQuatFn = std::function<Quaternion(double, double)>;
using PlanarRealFn = std::function<double(double, double)>;

/// sum_k w_k f(x_k, y_k) with a deterministic pairwise reduction per
/// component. Node evaluation runs under OpenMP when available; the result
/// is bit-identical to the serial path.
Quaternion integrate_slice(const PlanarQuatFn& f, const QuadratureRule& rule);
Quaternion integrate_slice_serial(const PlanarQuatFn& f, const QuadratureRule& rule);

double integrate_slice_real(const PlanarRealFn& f, const QuadratureRule& rule);
double integrate_slice_real_serial(const PlanarRealFn& f, const QuadratureRule& rule);

/// Rule parameters for slice integrals over the built-in domains.
struct SliceRuleParams {
  int n_r = 64;
  int n_theta = 128;
  double radius = 1.0;       // unit-ball slice: disk radius (exhaustion uses < 1)
  double truncation = 50.0;  // half-space slice truncation R
  bool check_divergence = false;
};

/// The rule used for slice integrals on `dom` (upper half only when half).
QuadratureRule slice_rule(Domain dom, bool half, const SliceRuleParams& p);

/// Inner product on a slice: integral of conj(f) g w over the slice of
/// unit_i, or over the upper half slice when half = true (intrinsic inputs
/// then need the caller's x2 Re reduction). With check_divergence set, the
/// value is recomputed at doubled resolution and a relative jump above 10%
/// raises DivergenceSuspected; the refined value is returned otherwise.
Quaternion inner_product(const SliceFunction& f, const SliceFunction& g, Domain dom,
                         const UnitImaginary& unit_i, Weight w, bool half,
                         const SliceRuleParams& p);

/// Real part of <f,f>; the slice norm is the square root.
double slice_norm_sq(const SliceFunction& f, Domain dom, const UnitImaginary& unit_i,
                     Weight w, bool half, const SliceRuleParams& p);

/// Integral of |f|^2 Im(z)^2 over the full slice.
double weighted_slice_norm_sq(const SliceFunction& f, Domain dom,
                              const UnitImaginary& unit_i, const SliceRuleParams& p);

/// Volume norm squared through the slice reduction: 4*pi times the integral
/// of |f|^2 y^2 over the upper half slice. For the weight 1/|Im q|^2 the
/// same reduction drops the y^2 factor (delta variant below); the volume
/// integral is never sampled near the singular axis.
double volume_norm_sq_reduced(const SliceFunction& f, Domain dom,
                              const UnitImaginary& unit_i, const SliceRuleParams& p);
double delta_volume_norm_sq_reduced(const SliceFunction& f, Domain dom,
                                    const UnitImaginary& unit_i, const SliceRuleParams& p);

struct McResult {
  double estimate = 0.0;
  double stderr_est = 0.0;
  std::int64_t accepted = 0;
  std::int64_t proposals = 0;
};

/// Monte Carlo volume integral of |f|^2: uniform rejection sampling in the
/// unit ball (or the truncated half-space box (0,R) x (-R,R)^3), mean of
/// |f|^2 times the sampling volume. Deterministic for a given seed: the
/// sample stream is split into fixed blocks and the block partials are
/// reduced pairwise, so the result does not depend on the thread count.
/// Requires samples >= 10^4 proposals.
McResult volume_integral_mc(const QuatFn& f, Domain dom, std::int64_t samples,
                            std::uint64_t seed, double truncation = 50.0);
McResult volume_integral_mc_serial(const QuatFn& f, Domain dom, std::int64_t samples,
                                   std::uint64_t seed, double truncation = 50.0);
McResult volume_integral_mc(const SliceFunction& f, Domain dom, std::int64_t samples,
                            std::uint64_t seed, double truncation = 50.0);

}  // namespace bergman
