#include "bergman/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/parallel.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;

// Exponent of the node-compression map used on half-plane rules.
constexpr double kCompression = 8.0;

void gauss_legendre(int n, double a, double b, std::vector<double>& xs,
                    std::vector<double>& ws) {
  gsl_integration_glfixed_table* t =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n));
  xs.resize(static_cast<std::size_t>(n));
  ws.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double xi = 0.0, wi = 0.0;
    gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &xi, &wi, t);
    xs[static_cast<std::size_t>(i)] = xi;
    ws[static_cast<std::size_t>(i)] = wi;
  }
  gsl_integration_glfixed_table_free(t);
}

// Gauss-Legendre on (0, L) after u -> L (e^{au} - 1)/(e^a - 1), which packs
// nodes toward 0.
void compressed_axis(int n, double length, std::vector<double>& xs,
                     std::vector<double>& ws) {
  std::vector<double> us, wu;
  gauss_legendre(n, 0.0, 1.0, us, wu);
  xs.resize(us.size());
  ws.resize(us.size());
  const double denom = std::expm1(kCompression);
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double e = std::exp(kCompression * us[i]);
    xs[i] = length * (e - 1.0) / denom;
    ws[i] = wu[i] * length * kCompression * e / denom;
  }
}

QuadratureRule build_polar(RuleDomain dom, double rho, int n_r, int n_theta) {
  QuadratureRule rule;
  rule.domain = dom;
  rule.extent = rho;
  rule.n_r = n_r;
  rule.n_theta = n_theta;

  std::vector<double> rs, wr;
  gauss_legendre(n_r, 0.0, rho, rs, wr);

  const bool half = (dom == RuleDomain::HalfDisk);
  const double span = half ? kPi : 2.0 * kPi;
  const double dtheta = span / n_theta;

  rule.xs.reserve(static_cast<std::size_t>(n_r) * n_theta);
  rule.ys.reserve(rule.xs.capacity());
  rule.weights.reserve(rule.xs.capacity());
  for (int ir = 0; ir < n_r; ++ir) {
    const double r = rs[static_cast<std::size_t>(ir)];
    const double wrad = wr[static_cast<std::size_t>(ir)] * r;
    for (int it = 0; it < n_theta; ++it) {
      const double theta = dtheta * (it + 0.5);  // midpoint offset keeps y != 0
      rule.xs.push_back(r * std::cos(theta));
      rule.ys.push_back(r * std::sin(theta));
      rule.weights.push_back(wrad * dtheta);
    }
  }
  return rule;
}

QuadratureRule build_halfplane(RuleDomain dom, double trunc, int n_r, int n_theta) {
  QuadratureRule rule;
  rule.domain = dom;
  rule.extent = trunc;
  rule.n_r = n_r;
  rule.n_theta = n_theta;

  std::vector<double> xs, wx;
  compressed_axis(n_r, trunc, xs, wx);

  // y axis: compressed toward 0 from each side, so no node sits on the axis.
  std::vector<double> ys, wy;
  if (dom == RuleDomain::UpperHalfPlane) {
    compressed_axis(n_theta, trunc, ys, wy);
  } else {
    const int n_up = n_theta - n_theta / 2;
    const int n_lo = n_theta / 2;
    std::vector<double> yu, wu, yl, wl;
    compressed_axis(n_up, trunc, yu, wu);
    compressed_axis(n_lo, trunc, yl, wl);
    ys = yu;
    wy = wu;
    for (std::size_t i = 0; i < yl.size(); ++i) {
      ys.push_back(-yl[i]);
      wy.push_back(wl[i]);
    }
  }

  rule.xs.reserve(xs.size() * ys.size());
  rule.ys.reserve(rule.xs.capacity());
  rule.weights.reserve(rule.xs.capacity());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      rule.xs.push_back(xs[i]);
      rule.ys.push_back(ys[j]);
      rule.weights.push_back(wx[i] * wy[j]);
    }
  return rule;
}

Quaternion integrate_impl(const PlanarQuatFn& f, const QuadratureRule& rule, bool parallel) {
  std::vector<Quaternion> vals;
  detail::fill_indexed(
      vals, rule.size(),
      [&](std::size_t k) { return rule.weights[k] * f(rule.xs[k], rule.ys[k]); }, parallel);
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (!is_finite(vals[k]))
      throw NonFiniteSample("non-finite integrand at node " + std::to_string(k));
  return detail::pairwise_sum(vals);
}

double integrate_real_impl(const PlanarRealFn& f, const QuadratureRule& rule, bool parallel) {
  std::vector<double> vals;
  detail::fill_indexed(
      vals, rule.size(),
      [&](std::size_t k) { return rule.weights[k] * f(rule.xs[k], rule.ys[k]); }, parallel);
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (!std::isfinite(vals[k]))
      throw NonFiniteSample("non-finite integrand at node " + std::to_string(k));
  return detail::pairwise_sum(vals);
}

void check_delta_nodes(const QuadratureRule& rule) {
  for (double y : rule.ys)
    if (std::fabs(y) < 1e-14)
      throw BadParameter("delta weight needs a rule with no nodes on the real axis");
}

double weight_at(Weight w, double y) {
  switch (w) {
    case Weight::None: return 1.0;
    case Weight::Rho: return y * y;
    case Weight::Delta: return 1.0 / (y * y);
  }
  return 1.0;
}

}  // namespace

double QuadratureRule::area() const {
  switch (domain) {
    case RuleDomain::Disk: return kPi * extent * extent;
    case RuleDomain::HalfDisk: return 0.5 * kPi * extent * extent;
    case RuleDomain::HalfPlane: return 2.0 * extent * extent;
    case RuleDomain::UpperHalfPlane: return extent * extent;
  }
  return 0.0;
}

QuadratureRule build_rule(RuleDomain domain, double extent, int n_r, int n_theta) {
  if (n_r < 1) throw BadParameter("n_r must be >= 1");
  if (n_theta < 4) throw BadParameter("n_theta must be >= 4");
  switch (domain) {
    case RuleDomain::Disk:
    case RuleDomain::HalfDisk:
      if (!(extent > 0.0 && extent <= 1.0))
        throw BadParameter("disk radius must lie in (0, 1]");
      return build_polar(domain, extent, n_r, n_theta);
    case RuleDomain::HalfPlane:
    case RuleDomain::UpperHalfPlane:
      if (!(extent > 0.0)) throw BadParameter("half-plane truncation must be positive");
      return build_halfplane(domain, extent, n_r, n_theta);
  }
  throw BadParameter("unknown rule domain");
}

double halfplane_truncation_for_decay(double decay, double tail_bound) {
  if (!(decay > 2.0)) throw BadParameter("tail bound needs a decay exponent above 2");
  if (!(tail_bound > 0.0)) throw BadParameter("tail bound must be positive");
  return std::pow(kPi / ((decay - 2.0) * tail_bound), 1.0 / (decay - 2.0));
}

Quaternion integrate_slice(const PlanarQuatFn& f, const QuadratureRule& rule) {
  return integrate_impl(f, rule, true);
}

Quaternion integrate_slice_serial(const PlanarQuatFn& f, const QuadratureRule& rule) {
  return integrate_impl(f, rule, false);
}

double integrate_slice_real(const PlanarRealFn& f, const QuadratureRule& rule) {
  return integrate_real_impl(f, rule, true);
}

double integrate_slice_real_serial(const PlanarRealFn& f, const QuadratureRule& rule) {
  return integrate_real_impl(f, rule, false);
}

QuadratureRule slice_rule(Domain dom, bool half, const SliceRuleParams& p) {
  if (dom == Domain::UnitBall)
    return build_rule(half ? RuleDomain::HalfDisk : RuleDomain::Disk, p.radius, p.n_r,
                      p.n_theta);
  return build_rule(half ? RuleDomain::UpperHalfPlane : RuleDomain::HalfPlane, p.truncation,
                    p.n_r, p.n_theta);
}

Quaternion inner_product(const SliceFunction& f, const SliceFunction& g, Domain dom,
                         const UnitImaginary& unit_i, Weight w, bool half,
                         const SliceRuleParams& p) {
  auto compute = [&](int nr, int nt) {
    SliceRuleParams q = p;
    q.n_r = nr;
    q.n_theta = nt;
    const QuadratureRule rule = slice_rule(dom, half, q);
    if (w == Weight::Delta) check_delta_nodes(rule);
    return integrate_slice(
        [&](double x, double y) {
          const Quaternion pt = embed(Complex{x, y}, unit_i);
          return (conj(f(pt)) * g(pt)) * weight_at(w, y);
        },
        rule);
  };
  const Quaternion v1 = compute(p.n_r, p.n_theta);
  if (!p.check_divergence) return v1;
  const Quaternion v2 = compute(2 * p.n_r, 2 * p.n_theta);
  const double jump = abs(v2 - v1);
  if (jump > 0.1 * std::max(abs(v2), 1e-30))
    throw DivergenceSuspected("value moved " + std::to_string(jump) +
                              " under refinement doubling");
  return v2;
}

double slice_norm_sq(const SliceFunction& f, Domain dom, const UnitImaginary& unit_i,
                     Weight w, bool half, const SliceRuleParams& p) {
  auto compute = [&](int nr, int nt) {
    SliceRuleParams q = p;
    q.n_r = nr;
    q.n_theta = nt;
    const QuadratureRule rule = slice_rule(dom, half, q);
    if (w == Weight::Delta) check_delta_nodes(rule);
    return integrate_slice_real(
        [&](double x, double y) {
          return norm_sq(f(embed(Complex{x, y}, unit_i))) * weight_at(w, y);
        },
        rule);
  };
  const double v1 = compute(p.n_r, p.n_theta);
  if (!p.check_divergence) return v1;
  const double v2 = compute(2 * p.n_r, 2 * p.n_theta);
  const double jump = std::fabs(v2 - v1);
  if (jump > 0.1 * std::max(std::fabs(v2), 1e-30))
    throw DivergenceSuspected("norm moved " + std::to_string(jump) +
                              " under refinement doubling");
  return v2;
}

double weighted_slice_norm_sq(const SliceFunction& f, Domain dom,
                              const UnitImaginary& unit_i, const SliceRuleParams& p) {
  return slice_norm_sq(f, dom, unit_i, Weight::Rho, false, p);
}

double volume_norm_sq_reduced(const SliceFunction& f, Domain dom,
                              const UnitImaginary& unit_i, const SliceRuleParams& p) {
  const QuadratureRule rule = slice_rule(dom, true, p);
  const double planar = integrate_slice_real(
      [&](double x, double y) {
        return norm_sq(f(embed(Complex{x, y}, unit_i))) * y * y;
      },
      rule);
  return 4.0 * kPi * planar;
}

double delta_volume_norm_sq_reduced(const SliceFunction& f, Domain dom,
                                    const UnitImaginary& unit_i, const SliceRuleParams& p) {
  const QuadratureRule rule = slice_rule(dom, true, p);
  const double planar = integrate_slice_real(
      [&](double x, double y) { return norm_sq(f(embed(Complex{x, y}, unit_i))); }, rule);
  return 4.0 * kPi * planar;
}

namespace {

struct McPartial {
  double sum = 0.0;
  double sumsq = 0.0;
  std::int64_t count = 0;

  McPartial operator+(const McPartial& o) const {
    return {sum + o.sum, sumsq + o.sumsq, count + o.count};
  }
};

constexpr std::int64_t kMcBlock = 1 << 16;

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

McPartial mc_block(const QuatFn& f, Domain dom, std::uint64_t seed, std::int64_t block,
                   std::int64_t n, double trunc) {
  std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(block)};
  std::mt19937_64 rng(sseq);
  McPartial part;
  for (std::int64_t t = 0; t < n; ++t) {
    const double u0 = unit_double(rng);
    const double u1 = unit_double(rng);
    const double u2 = unit_double(rng);
    const double u3 = unit_double(rng);
    Quaternion q;
    if (dom == Domain::UnitBall) {
      q = Quaternion{2.0 * u0 - 1.0, 2.0 * u1 - 1.0, 2.0 * u2 - 1.0, 2.0 * u3 - 1.0};
      if (norm_sq(q) >= 1.0) continue;
    } else {
      q = Quaternion{trunc * u0, trunc * (2.0 * u1 - 1.0), trunc * (2.0 * u2 - 1.0),
                     trunc * (2.0 * u3 - 1.0)};
      if (!(q.w > 0.0)) continue;
    }
    const double v = norm_sq(f(q));
    part.sum += v;
    part.sumsq += v * v;
    part.count += 1;
  }
  return part;
}

McResult mc_impl(const QuatFn& f, Domain dom, std::int64_t samples, std::uint64_t seed,
                 double trunc, bool parallel) {
  if (samples < 10000) throw BadParameter("Monte Carlo needs at least 10^4 samples");
  const std::int64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
  std::vector<McPartial> parts;
  detail::fill_indexed(
      parts, static_cast<std::size_t>(blocks),
      [&](std::size_t b) {
        const std::int64_t lo = static_cast<std::int64_t>(b) * kMcBlock;
        const std::int64_t n = std::min<std::int64_t>(kMcBlock, samples - lo);
        return mc_block(f, dom, seed, static_cast<std::int64_t>(b), n, trunc);
      },
      parallel);
  const McPartial total = detail::pairwise_sum(parts);
  if (total.count == 0) throw BadParameter("no accepted Monte Carlo samples");

  const double volume =
      dom == Domain::UnitBall ? 0.5 * kPi * kPi : 8.0 * trunc * trunc * trunc * trunc;
  const double n = static_cast<double>(total.count);
  const double mean = total.sum / n;
  const double var = std::max(0.0, total.sumsq / n - mean * mean);
  McResult out;
  out.estimate = volume * mean;
  out.stderr_est = volume * std::sqrt(var / n);
  out.accepted = total.count;
  out.proposals = samples;
  return out;
}

}  // namespace

McResult volume_integral_mc(const QuatFn& f, Domain dom, std::int64_t samples,
                            std::uint64_t seed, double truncation) {
  return mc_impl(f, dom, samples, seed, truncation, true);
}

McResult volume_integral_mc_serial(const QuatFn& f, Domain dom, std::int64_t samples,
                                   std::uint64_t seed, double truncation) {
  return mc_impl(f, dom, samples, seed, truncation, false);
}

McResult volume_integral_mc(const SliceFunction& f, Domain dom, std::int64_t samples,
                            std::uint64_t seed, double truncation) {
  return volume_integral_mc([&f](const Quaternion& q) { return f(q); }, dom, samples, seed,
                            truncation);
}

}  // namespace bergman
