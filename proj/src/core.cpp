#include "gruss/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gruss {

namespace {

double resolve_tolerance(const Bracket& br, double tol) {
  return tol < 0.0 ? default_condition_tolerance(br) : tol;
}

double refined_from_conditions(double classic, const ConditionReport& cx,
                               const ConditionReport& cy) {
  // tiny negative radicands are rounding noise once the condition passed
  const double qx = std::max(0.0, cx.quad_value);
  const double qy = std::max(0.0, cy.quad_value);
  return std::max(0.0, classic - std::sqrt(qx) * std::sqrt(qy));
}

}  // namespace

ConditionViolated::ConditionViolated(const ConditionReport& report)
    : Error("bracket condition violated: quadratic value " +
            std::to_string(report.quad_value) + ", norm slack " +
            std::to_string(report.norm_slack) + ", tolerance " +
            std::to_string(report.tolerance)),
      report_(report) {}

double default_condition_tolerance(const Bracket& br) {
  const double r = br.radius();
  return 1e-9 * std::max(1.0, r * r);
}

Scalar chebyshev_functional(const Vector& x, const Vector& y, const Vector& e) {
  require_unit(e);
  return inner(x, y) - inner(x, e) * inner(e, y);
}

double schwarz_gap(const Vector& x, const Vector& e) {
  require_unit(e);
  return std::max(0.0, norm_sq(x) - abs_sq(inner(x, e)));
}

ConditionReport condition_check(const Vector& x, const Vector& e, const Bracket& br,
                                double tol) {
  require_unit(e);
  const double t = resolve_tolerance(br, tol);
  const double r = br.radius();
  const double dist_sq = norm_sq(x - br.mid() * e);
  const double dist = std::sqrt(dist_sq);
  const double quad = inner(br.hi() * e - x, x - br.lo() * e).real();
  ConditionReport rep;
  rep.quad_value = quad;
  rep.norm_slack = r - dist;
  rep.equiv_residual = quad - (r * r - dist_sq);
  rep.tolerance = t;
  // A collapsed bracket pins x to lo*e; there the quadratic form degenerates
  // to -dist^2 and the distance itself is the meaningful residual.
  rep.satisfied = br.degenerate() ? dist <= t : quad >= -t;
  return rep;
}

double classic_bound(const Bracket& brx, const Bracket& bry) {
  return 0.25 * brx.diameter() * bry.diameter();
}

double refined_bound(const Vector& x, const Vector& y, const Vector& e,
                     const Bracket& brx, const Bracket& bry, double tol) {
  const ConditionReport cx = condition_check(x, e, brx, tol);
  if (!cx.satisfied) throw ConditionViolated(cx);
  const ConditionReport cy = condition_check(y, e, bry, tol);
  if (!cy.satisfied) throw ConditionViolated(cy);
  return refined_from_conditions(classic_bound(brx, bry), cx, cy);
}

BoundReport evaluate_gruss(const Vector& x, const Vector& y, const Vector& e,
                           const Bracket& brx, const Bracket& bry, bool strict,
                           double tol) {
  const ConditionReport cx = condition_check(x, e, brx, tol);
  const ConditionReport cy = condition_check(y, e, bry, tol);
  if (strict) {
    if (!cx.satisfied) throw ConditionViolated(cx);
    if (!cy.satisfied) throw ConditionViolated(cy);
  }
  BoundReport rep;
  rep.functional = chebyshev_functional(x, y, e);
  rep.abs_functional = std::abs(rep.functional);
  rep.classic_bound = classic_bound(brx, bry);
  rep.refined_bound = refined_from_conditions(rep.classic_bound, cx, cy);
  rep.slack_classic = rep.classic_bound - rep.abs_functional;
  rep.slack_refined = rep.refined_bound - rep.abs_functional;
  rep.cond_x = cx;
  rep.cond_y = cy;
  rep.certified = cx.satisfied && cy.satisfied;
  return rep;
}

double companion_value(const Vector& x, const Vector& y, const Vector& e) {
  return chebyshev_functional(x, y, e).real();
}

CompanionReport evaluate_companion(const Vector& x, const Vector& y, const Vector& e,
                                   const Bracket& br, Field field, bool strict,
                                   double tol) {
  if (field == Field::real) {
    require_real(x);
    require_real(y);
    require_real(e);
    require_real(br.lo());
    require_real(br.hi());
  }
  const Scalar half(0.5);
  const Vector mid_sum = half * (x + y);
  const Vector mid_diff = half * (x - y);
  const ConditionReport cp = condition_check(mid_sum, e, br, tol);
  const ConditionReport cm = condition_check(mid_diff, e, br, tol);
  if (strict && !cp.satisfied && !cm.satisfied) throw ConditionViolated(cp);
  const Scalar t = chebyshev_functional(x, y, e);
  CompanionReport rep;
  rep.re_functional = t.real();
  rep.abs_functional = std::abs(t);
  rep.bound = 0.25 * br.diameter() * br.diameter();
  rep.cond_plus = cp;
  rep.cond_minus = cm;
  rep.upper_certified = cp.satisfied;
  rep.lower_certified = cm.satisfied;
  rep.abs_certified = cp.satisfied && cm.satisfied;
  rep.real_abs_certified = rep.abs_certified && field == Field::real;
  rep.slack_upper = rep.bound - rep.re_functional;
  rep.slack_abs = rep.bound - std::abs(rep.re_functional);
  rep.midpoint_gap = schwarz_gap(mid_sum, e);
  return rep;
}

DualChain dual_chain(const Vector& x, const Vector& e, const Bracket& br, double tol) {
  require_unit(e);
  const double t = resolve_tolerance(br, tol);
  const Scalar p = inner(x, e);
  const double reversed = ((br.hi() - p) * std::conj(p - br.lo())).real();
  if (reversed > t)
    throw DualPreconditionViolated(
        "<x,e> lies strictly inside the bracket disk (condition value " +
        std::to_string(reversed) + " exceeds tolerance " + std::to_string(t) + ")");
  const Vector to_hi = x - br.hi() * e;
  const Vector to_lo = x - br.lo() * e;
  const double radicand = inner(to_hi, to_lo).real();
  const double scale = std::max({1.0, norm_sq(x), br.radius() * br.radius()});
  // By the decomposition identity the radicand equals gap - reversed >= -t.
  if (radicand < -(t + kIdentityTolerance * scale))
    throw InternalIdentityViolated("negative radicand " + std::to_string(radicand) +
                                   " in the reversed-condition chain");
  DualChain out;
  out.span_distance = norm(x - p * e);
  out.mixed_bound = std::sqrt(std::max(0.0, radicand));
  out.endpoint_rms = std::sqrt(0.5 * (norm_sq(to_hi) + norm_sq(to_lo)));
  return out;
}

double identity_residual(const Vector& x, const Vector& e, const Bracket& br) {
  require_unit(e);
  const Scalar p = inner(x, e);
  const double gap = norm_sq(x) - abs_sq(p);
  const double cross = ((br.hi() - p) * std::conj(p - br.lo())).real();
  const double quad = inner(x - br.hi() * e, x - br.lo() * e).real();
  return gap - cross - quad;
}

}  // namespace gruss
