#pragma once

#include "gruss/bracket.hpp"
#include "gruss/space.hpp"

namespace gruss {

// Diagnostics for the bracket condition Re<hi*e - x, x - lo*e> >= 0 together
// with its equivalent disk form ||x - mid*e|| <= radius.
struct ConditionReport {
  double quad_value = 0.0;      // Re<hi*e - x, x - lo*e>
  double norm_slack = 0.0;      // radius - ||x - mid*e||
  double equiv_residual = 0.0;  // quad_value - (radius^2 - ||x - mid*e||^2); 0 in exact arithmetic
  bool satisfied = false;
  double tolerance = 0.0;
};

class ConditionViolated : public Error {
 public:
  explicit ConditionViolated(const ConditionReport& report);
  const ConditionReport& report() const noexcept { return report_; }

 private:
  ConditionReport report_;
};

struct BoundReport {
  Scalar functional;            // <x,y> - <x,e><e,y>
  double abs_functional = 0.0;
  double classic_bound = 0.0;   // (1/4) |hi_x - lo_x| |hi_y - lo_y|
  double refined_bound = 0.0;   // classic minus the product of condition radicands' roots
  double slack_classic = 0.0;
  double slack_refined = 0.0;
  ConditionReport cond_x;
  ConditionReport cond_y;
  bool certified = false;       // both conditions passed
};

// Bounds on Re T from one bracket applied to the midpoint vectors (x+-y)/2.
struct CompanionReport {
  double re_functional = 0.0;
  double abs_functional = 0.0;
  double bound = 0.0;            // (1/4) |hi - lo|^2
  ConditionReport cond_plus;     // on (x+y)/2
  ConditionReport cond_minus;    // on (x-y)/2
  bool upper_certified = false;  // Re T <= bound
  bool lower_certified = false;  // Re T >= -bound
  bool abs_certified = false;    // |Re T| <= bound
  bool real_abs_certified = false;  // real field, both conditions: |T| <= bound
  double slack_upper = 0.0;
  double slack_abs = 0.0;
  double midpoint_gap = 0.0;     // schwarz_gap((x+y)/2, e); Re T never exceeds it
};

enum class CompanionSign { plus, minus, both };

// Distance-to-span chain under the reversed bracket condition:
// span_distance <= mixed_bound <= endpoint_rms.
struct DualChain {
  double span_distance = 0.0;  // ||x - <x,e>e||
  double mixed_bound = 0.0;    // sqrt(Re<x - hi*e, x - lo*e>)
  double endpoint_rms = 0.0;   // sqrt((||x - hi*e||^2 + ||x - lo*e||^2) / 2)
};

// 1e-9 * max(1, radius^2); ops below treat a negative tol argument as a
// request for this policy.
double default_condition_tolerance(const Bracket& br);

// T(x, y) = <x,y> - <x,e><e,y> for unit e.
Scalar chebyshev_functional(const Vector& x, const Vector& y, const Vector& e);

// ||x||^2 - |<x,e>|^2, clamped at 0; equals inf over scalars c of ||x - c*e||^2.
double schwarz_gap(const Vector& x, const Vector& e);

ConditionReport condition_check(const Vector& x, const Vector& e, const Bracket& br,
                                double tol = -1.0);

double classic_bound(const Bracket& brx, const Bracket& bry);

// Throws ConditionViolated when either bracket condition fails.
double refined_bound(const Vector& x, const Vector& y, const Vector& e,
                     const Bracket& brx, const Bracket& bry, double tol = -1.0);

// strict: condition failures throw; otherwise the report comes back with
// certified = false and the bounds computed formally.
BoundReport evaluate_gruss(const Vector& x, const Vector& y, const Vector& e,
                           const Bracket& brx, const Bracket& bry,
                           bool strict = true, double tol = -1.0);

double companion_value(const Vector& x, const Vector& y, const Vector& e);

// strict: throws when neither midpoint condition holds.
CompanionReport evaluate_companion(const Vector& x, const Vector& y, const Vector& e,
                                   const Bracket& br, Field field = Field::complex,
                                   bool strict = false, double tol = -1.0);

// Requires Re[(hi - <x,e>) conj(<x,e> - lo)] <= tol, i.e. <x,e> on or outside
// the bracket disk; throws DualPreconditionViolated otherwise.
DualChain dual_chain(const Vector& x, const Vector& e, const Bracket& br,
                     double tol = -1.0);

// (||x||^2 - |<x,e>|^2) - Re[(hi - <x,e>) conj(<x,e> - lo)] - Re<x - hi*e, x - lo*e>;
// identically zero, so the return value is pure rounding noise.
double identity_residual(const Vector& x, const Vector& e, const Bracket& br);

}  // namespace gruss
