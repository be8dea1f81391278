#pragma once

#include <span>
#include <vector>

#include "gruss/core.hpp"

namespace gruss {

// Function samples at the metric's points, one value per point.
using SampledFunction = std::vector<Scalar>;

enum class QuadRule { midpoint, trapezoid, simpson };

// n counts subintervals of [a, b]: midpoint uses n nodes, trapezoid and
// simpson use n + 1 (simpson needs n even, i.e. an odd node count).
struct GridSpec {
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 0;
  QuadRule rule = QuadRule::midpoint;
};

struct QuadratureGrid {
  MetricPtr metric;           // weights normalized to total mass 1
  std::vector<double> nodes;
};

// Uniform weights 1/n: the constant 1 is a unit vector.
MetricPtr mean_metric(std::size_t n);

// Arbitrary positive weights; optionally rescaled to total mass 1 so the
// constant 1 becomes a unit vector.
MetricPtr weighted_metric(std::vector<double> weights, bool normalize_mass = false);

QuadratureGrid quadrature_metric(const GridSpec& spec);

// h / ||h|| in the given metric; ZeroVector when ||h|| = 0.
SampledFunction normalize_unit(const SampledFunction& h, const SpaceMetric& metric);

struct PointwiseCheck {
  bool holds = false;
  std::size_t worst_index = 0;     // argmax of |f - mid*h| - radius*|h|
  double worst_violation = 0.0;
};

// Sufficient sample-by-sample form |f(s) - mid*h(s)| <= radius*|h(s)|; when it
// holds, the metric-level bracket condition follows for every metric.
PointwiseCheck pointwise_condition(std::span<const Scalar> f, std::span<const Scalar> h,
                                   const Bracket& br, double tol = -1.0);

BoundReport integral_gruss(const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& h, const Bracket& brf,
                           const Bracket& brg, const MetricPtr& metric,
                           bool strict = true, double tol = -1.0);

// integral_gruss against the normalized constant weight function.
BoundReport mean_gruss(const SampledFunction& f, const SampledFunction& g,
                       const Bracket& brf, const Bracket& brg, const MetricPtr& metric,
                       bool strict = true, double tol = -1.0);

// strict mode enforces the condition the sign asks for: plus needs (f+g)/2
// in the disk, minus needs (f-g)/2, both needs both.
CompanionReport integral_companion(const SampledFunction& f, const SampledFunction& g,
                                   const SampledFunction& h, const Bracket& br,
                                   CompanionSign sign, const MetricPtr& metric,
                                   Field field = Field::complex, bool strict = false,
                                   double tol = -1.0);

struct EstimatedBracket {
  Bracket bracket;
  double cover_slack = 0.0;  // max over samples of |v - mid| - radius; <= 0 up to rounding
};

// Real field: [min, max]. Complex field: smallest enclosing disk, reported as
// the real-axis diameter through its center.
EstimatedBracket estimate_bracket(std::span<const Scalar> values, Field field);

}  // namespace gruss
