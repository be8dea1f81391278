#include "gruss/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "gruss/disk.hpp"

namespace gruss {

MetricPtr mean_metric(std::size_t n) {
  if (n == 0) throw EmptySpace("mean metric needs at least one point");
  return make_metric(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

MetricPtr weighted_metric(std::vector<double> weights, bool normalize_mass) {
  if (normalize_mass) {
    double mass = 0.0;
    for (double w : weights) mass += w;
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw InputError("weights must have positive finite total mass");
    for (double& w : weights) w /= mass;
  }
  return make_metric(std::move(weights));
}

QuadratureGrid quadrature_metric(const GridSpec& spec) {
  if (spec.n == 0) throw EmptySpace("quadrature grid needs at least one subinterval");
  if (!std::isfinite(spec.a) || !std::isfinite(spec.b))
    throw InputError("grid endpoints must be finite");
  if (!(spec.a < spec.b)) throw InputError("grid requires a < b");
  const double len = spec.b - spec.a;
  const double h = len / static_cast<double>(spec.n);
  std::vector<double> nodes;
  std::vector<double> w;
  switch (spec.rule) {
    case QuadRule::midpoint:
      nodes.reserve(spec.n);
      w.assign(spec.n, h);
      for (std::size_t i = 0; i < spec.n; ++i)
        nodes.push_back(spec.a + (static_cast<double>(i) + 0.5) * h);
      break;
    case QuadRule::trapezoid:
      nodes.reserve(spec.n + 1);
      w.assign(spec.n + 1, h);
      w.front() = 0.5 * h;
      w.back() = 0.5 * h;
      for (std::size_t i = 0; i <= spec.n; ++i)
        nodes.push_back(spec.a + static_cast<double>(i) * h);
      break;
    case QuadRule::simpson:
      if (spec.n % 2 != 0)
        throw BadRule("composite simpson needs an odd node count (even subinterval count)");
      nodes.reserve(spec.n + 1);
      w.assign(spec.n + 1, 0.0);
      for (std::size_t i = 0; i <= spec.n; ++i) {
        nodes.push_back(spec.a + static_cast<double>(i) * h);
        w[i] = (i == 0 || i == spec.n) ? h / 3.0 : (i % 2 == 1 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
      }
      break;
  }
  // unit total mass, so the constant 1 is a unit vector
  for (double& wi : w) wi /= len;
  return {make_metric(std::move(w)), std::move(nodes)};
}

SampledFunction normalize_unit(const SampledFunction& h, const SpaceMetric& metric) {
  if (h.size() != metric.dim())
    throw MetricMismatch("sample length does not match the metric dimension");
  double nsq = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!is_finite(h[i])) throw InputError("non-finite sample value");
    nsq += metric.weight(i) * abs_sq(h[i]);
  }
  if (nsq == 0.0) throw ZeroVector("cannot normalize the zero function");
  const double inv = 1.0 / std::sqrt(nsq);
  SampledFunction out(h);
  for (Scalar& c : out) c *= inv;
  return out;
}

PointwiseCheck pointwise_condition(std::span<const Scalar> f, std::span<const Scalar> h,
                                   const Bracket& br, double tol) {
  if (f.size() != h.size())
    throw MetricMismatch("pointwise condition needs equal sample lengths");
  if (f.empty()) throw EmptySpace("pointwise condition on no samples");
  const double r = br.radius();
  if (tol < 0.0) tol = kIdentityTolerance * std::max(1.0, r * r);
  const Scalar mid = br.mid();
  PointwiseCheck out;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_finite(f[i]) || !is_finite(h[i]))
      throw InputError("non-finite sample value");
    const double v = std::abs(f[i] - mid * h[i]) - r * std::abs(h[i]);
    if (v > worst) {
      worst = v;
      out.worst_index = i;
    }
  }
  out.worst_violation = worst;
  out.holds = worst <= tol;
  return out;
}

BoundReport integral_gruss(const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& h, const Bracket& brf,
                           const Bracket& brg, const MetricPtr& metric, bool strict,
                           double tol) {
  const Vector x(metric, f);
  const Vector y(metric, g);
  const Vector e(metric, h);
  return evaluate_gruss(x, y, e, brf, brg, strict, tol);
}

BoundReport mean_gruss(const SampledFunction& f, const SampledFunction& g,
                       const Bracket& brf, const Bracket& brg, const MetricPtr& metric,
                       bool strict, double tol) {
  const SampledFunction ones(metric->dim(), Scalar(1.0));
  return integral_gruss(f, g, normalize_unit(ones, *metric), brf, brg, metric, strict, tol);
}

CompanionReport integral_companion(const SampledFunction& f, const SampledFunction& g,
                                   const SampledFunction& h, const Bracket& br,
                                   CompanionSign sign, const MetricPtr& metric,
                                   Field field, bool strict, double tol) {
  const Vector x(metric, f);
  const Vector y(metric, g);
  const Vector e(metric, h);
  CompanionReport rep = evaluate_companion(x, y, e, br, field, false, tol);
  if (strict) {
    if (sign != CompanionSign::minus && !rep.cond_plus.satisfied)
      throw ConditionViolated(rep.cond_plus);
    if (sign != CompanionSign::plus && !rep.cond_minus.satisfied)
      throw ConditionViolated(rep.cond_minus);
  }
  return rep;
}

EstimatedBracket estimate_bracket(std::span<const Scalar> values, Field field) {
  if (values.empty()) throw EmptySpace("cannot estimate a bracket from no data");
  for (const Scalar& v : values)
    if (!is_finite(v)) throw InputError("non-finite sample value");
  const Bracket br = [&] {
    if (field == Field::real) {
      double lo = values[0].real();
      double hi = lo;
      for (const Scalar& v : values) {
        require_real(v);
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
      }
      return Bracket(Scalar(lo), Scalar(hi));
    }
    const Disk d = smallest_enclosing_disk(values);
    return Bracket::from_center(d.center, d.radius);
  }();
  double slack = -std::numeric_limits<double>::infinity();
  const Scalar mid = br.mid();
  const double r = br.radius();
  for (const Scalar& v : values) slack = std::max(slack, std::abs(v - mid) - r);
  return {br, slack};
}

}  // namespace gruss
