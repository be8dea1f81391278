#include "gruss/space.hpp"

#include <cmath>
#include <utility>

namespace gruss {

SpaceMetric::SpaceMetric(std::vector<double> weights)
    : weights_(std::move(weights)), mass_(0.0) {
  if (weights_.empty()) throw EmptySpace("a space needs at least one point");
  for (double w : weights_) {
    if (!std::isfinite(w) || w <= 0.0)
      throw InputError("metric weights must be finite and positive");
    mass_ += w;
  }
  if (!std::isfinite(mass_)) throw InputError("metric total mass overflows");
}

MetricPtr make_metric(std::vector<double> weights) {
  return std::make_shared<SpaceMetric>(std::move(weights));
}

Vector::Vector(MetricPtr metric, std::vector<Scalar> coords)
    : metric_(std::move(metric)), coords_(std::move(coords)) {
  if (!metric_) throw EmptySpace("vector needs a metric");
  if (coords_.size() != metric_->dim())
    throw MetricMismatch("coordinate count does not match the metric dimension");
  for (const Scalar& c : coords_)
    if (!is_finite(c)) throw InputError("vector coordinates must be finite");
}

bool same_metric(const Vector& a, const Vector& b) noexcept {
  if (a.metric() == b.metric()) return true;
  const auto wa = a.metric()->weights();
  const auto wb = b.metric()->weights();
  if (wa.size() != wb.size()) return false;
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] != wb[i]) return false;
  return true;
}

namespace {
void require_same_metric(const Vector& a, const Vector& b) {
  if (!same_metric(a, b))
    throw MetricMismatch("operands live in different spaces");
}
}  // namespace

Scalar inner(const Vector& x, const Vector& y) {
  require_same_metric(x, y);
  const auto w = x.metric()->weights();
  const auto xs = x.coords();
  const auto ys = y.coords();
  Scalar acc(0.0, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * xs[i] * std::conj(ys[i]);
  return acc;
}

double norm_sq(const Vector& v) {
  const auto w = v.metric()->weights();
  const auto cs = v.coords();
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * abs_sq(cs[i]);
  return acc;
}

double norm(const Vector& v) { return std::sqrt(norm_sq(v)); }

Vector operator+(const Vector& a, const Vector& b) {
  require_same_metric(a, b);
  std::vector<Scalar> out(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return Vector(a.metric(), std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_metric(a, b);
  std::vector<Scalar> out(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return Vector(a.metric(), std::move(out));
}

Vector operator*(const Scalar& c, const Vector& v) {
  std::vector<Scalar> out(v.coords().begin(), v.coords().end());
  for (Scalar& s : out) s *= c;
  return Vector(v.metric(), std::move(out));
}

void require_unit(const Vector& e) {
  const double n = norm(e);
  if (std::abs(n - 1.0) > kUnitNormTolerance) throw NotUnitVector(n);
}

Vector normalized(const Vector& v) {
  const double n = norm(v);
  if (n == 0.0) throw ZeroVector("cannot normalize the zero vector");
  return Scalar(1.0 / n) * v;
}

void require_real(const Scalar& s) {
  if (std::abs(s.imag()) > kImagTolerance)
    throw InputError("real mode rejects values with imaginary part " +
                     std::to_string(s.imag()));
}

void require_real(const Vector& v) {
  for (const Scalar& c : v.coords()) require_real(c);
}

}  // namespace gruss
