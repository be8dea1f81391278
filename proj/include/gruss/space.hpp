#pragma once

#include <memory>
#include <span>
#include <vector>

#include "gruss/errors.hpp"
#include "gruss/scalar.hpp"

namespace gruss {

// Positive point masses w_i defining <x,y> = sum_i w_i x_i conj(y_i).
// One type covers weighted K^n, the 1/n mean space, and quadrature L2.
class SpaceMetric {
 public:
  explicit SpaceMetric(std::vector<double> weights);

  std::size_t dim() const noexcept { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  double total_mass() const noexcept { return mass_; }

 private:
  std::vector<double> weights_;
  double mass_;
};

using MetricPtr = std::shared_ptr<const SpaceMetric>;

MetricPtr make_metric(std::vector<double> weights);

// Coordinates bound to the space they are measured in.
class Vector {
 public:
  Vector(MetricPtr metric, std::vector<Scalar> coords);

  const MetricPtr& metric() const noexcept { return metric_; }
  std::span<const Scalar> coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  Scalar operator[](std::size_t i) const { return coords_[i]; }

 private:
  MetricPtr metric_;
  std::vector<Scalar> coords_;
};

// Same object, or equal weights element for element.
bool same_metric(const Vector& a, const Vector& b) noexcept;

Scalar inner(const Vector& x, const Vector& y);  // MetricMismatch if spaces differ
double norm_sq(const Vector& v);
double norm(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

// ||e|| must sit within kUnitNormTolerance of 1; throws NotUnitVector.
void require_unit(const Vector& e);
// v / ||v||; throws ZeroVector on the zero vector.
Vector normalized(const Vector& v);
// Imaginary parts above kImagTolerance are rejected with InputError.
void require_real(const Scalar& s);
void require_real(const Vector& v);

}  // namespace gruss
