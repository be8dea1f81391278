#pragma once

#include <cmath>

#include "gruss/errors.hpp"
#include "gruss/scalar.hpp"

namespace gruss {

// Endpoint pair (lo, hi) over the ground field. Every bound depends only on
// the midpoint and the half-diameter |hi - lo| / 2, so the pair is unordered
// and, over C, only the disk spanned by the endpoints is observable.
class Bracket {
 public:
  Bracket(Scalar lo, Scalar hi) : lo_(lo), hi_(hi) {
    if (!is_finite(lo) || !is_finite(hi))
      throw InputError("bracket endpoints must be finite");
  }

  // Disk form: diameter of length 2*radius through mid along the real axis.
  static Bracket from_center(Scalar mid, double radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius))
      throw InputError("bracket radius must be finite and nonnegative");
    return Bracket(mid - radius, mid + radius);
  }

  Scalar lo() const noexcept { return lo_; }
  Scalar hi() const noexcept { return hi_; }
  Scalar mid() const noexcept { return 0.5 * (lo_ + hi_); }
  double diameter() const noexcept { return std::abs(hi_ - lo_); }
  double radius() const noexcept { return 0.5 * diameter(); }
  bool degenerate() const noexcept { return lo_ == hi_; }

 private:
  Scalar lo_;
  Scalar hi_;
};

inline Bracket scaled(const Scalar& factor, const Bracket& br) {
  return Bracket(factor * br.lo(), factor * br.hi());
}

}  // namespace gruss
