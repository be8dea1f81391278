#pragma once

#include <cmath>
#include <complex>

namespace gruss {

// Ground field element. Real-mode data keeps the imaginary part at zero.
using Scalar = std::complex<double>;

enum class Field { real, complex };

// ||e|| may drift from 1 by at most this much before inputs are rejected.
inline constexpr double kUnitNormTolerance = 1e-9;
// Exact algebraic identities are asserted at this relative scale.
inline constexpr double kIdentityTolerance = 1e-12;
// Certified inequalities accumulate rounding; they get the looser rung.
inline constexpr double kInequalityTolerance = 1e-9;
// Real-mode inputs may carry at most this much imaginary contamination.
inline constexpr double kImagTolerance = 1e-12;

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Scalar& s) {
  return std::isfinite(s.real()) && std::isfinite(s.imag());
}

// |s|^2 without the sqrt/overflow dance of std::norm-on-abs.
inline double abs_sq(const Scalar& s) {
  return s.real() * s.real() + s.imag() * s.imag();
}

}  // namespace gruss
