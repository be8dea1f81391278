#include "gruss/disk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gruss/errors.hpp"

namespace gruss {

namespace {

Disk one_point(const Scalar& a) { return {a, 0.0}; }

Disk two_point(const Scalar& a, const Scalar& b) {
  const Scalar c = 0.5 * (a + b);
  // max of the two distances guards against rounding making one endpoint poke out
  return {c, std::max(std::abs(a - c), std::abs(b - c))};
}

Disk three_point(const Scalar& a, const Scalar& b, const Scalar& c) {
  const double ax = a.real(), ay = a.imag();
  const double bx = b.real(), by = b.imag();
  const double cx = c.real(), cy = c.imag();
  const double det = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double span = std::max({std::abs(a - b), std::abs(b - c), std::abs(c - a)});
  if (std::abs(det) > 1e-12 * span * span) {
    const double asq = ax * ax + ay * ay;
    const double bsq = bx * bx + by * by;
    const double csq = cx * cx + cy * cy;
    const Scalar center((asq * (by - cy) + bsq * (cy - ay) + csq * (ay - by)) / det,
                        (asq * (cx - bx) + bsq * (ax - cx) + csq * (bx - ax)) / det);
    const double r = std::max({std::abs(a - center), std::abs(b - center),
                               std::abs(c - center)});
    return {center, r};
  }
  // near-collinear: the diameter disk of the farthest pair covers the third
  const double ab = std::abs(a - b), bc = std::abs(b - c), ca = std::abs(c - a);
  if (ab >= bc && ab >= ca) return two_point(a, b);
  if (bc >= ca) return two_point(b, c);
  return two_point(c, a);
}

bool covered(const Disk& d, const Scalar& p) {
  return std::abs(p - d.center) <= d.radius + 1e-12 * std::max(1.0, d.radius);
}

}  // namespace

Disk smallest_enclosing_disk(std::span<const Scalar> points) {
  if (points.empty()) throw EmptySpace("smallest enclosing disk of no points");
  std::vector<Scalar> pts(points.begin(), points.end());
  std::mt19937_64 rng(0x5eed0d15c0ULL);  // fixed: output must not vary run to run
  std::shuffle(pts.begin(), pts.end(), rng);

  Disk d = one_point(pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (covered(d, pts[i])) continue;
    d = one_point(pts[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (covered(d, pts[j])) continue;
      d = two_point(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (covered(d, pts[k])) continue;
        d = three_point(pts[i], pts[j], pts[k]);
      }
    }
  }
  return d;
}

bool disk_contains(const Disk& d, const Scalar& p, double slack) {
  return std::abs(p - d.center) <= d.radius + slack;
}

}  // namespace gruss
