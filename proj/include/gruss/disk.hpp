#pragma once

#include <span>

#include "gruss/scalar.hpp"

namespace gruss {

struct Disk {
  Scalar center;
  double radius = 0.0;
};

// Smallest disk containing every point. Randomized incremental construction,
// expected linear time; the shuffle seed is fixed so results are
// deterministic run to run. Throws EmptySpace on empty input.
Disk smallest_enclosing_disk(std::span<const Scalar> points);

bool disk_contains(const Disk& d, const Scalar& p, double slack = 0.0);

}  // namespace gruss
