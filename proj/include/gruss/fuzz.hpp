#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gruss/bracket.hpp"
#include "gruss/space.hpp"

namespace gruss {

// Batch kernels run either as a plain serial loop (the reference) or as an
// OpenMP parallel loop. Work is keyed by (seed, sample index), so both
// executions produce identical reports; tests and the benchmark rely on that.
enum class Execution { serial, parallel };

enum class WitnessKind { classic, companion };
enum class SearchKind { classic, refined, companion };

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims = {1, 2, 4, 8, 16};
  Field field = Field::real;
  std::size_t samples = 10000;
  double tolerance = 1e-9;  // inequality rung; identities always use 1e-12
};

std::uint64_t splitmix64(std::uint64_t x);
// Independent generator for one sample of a batch.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);
int fuzz_thread_count();

Scalar random_scalar(std::mt19937_64& rng, Field field, double lo = -3.0, double hi = 3.0);
Vector random_vector(const MetricPtr& metric, std::mt19937_64& rng, Field field);
Vector random_unit_vector(const MetricPtr& metric, std::mt19937_64& rng, Field field);
// Occasionally degenerate; slivers thinner than the rounding floor collapse
// to a degenerate bracket as well.
Bracket random_bracket(std::mt19937_64& rng, Field field, double degenerate_share = 0.02);
MetricPtr random_metric(std::size_t dim, std::mt19937_64& rng);

// x = mid*e + w with ||w|| kept far enough inside radius that condition_check
// passes even at zero tolerance.
Vector sample_admissible(const Vector& e, const Bracket& br, std::mt19937_64& rng,
                         Field field);

struct WitnessTuple {
  MetricPtr metric;
  Vector e;
  Vector x;
  Vector y;
  Bracket bracket_x;
  Bracket bracket_y;
};

// Closed-form tuple attaining |T| = bound on the mean metric with (0, 1)
// brackets; ratio 1 exactly for dim >= 2, the forced ratio-0 tuple in dim 1.
WitnessTuple equality_witness(WitnessKind kind, std::size_t dim = 2,
                              Field field = Field::real);

// |T| / bound for classic and refined kinds, Re T / bound for companion.
double witness_ratio(const WitnessTuple& tuple, SearchKind kind);

struct SharpnessResult {
  double best_ratio;
  WitnessTuple witness;
  std::size_t iterations;
};

// Random restarts plus coordinate-wise refinement with shrinking step,
// budget split evenly; always seeded with the closed-form witness.
SharpnessResult sharpness_search(const FuzzConfig& cfg, SearchKind kind,
                                 Execution exec = Execution::parallel);

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Field field = Field::real;
  double tolerance = 1e-9;
  std::vector<std::pair<std::string, std::uint64_t>> violations;  // fixed key order
  std::uint64_t total_violations() const;
  bool all_zero() const { return total_violations() == 0; }
};

// Samples admissible tuples and re-checks every certified inequality and
// identity on each; the contract is zero violations at any sample count.
FuzzReport fuzz_all(const FuzzConfig& cfg, Execution exec = Execution::parallel);

}  // namespace gruss
