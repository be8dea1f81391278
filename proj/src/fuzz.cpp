#include "gruss/fuzz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "gruss/core.hpp"
#include "gruss/measure.hpp"

namespace gruss {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
}

int fuzz_thread_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Scalar random_scalar(std::mt19937_64& rng, Field field, double lo, double hi) {
  std::uniform_real_distribution<double> box(lo, hi);
  const double re = box(rng);
  return field == Field::complex ? Scalar(re, box(rng)) : Scalar(re);
}

Vector random_vector(const MetricPtr& metric, std::mt19937_64& rng, Field field) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Scalar> c(metric->dim());
  for (Scalar& v : c) {
    const double re = gauss(rng);
    v = field == Field::complex ? Scalar(re, gauss(rng)) : Scalar(re);
  }
  return Vector(metric, std::move(c));
}

Vector random_unit_vector(const MetricPtr& metric, std::mt19937_64& rng, Field field) {
  for (;;) {
    Vector v = random_vector(metric, rng, field);
    if (norm(v) > 1e-6) return normalized(v);
  }
}

Bracket random_bracket(std::mt19937_64& rng, Field field, double degenerate_share) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const Scalar lo = random_scalar(rng, field);
  if (u01(rng) < degenerate_share) return Bracket(lo, lo);
  const Scalar hi = random_scalar(rng, field);
  // a sliver thinner than the rounding floor cannot host exact admissible
  // samples; collapse it to the degenerate case instead
  if (std::abs(hi - lo) < 2e-9 * (1.0 + std::abs(lo) + std::abs(hi)))
    return Bracket(lo, lo);
  return Bracket(lo, hi);
}

MetricPtr random_metric(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> spread(-1.5, 1.5);
  std::vector<double> w(dim);
  for (double& wi : w) wi = std::exp(spread(rng)) / static_cast<double>(dim);
  return make_metric(std::move(w));
}

Vector sample_admissible(const Vector& e, const Bracket& br, std::mt19937_64& rng,
                         Field field) {
  require_unit(e);
  const double r = br.radius();
  if (r == 0.0) return br.mid() * e;
  // Margin below the radius so condition_check stays nonnegative through its
  // own rounding; the floor grows with |mid| / r because the check subtracts
  // quantities of magnitude |mid| to recover differences of magnitude r.
  const double eps = std::numeric_limits<double>::epsilon();
  const double margin =
      std::max(1e-12, 32.0 * eps * (1.0 + std::abs(br.mid()) + r) / r);
  if (margin >= 0.5) return br.mid() * e;
  const Vector dir = random_unit_vector(e.metric(), rng, field);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double u = 1.0 - u01(rng) * u01(rng);  // boundary-heavy radius profile
  const double len = r * (1.0 - margin) * u;
  return br.mid() * e + Scalar(len) * dir;
}

WitnessTuple equality_witness(WitnessKind kind, std::size_t dim, Field field) {
  (void)kind;   // classic and companion share the extremal pair
  (void)field;  // the real witness is extremal over C as well
  if (dim == 0) throw EmptySpace("witness needs at least one dimension");
  const MetricPtr metric = mean_metric(dim);
  const Vector e(metric, std::vector<Scalar>(dim, Scalar(1.0)));
  const Bracket br(Scalar(0.0), Scalar(1.0));
  if (dim == 1) {
    // e spans the whole space, the functional vanishes identically
    const Vector x(metric, {Scalar(0.5)});
    return {metric, e, x, x, br, br};
  }
  // x = mid*e + radius*w with w the normalized (-1, 1, 0, ...) direction;
  // w is orthogonal to e, so the Schwarz gap hits radius^2 exactly.
  const double s = 1.0 / std::sqrt(2.0 / static_cast<double>(dim));
  std::vector<Scalar> xc(dim, Scalar(0.5));
  xc[0] = Scalar(0.5 - 0.5 * s);
  xc[1] = Scalar(0.5 + 0.5 * s);
  const Vector x(metric, std::move(xc));
  return {metric, e, x, x, br, br};
}

double witness_ratio(const WitnessTuple& tuple, SearchKind kind) {
  switch (kind) {
    case SearchKind::classic: {
      const double b = classic_bound(tuple.bracket_x, tuple.bracket_y);
      if (b <= 0.0) return 0.0;
      return std::abs(chebyshev_functional(tuple.x, tuple.y, tuple.e)) / b;
    }
    case SearchKind::refined: {
      const double b = refined_bound(tuple.x, tuple.y, tuple.e, tuple.bracket_x,
                                     tuple.bracket_y);
      if (b <= 0.0) return 0.0;
      return std::abs(chebyshev_functional(tuple.x, tuple.y, tuple.e)) / b;
    }
    case SearchKind::companion: {
      const double d = tuple.bracket_x.diameter();
      const double b = 0.25 * d * d;
      if (b <= 0.0) return 0.0;
      return companion_value(tuple.x, tuple.y, tuple.e) / b;
    }
  }
  return 0.0;
}

std::uint64_t FuzzReport::total_violations() const {
  std::uint64_t total = 0;
  for (const auto& [name, count] : violations) total += count;
  return total;
}

namespace {

void validate_config(const FuzzConfig& cfg) {
  if (cfg.dims.empty()) throw InputError("dims must not be empty");
  for (std::size_t d : cfg.dims)
    if (d == 0) throw InputError("dims must be positive");
  if (!(cfg.tolerance >= 0.0)) throw InputError("tolerance must be nonnegative");
}

enum CheckId : std::size_t {
  kHarnessException,
  kGeneratorSoundness,
  kBracketEquivalence,
  kProjectionInfimum,
  kSchwarzPremise,
  kClassicBound,
  kRefinedBound,
  kRefinedOrder,
  kRefinedStrict,
  kRadicandCap,
  kCompanionMidpointChain,
  kCompanionUpper,
  kCompanionAbs,
  kDualChain,
  kDecompositionIdentity,
  kCheckCount
};

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "harness-exception",
    "generator-soundness",
    "bracket-equivalence",
    "projection-infimum",
    "schwarz-premise",
    "classic-bound",
    "refined-bound",
    "refined-order",
    "refined-strict",
    "radicand-cap",
    "companion-midpoint-chain",
    "companion-upper",
    "companion-abs",
    "dual-chain",
    "decomposition-identity",
};

using Counters = std::array<std::uint64_t, kCheckCount>;

void merge_into(Counters& into, const Counters& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

// One admissible tuple plus a reversed-condition partner, every certified
// inequality and identity re-checked. Pure function of (cfg, index).
void fuzz_sample(const FuzzConfig& cfg, std::uint64_t index, Counters& viol) {
  auto rng = sample_rng(cfg.seed, index);
  const std::size_t dim = cfg.dims[index % cfg.dims.size()];
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  const MetricPtr metric = u01(rng) < 0.5 ? mean_metric(dim) : random_metric(dim, rng);
  const Vector e = random_unit_vector(metric, rng, cfg.field);
  const Bracket brx = random_bracket(rng, cfg.field);
  const Bracket bry = random_bracket(rng, cfg.field);
  const Vector x = sample_admissible(e, brx, rng, cfg.field);
  const Vector y = sample_admissible(e, bry, rng, cfg.field);

  const double rx = brx.radius();
  const double ry = bry.radius();
  const double scale = std::max({1.0, norm_sq(x), norm_sq(y), rx * rx, ry * ry});
  const double tol_ineq = cfg.tolerance * scale;
  const double tol_id = kIdentityTolerance * scale;

  const ConditionReport cx = condition_check(x, e, brx, 0.0);
  const ConditionReport cy = condition_check(y, e, bry, 0.0);
  if (!cx.satisfied || !cy.satisfied) ++viol[kGeneratorSoundness];
  if (std::abs(cx.equiv_residual) > tol_id || std::abs(cy.equiv_residual) > tol_id)
    ++viol[kBracketEquivalence];

  const double gap_x = schwarz_gap(x, e);
  const double gap_y = schwarz_gap(y, e);

  {  // the projection attains the infimum, random probes never beat it
    bool bad = false;
    const Scalar px = inner(x, e);
    if (std::abs(norm_sq(x - px * e) - (norm_sq(x) - abs_sq(px))) > tol_id) bad = true;
    for (int k = 0; k < 4 && !bad; ++k) {
      const Scalar lam = px + random_scalar(rng, cfg.field, -2.0, 2.0);
      if (norm_sq(x - lam * e) < gap_x - tol_id) bad = true;
    }
    if (bad) ++viol[kProjectionInfimum];
  }

  const Scalar t = chebyshev_functional(x, y, e);
  const double abs_t = std::abs(t);
  if (abs_t * abs_t > gap_x * gap_y + tol_ineq) ++viol[kSchwarzPremise];

  const double classic = classic_bound(brx, bry);
  if (abs_t > classic + tol_ineq) ++viol[kClassicBound];

  const double qx = std::max(0.0, cx.quad_value);
  const double qy = std::max(0.0, cy.quad_value);
  const double refined = std::max(0.0, classic - std::sqrt(qx) * std::sqrt(qy));
  if (abs_t > refined + tol_ineq) ++viol[kRefinedBound];
  if (refined > classic + tol_ineq) ++viol[kRefinedOrder];
  if (qx > 1e-6 && qy > 1e-6 && refined >= classic) ++viol[kRefinedStrict];
  if (qx > rx * rx + tol_ineq || qy > ry * ry + tol_ineq) ++viol[kRadicandCap];

  // companion bounds through brackets derived for the midpoint vectors:
  // (x+y)/2 sits in the disk with the averaged center and averaged radius
  const Vector mid_sum = Scalar(0.5) * (x + y);
  if (t.real() > schwarz_gap(mid_sum, e) + tol_ineq) ++viol[kCompanionMidpointChain];

  const Scalar c_plus = 0.5 * (brx.mid() + bry.mid());
  const Scalar c_minus = 0.5 * (brx.mid() - bry.mid());
  const double rho = 0.5 * (rx + ry);
  const CompanionReport comp =
      evaluate_companion(x, y, e, Bracket::from_center(c_plus, rho), cfg.field);
  if (!comp.cond_plus.satisfied)
    ++viol[kGeneratorSoundness];
  else if (comp.re_functional > comp.bound + tol_ineq)
    ++viol[kCompanionUpper];

  // one bracket whose disk covers both midpoint disks certifies |Re T|
  const Scalar c_cover = 0.5 * (c_plus + c_minus);
  const double r_cover = 0.5 * std::abs(c_plus - c_minus) + rho;
  const CompanionReport cover =
      evaluate_companion(x, y, e, Bracket::from_center(c_cover, r_cover), cfg.field);
  if (!cover.cond_plus.satisfied || !cover.cond_minus.satisfied)
    ++viol[kGeneratorSoundness];
  else if (std::abs(cover.re_functional) > cover.bound + tol_ineq)
    ++viol[kCompanionAbs];

  if (std::abs(identity_residual(x, e, brx)) > tol_id) ++viol[kDecompositionIdentity];

  {  // reversed-condition partner: <x,e> placed on or outside a fresh disk
    const Bracket brd = random_bracket(rng, cfg.field);
    std::uniform_real_distribution<double> stretch(1.0, 3.0);
    Scalar dir(1.0);
    if (cfg.field == Field::complex) {
      const double phi = 2.0 * std::numbers::pi * u01(rng);
      dir = Scalar(std::cos(phi), std::sin(phi));
    } else if (u01(rng) < 0.5) {
      dir = Scalar(-1.0);
    }
    const Scalar p = brd.mid() + Scalar(stretch(rng) * brd.radius()) * dir;
    Vector w = random_vector(metric, rng, cfg.field);
    w = w - inner(w, e) * e;  // orthogonal part, so <xd, e> stays at p
    const Vector xd = p * e + w;
    const double dscale = std::max({1.0, norm_sq(xd), brd.radius() * brd.radius()});
    const double dtol = cfg.tolerance * dscale;
    const DualChain chain = dual_chain(xd, e, brd);
    // squared comparisons keep the error model quadratic like everything else
    const bool mono1 = chain.span_distance * chain.span_distance <=
                       chain.mixed_bound * chain.mixed_bound + dtol;
    const bool mono2 = chain.mixed_bound * chain.mixed_bound <=
                       chain.endpoint_rms * chain.endpoint_rms + dtol;
    if (!mono1 || !mono2) ++viol[kDualChain];
    if (std::abs(identity_residual(xd, e, brd)) > kIdentityTolerance * dscale)
      ++viol[kDecompositionIdentity];
  }
}

void fuzz_sample_guarded(const FuzzConfig& cfg, std::uint64_t index, Counters& viol) {
  try {
    fuzz_sample(cfg, index, viol);
  } catch (...) {
    ++viol[kHarnessException];
  }
}

}  // namespace

FuzzReport fuzz_all(const FuzzConfig& cfg, Execution exec) {
  validate_config(cfg);
  Counters totals{};
  const auto n = static_cast<std::int64_t>(cfg.samples);
#if defined(_OPENMP)
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      Counters local{};
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i)
        fuzz_sample_guarded(cfg, static_cast<std::uint64_t>(i), local);
#pragma omp critical(gruss_fuzz_merge)
      merge_into(totals, local);
    }
  } else
#else
  (void)exec;
#endif
  {
    for (std::int64_t i = 0; i < n; ++i)
      fuzz_sample_guarded(cfg, static_cast<std::uint64_t>(i), totals);
  }

  FuzzReport report;
  report.seed = cfg.seed;
  report.samples = cfg.samples;
  report.field = cfg.field;
  report.tolerance = cfg.tolerance;
  report.violations.reserve(kCheckCount);
  for (std::size_t c = 0; c < kCheckCount; ++c)
    report.violations.emplace_back(kCheckNames[c], totals[c]);
  return report;
}

namespace {

// Deterministic tuple for restart i: mean metric, e = (1,...,1), unit
// brackets, admissible pair. Recomputable from the index alone, which lets
// the parallel scan keep only the best index.
WitnessTuple restart_tuple(const FuzzConfig& cfg, std::uint64_t index) {
  auto rng = sample_rng(cfg.seed ^ 0xC0FFEEull, index);
  const std::size_t dim = cfg.dims[index % cfg.dims.size()];
  const MetricPtr metric = mean_metric(dim);
  const Vector e(metric, std::vector<Scalar>(dim, Scalar(1.0)));
  const Bracket br(Scalar(0.0), Scalar(1.0));
  Vector x = sample_admissible(e, br, rng, cfg.field);
  Vector y = sample_admissible(e, br, rng, cfg.field);
  return {metric, e, std::move(x), std::move(y), br, br};
}

struct Candidate {
  double ratio;
  std::uint64_t index;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.ratio > b.ratio || (a.ratio == b.ratio && a.index < b.index);
}

Vector project_into_disk(const Vector& v, const Vector& e, const Bracket& br) {
  Vector w = v - br.mid() * e;
  const double len = norm(w);
  const double rmax = br.radius() * (1.0 - 1e-12);
  if (len > rmax) {
    const double s = len > 0.0 ? rmax / len : 0.0;
    w = Scalar(s) * w;
  }
  return br.mid() * e + w;
}

}  // namespace

SharpnessResult sharpness_search(const FuzzConfig& cfg, SearchKind kind,
                                 Execution exec) {
  validate_config(cfg);
  std::size_t witness_dim = cfg.dims.front();
  for (std::size_t d : cfg.dims) {
    if (d >= 2) {
      witness_dim = d;
      break;
    }
  }
  WitnessTuple best = equality_witness(
      kind == SearchKind::companion ? WitnessKind::companion : WitnessKind::classic,
      witness_dim, cfg.field);
  double best_ratio = witness_ratio(best, kind);
  std::size_t iterations = 1;

  const std::uint64_t restarts = cfg.samples / 2;
  const std::uint64_t refine_budget = cfg.samples - restarts;

  Candidate top{-std::numeric_limits<double>::infinity(), 0};
  const auto n = static_cast<std::int64_t>(restarts);
#if defined(_OPENMP)
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      Candidate local{-std::numeric_limits<double>::infinity(), 0};
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        const Candidate cand{witness_ratio(restart_tuple(cfg, idx), kind), idx};
        if (better(cand, local)) local = cand;
      }
#pragma omp critical(gruss_sharpness_merge)
      if (better(local, top)) top = local;
    }
  } else
#else
  (void)exec;
#endif
  {
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      const Candidate cand{witness_ratio(restart_tuple(cfg, idx), kind), idx};
      if (better(cand, top)) top = cand;
    }
  }
  iterations += restarts;
  if (restarts > 0 && top.ratio > best_ratio) {
    best = restart_tuple(cfg, top.index);
    best_ratio = top.ratio;
  }

  // refinement: perturb one coordinate at a time, shrink the step on a fixed
  // cadence, keep strict improvements; serial by design, still seed-driven
  auto rng = sample_rng(cfg.seed ^ 0xF1F0ull, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double step = 0.5 * best.bracket_x.radius();
  if (step <= 0.0) step = 0.25;
  const std::size_t dim = best.metric->dim();
  for (std::uint64_t k = 0; k < refine_budget; ++k) {
    WitnessTuple cand = best;
    const bool move_x = (k % 2 == 0);
    const Vector& src = move_x ? cand.x : cand.y;
    std::vector<Scalar> coords(src.coords().begin(), src.coords().end());
    const std::size_t ci = (k / 2) % dim;
    const bool imag_part = cfg.field == Field::complex && ((k / (2 * dim)) % 2 == 1);
    const double delta = step * gauss(rng);
    coords[ci] += imag_part ? Scalar(0.0, delta) : Scalar(delta);
    Vector moved = project_into_disk(Vector(cand.metric, std::move(coords)), cand.e,
                                     move_x ? cand.bracket_x : cand.bracket_y);
    if (move_x)
      cand.x = std::move(moved);
    else
      cand.y = std::move(moved);
    const double ratio = witness_ratio(cand, kind);
    ++iterations;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = std::move(cand);
    }
    if (k % 64 == 63) step = std::max(1e-6, step * 0.8);
  }

  return {best_ratio, std::move(best), iterations};
}

}  // namespace gruss
