#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "gruss/core.hpp"

using namespace gruss;

namespace {

const Scalar I{0.0, 1.0};

MetricPtr mean2() { return make_metric({0.5, 0.5}); }

Vector vec2(Scalar a, Scalar b, const MetricPtr& m) { return Vector(m, {a, b}); }

}  // namespace

TEST_SUITE("core") {

TEST_CASE("inner product uses the point masses and conjugates the second slot") {
  auto m = mean2();
  CHECK(inner(vec2(0, 1, m), vec2(0, 1, m)) == Scalar(0.5));
  CHECK(inner(vec2(0.2, 0.8, m), vec2(0.1, 0.9, m)).real() ==
        doctest::Approx(0.37).epsilon(1e-15));
  const Vector x = vec2(1.0 + I, 2.0, m);
  const Vector y = vec2(I, 1.0 - I, m);
  const Scalar a = inner(x, y);
  const Scalar b = inner(y, x);
  CHECK(std::abs(a - std::conj(b)) < 1e-15);
  // <x, i*y> = -i <x, y>
  CHECK(std::abs(inner(x, I * y) - (-I) * a) < 1e-15);
}

TEST_CASE("vectors from different spaces refuse to pair") {
  auto m = mean2();
  auto other = make_metric({0.3, 0.7});
  CHECK_THROWS_AS(inner(vec2(0, 1, m), vec2(0, 1, other)), MetricMismatch);
  CHECK_THROWS_AS(vec2(0, 1, m) + vec2(0, 1, other), MetricMismatch);
  // equal weights count as the same space even in distinct objects
  CHECK_NOTHROW(inner(vec2(0, 1, m), vec2(0, 1, mean2())));
}

TEST_CASE("unit check and normalization") {
  auto m = mean2();
  CHECK_NOTHROW(require_unit(vec2(1, 1, m)));
  try {
    require_unit(vec2(1, 2, m));
    FAIL("expected NotUnitVector");
  } catch (const NotUnitVector& e) {
    CHECK(e.norm() == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
  }
  CHECK(norm(normalized(vec2(3, 4, m))) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(normalized(vec2(0, 0, m)), ZeroVector);
  CHECK_THROWS_AS(require_real(vec2(1.0, I, m)), InputError);
  CHECK_NOTHROW(require_real(vec2(1.0, -2.0, m)));
}

TEST_CASE("chebyshev functional on the two-point mean space") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  CHECK(chebyshev_functional(vec2(0, 1, m), vec2(0, 1, m), e) == Scalar(0.25));
  CHECK(chebyshev_functional(vec2(0.2, 0.8, m), vec2(0.1, 0.9, m), e).real() ==
        doctest::Approx(0.12).epsilon(1e-13));
  // conjugate symmetry T(x,y) = conj T(y,x)
  const Vector x = vec2(0.3 + 0.4 * I, -1.0 + I, m);
  const Vector y = vec2(2.0 - I, 0.5 * I, m);
  CHECK(std::abs(chebyshev_functional(x, y, e) -
                 std::conj(chebyshev_functional(y, x, e))) < 1e-14);
  // T(x, e) = 0 for any x
  CHECK(std::abs(chebyshev_functional(x, e, e)) < 1e-15);
}

TEST_CASE("schwarz gap equals the squared distance to the span") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  CHECK(schwarz_gap(vec2(0, 1, m), e) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(schwarz_gap(vec2(0.2, 0.8, m), e) == doctest::Approx(0.09).epsilon(1e-13));
  // attained at the projection coefficient <x,e>
  const Vector x = vec2(0.2, 0.8, m);
  const Scalar l0 = inner(x, e);
  const Vector residual = x - l0 * e;
  CHECK(norm_sq(residual) == doctest::Approx(schwarz_gap(x, e)).epsilon(1e-12));
}

TEST_CASE("bracket geometry") {
  const Bracket br(0.0, 1.0);
  CHECK(br.mid() == Scalar(0.5));
  CHECK(br.radius() == 0.5);
  CHECK(br.diameter() == 1.0);
  CHECK_FALSE(br.degenerate());
  CHECK(Bracket(2.0, 2.0).degenerate());
  const Bracket disk = Bracket::from_center(1.0 + I, 2.0);
  CHECK(disk.mid() == Scalar(1.0, 1.0));
  CHECK(disk.radius() == doctest::Approx(2.0).epsilon(1e-15));
  const Bracket c(I, -I);
  CHECK(c.mid() == Scalar(0.0));
  CHECK(c.radius() == doctest::Approx(1.0).epsilon(1e-15));
  const Bracket s = scaled(2.0 * I, Bracket(0.0, 1.0));
  CHECK(s.radius() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Bracket(0.0, std::numeric_limits<double>::infinity()), InputError);
  CHECK_THROWS_AS(Bracket::from_center(0.0, -1.0), InputError);
}

TEST_CASE("condition check in both equivalent forms") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  const Bracket br(0.0, 1.0);
  const ConditionReport rep = condition_check(vec2(0.2, 0.8, m), e, br);
  CHECK(rep.satisfied);
  CHECK(rep.quad_value == doctest::Approx(0.16).epsilon(1e-13));
  CHECK(rep.norm_slack == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(rep.equiv_residual) < 1e-15);

  // boundary: x = (0,1) sits exactly on the disk rim
  const ConditionReport rim = condition_check(vec2(0, 1, m), e, br, 0.0);
  CHECK(rim.satisfied);
  CHECK(rim.quad_value == 0.0);

  // outside: scaled past the rim
  const ConditionReport out = condition_check(vec2(-0.2, 1.2, m), e, br);
  CHECK_FALSE(out.satisfied);
  CHECK(out.quad_value < 0.0);
}

TEST_CASE("degenerate brackets accept only the center multiple") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  const Bracket point(0.5, 0.5);
  CHECK(condition_check(vec2(0.5, 0.5, m), e, point, 0.0).satisfied);
  CHECK_FALSE(condition_check(vec2(0.5, 0.5001, m), e, point).satisfied);
}

TEST_CASE("default tolerance scales with the squared radius") {
  CHECK(default_condition_tolerance(Bracket(0.0, 1.0)) == 1e-9);
  CHECK(default_condition_tolerance(Bracket(0.0, 10.0)) ==
        doctest::Approx(2.5e-8).epsilon(1e-12));
}

TEST_CASE("classic bound is a quarter of the diameter product") {
  CHECK(classic_bound(Bracket(0.0, 1.0), Bracket(0.0, 1.0)) == 0.25);
  CHECK(classic_bound(Bracket(-1.0, 1.0), Bracket(0.0, 4.0)) == 2.0);
  CHECK(classic_bound(Bracket(I, -I), Bracket(0.0, 2.0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("refined bound subtracts the condition radicands") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  const Bracket br(0.0, 1.0);
  const double refined =
      refined_bound(vec2(0.2, 0.8, m), vec2(0.1, 0.9, m), e, br, br);
  CHECK(refined == doctest::Approx(0.13).epsilon(1e-12));
  // never better than the functional, never worse than classic
  CHECK(refined >= 0.12 - 1e-12);
  CHECK(refined <= 0.25);
  // violated condition throws with the failing report attached
  try {
    refined_bound(vec2(-1, 2, m), vec2(0.1, 0.9, m), e, br, br);
    FAIL("expected ConditionViolated");
  } catch (const ConditionViolated& e2) {
    CHECK_FALSE(e2.report().satisfied);
  }
}

TEST_CASE("evaluate_gruss certifies the pair of conditions") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  const Bracket br(0.0, 1.0);
  const BoundReport rep =
      evaluate_gruss(vec2(0.2, 0.8, m), vec2(0.1, 0.9, m), e, br, br);
  CHECK(rep.certified);
  CHECK(rep.abs_functional == doctest::Approx(0.12).epsilon(1e-13));
  CHECK(rep.classic_bound == 0.25);
  CHECK(rep.refined_bound == doctest::Approx(0.13).epsilon(1e-12));
  CHECK(rep.slack_classic == doctest::Approx(0.13).epsilon(1e-12));
  CHECK(rep.slack_refined == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(rep.cond_x.satisfied);
  CHECK(rep.cond_y.satisfied);

  CHECK_THROWS_AS(evaluate_gruss(vec2(-1, 2, m), vec2(0, 1, m), e, br, br),
                  ConditionViolated);
  const BoundReport loose =
      evaluate_gruss(vec2(-1, 2, m), vec2(0, 1, m), e, br, br, /*strict=*/false);
  CHECK_FALSE(loose.certified);
  CHECK(loose.classic_bound == 0.25);  // still computed formally
}

TEST_CASE("companion value and one-bracket bounds") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  const Vector x = vec2(0, 1, m);
  const Vector y = vec2(1, 0, m);
  CHECK(companion_value(x, y, e) == doctest::Approx(-0.25).epsilon(1e-15));

  // (x+y)/2 = (0.5, 0.5) and (x-y)/2 = (-0.5, 0.5) both sit in the radius-1/2
  // disk around 0, so every verdict of the report is available
  const Bracket br(-0.5, 0.5);
  const CompanionReport rep = evaluate_companion(x, y, e, br, Field::real);
  CHECK(rep.cond_plus.satisfied);
  CHECK(rep.cond_minus.satisfied);
  CHECK(rep.bound == 0.25);
  CHECK(rep.re_functional == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(rep.upper_certified);
  CHECK(rep.lower_certified);
  CHECK(rep.abs_certified);
  CHECK(rep.real_abs_certified);
  CHECK(std::abs(rep.slack_abs) <= 1e-12);
  CHECK(rep.midpoint_gap >= -1e-15);

  // strict mode objects when neither midpoint condition holds
  const Bracket tiny(0.0, 0.01);
  CHECK_THROWS_AS(evaluate_companion(x, y, e, tiny, Field::real, /*strict=*/true),
                  ConditionViolated);
  // real field rejects complex data outright
  CHECK_THROWS_AS(
      evaluate_companion(vec2(I, 0, m), y, e, br, Field::real), InputError);
}

TEST_CASE("dual chain on the worked two-point example") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  const DualChain chain = dual_chain(vec2(0.2, 0.8, m), e, Bracket(0.6, 0.9));
  CHECK(chain.span_distance == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(chain.mixed_bound ==
        doctest::Approx(0.36055512754639896).epsilon(1e-12));
  CHECK(chain.endpoint_rms ==
        doctest::Approx(0.41833001326703778).epsilon(1e-12));
  CHECK(chain.span_distance <= chain.mixed_bound + 1e-15);
  CHECK(chain.mixed_bound <= chain.endpoint_rms + 1e-15);

  const DualChain wide = dual_chain(vec2(0, 1, m), e, Bracket(1.0, 2.0));
  CHECK(wide.span_distance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(wide.mixed_bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wide.endpoint_rms ==
        doctest::Approx(1.224744871391589).epsilon(1e-12));

  // <x,e> strictly inside the bracket disk: the chain does not apply
  CHECK_THROWS_AS(dual_chain(vec2(0.2, 0.8, m), e, Bracket(0.0, 1.0)),
                  DualPreconditionViolated);
}

TEST_CASE("decomposition identity collapses to rounding noise") {
  auto m = mean2();
  const Vector e = vec2(1, 1, m);
  CHECK(std::abs(identity_residual(vec2(0.2, 0.8, m), e, Bracket(0.0, 1.0))) <
        1e-15);
  CHECK(std::abs(identity_residual(vec2(0.3 + I, -2.0, m), e,
                                   Bracket(1.0 + I, -0.5))) < 1e-14);
  // degenerate bracket and x on the span
  CHECK(std::abs(identity_residual(vec2(0.7, 0.7, m), e, Bracket(0.7, 0.7))) <
        1e-15);
}

}  // TEST_SUITE
