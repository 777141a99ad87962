#include <cmath>

#include <gtest/gtest.h>

#include "sublorentz/sublorentzian.hpp"
#include "test_support.hpp"

using namespace sublorentz;
using testsupport::MatNear;

namespace {

Mat2C series_extremal(const ExtremalParams& p, double t) {
  Mat2C full, su2;
  for (int i = 0; i < 7; ++i) full += p[i] * basis_matrix(i);
  for (int i = 4; i < 7; ++i) su2 += p[i] * basis_matrix(i);
  return exp_series(t * full) * exp_series(-t * su2);
}

ExtremalParams random_params(testsupport::Random& rng, Regime regime) {
  return regime == Regime::kTimelike ? ExtremalParams::timelike(rng.vec3(1.5), rng.vec3(2.0))
                                     : ExtremalParams::isotropic(rng.unit3(), rng.vec3(2.0));
}

Mat2C random_su2(testsupport::Random& rng) {
  const Vec3 w = rng.vec3(3.0);
  return exp_series(w[0] * basis_matrix(4) + w[1] * basis_matrix(5) + w[2] * basis_matrix(6));
}

const double kE = std::exp(1.0);

}  // namespace

TEST(ExtremalParams, Normalization) {
  EXPECT_NO_THROW(ExtremalParams({std::sqrt(2.0), 1.0, 0, 0, 0, 0, 0}, Regime::kTimelike));
  EXPECT_THROW(ExtremalParams({1.0, 1.0, 0, 0, 0, 0, 0}, Regime::kTimelike), GeometryError);
  EXPECT_NO_THROW(ExtremalParams({1.0, 0.0, 1.0, 0, 0.3, 0, 0}, Regime::kIsotropic));
  EXPECT_THROW(ExtremalParams({2.0, 2.0, 0, 0, 0, 0, 0}, Regime::kIsotropic), GeometryError);
  const ExtremalParams t = ExtremalParams::timelike({1.0, 2.0, 2.0}, {});
  EXPECT_NEAR(t[0], std::sqrt(10.0), 1e-15);
}

TEST(NormalExtremal, Examples) {
  const ExtremalParams scalar({1, 0, 0, 0, 0, 0, 0}, Regime::kTimelike);
  const ExtremalParams iso({1, 1, 0, 0, 0, 0, 0}, Regime::kIsotropic);
  for (double t : {0.0, 0.7, 2.5}) {
    EXPECT_TRUE(MatNear(normal_extremal(scalar, t), std::exp(t / 2) * Mat2C::identity(), 1e-14));
    EXPECT_LT(rel_diff(normal_extremal(iso, t), std::exp(t / 2) * exp_series(t * basis_matrix(1))), 1e-14);
  }
  testsupport::Random rng(41);
  EXPECT_TRUE(MatNear(normal_extremal(random_params(rng, Regime::kTimelike), 0.0), Mat2C::identity(), 0.0));
}

TEST(NormalExtremal, MatchesSeriesOracle) {
  testsupport::Random rng(42);
  for (Regime regime : {Regime::kTimelike, Regime::kIsotropic})
    for (int n = 0; n < 200; ++n) {
      const ExtremalParams p = random_params(rng, regime);
      const double t = rng.uniform(-2, 2);
      EXPECT_LT(rel_diff(normal_extremal(p, t), series_extremal(p, t)), 1e-12);
    }
}

TEST(NormalExtremal, DeterminantLaw) {
  testsupport::Random rng(43);
  for (Regime regime : {Regime::kTimelike, Regime::kIsotropic})
    for (int n = 0; n < 300; ++n) {
      const ExtremalParams p = random_params(rng, regime);
      const double t = rng.uniform(-3, 3);
      const double want = std::exp(p[0] * t);
      EXPECT_LT(std::abs(normal_extremal(p, t).det() - want), 1e-11 * std::max(1.0, want));
    }
}

TEST(NormalExtremal, FutureDirectedArclength) {
  testsupport::Random rng(44);
  const double h = 1e-6;
  for (Regime regime : {Regime::kTimelike, Regime::kIsotropic})
    for (int n = 0; n < 100; ++n) {
      const ExtremalParams p = random_params(rng, regime);
      const double t = rng.uniform(0, 2);
      const Mat2C dg = (normal_extremal(p, t + h) - normal_extremal(p, t - h)) / cplx(2 * h);
      const AlgCoords u = to_coords(normal_extremal(p, t).inverse() * dg);
      EXPECT_TRUE(u.in_H(1e-5));
      AlgCoords uh = u;
      for (int i = 4; i < 8; ++i) uh[i] = 0.0;
      EXPECT_NEAR(herm_form(uh), regime == Regime::kTimelike ? 1.0 : 0.0, 1e-5);
      EXPECT_GT(u[0], 0.0);
      const AlgCoords exact = normal_extremal_control(p, t);
      for (int i = 0; i < 8; ++i) EXPECT_NEAR(u[i], exact[i], 1e-6);
    }
}

TEST(NormalExtremal, CollinearityCollapse) {
  testsupport::Random rng(45);
  for (int n = 0; n < 100; ++n) {
    const Vec3 a = rng.vec3(1.5);
    const double k = rng.uniform(-2, 2);
    const ExtremalParams p = ExtremalParams::timelike(a, {k * a[0], k * a[1], k * a[2]});
    const double t = rng.uniform(-2, 2);
    const Mat2C want = exp_closed(ComplexAlgVec{{p[0], p[1], p[2], p[3]}}, t);
    EXPECT_LT(rel_diff(normal_extremal(p, t), want), 1e-11);
  }
}

TEST(NormalExtremal, ReducedFormulasAgree) {
  testsupport::Random rng(46);
  for (int n = 0; n < 200; ++n) {
    const bool timelike = n % 2 == 0;
    const double a1 = timelike ? rng.uniform(0.05, 2.0) : 1.0;
    const Vec3 b = rng.vec3(2.0);
    const double a0 = timelike ? std::sqrt(1.0 + a1 * a1) : 1.0;
    const ExtremalParams p({a0, a1, 0, 0, b[0], b[1], b[2]}, timelike ? Regime::kTimelike : Regime::kIsotropic);
    const double t = rng.uniform(-2, 2);
    EXPECT_LT(rel_diff(normal_extremal_reduced(a1, b[0], b[1], b[2], a0, t), normal_extremal(p, t)), 1e-12);
  }
  const double a1 = 0.8, a0 = std::sqrt(1.0 + a1 * a1);
  EXPECT_LT(rel_diff(normal_extremal_reduced(a1, 0, 0, 0, a0, 1.5),
                     std::exp(a0 * 1.5 / 2) * exp_series(1.5 * a1 * basis_matrix(1))),
            1e-13);
  EXPECT_TRUE(MatNear(normal_extremal_reduced(a1, 0.3, 0.1, 0.2, a0, 0.0), Mat2C::identity(), 0.0));
}

TEST(Covector, RoundTripAndControl) {
  testsupport::Random rng(47);
  const ExtremalParams p = random_params(rng, Regime::kTimelike);
  const CovectorState psi = covector_from_params(p);
  EXPECT_NEAR(psi.hamiltonian(), 1.0, 1e-13);
  const ExtremalParams back = params_from_covector(psi, Regime::kTimelike);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(back[i], p[i], 1e-15);
  const AlgCoords u = psi.control();
  const AlgCoords want = normal_extremal_control(p, 0.0);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(u[i], want[i], 1e-14);
}

TEST(Pontryagin, ScalarSubgroup) {
  const PontryaginResult r = pontryagin_integrate(CovectorState{{1, 0, 0, 0, 0, 0, 0}}, Regime::kTimelike, 2.0, 2000);
  EXPECT_TRUE(MatNear(r.path.points.back(), kE * Mat2C::identity(), 1e-12));
  EXPECT_EQ(r.path.size(), 2001u);
  EXPECT_EQ(r.path.covectors.size(), r.path.size());
}

TEST(Pontryagin, BoostExample) {
  const double s2 = std::sqrt(2.0);
  const PontryaginResult r = pontryagin_integrate(CovectorState{{s2, -1, 0, 0, 0, 0, 0}}, Regime::kTimelike, 3.0, 3000);
  const ExtremalParams p({s2, 1, 0, 0, 0, 0, 0}, Regime::kTimelike);
  EXPECT_LT(rel_diff(r.path.points.back(), normal_extremal(p, 3.0)), 1e-8);
}

TEST(Pontryagin, MatchesClosedFormAndConserves) {
  testsupport::Random rng(48);
  for (Regime regime : {Regime::kTimelike, Regime::kIsotropic})
    for (int n = 0; n < 10; ++n) {
      const ExtremalParams p = random_params(rng, regime);
      const PontryaginResult r = pontryagin_integrate(covector_from_params(p), regime, 5.0, 5000);
      EXPECT_LT(rel_diff(r.path.points.back(), normal_extremal(p, 5.0)), 1e-8);
      EXPECT_LT(r.hamiltonian_drift, 1e-9);
      for (std::size_t i = 0; i < r.path.size(); i += 500) {
        const AlgCoords u = r.path.controls[i];
        const CovectorState& psi = r.path.covectors[i];
        // psi pairs with u0 e0 - sum u_k e_k, so the e-basis coordinates enter with a plus sign.
        const double m = psi.psi[0] * u[0] + psi.psi[1] * u[1] + psi.psi[2] * u[2] + psi.psi[3] * u[3];
        EXPECT_NEAR(m, regime == Regime::kTimelike ? 1.0 : 0.0, 1e-9);
      }
    }
}

TEST(Pontryagin, RejectsInconsistentInitialData) {
  EXPECT_THROW(pontryagin_integrate(CovectorState{{2, 0, 0, 0, 0, 0, 0}}, Regime::kTimelike, 1.0, 10), GeometryError);
  EXPECT_THROW(pontryagin_integrate(CovectorState{{1, 0, 0, 0, 0, 0, 0}}, Regime::kIsotropic, 1.0, 10), GeometryError);
}

TEST(Classify, Examples) {
  const CausalReport a = causal_classify(kE * Mat2C::identity());
  EXPECT_EQ(a.cls, CausalClass::kTimelike);
  EXPECT_NEAR(a.xi, 2.0, 1e-15);
  EXPECT_EQ(a.eta.upper, 0.0);
  ASSERT_TRUE(a.distance.is_finite());
  EXPECT_NEAR(a.distance.value, 2.0, 1e-15);

  const CausalReport b = causal_classify(std::exp(0.5) * exp_series(basis_matrix(1)));
  EXPECT_EQ(b.cls, CausalClass::kIsotropic);
  EXPECT_NEAR(b.distance.value, 0.0, 1e-12);

  const CausalReport c = causal_classify(exp_series(basis_matrix(1)));
  EXPECT_EQ(c.cls, CausalClass::kUnreachable);
  EXPECT_EQ(c.distance.kind, SLDistance::Kind::kMinusInfinity);

  const CausalReport d = causal_classify(Mat2C::identity());
  EXPECT_EQ(d.cls, CausalClass::kIdentity);
  EXPECT_EQ(d.distance.value, 0.0);
}

TEST(Classify, TimelikeBoostDistance) {
  const CausalReport r = causal_classify(kE * exp_series(basis_matrix(1)));
  ASSERT_EQ(r.cls, CausalClass::kTimelike);
  EXPECT_TRUE(r.exact_eta);
  EXPECT_NEAR(r.distance.value, std::sqrt(3.0), 1e-12);
  ASSERT_TRUE(r.c_param.has_value());
  EXPECT_NEAR(std::cosh(*r.c_param) * r.distance.value, r.xi, 1e-12);
  EXPECT_NEAR(std::sinh(*r.c_param) * r.distance.value, 1.0, 1e-12);
}

TEST(Classify, ShotTargetIsConsistentWithBracket) {
  const SRGeodesicParams p({0.0, 1.0, 0.0}, {0.4, 0.0, -0.3});
  const Mat2C g = std::exp(1.5) * sr_geodesic(p, 0.8);
  const CausalReport r = causal_classify(g);
  ASSERT_EQ(r.cls, CausalClass::kTimelike);
  EXPECT_FALSE(r.exact_eta);
  EXPECT_LE(r.eta.upper, 0.8 + 1e-7);
  EXPECT_LE(r.distance_lower, r.distance.value + 1e-15);
  EXPECT_GE(r.distance_upper, r.distance.value - 1e-15);
}

TEST(Classify, FlagsExtrapolatedFibre) {
  const Mat2C g = kE * exp_series(0.9 * basis_matrix(5));
  const CausalReport r = causal_classify(g);
  EXPECT_TRUE(r.extrapolated);
}

TEST(Classify, RejectsOutsideGLPlus) {
  EXPECT_THROW(causal_classify(Mat2C::diag(1.0, -1.0)), GeometryError);
  EXPECT_THROW(causal_classify(Mat2C::diag(cplx(0, 1), 1.0)), GeometryError);
}

TEST(Classify, InvariantUnderSU2Conjugation) {
  testsupport::Random rng(49);
  for (int n = 0; n < 4; ++n) {
    const SRGeodesicParams p(rng.unit3(), rng.vec3(1.0));
    const Mat2C g = std::exp(1.2) * sr_geodesic(p, 0.6);
    const CausalReport a = causal_classify(g);
    const CausalReport b = causal_classify(su2_conjugate(random_su2(rng), g));
    ASSERT_EQ(a.cls, CausalClass::kTimelike);
    ASSERT_EQ(b.cls, CausalClass::kTimelike);
    EXPECT_NEAR(a.distance.value, b.distance.value, 5e-3);
  }
}

TEST(Classify, OneParameterSubgroupsAreLongest) {
  testsupport::Random rng(50);
  for (int n = 0; n < 5; ++n) {
    const Vec3 a = rng.vec3(1.0);
    const double k = rng.uniform(-1, 1);
    const ExtremalParams p = ExtremalParams::timelike(a, {k * a[0], k * a[1], k * a[2]});
    const double T = rng.uniform(0.5, 2.0);
    const CausalReport r = causal_classify(normal_extremal(p, T));
    ASSERT_EQ(r.cls, CausalClass::kTimelike);
    EXPECT_NEAR(r.distance.value, T, 1e-9);
  }
}

TEST(LongestArc, ScalarTarget) {
  const LongestArc arc = longest_arc(kE * Mat2C::identity(), 11);
  EXPECT_NEAR(arc.duration, 2.0, 1e-15);
  EXPECT_LT(arc.endpoint_residual, 1e-9);
  for (std::size_t i = 0; i < arc.path.size(); ++i)
    EXPECT_TRUE(MatNear(arc.path.points[i], std::exp(arc.path.times[i] / 2) * Mat2C::identity(), 1e-13));
}

TEST(LongestArc, BoostTarget) {
  const Mat2C g = kE * exp_series(basis_matrix(1));
  const LongestArc arc = longest_arc(g, 50);
  EXPECT_NEAR(arc.duration, std::sqrt(3.0), 1e-12);
  EXPECT_LT(arc.endpoint_residual, 1e-6);
  EXPECT_TRUE(MatNear(arc.path.points.front(), Mat2C::identity(), 1e-15));
  EXPECT_EQ(arc.path.size(), 50u);
}

TEST(LongestArc, IdentityIsEmpty) {
  const LongestArc arc = longest_arc(Mat2C::identity(), 5);
  EXPECT_EQ(arc.path.size(), 0u);
  EXPECT_EQ(arc.duration, 0.0);
  EXPECT_FALSE(arc.params.has_value());
}

TEST(LongestArc, RejectsUnreachable) {
  try {
    longest_arc(exp_series(basis_matrix(1)), 5);
    FAIL();
  } catch (const NotReachableError& e) {
    EXPECT_EQ(e.report().cls, CausalClass::kUnreachable);
  }
}

TEST(Abnormal, StrictlyAbnormalClosedForms) {
  constexpr double T = 3.0;
  constexpr int steps = 3000;
  const auto kt = KappaSamples::from_function([](double t) { return t / 2; }, T, 2 * steps);
  const auto ki = KappaSamples::from_function([](double t) { return std::exp(t / 2) / 2; }, T, 2 * steps);
  const AbnormalResult a = abnormal_extremal(kt, {0, 0, 1}, Regime::kTimelike, steps);
  const AbnormalResult b = abnormal_extremal(ki, {0, 0, 1}, Regime::kIsotropic, steps);
  for (std::size_t i = 0; i < a.path.size(); i += 100) {
    const double t = a.path.times[i];
    EXPECT_TRUE(MatNear(a.path.points[i], Mat2C::diag(std::exp(1 - std::exp(-t / 2)), std::exp(std::exp(t / 2) - 1)), 1e-6));
    EXPECT_TRUE(MatNear(b.path.points[i], Mat2C::diag(1.0, std::exp(std::exp(t / 2) - 1)), 1e-6));
  }
  EXPECT_LT(a.covector_residual, 1e-10);
  EXPECT_LT(b.covector_residual, 1e-10);
}

TEST(Abnormal, UnitRateKappa) {
  const auto k = KappaSamples::from_function([](double t) { return t; }, 2.0, 4000);
  const AbnormalResult a = abnormal_extremal(k, {0, 0, 1}, Regime::kTimelike, 2000);
  const double t = 2.0;
  EXPECT_TRUE(MatNear(a.path.points.back(),
                      Mat2C::diag(std::exp((1 - std::exp(-t)) / 2), std::exp((std::exp(t) - 1) / 2)), 1e-8));
}

TEST(Abnormal, ConstantKappaIsSubgroup) {
  const double c0 = 0.7;
  const Vec3 dir{0.3, -0.2, 0.9};
  const double n = std::sqrt(0.09 + 0.04 + 0.81);
  const auto k = KappaSamples::from_function([c0](double) { return c0; }, 2.0, 4);
  const AbnormalResult a = abnormal_extremal(k, dir, Regime::kTimelike, 400);
  Mat2C gen = std::cosh(c0) * basis_matrix(0);
  for (int i = 0; i < 3; ++i) gen -= std::sinh(c0) * dir[static_cast<std::size_t>(i)] / n * basis_matrix(i + 1);
  for (std::size_t i = 0; i < a.path.size(); i += 40)
    EXPECT_LT(rel_diff(a.path.points[i], exp_series(a.path.times[i] * gen)), 1e-9);
}

TEST(Abnormal, RejectsKappaCrossingZero) {
  const auto k = KappaSamples::from_function([](double t) { return t - 1.0; }, 2.0, 10);
  EXPECT_THROW(abnormal_extremal(k, {0, 0, 1}, Regime::kIsotropic, 10), GeometryError);
  EXPECT_THROW(abnormal_extremal(k, {0, 0, 0}, Regime::kTimelike, 10), GeometryError);
}

TEST(KappaSamples, LinearInterpolation) {
  const KappaSamples k{{0.0, 1.0, 2.0}, {0.0, 2.0, 0.0}};
  EXPECT_EQ(k(0.5), 1.0);
  EXPECT_EQ(k(1.5), 1.0);
  EXPECT_EQ(k(-1.0), 0.0);
  EXPECT_EQ(k(5.0), 0.0);
}

TEST(Nonstrict, SubgroupCertificate) {
  const double s2 = std::sqrt(2.0);
  PathSample p;
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.02 * i;
    p.times.push_back(t);
    p.points.push_back(exp_closed(ComplexAlgVec{{s2, 1.0, 0.0, 0.0}}, t));
  }
  const NonstrictReport r = nonstrict_abnormal_check(p);
  ASSERT_TRUE(r.nonstrict);
  ASSERT_TRUE(r.covector.has_value());
  const std::array<double, 7> want{0, 0, 0, 0, -1, 0, 0};
  for (std::size_t k = 0; k < 7; ++k) EXPECT_NEAR((*r.covector)[k], want[k], 1e-7);
}

TEST(Nonstrict, ScalarPath) {
  PathSample p;
  for (int i = 0; i <= 50; ++i) {
    p.times.push_back(0.04 * i);
    p.points.push_back(std::exp(0.02 * i) * Mat2C::identity());
  }
  const NonstrictReport r = nonstrict_abnormal_check(p);
  EXPECT_TRUE(r.nonstrict);
  EXPECT_TRUE(r.covector.has_value());
}

TEST(Nonstrict, StrictlyAbnormalPathFails) {
  const auto k = KappaSamples::from_function([](double t) { return t / 2; }, 3.0, 600);
  const AbnormalResult a = abnormal_extremal(k, {0, 0, 1}, Regime::kTimelike, 300);
  EXPECT_FALSE(nonstrict_abnormal_check(a.path).nonstrict);
}

TEST(SU2, ConjugationProperties) {
  testsupport::Random rng(51);
  const Mat2C g = rng.matrix(1.0);
  EXPECT_TRUE(MatNear(su2_conjugate(Mat2C::identity(), g), g, 0.0));
  EXPECT_THROW(su2_conjugate(Mat2C::diag(2.0, 0.5), g), GeometryError);
  for (int n = 0; n < 50; ++n) {
    const Mat2C s = random_su2(rng);
    EXPECT_TRUE(MatNear(su2_conjugate(s, basis_matrix(0)), basis_matrix(0), 1e-15));
    const Mat2C h = rng.matrix(2.0);
    EXPECT_LT(std::abs(su2_conjugate(s, h).det() - h.det()), 1e-13);
  }
}

TEST(SU2, AxisRotationMatchesAdjointAction) {
  // Ad(exp(theta e4)) e2 = cos(theta) e2 + sin(theta) [e4, e2].
  const double th = 0.83;
  const Mat2C s = exp_series(th * basis_matrix(4));
  const AlgCoords c = to_coords(su2_conjugate(s, basis_matrix(2)));
  const AlgCoords want = to_coords(commutator(basis_matrix(4), basis_matrix(2)));
  EXPECT_NEAR(c[2], std::cos(th), 1e-14);
  EXPECT_NEAR(c[3], std::sin(th) * want[3], 1e-14);
  EXPECT_NEAR(c[1], 0.0, 1e-14);
}

TEST(Canonical, Examples) {
  const ExtremalParams p = ExtremalParams::timelike({0, 1, 0}, {0.2, 0.5, -0.1});
  const CanonicalForm cf = canonical_reduce(p);
  EXPECT_NEAR(cf.params[1], 1.0, 1e-14);
  EXPECT_NEAR(cf.params[2], 0.0, 1e-14);
  EXPECT_NEAR(cf.params[3], 0.0, 1e-14);

  const ExtremalParams aligned = ExtremalParams::timelike({0.7, 0, 0}, {0.2, 0.5, -0.1});
  const CanonicalForm same = canonical_reduce(aligned);
  EXPECT_TRUE(MatNear(same.s, Mat2C::identity(), 1e-15));
  EXPECT_EQ(same.params.alpha(), aligned.alpha());

  const ExtremalParams zero = ExtremalParams::timelike({0, 0, 0}, {0.2, 0.5, -0.1});
  EXPECT_EQ(canonical_reduce(zero).params.alpha(), zero.alpha());
}

TEST(Canonical, ConjugationIdentity) {
  testsupport::Random rng(52);
  for (Regime regime : {Regime::kTimelike, Regime::kIsotropic})
    for (int n = 0; n < 50; ++n) {
      const ExtremalParams p = random_params(rng, regime);
      const CanonicalForm cf = canonical_reduce(p);
      EXPECT_GE(cf.params[1], 0.0);
      for (double t : {0.4, 1.3}) {
        const Mat2C lhs = su2_conjugate(cf.s, normal_extremal(p, t));
        EXPECT_LT(rel_diff(lhs, normal_extremal(cf.params, t)), 1e-10);
      }
    }
}

TEST(Relation, Examples) {
  EXPECT_EQ(causal_relation(Mat2C::identity(), kE * Mat2C::identity()), CausalRelation::kChronological);
  const Mat2C x = std::exp(0.3) * exp_series(0.4 * basis_matrix(2));
  EXPECT_EQ(causal_relation(x, x), CausalRelation::kCausalNull);
  EXPECT_EQ(causal_relation(Mat2C::identity(), exp_series(basis_matrix(1))), CausalRelation::kUnrelated);
}

TEST(Relation, ReverseTriangleOnBoostChain) {
  // x = e^{a/2} exp(b e1), z = e^{c/2} exp(d e1): all boosts commute along e1.
  auto g = [](double xi, double eta) { return std::exp(xi / 2) * exp_series(eta * basis_matrix(1)); };
  const double dxz = causal_classify(g(3.0, 1.0)).distance.value;
  const double dxy = causal_classify(g(1.0, 0.2)).distance.value;
  const double dyz = causal_classify(g(2.0, 0.8)).distance.value;
  EXPECT_GE(dxz, dxy + dyz - 1e-12);

  const double e1 = causal_classify(g(2.0, 1.0)).distance.value;
  const double h1 = causal_classify(g(1.0, 0.5)).distance.value;
  EXPECT_NEAR(e1, 2.0 * h1, 1e-12);
}
