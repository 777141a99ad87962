#include "validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "sublorentz/sublorentzian.hpp"

namespace slval {

using namespace sublorentz;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

/// Portable random source: only raw mt19937_64 output is used, mapped by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }
  Vec3 unit3() {
    for (;;) {
      const Vec3 v{normal(), normal(), normal()};
      const double n = std::hypot(v[0], v[1], v[2]);
      if (n > 1e-3) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }
  Vec3 vec3(double max_norm) {
    const Vec3 d = unit3();
    const double r = max_norm * uniform();
    return {r * d[0], r * d[1], r * d[2]};
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

 private:
  std::mt19937_64 eng_;
};

double norm3(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

Vec3 scale3(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

Mat2C exp_h0(const Vec3& x) { return exp_closed(ComplexAlgVec{{0.0, x[0], x[1], x[2]}}, 1.0); }

Mat2C random_su2(Rng& rng) {
  const Vec3 axis = rng.unit3();
  const double angle = rng.uniform(0.0, 2.0 * kPi);
  const cplx i{0.0, 1.0};
  return exp_closed(ComplexAlgVec{{0.0, i * axis[0], i * axis[1], i * axis[2]}}, angle);
}

/// Bisection for a continuous f with a sign change on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Rotation matrix taking e1 to a random direction.
std::array<Vec3, 3> random_rotation(Rng& rng) { return adjoint_rotation(random_su2(rng)); }

// ---------------------------------------------------------------------------

CriterionResult algebra(Rng&) {
  CriterionResult r;
  // Nonzero brackets [e_i, e_j] = s e_k, one entry per unordered pair.
  struct Rel {
    int i, j, k;
    double s;
  };
  static constexpr Rel kRelations[] = {
      {4, 5, 6, 1}, {1, 2, 6, -1}, {4, 2, 3, 1}, {1, 5, 3, 1},  //
      {5, 6, 4, 1}, {2, 3, 4, -1}, {5, 3, 1, 1}, {2, 6, 1, 1},  //
      {6, 4, 5, 1}, {3, 1, 5, -1}, {6, 1, 2, 1}, {3, 4, 2, 1},
  };
  StructureTable expected{};
  for (const Rel& rel : kRelations) {
    expected[rel.i][rel.j][rel.k] = rel.s;
    expected[rel.j][rel.i][rel.k] = -rel.s;
  }
  const StructureTable& C = structure_constants();
  int mismatches = 0;
  int antisymmetry = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        if (C[i][j][k] != expected[i][j][k]) ++mismatches;
        if (C[i][j][k] != -C[j][i][k]) ++antisymmetry;
      }
  double jacobi = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        const Mat2C a = basis_matrix(i), b = basis_matrix(j), c = basis_matrix(k);
        const Mat2C s = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                        commutator(commutator(c, a), b);
        jacobi = std::max(jacobi, s.max_abs());
      }
  const double clifford = clifford_check().max_residual;
  r.measured = jacobi;
  r.threshold = 1e-14;
  r.pass = mismatches == 0 && antisymmetry == 0 && jacobi < 1e-14 && clifford == 0.0;
  r.detail = {{"table_mismatches", mismatches},
              {"antisymmetry_violations", antisymmetry},
              {"jacobi_residual", jacobi},
              {"clifford_residual", clifford}};
  return r;
}

CriterionResult exp_oracle(Rng& rng) {
  CriterionResult r;
  auto disk = [&rng](double radius) {
    const double rho = radius * std::sqrt(rng.uniform());
    return std::polar(rho, rng.uniform(0.0, 2.0 * kPi));
  };
  double worst = 0.0;
  int near_nilpotent = 0;
  for (int n = 0; n < 1000; ++n) {
    ComplexAlgVec a;
    if (n % 10 == 9) {
      // Traceless part with z1^2 + z2^2 + z3^2 = 0 exercises the w -> 0 branch.
      a.z = {disk(3.0), disk(2.0), disk(2.0), 0.0};
      a.z[3] = std::sqrt(-(a.z[1] * a.z[1] + a.z[2] * a.z[2]));
      ++near_nilpotent;
    } else {
      a.z = {disk(3.0), disk(3.0), disk(3.0), disk(3.0)};
    }
    const double t = rng.uniform(-3.0, 3.0);
    const Mat2C closed = exp_closed(a, t);
    const Mat2C series = exp_series(cplx{t, 0.0} * a.matrix());
    worst = std::max(worst, rel_diff(closed, series));
  }
  r.measured = worst;
  r.threshold = 1e-12;
  r.pass = worst < 1e-12;
  r.detail = {{"draws", 1000}, {"near_nilpotent_draws", near_nilpotent}, {"max_relative_deviation", worst}};
  return r;
}

CriterionResult ode(Rng& rng) {
  CriterionResult r;
  constexpr double T = 5.0;
  constexpr int steps = 5000;
  double worst = 0.0;
  double drift = 0.0;
  json per_regime = json::object();
  for (Regime regime : {Regime::kTimelike, Regime::kIsotropic}) {
    double w = 0.0;
    for (int n = 0; n < 50; ++n) {
      const Vec3 a = regime == Regime::kTimelike ? rng.vec3(1.5) : rng.unit3();
      const Vec3 b = rng.vec3(1.5);
      const ExtremalParams p =
          regime == Regime::kTimelike ? ExtremalParams::timelike(a, b) : ExtremalParams::isotropic(a, b);
      const PontryaginResult res = pontryagin_integrate(covector_from_params(p), regime, T, steps);
      w = std::max(w, rel_diff(res.path.points.back(), normal_extremal(p, T)));
      drift = std::max(drift, res.hamiltonian_drift);
    }
    per_regime[to_string(regime)] = w;
    worst = std::max(worst, w);
  }
  r.measured = worst;
  r.threshold = 1e-8;
  r.pass = worst < 1e-8 && drift < 1e-9;
  r.detail = {{"final_state_deviation", per_regime}, {"hamiltonian_drift", drift}, {"step", T / steps}};
  return r;
}

CriterionResult distance(Rng&, std::uint64_t seed) {
  CriterionResult r;
  double worst = 0.0;
  bool ok = true;
  json rows = json::array();
  for (double T : {0.5, 1.0, 2.0}) {
    ShootOptions opts;
    opts.seed = seed;
    const DistanceBracket b = distance_shoot(exp_h0({T, 0.0, 0.0}), opts);
    const bool contains = b.lower <= T + 1e-12 && T <= b.upper + 1e-12;
    const double up_gap = b.upper - T;
    const double low_gap = std::abs(b.lower - T);
    ok = ok && b.feasible && contains && up_gap < 1e-3 && low_gap < 1e-12;
    worst = std::max({worst, up_gap, low_gap});
    rows.push_back({{"T", T}, {"lower", b.lower}, {"upper", b.upper}, {"solves", b.solves}});
  }
  r.measured = worst;
  r.threshold = 1e-3;
  r.pass = ok;
  r.detail = {{"targets", rows}};
  return r;
}

CriterionResult causal(Rng&, std::uint64_t seed) {
  CriterionResult r;
  ShootOptions opts;
  opts.seed = seed;
  const Mat2C b1 = exp_h0({1.0, 0.0, 0.0});
  const CausalReport t = causal_classify(std::exp(1.0) * b1, opts);
  const CausalReport i = causal_classify(std::exp(0.5) * b1, opts);
  const CausalReport u = causal_classify(b1, opts);
  const double dev = t.distance.is_finite() ? std::abs(t.distance.value - std::sqrt(3.0)) : INFINITY;
  r.measured = dev;
  r.threshold = 2e-3;
  r.pass = t.cls == CausalClass::kTimelike && dev <= 2e-3 && i.cls == CausalClass::kIsotropic &&
           u.cls == CausalClass::kUnreachable && u.distance.kind == SLDistance::Kind::kMinusInfinity;
  r.detail = {{"timelike", {{"class", to_string(t.cls)}, {"distance", t.distance.value}}},
              {"isotropic", {{"class", to_string(i.cls)}, {"xi", i.xi}, {"eta", i.eta.upper}}},
              {"unreachable",
               {{"class", to_string(u.cls)}, {"minus_infinity", u.distance.kind == SLDistance::Kind::kMinusInfinity}}}};
  return r;
}

CriterionResult cut(Rng&) {
  CriterionResult r;
  const double t0 = cut_bound(2.0);
  const Vec3 beta{0.0, 0.0, 2.0};
  const Mat2C g1 = sr_geodesic(SRGeodesicParams({1.0, 0.0, 0.0}, beta), t0);
  const Mat2C g2 = sr_geodesic(SRGeodesicParams({0.0, 1.0, 0.0}, beta), t0);
  const double diff = max_abs_diff(g1, g2);
  // Just before t0 the two geodesics are still apart.
  const double before = max_abs_diff(sr_geodesic(SRGeodesicParams({1.0, 0.0, 0.0}, beta), 0.9 * t0),
                                     sr_geodesic(SRGeodesicParams({0.0, 1.0, 0.0}, beta), 0.9 * t0));
  r.measured = diff;
  r.threshold = 1e-9;
  r.pass = diff < 1e-9 && before > 1e-3;
  r.detail = {{"t0", t0}, {"endpoint_difference", diff}, {"difference_at_0.9_t0", before}};
  return r;
}

CriterionResult hermitian(Rng& rng) {
  CriterionResult r;
  // First positive root of tan z = z.
  const double zstar = bisect([](double z) { return std::sin(z) - z * std::cos(z); }, kPi + 0.1, 1.5 * kPi - 1e-9);

  int false_pos = 0, false_neg = 0, excluded = 0, positives = 0;
  int kinds[5] = {0, 0, 0, 0, 0};
  double worst_pos_defect = 0.0;
  double min_neg_defect = INFINITY;
  for (int n = 0; n < 1000; ++n) {
    Vec3 a, b;
    const int kind = n % 10 < 4 ? 0 : n % 10 < 6 ? 1 : n % 10 < 8 ? 2 : n % 10 < 9 ? 3 : 4;
    ++kinds[kind];
    if (kind == 0) {  // generic
      a = scale3(rng.uniform(0.2, 6.0), rng.unit3());
      b = scale3(rng.uniform(0.2, 6.0), rng.unit3());
    } else if (kind == 1) {  // collinear
      a = scale3(rng.uniform(0.2, 6.0), rng.unit3());
      const double lam = rng.uniform(0.1, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      b = scale3(lam, a);
    } else {
      double alpha = 0.0, a4 = 0.0, beta = 0.0;
      if (kind == 2) {  // proportional triple with a common ratio h
        const double h = rng.uniform(0.2, 0.95);
        const int kb = rng.uniform() < 0.5 ? 2 : 3;
        const double half = bisect([h](double z) { return std::sin(z) - h * z * std::cos(z); }, kb * kPi + 1e-9,
                                   (kb + 0.5) * kPi - 1e-9);
        const int ky = kb - 1;
        const double y = bisect([h](double z) { return std::sin(z) - h * z * std::cos(z); }, ky * kPi + 1e-9,
                                (ky + 0.5) * kPi - 1e-9);
        const double x = bisect([h](double z) { return std::tanh(z) - h * z; }, 1e-6, 50.0);
        beta = 2.0 * half;
        alpha = std::sqrt(beta * beta + 4.0 * x * x - 4.0 * y * y);
        a4 = 4.0 * x * y / alpha;
      } else if (kind == 3) {  // x = cos(beta/2) = cos y = 0
        static constexpr int kPairs[3][2] = {{1, 0}, {2, 0}, {2, 1}};
        const auto& mn = kPairs[rng.index(3)];
        const double bm = 2 * mn[0] + 1, yn = 2 * mn[1] + 1;
        beta = bm * kPi;
        alpha = kPi * std::sqrt(bm * bm - yn * yn);
      } else {  // x = y = 0, tan(beta/2) = beta/2
        beta = 2.0 * zstar;
        alpha = beta;
      }
      if (a4 * a4 > beta * beta) {
        ++excluded;
        continue;
      }
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      const double rest = std::sqrt(beta * beta - a4 * a4);
      const auto R = random_rotation(rng);
      a = rotate(R, {alpha, 0.0, 0.0});
      b = rotate(R, {a4, rest * std::cos(phi), rest * std::sin(phi)});
    }
    const HermiticityReport rep = hermitian_endpoint_check(a, b);
    const bool predicted = rep.which != HermitianCase::kNotHermitian;
    if (!predicted && rep.condition_margin <= 1e-7) {
      ++excluded;
      continue;
    }
    if (predicted) {
      ++positives;
      worst_pos_defect = std::max(worst_pos_defect, rep.residual);
      if (!(rep.residual < 1e-8)) ++false_pos;
    } else {
      min_neg_defect = std::min(min_neg_defect, rep.residual);
      if (!(rep.residual > 1e-6)) ++false_neg;
    }
  }

  const double b4 = 2.0 * zstar;
  const HermiticityReport tan_case = hermitian_endpoint_check({b4, 0.0, 0.0}, {0.0, b4, 0.0});
  const bool tan_ok = tan_case.which == HermitianCase::kTangentFixedPoint && tan_case.residual < 1e-9;

  r.measured = false_pos + false_neg;
  r.threshold = 0.0;
  r.pass = false_pos == 0 && false_neg == 0 && tan_ok;
  r.detail = {{"false_positives", false_pos},
              {"false_negatives", false_neg},
              {"excluded", excluded},
              {"predicted_hermitian", positives},
              {"draws_by_kind",
               {{"generic", kinds[0]}, {"collinear", kinds[1]}, {"proportional", kinds[2]}, {"cos_vanishing", kinds[3]},
                {"tangent", kinds[4]}}},
              {"max_defect_predicted_hermitian", worst_pos_defect},
              {"min_defect_predicted_not", min_neg_defect},
              {"tangent_root_half_beta", zstar},
              {"tangent_case", to_string(tan_case.which)},
              {"tangent_defect", tan_case.residual}};
  return r;
}

CriterionResult abnormal(Rng&) {
  CriterionResult r;
  constexpr double T = 3.0;
  constexpr int steps = 3000;
  // Nodes at every half step so the RK4 stages sample kappa exactly.
  const KappaSamples k_time = KappaSamples::from_function([](double t) { return t / 2.0; }, T, 2 * steps);
  const KappaSamples k_iso = KappaSamples::from_function([](double t) { return std::exp(t / 2.0) / 2.0; }, T, 2 * steps);
  const AbnormalResult p1 = abnormal_extremal(k_time, {0, 0, 1}, Regime::kTimelike, steps);
  const AbnormalResult p2 = abnormal_extremal(k_iso, {0, 0, 1}, Regime::kIsotropic, steps);
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < p1.path.size(); ++i) {
    const double t = p1.path.times[i];
    e1 = std::max(e1, max_abs_diff(p1.path.points[i],
                                   Mat2C::diag(std::exp(1.0 - std::exp(-t / 2.0)), std::exp(std::exp(t / 2.0) - 1.0))));
  }
  for (std::size_t i = 0; i < p2.path.size(); ++i) {
    const double t = p2.path.times[i];
    e2 = std::max(e2, max_abs_diff(p2.path.points[i], Mat2C::diag(1.0, std::exp(std::exp(t / 2.0) - 1.0))));
  }

  // Test set for the nonstrict check: (path, expected).
  struct Case {
    const char* name;
    PathSample path;
    bool expected;
  };
  std::vector<Case> cases;
  auto sampled = [](const std::function<Mat2C(double)>& g, double Tend, int n) {
    PathSample p;
    for (int i = 0; i <= n; ++i) {
      const double t = Tend * i / n;
      p.times.push_back(t);
      p.points.push_back(g(t));
      p.controls.emplace_back();
    }
    return p;
  };
  const double s2 = std::sqrt(2.0);
  cases.push_back({"subgroup sqrt2 e0 + e1",
                   sampled([s2](double t) { return exp_closed(ComplexAlgVec{{s2, 1.0, 0.0, 0.0}}, t); }, 2.0, 200), true});
  cases.push_back({"scalar e^{t/2} I", sampled([](double t) { return std::exp(t / 2.0) * Mat2C::identity(); }, 2.0, 200),
                   true});
  cases.push_back({"constant kappa timelike",
                   abnormal_extremal(KappaSamples::from_function([](double) { return 0.7; }, 2.0, 4), {0.3, -0.2, 0.9},
                                     Regime::kTimelike, 400)
                       .path,
                   true});
  cases.push_back({"constant kappa isotropic",
                   abnormal_extremal(KappaSamples::from_function([](double) { return 1.3; }, 2.0, 4), {1.0, 1.0, 0.0},
                                     Regime::kIsotropic, 400)
                       .path,
                   true});
  const ExtremalParams straight = ExtremalParams::timelike({0.4, -0.3, 0.2}, {0.0, 0.0, 0.0});
  cases.push_back({"normal extremal with beta = 0",
                   sampled([&](double t) { return normal_extremal(straight, t); }, 2.0, 200), true});
  cases.push_back({"strictly abnormal timelike", p1.path, false});
  cases.push_back({"strictly abnormal isotropic", p2.path, false});
  const ExtremalParams bent = ExtremalParams::timelike({0.5, 0.0, 0.0}, {0.0, 0.7, 0.0});
  cases.push_back({"normal extremal with beta orthogonal",
                   sampled([&](double t) { return normal_extremal(bent, t); }, 2.0, 200), false});
  cases.push_back({"kappa = t timelike",
                   abnormal_extremal(KappaSamples::from_function([](double t) { return t; }, 2.0, 800), {0, 1, 0},
                                     Regime::kTimelike, 400)
                       .path,
                   false});

  int wrong = 0;
  json rows = json::array();
  double cert_err = 0.0;
  for (const Case& c : cases) {
    const NonstrictReport rep = nonstrict_abnormal_check(c.path);
    if (rep.nonstrict != c.expected) ++wrong;
    rows.push_back({{"path", c.name}, {"expected", c.expected}, {"got", rep.nonstrict},
                    {"control_deviation", rep.control_deviation}});
    if (std::string(c.name) == "subgroup sqrt2 e0 + e1" && rep.covector) {
      const std::array<double, 7> want{0, 0, 0, 0, -1, 0, 0};
      for (std::size_t k = 0; k < 7; ++k) cert_err = std::max(cert_err, std::abs((*rep.covector)[k] - want[k]));
    }
  }
  const double cov_res = std::max(p1.covector_residual, p2.covector_residual);
  r.measured = std::max(e1, e2);
  r.threshold = 1e-6;
  r.pass = e1 < 1e-6 && e2 < 1e-6 && wrong == 0 && cov_res < 1e-9 && cert_err < 1e-7;
  r.detail = {{"timelike_max_deviation", e1},
              {"isotropic_max_deviation", e2},
              {"covector_residual", cov_res},
              {"nonstrict_misclassified", wrong},
              {"certificate_error", cert_err},
              {"cases", rows}};
  return r;
}

CriterionResult isometry(Rng& rng, std::uint64_t seed) {
  CriterionResult r;
  ShootOptions opts;
  opts.seed = seed;
  double worst = 0.0;
  int unclassified = 0;
  json rows = json::array();
  for (int n = 0; n < 20; ++n) {
    Mat2C g;
    const char* kind = n < 10 ? "boost" : "geodesic";
    if (n < 10) {
      const Vec3 X = scale3(rng.uniform(0.3, 2.0), rng.unit3());
      const double xi = norm3(X) + rng.uniform(0.3, 2.0);
      g = std::exp(xi / 2.0) * exp_h0(X);
    } else {
      const double T = rng.uniform(0.3, 1.5);
      const SRGeodesicParams p(rng.unit3(), rng.vec3(1.5));
      const double xi = T + rng.uniform(0.3, 1.5);
      g = std::exp(xi / 2.0) * sr_geodesic(p, T);
    }
    const Mat2C s = random_su2(rng);
    const CausalReport a = causal_classify(g, opts);
    const CausalReport b = causal_classify(su2_conjugate(s, g), opts);
    if (a.cls != CausalClass::kTimelike || b.cls != CausalClass::kTimelike) {
      ++unclassified;
      continue;
    }
    const double d = std::abs(a.distance.value - b.distance.value);
    worst = std::max(worst, d);
    rows.push_back({{"kind", kind}, {"d", a.distance.value}, {"d_conjugated", b.distance.value}});
  }
  r.measured = worst;
  r.threshold = 5e-3;
  r.pass = unclassified == 0 && worst < 5e-3;
  r.detail = {{"pairs", rows}, {"unclassified", unclassified}};
  return r;
}

CriterionResult triangle(Rng& rng, std::uint64_t seed) {
  CriterionResult r;
  ShootOptions opts;
  opts.seed = seed;
  constexpr double kSlack = 1e-6;
  auto dist = [&](const Mat2C& x, const Mat2C& y) { return causal_classify(x.inverse() * y, opts); };

  double equality_dev = 0.0;
  double min_margin = INFINITY;
  int equal_triples = 0, generic_triples = 0, rejected = 0, failures = 0;

  // Collinear triples on longest arcs: one-parameter boost rays and general
  // normal extremals with short sub-Riemannian parameter.
  for (int n = 0; n < 25; ++n) {
    std::function<Mat2C(double)> arc;
    double t1, t2;
    if (n < 15) {
      const double c = rng.uniform(0.2, 1.2);
      const Vec3 dir = rng.unit3();
      arc = [c, dir](double t) {
        return std::exp(std::cosh(c) * t / 2.0) * exp_h0(scale3(std::sinh(c) * t, dir));
      };
      t1 = rng.uniform(0.3, 1.5);
      t2 = t1 + rng.uniform(0.3, 1.5);
    } else {
      const double c = rng.uniform(0.3, 1.0);
      const ExtremalParams p = ExtremalParams::timelike(scale3(std::sinh(c), rng.unit3()),
                                                        scale3(std::sinh(c), rng.vec3(0.8)));
      arc = [p](double t) { return normal_extremal(p, t); };
      const double tmax = 1.5 / std::sinh(c);
      t1 = rng.uniform(0.2, 0.5) * tmax;
      t2 = t1 + rng.uniform(0.2, 0.5) * tmax;
    }
    const Mat2C e = Mat2C::identity(), x = arc(t1), z = arc(t2);
    const CausalReport ex = dist(e, x), xz = dist(x, z), ez = dist(e, z);
    if (ex.cls != CausalClass::kTimelike || xz.cls != CausalClass::kTimelike || ez.cls != CausalClass::kTimelike) {
      ++failures;
      continue;
    }
    ++equal_triples;
    equality_dev = std::max(equality_dev, std::abs(ez.distance.value - ex.distance.value - xz.distance.value));
    min_margin = std::min(min_margin, ez.distance.value - ex.distance.value - xz.distance.value);
  }

  // Perturbed triples: the middle point leaves the arc.
  while (generic_triples < 25 && rejected < 200) {
    const double c = rng.uniform(0.2, 1.2);
    const Vec3 dir = rng.unit3();
    auto arc = [c, dir](double t) { return std::exp(std::cosh(c) * t / 2.0) * exp_h0(scale3(std::sinh(c) * t, dir)); };
    const double t1 = rng.uniform(0.5, 1.5);
    const double t2 = t1 + rng.uniform(0.5, 1.5);
    AlgCoords W;
    for (int k = 0; k < 7; ++k) W[k] = rng.normal();
    const Mat2C y = arc(t1) * exp_closed(ComplexAlgVec::from_coords(0.05 * W), 1.0);
    const Mat2C e = Mat2C::identity(), z = arc(t2);
    const CausalReport ey = dist(e, y);
    if (ey.cls != CausalClass::kTimelike) {
      ++rejected;
      continue;
    }
    const CausalReport yz = dist(y, z);
    if (yz.cls != CausalClass::kTimelike) {
      ++rejected;
      continue;
    }
    const CausalReport ez = dist(e, z);
    ++generic_triples;
    const double margin = ez.distance.value - ey.distance.value - yz.distance.value;
    min_margin = std::min(min_margin, margin);
  }

  r.measured = -min_margin;
  r.threshold = kSlack;
  r.pass = failures == 0 && equal_triples + generic_triples == 50 && equality_dev <= kSlack && min_margin >= -kSlack;
  r.detail = {{"collinear_triples", equal_triples},
              {"perturbed_triples", generic_triples},
              {"rejected_perturbations", rejected},
              {"unclassified_collinear", failures},
              {"max_equality_deviation", equality_dev},
              {"min_margin", min_margin},
              {"slack", kSlack}};
  return r;
}

struct Entry {
  int id;
  const char* group;
  const char* title;
  double limit;
  std::function<CriterionResult(Rng&, std::uint64_t)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {1, "algebra", "structure constants, Jacobi and Clifford identities", 1.0,
       [](Rng& g, std::uint64_t) { return algebra(g); }},
      {2, "exp", "closed-form exponential against the series oracle", 5.0,
       [](Rng& g, std::uint64_t) { return exp_oracle(g); }},
      {3, "ode", "integrated extremals against the closed form", 60.0, [](Rng& g, std::uint64_t) { return ode(g); }},
      {4, "distance", "distance brackets on boost targets", 120.0, distance},
      {5, "causal", "timelike, isotropic and unreachable targets", 120.0, causal},
      {6, "cut", "distinct geodesics meeting at the cut time", 1.0, [](Rng& g, std::uint64_t) { return cut(g); }},
      {7, "hermitian", "Hermitian endpoint classifier against the defect oracle", 30.0,
       [](Rng& g, std::uint64_t) { return hermitian(g); }},
      {8, "abnormal", "abnormal extremals and the subgroup test", 10.0,
       [](Rng& g, std::uint64_t) { return abnormal(g); }},
      {9, "isometry", "distance invariance under SU(2) conjugation", 300.0, isometry},
      {10, "triangle", "reverse triangle inequality on causal triples", 300.0, triangle},
  };
  return e;
}

}  // namespace

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Entry& e : entries()) n.emplace_back(e.group);
    return n;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (const Entry& e : entries()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.group) == opts.only.end()) continue;
    Rng rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(e.id));
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = e.run(rng, opts.seed);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = {{"exception", ex.what()}};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.id = e.id;
    r.group = e.group;
    r.title = e.title;
    r.time_limit = e.limit;
    r.pass = r.pass && r.seconds < e.limit;
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts) {
  json list = json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    list.push_back({{"id", r.id},
                    {"group", r.group},
                    {"title", r.title},
                    {"pass", r.pass},
                    {"measured", r.measured},
                    {"threshold", r.threshold},
                    {"time_limit_s", r.time_limit},
                    {"within_time_limit", r.seconds < r.time_limit},
                    {"detail", r.detail}});
  }
  return json{{"seed", opts.seed}, {"all_pass", all}, {"criteria", list}};
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %2d %-10s measured=%.3e threshold=%.1e time=%.2fs/%.0fs  %s",
                r.pass ? "PASS" : "FAIL", r.id, r.group.c_str(), r.measured, r.threshold, r.seconds, r.time_limit,
                r.title.c_str());
  return buf;
}

}  // namespace slval
