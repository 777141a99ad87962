#include "sublorentz/sublorentzian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rk4.hpp"

namespace sublorentz {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kNormTol = 1e-12;
// Polar factors closer than this to I (or X closer to 0) are treated as exact.
constexpr double kExactTargetTol = 1e-10;

double norm3(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

bool all_finite(const std::array<double, 7>& a) {
  return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

using GState = std::array<double, 8>;

GState pack(const Mat2C& g) {
  GState s{};
  for (int i = 0; i < 4; ++i) {
    s[2 * i] = g.entries()[i].real();
    s[2 * i + 1] = g.entries()[i].imag();
  }
  return s;
}

Mat2C unpack(const double* s) {
  return {cplx{s[0], s[1]}, cplx{s[2], s[3]}, cplx{s[4], s[5]}, cplx{s[6], s[7]}};
}

template <std::size_t N>
bool finite_state(const std::array<double, N>& s) {
  return std::all_of(s.begin(), s.end(), [](double v) { return std::isfinite(v); });
}

/// g u as packed entries, without the finiteness check of Mat2C.
void group_rhs(const double* g, const Mat2C& u, double* out) {
  const cplx a{g[0], g[1]}, b{g[2], g[3]}, c{g[4], g[5]}, d{g[6], g[7]};
  const cplx r[4] = {a * u(0, 0) + b * u(1, 0), a * u(0, 1) + b * u(1, 1), c * u(0, 0) + d * u(1, 0),
                     c * u(0, 1) + d * u(1, 1)};
  for (int i = 0; i < 4; ++i) {
    out[2 * i] = r[i].real();
    out[2 * i + 1] = r[i].imag();
  }
}

double sup_norm(const std::array<double, 7>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::kTimelike: return "timelike";
    case Regime::kIsotropic: return "isotropic";
  }
  return "unknown";
}

ExtremalParams::ExtremalParams(const std::array<double, 7>& alpha, Regime regime) : alpha_(alpha), regime_(regime) {
  if (!all_finite(alpha)) throw GeometryError(ErrorCode::kNonFinite, "ExtremalParams: non-finite entry");
  const double a = std::hypot(alpha[1], alpha[2], alpha[3]);
  if (regime == Regime::kTimelike) {
    const double expected = std::sqrt(1.0 + a * a);
    const double r = std::abs(alpha[0] - expected);
    if (!(r <= kNormTol * expected)) {
      throw GeometryError(ErrorCode::kBadNormalization,
                          "ExtremalParams: timelike normalization violated by " + std::to_string(r));
    }
  } else {
    const double r = std::max(std::abs(alpha[0] - 1.0), std::abs(a - 1.0));
    if (!(r <= kNormTol)) {
      throw GeometryError(ErrorCode::kBadNormalization,
                          "ExtremalParams: isotropic normalization violated by " + std::to_string(r));
    }
  }
}

ExtremalParams ExtremalParams::timelike(const Vec3& a, const Vec3& b) {
  const double n = norm3(a);
  return ExtremalParams({std::sqrt(1.0 + n * n), a[0], a[1], a[2], b[0], b[1], b[2]}, Regime::kTimelike);
}

ExtremalParams ExtremalParams::isotropic(const Vec3& a, const Vec3& b) {
  const double n = norm3(a);
  if (!(n > 0.0)) throw GeometryError(ErrorCode::kBadNormalization, "ExtremalParams: isotropic alpha is zero");
  return ExtremalParams({1.0, a[0] / n, a[1] / n, a[2] / n, b[0], b[1], b[2]}, Regime::kIsotropic);
}

Mat2C normal_extremal(const ExtremalParams& p, double t) { return ProductExpParams{p.alpha()}.evaluate(t); }

AlgCoords normal_extremal_control(const ExtremalParams& p, double t) {
  const auto& a = p.alpha();
  AlgCoords full;
  AlgCoords b;
  for (int i = 0; i < 7; ++i) full[i] = a[static_cast<std::size_t>(i)];
  for (int i = 4; i < 7; ++i) b[i] = a[static_cast<std::size_t>(i)];
  const Mat2C eb = exp_closed(ComplexAlgVec::from_coords(b), t);
  return to_coords(eb * from_coords(full - b) * eb.adjoint());
}

Mat2C normal_extremal_reduced(double alpha1, double alpha4, double alpha5, double alpha6, double alpha0, double t) {
  const double w2 = 0.5 * std::hypot(alpha4, alpha5, alpha6);
  const cplx w1 = 0.5 * std::sqrt(cplx{alpha1 * alpha1 - 4.0 * w2 * w2, 2.0 * alpha1 * alpha4});
  const double e = std::exp(alpha0 * t / 2.0);
  const cplx m1 = std::cosh(w1 * t);
  const cplx n1 = sinh_over(w1, t);
  const double m2 = std::cos(w2 * t);
  const double n2 = sin_over(w2, t);

  const cplx c0 = 2.0 * e * (m1 * m2 + n1 * n2 * w2 * w2);
  const cplx c7 = -0.5 * e * n1 * n2 * alpha1 * alpha4;
  const cplx c1 = e * n1 * alpha1 * m2;
  const cplx c2 = 0.5 * e * n1 * alpha1 * alpha6 * n2;
  const cplx c3 = -0.5 * e * n1 * alpha1 * alpha5 * n2;
  const cplx rot = e * (m2 * n1 - m1 * n2);
  const cplx z0 = c0 + kI * c7;
  const cplx z1 = c1 + kI * rot * alpha4;
  const cplx z2 = c2 + kI * rot * alpha5;
  const cplx z3 = c3 + kI * rot * alpha6;
  return {0.5 * (z0 + z3), 0.5 * (z1 + kI * z2), 0.5 * (z1 - kI * z2), 0.5 * (z0 - z3)};
}

double CovectorState::hamiltonian() const {
  return psi[0] * psi[0] - psi[1] * psi[1] - psi[2] * psi[2] - psi[3] * psi[3];
}

AlgCoords CovectorState::control() const { return AlgCoords{{psi[0], -psi[1], -psi[2], -psi[3], 0, 0, 0, 0}}; }

CovectorState covector_from_params(const ExtremalParams& p) {
  const auto& a = p.alpha();
  return CovectorState{{a[0], -a[1], -a[2], -a[3], a[4], a[5], a[6]}};
}

ExtremalParams params_from_covector(const CovectorState& s, Regime regime) {
  const auto& q = s.psi;
  return ExtremalParams({q[0], -q[1], -q[2], -q[3], q[4], q[5], q[6]}, regime);
}

std::array<double, 7> coadjoint_rhs(const AlgCoords& u, const std::array<double, 7>& psi) {
  const StructureTable& C = structure_constants();
  std::array<double, 7> out{};
  for (int i = 0; i < 7; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < 7; ++j) {
      double s = 0.0;
      for (int k = 0; k < 7; ++k) s += C[i][j][k] * psi[static_cast<std::size_t>(k)];
      out[static_cast<std::size_t>(j)] += u[i] * s;
    }
  }
  return out;
}

PontryaginResult pontryagin_integrate(const CovectorState& psi0, Regime regime, double T, int steps) {
  if (!(T >= 0.0) || steps < 1) throw GeometryError(ErrorCode::kInvalidArgument, "pontryagin_integrate: bad range");
  // Validates the regime normalization of the induced parameters.
  (void)params_from_covector(psi0, regime);

  using State = std::array<double, 15>;
  auto rhs = [](double, const State& y) {
    CovectorState c;
    std::copy_n(y.begin(), 7, c.psi.begin());
    const AlgCoords u = c.control();
    const auto dpsi = coadjoint_rhs(u, c.psi);
    State d{};
    std::copy(dpsi.begin(), dpsi.end(), d.begin());
    group_rhs(y.data() + 7, from_coords(u), d.data() + 7);
    return d;
  };

  PontryaginResult out;
  PathSample& path = out.path;
  path.times.reserve(static_cast<std::size_t>(steps) + 1);
  State y{};
  std::copy(psi0.psi.begin(), psi0.psi.end(), y.begin());
  const GState g0 = pack(Mat2C::identity());
  std::copy(g0.begin(), g0.end(), y.begin() + 7);

  const double h0 = psi0.hamiltonian();
  const double h = T / steps;
  auto record = [&](double t) {
    CovectorState c;
    std::copy_n(y.begin(), 7, c.psi.begin());
    path.times.push_back(t);
    path.points.push_back(unpack(y.data() + 7));
    path.controls.push_back(c.control());
    path.covectors.push_back(c);
    out.hamiltonian_drift = std::max(out.hamiltonian_drift, std::abs(c.hamiltonian() - h0));
  };
  record(0.0);
  for (int n = 0; n < steps; ++n) {
    const double t = n * h;
    y = detail::rk4_step(rhs, t, y, h);
    if (!finite_state(y)) {
      throw DivergenceError(t + h, "pontryagin_integrate: state diverged at t = " + std::to_string(t + h));
    }
    record(n + 1 == steps ? T : (n + 1) * h);
  }
  return out;
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::kIdentity: return "identity";
    case CausalClass::kTimelike: return "timelike";
    case CausalClass::kIsotropic: return "isotropic";
    case CausalClass::kUnreachable: return "unreachable";
    case CausalClass::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

CausalReport causal_classify(const Mat2C& g, const ShootOptions& opts) {
  const cplx det = g.det();
  if (!(std::abs(det.imag()) <= 1e-12 * std::abs(det)) || !(det.real() > 0.0)) {
    throw GeometryError(ErrorCode::kNotInGLPlus, "causal_classify: det g is not real positive");
  }
  const double tol = opts.tol;
  CausalReport rep;
  rep.xi = std::log(det.real());
  const Mat2C g1 = std::exp(-rep.xi / 2.0) * g;

  const PolarDecomposition pd = polar_decompose(g1, 1e-9);
  const Vec3 xvec{pd.X[1], pd.X[2], pd.X[3]};
  const double xnorm = norm3(xvec);
  const bool k_trivial = max_abs_diff(pd.k, Mat2C::identity()) <= kExactTargetTol;

  if (k_trivial) {
    // Scalar or boost target: eta = |X| exactly, reached by exp(t X / |X|).
    rep.exact_eta = true;
    rep.eta.lower = rep.eta.upper = xnorm;
    rep.eta.feasible = rep.eta.converged = true;
    rep.eta.witness.alpha = xnorm > 0.0 ? Vec3{xvec[0] / xnorm, xvec[1] / xnorm, xvec[2] / xnorm} : Vec3{1, 0, 0};
    rep.eta.witness.T = xnorm;
    if (xnorm == 0.0 && std::abs(rep.xi) <= tol) {
      rep.cls = CausalClass::kIdentity;
      rep.distance = SLDistance::finite(0.0);
      return rep;
    }
  } else {
    rep.extrapolated = xnorm <= kExactTargetTol;
    rep.eta = distance_shoot(g1, opts);
  }

  const double lo = rep.eta.lower;
  const double up = rep.eta.upper;
  const double xi = rep.xi;
  if (rep.eta.feasible && xi > up + tol) {
    rep.cls = CausalClass::kTimelike;
    rep.distance_lower = std::sqrt((xi - up) * (xi + up));
    rep.distance_upper = std::sqrt((xi - lo) * (xi + lo));
    rep.distance = SLDistance::finite(rep.distance_lower);
    rep.c_param = std::atanh(up / xi);
  } else if (xi < lo - tol) {
    rep.cls = CausalClass::kUnreachable;
    rep.distance = SLDistance::minus_infinity();
  } else if (rep.eta.converged && xi >= lo - tol && xi <= up + tol) {
    rep.cls = CausalClass::kIsotropic;
    rep.distance = SLDistance::finite(0.0);
    rep.distance_upper = xi > lo ? std::sqrt((xi - lo) * (xi + lo)) : 0.0;
  } else {
    rep.cls = CausalClass::kIndeterminate;
    rep.distance = SLDistance::unknown();
  }
  return rep;
}

LongestArc longest_arc(const Mat2C& g, int samples, const ShootOptions& opts) {
  if (samples < 2) throw GeometryError(ErrorCode::kInvalidArgument, "longest_arc: need at least 2 samples");
  LongestArc arc;
  arc.report = causal_classify(g, opts);
  const CausalReport& rep = arc.report;
  if (rep.cls == CausalClass::kIdentity) return arc;
  if (rep.cls != CausalClass::kTimelike && rep.cls != CausalClass::kIsotropic) {
    throw NotReachableError(rep, std::string("longest_arc: target is ") + to_string(rep.cls));
  }

  const ShootWitness& w = rep.eta.witness;
  if (rep.cls == CausalClass::kTimelike) {
    const double k = rep.distance.value;
    const double sh = w.T / k;
    arc.duration = k;
    arc.params = ExtremalParams({std::sqrt(1.0 + sh * sh), sh * w.alpha[0], sh * w.alpha[1], sh * w.alpha[2],
                                 sh * w.beta[0], sh * w.beta[1], sh * w.beta[2]},
                                Regime::kTimelike);
  } else {
    arc.duration = rep.xi;
    arc.params = ExtremalParams({1.0, w.alpha[0], w.alpha[1], w.alpha[2], w.beta[0], w.beta[1], w.beta[2]},
                                Regime::kIsotropic);
  }

  const ExtremalParams& p = *arc.params;
  const CovectorState psi0 = covector_from_params(p);
  PathSample& path = arc.path;
  for (int j = 0; j < samples; ++j) {
    const double t = j + 1 == samples ? arc.duration : arc.duration * j / (samples - 1);
    path.times.push_back(t);
    path.points.push_back(normal_extremal(p, t));
    const AlgCoords u = normal_extremal_control(p, t);
    path.controls.push_back(u);
    CovectorState c = psi0;
    for (int i = 1; i <= 3; ++i) c.psi[static_cast<std::size_t>(i)] = -u[i];
    path.covectors.push_back(c);
  }
  arc.endpoint_residual = rel_diff(path.points.back(), g);
  return arc;
}

double KappaSamples::operator()(double t) const {
  if (times.empty()) throw GeometryError(ErrorCode::kInvalidArgument, "KappaSamples: no samples");
  if (t <= times.front()) return values.front();
  if (t >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times.begin());
  const double t0 = times[i - 1];
  const double t1 = times[i];
  const double s = (t - t0) / (t1 - t0);
  return values[i - 1] + s * (values[i] - values[i - 1]);
}

KappaSamples KappaSamples::from_function(const std::function<double(double)>& f, double T, int n) {
  if (n < 1 || !(T > 0.0)) throw GeometryError(ErrorCode::kInvalidArgument, "KappaSamples: bad range");
  KappaSamples k;
  for (int i = 0; i <= n; ++i) {
    const double t = i == n ? T : T * i / n;
    k.times.push_back(t);
    k.values.push_back(f(t));
  }
  return k;
}

AbnormalResult abnormal_extremal(const KappaSamples& kappa, const Vec3& beta_dir, Regime regime, int steps) {
  if (kappa.times.size() < 2 || kappa.times.size() != kappa.values.size()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "abnormal_extremal: need matching kappa samples");
  }
  for (std::size_t i = 1; i < kappa.times.size(); ++i) {
    if (!(kappa.times[i] > kappa.times[i - 1])) {
      throw GeometryError(ErrorCode::kInvalidArgument, "abnormal_extremal: kappa times must increase");
    }
  }
  if (steps < 1) throw GeometryError(ErrorCode::kInvalidArgument, "abnormal_extremal: steps must be positive");
  const double bn = norm3(beta_dir);
  if (!(bn > 0.0)) throw GeometryError(ErrorCode::kInvalidArgument, "abnormal_extremal: beta_dir must be nonzero");
  const Vec3 bh{beta_dir[0] / bn, beta_dir[1] / bn, beta_dir[2] / bn};
  if (regime == Regime::kIsotropic) {
    const bool pos = std::all_of(kappa.values.begin(), kappa.values.end(), [](double v) { return v > 0.0; });
    const bool neg = std::all_of(kappa.values.begin(), kappa.values.end(), [](double v) { return v < 0.0; });
    if (!pos && !neg) {
      throw GeometryError(ErrorCode::kInvalidArgument, "abnormal_extremal: isotropic kappa must not vanish");
    }
  }

  auto control = [&](double t) {
    const double k = kappa(t);
    const double u0 = regime == Regime::kTimelike ? std::cosh(k) : std::abs(k);
    const double s = regime == Regime::kTimelike ? std::sinh(k) : k;
    return AlgCoords{{u0, -s * bh[0], -s * bh[1], -s * bh[2], 0, 0, 0, 0}};
  };
  auto rhs = [&](double t, const GState& y) {
    GState d{};
    group_rhs(y.data(), from_coords(control(t)), d.data());
    return d;
  };

  const std::array<double, 7> psi{0, 0, 0, 0, -bh[0], -bh[1], -bh[2]};
  AbnormalResult out;
  PathSample& path = out.path;
  const double t0 = kappa.times.front();
  const double T1 = kappa.times.back();
  const double h = (T1 - t0) / steps;
  GState y = pack(Mat2C::identity());
  auto record = [&](double t) {
    const AlgCoords u = control(t);
    path.times.push_back(t);
    path.points.push_back(unpack(y.data()));
    path.controls.push_back(u);
    path.covectors.push_back(CovectorState{psi});
    out.covector_residual = std::max(out.covector_residual, sup_norm(coadjoint_rhs(u, psi)));
  };
  record(t0);
  for (int n = 0; n < steps; ++n) {
    const double t = t0 + n * h;
    y = detail::rk4_step(rhs, t, y, h);
    if (!finite_state(y)) {
      throw DivergenceError(t + h, "abnormal_extremal: state diverged at t = " + std::to_string(t + h));
    }
    record(n + 1 == steps ? T1 : t0 + (n + 1) * h);
  }
  return out;
}

NonstrictReport nonstrict_abnormal_check(const PathSample& p) {
  NonstrictReport rep;
  if (p.size() < 2 || p.points.size() != p.size()) return rep;

  std::vector<AlgCoords> us;
  us.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double dt = p.times[i + 1] - p.times[i];
    if (!(dt > 0.0)) return rep;
    us.push_back((1.0 / dt) * to_coords(log_principal(p.points[i].inverse() * p.points[i + 1])));
  }
  AlgCoords mean;
  for (const AlgCoords& u : us) mean = mean + u;
  mean = (1.0 / static_cast<double>(us.size())) * mean;
  rep.control = mean;

  double scale = 1.0;
  for (double v : mean.u) scale = std::max(scale, std::abs(v));
  for (const AlgCoords& u : us)
    for (int k = 0; k < 8; ++k) rep.control_deviation = std::max(rep.control_deviation, std::abs(u[k] - mean[k]));
  rep.control_deviation /= scale;

  constexpr double kTol = 1e-7;
  if (!(rep.control_deviation < kTol) || !mean.in_H(kTol) || !(mean[0] > 0.0)) return rep;

  const Vec3 uv{mean[1], mean[2], mean[3]};
  const double un = norm3(uv);
  const double q = mean[0] * mean[0] - un * un;
  const double qscale = std::max(1.0, mean[0] * mean[0]);
  std::array<double, 7> psi{};
  if (std::abs(q - 1.0) <= kTol * qscale) {
    rep.regime = Regime::kTimelike;
    if (mean[0] > 1.0 + kTol && un > 0.0) {
      const double r = std::sqrt(mean[0] * mean[0] - 1.0);
      psi = {0, 0, 0, 0, -uv[0] / r, -uv[1] / r, -uv[2] / r};
    } else {
      psi = {0, 0, 0, 0, -1, 0, 0};
    }
  } else if (std::abs(q) <= kTol * qscale && un > 0.0) {
    rep.regime = Regime::kIsotropic;
    psi = {0, 0, 0, 0, -uv[0] / un, -uv[1] / un, -uv[2] / un};
  } else {
    return rep;
  }
  AlgCoords uh = mean;
  for (int k = 4; k < 8; ++k) uh[k] = 0.0;
  rep.covector = psi;
  rep.covector_residual = sup_norm(coadjoint_rhs(uh, psi));
  rep.nonstrict = true;
  return rep;
}

Mat2C su2_conjugate(const Mat2C& s, const Mat2C& g) {
  if (!s.is_special_unitary(1e-12)) {
    throw GeometryError(ErrorCode::kNotSpecialUnitary, "su2_conjugate: s is not in SU(2)");
  }
  return s * g * s.adjoint();
}

CanonicalForm canonical_reduce(const ExtremalParams& p) {
  const auto& a = p.alpha();
  const Vec3 av{a[1], a[2], a[3]};
  if (!(norm3(av) > 0.0)) return CanonicalForm{p, Mat2C::identity()};
  const AxisAlignment al = align_to_first_axis(av);
  const Vec3 br = rotate(al.R, Vec3{a[4], a[5], a[6]});
  // Exact zeros in the rotated frame keep the normalization check unaffected.
  const std::array<double, 7> out{a[0], norm3(av), 0.0, 0.0, br[0], br[1], br[2]};
  return CanonicalForm{ExtremalParams(out, p.regime()), al.s};
}

const char* to_string(CausalRelation r) {
  switch (r) {
    case CausalRelation::kChronological: return "chronological";
    case CausalRelation::kCausalNull: return "causal-null";
    case CausalRelation::kUnrelated: return "unrelated";
    case CausalRelation::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

CausalRelation causal_relation(const Mat2C& x, const Mat2C& y, const ShootOptions& opts) {
  const CausalReport r = causal_classify(x.inverse() * y, opts);
  switch (r.cls) {
    case CausalClass::kIdentity:
    case CausalClass::kIsotropic: return CausalRelation::kCausalNull;
    case CausalClass::kTimelike: return CausalRelation::kChronological;
    case CausalClass::kUnreachable: return CausalRelation::kUnrelated;
    case CausalClass::kIndeterminate: return CausalRelation::kIndeterminate;
  }
  return CausalRelation::kIndeterminate;
}

}  // namespace sublorentz
