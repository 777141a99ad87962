#include "sublorentz/subriemannian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "linear_solve.hpp"

namespace sublorentz {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kNormalizationTol = 1e-12;

double norm3(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 scale3(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

std::array<Vec3, 3> transpose(const std::array<Vec3, 3>& R) {
  std::array<Vec3, 3> T{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T[i][j] = R[j][i];
  return T;
}

/// exp(phi (n . (e4, e5, e6))) for a unit axis n.
Mat2C su2_exp(const Vec3& axis, double phi) {
  return exp_closed(ComplexAlgVec{{0.0, kI * axis[0], kI * axis[1], kI * axis[2]}}, phi);
}

/// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vec3 random_unit(std::mt19937_64& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

using Residual = std::array<double, 8>;
using Unknowns = std::array<double, 6>;

Mat2C endpoint(const Unknowns& x) {
  ProductExpParams p;
  p.alpha = {0.0, x[0], x[1], x[2], x[3], x[4], x[5]};
  return p.evaluate(1.0);
}

bool residual(const Unknowns& x, const Mat2C& target, Residual& r) {
  try {
    const Mat2C d = endpoint(x) - target;
    for (int i = 0; i < 4; ++i) {
      r[2 * i] = d.entries()[i].real();
      r[2 * i + 1] = d.entries()[i].imag();
    }
  } catch (const GeometryError&) {
    return false;
  }
  for (double v : r)
    if (!std::isfinite(v)) return false;
  return true;
}

double norm_of(const Residual& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

struct LocalResult {
  Unknowns x{};
  double residual = std::numeric_limits<double>::infinity();
};

/// Levenberg-Marquardt on the 8 real residuals of endpoint(x) - target with
/// a central-difference Jacobian.
LocalResult solve_local(const Unknowns& start, const Mat2C& target, double max_norm) {
  LocalResult out;
  Unknowns x = start;
  Residual r{};
  if (!residual(x, target, r)) return out;
  double rn = norm_of(r);
  double mu = 1e-3;
  const double stop = 1e-15 * std::max(1.0, target.frobenius_norm());

  for (int iter = 0; iter < 200 && rn > stop; ++iter) {
    std::array<Residual, 6> J{};
    bool ok = true;
    for (int j = 0; j < 6 && ok; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
      Unknowns xp = x;
      Unknowns xm = x;
      xp[j] += h;
      xm[j] -= h;
      Residual rp{};
      Residual rm{};
      ok = residual(xp, target, rp) && residual(xm, target, rm);
      for (int i = 0; i < 8 && ok; ++i) J[j][i] = (rp[i] - rm[i]) / (2.0 * h);
    }
    if (!ok) break;

    detail::Matrix6 A{};
    detail::Vector6 g{};
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        double s = 0.0;
        for (int i = 0; i < 8; ++i) s += J[a][i] * J[b][i];
        A[a][b] = s;
      }
      double s = 0.0;
      for (int i = 0; i < 8; ++i) s += J[a][i] * r[i];
      g[a] = -s;
    }

    bool improved = false;
    for (int attempt = 0; attempt < 12 && !improved; ++attempt) {
      detail::Matrix6 M = A;
      for (int a = 0; a < 6; ++a) M[a][a] += mu * std::max(A[a][a], 1e-12);
      detail::Vector6 step{};
      if (!detail::solve6(M, g, step)) {
        mu *= 10.0;
        continue;
      }
      Unknowns xn = x;
      double xnorm = 0.0;
      for (int a = 0; a < 6; ++a) {
        xn[a] += step[a];
        xnorm = std::max(xnorm, std::abs(xn[a]));
      }
      Residual rn_vec{};
      if (xnorm <= max_norm && residual(xn, target, rn_vec) && norm_of(rn_vec) < rn) {
        double step_norm = 0.0;
        for (double s : step) step_norm = std::max(step_norm, std::abs(s));
        x = xn;
        r = rn_vec;
        rn = norm_of(r);
        mu = std::max(mu / 5.0, 1e-12);
        improved = true;
        if (step_norm < 1e-16 * std::max(1.0, xnorm)) iter = 1000;
      } else {
        mu *= 4.0;
      }
    }
    if (!improved) break;
  }
  out.x = x;
  out.residual = rn;
  return out;
}

}  // namespace

SRGeodesicParams::SRGeodesicParams(const Vec3& alpha, const Vec3& beta) : alpha_(alpha), beta_(beta) {
  const double n2 = dot3(alpha, alpha);
  if (!(std::abs(n2 - 1.0) <= kNormalizationTol)) {
    throw GeometryError(ErrorCode::kBadNormalization,
                        "SRGeodesicParams: |alpha|^2 - 1 = " + std::to_string(n2 - 1.0));
  }
  for (double v : beta)
    if (!std::isfinite(v)) throw GeometryError(ErrorCode::kNonFinite, "SRGeodesicParams: non-finite beta");
}

SRGeodesicParams SRGeodesicParams::normalized(const Vec3& alpha, const Vec3& beta) {
  const double n = norm3(alpha);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError(ErrorCode::kBadNormalization, "SRGeodesicParams: alpha must be nonzero");
  }
  return SRGeodesicParams(scale3(1.0 / n, alpha), beta);
}

double SRGeodesicParams::beta_norm() const { return norm3(beta_); }

std::array<double, 7> SRGeodesicParams::as_alpha7() const {
  return {0.0, alpha_[0], alpha_[1], alpha_[2], beta_[0], beta_[1], beta_[2]};
}

Mat2C sr_geodesic(const SRGeodesicParams& p, double t) {
  return ProductExpParams{p.as_alpha7()}.evaluate(t);
}

Mat2C sr_geodesic_two_factor(const SRGeodesicParams& p, double t) {
  const Vec3& a = p.alpha();
  const Vec3& b = p.beta();
  const Mat2C first = exp_closed(ComplexAlgVec{{0.0, cplx{a[0], b[0]}, cplx{a[1], b[1]}, cplx{a[2], b[2]}}}, t);
  // exp(-t b) = 2 cos(w2 t) e0 - (sin(w2 t)/w2) b with w2 = |beta|/2.
  const double w2 = 0.5 * norm3(b);
  const double m2 = std::cos(w2 * t);
  const double n2 = sin_over(w2, t);
  AlgCoords bc;
  bc[4] = b[0];
  bc[5] = b[1];
  bc[6] = b[2];
  const Mat2C second = m2 * Mat2C::identity() - n2 * from_coords(bc);
  return first * second;
}

AlgCoords sr_control(const SRGeodesicParams& p, double t) {
  AlgCoords a;
  AlgCoords b;
  for (int i = 0; i < 3; ++i) {
    a[i + 1] = p.alpha()[static_cast<std::size_t>(i)];
    b[i + 4] = p.beta()[static_cast<std::size_t>(i)];
  }
  const Mat2C eb = exp_closed(ComplexAlgVec::from_coords(b), t);
  return to_coords(eb * from_coords(a) * eb.adjoint());
}

double boost_distance(const AlgCoords& X, double tol) {
  if (!X.in_H0(tol)) throw GeometryError(ErrorCode::kNotInSubspace, "boost_distance: X is not in H0");
  return std::hypot(X[1], X[2], X[3]);
}

double distance_lower_bound(const Mat2C& g1, double tol) {
  if (!(std::abs(g1.det() - 1.0) <= tol)) {
    throw GeometryError(ErrorCode::kNotUnimodular, "distance_lower_bound: det g1 != 1");
  }
  // tr(g g*)/2 - 1 written without cancellation using ad - bc = 1.
  const cplx a = g1(0, 0);
  const cplx b = g1(0, 1);
  const cplx c = g1(1, 0);
  const cplx d = g1(1, 1);
  const double delta = 0.5 * (std::norm(a - std::conj(d)) + std::norm(b + std::conj(c)));
  return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

double cut_bound(double beta) {
  if (!(beta > 1.0)) throw GeometryError(ErrorCode::kInvalidArgument, "cut_bound: beta must exceed 1");
  const double v = 2.0 * std::numbers::pi / std::sqrt((beta - 1.0) * (beta + 1.0));
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

std::array<Vec3, 3> adjoint_rotation(const Mat2C& s) {
  std::array<Vec3, 3> R{};
  const Mat2C sa = s.adjoint();
  for (int j = 0; j < 3; ++j) {
    const AlgCoords c = to_coords(s * basis_matrix(j + 1) * sa);
    for (int i = 0; i < 3; ++i) R[i][j] = c[i + 1];
  }
  return R;
}

Vec3 rotate(const std::array<Vec3, 3>& R, const Vec3& v) {
  return {dot3(R[0], v), dot3(R[1], v), dot3(R[2], v)};
}

AxisAlignment align_to_first_axis(const Vec3& from) {
  AxisAlignment out{Mat2C::identity(), {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  const double n = norm3(from);
  if (!(n > 0.0)) return out;
  const Vec3 u = scale3(1.0 / n, from);
  const Vec3 target{1.0, 0.0, 0.0};
  Vec3 axis = cross3(u, target);
  const double sin_t = norm3(axis);
  const double cos_t = dot3(u, target);
  if (sin_t < 1e-15) {
    if (cos_t > 0.0) return out;
    axis = {0.0, 0.0, 1.0};
  } else {
    axis = scale3(1.0 / sin_t, axis);
  }
  const double theta = std::atan2(sin_t, cos_t);
  // The orientation convention of Ad on (e1, e2, e3) is fixed by the choice
  // of s2; try both senses and keep the one that lands on the axis.
  double best = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    const Mat2C s = su2_exp(axis, sign * theta);
    const auto R = adjoint_rotation(s);
    const Vec3 img = rotate(R, u);
    const double err = std::hypot(img[0] - 1.0, img[1], img[2]);
    if (err < best) {
      best = err;
      out.s = s;
      out.R = R;
    }
  }
  return out;
}

DistanceBracket distance_shoot(const Mat2C& g1, const ShootOptions& opts) {
  if (!(opts.tol > 0.0)) throw GeometryError(ErrorCode::kInvalidArgument, "distance_shoot: tol must be positive");
  DistanceBracket out;
  out.lower = distance_lower_bound(g1);
  out.upper = std::numeric_limits<double>::infinity();
  out.witness.alpha = {1.0, 0.0, 0.0};

  if (max_abs_diff(g1, Mat2C::identity()) <= opts.tol) {
    out.upper = out.lower;
    out.feasible = true;
    out.converged = true;
    return out;
  }

  // Canonical form under SU(2) conjugation: the Hermitian polar factor along
  // e1, then the su(2) part of the unitary factor in the (e4, e5) half-plane.
  const PolarDecomposition pd = polar_decompose(g1, 1e-9);
  const Vec3 xvec{pd.X[1], pd.X[2], pd.X[3]};
  const AlgCoords kc = to_coords(pd.k);
  const Vec3 kvec{kc[4], kc[5], kc[6]};
  Mat2C s = Mat2C::identity();
  if (norm3(xvec) > 1e-12) {
    const AxisAlignment first = align_to_first_axis(xvec);
    s = first.s;
    const Vec3 kr = rotate(first.R, kvec);
    const double perp = std::hypot(kr[1], kr[2]);
    if (perp > 1e-12) {
      // Rotation about e1 taking (kr1, kr2) to (perp, 0).
      const double target_angle = std::atan2(kr[2], kr[1]);
      double best = std::numeric_limits<double>::infinity();
      Mat2C best_s = s;
      for (double sign : {1.0, -1.0}) {
        const Mat2C r = su2_exp({1.0, 0.0, 0.0}, sign * target_angle);
        const Vec3 img = rotate(adjoint_rotation(r), kr);
        const double err = std::abs(img[2]) + std::abs(img[1] - perp);
        if (err < best) {
          best = err;
          best_s = r * first.s;
        }
      }
      s = best_s;
    }
  } else if (norm3(kvec) > 1e-12) {
    s = align_to_first_axis(kvec).s;
  }
  const Mat2C target = s * g1 * s.adjoint();
  const auto R = adjoint_rotation(s);
  const auto Rt = transpose(R);

  std::mt19937_64 rng(opts.seed);
  const double lo = out.lower;
  const double t_max = lo + opts.time_slack;
  const double max_norm = 4.0 * (t_max + opts.beta_cap * t_max) + 10.0;
  const Vec3 canonical_dir{1.0, 0.0, 0.0};

  struct Candidate {
    double T;
    Vec3 alpha;
    Vec3 beta;
  };
  std::vector<Candidate> feasible;

  static constexpr std::array<double, 8> kTimeOffsets{0.0, 0.1, 0.3, 0.7, 1.5, 3.0, 6.0, 10.0};
  for (int k = 0; k < opts.budget; ++k) {
    double T;
    Vec3 dir;
    Vec3 beta_start{0.0, 0.0, 0.0};
    if (k < static_cast<int>(kTimeOffsets.size())) {
      T = lo + std::min(kTimeOffsets[static_cast<std::size_t>(k)], opts.time_slack);
      dir = canonical_dir;
    } else {
      const double u = uniform01(rng);
      T = lo + opts.time_slack * u * u;
      if (uniform01(rng) < 0.3) {
        const Vec3 jitter = random_unit(rng);
        const double amp = 0.3 * uniform01(rng);
        dir = {1.0 + amp * jitter[0], amp * jitter[1], amp * jitter[2]};
      } else {
        dir = random_unit(rng);
      }
      const double rb = uniform01(rng);
      beta_start = scale3(opts.beta_cap * rb * rb, random_unit(rng));
    }
    T = std::max(T, 0.05);
    const double dn = norm3(dir);
    Unknowns x0{};
    for (int i = 0; i < 3; ++i) {
      x0[i] = T * dir[i] / dn;
      x0[i + 3] = T * beta_start[i];
    }
    ++out.solves;
    const LocalResult lr = solve_local(x0, target, max_norm);
    if (!(lr.residual < opts.tol)) continue;

    const Vec3 A{lr.x[0], lr.x[1], lr.x[2]};
    const double len = norm3(A);
    if (!(len > 0.0)) continue;
    Candidate c{len, scale3(1.0 / len, A), scale3(1.0 / len, Vec3{lr.x[3], lr.x[4], lr.x[5]})};
    const double bn = norm3(c.beta);
    if (bn > 1.0 && std::abs(dot3(c.alpha, c.beta)) < 1e-6 * bn && c.T > cut_bound(bn) + opts.tol) continue;
    feasible.push_back(c);

    if (c.T < out.upper) {
      out.upper = c.T;
      out.witness = ShootWitness{rotate(Rt, c.alpha), rotate(Rt, c.beta), c.T};
      out.feasible = true;
    }
    if (out.upper - out.lower <= opts.tol) break;
  }

  if (out.feasible) {
    out.upper = std::max(out.upper, out.lower);
    out.converged = out.upper - out.lower <= opts.tol;
    // Distinct witnesses only; restarts usually land on the same one.
    std::vector<const Candidate*> kept;
    for (const Candidate& c : feasible) {
      if (c.T > out.upper + opts.tol) continue;
      const bool seen = std::any_of(kept.begin(), kept.end(), [&](const Candidate* k) {
        double d = 0.0;
        for (int i = 0; i < 3; ++i) {
          d = std::max({d, std::abs(k->alpha[i] - c.alpha[i]), std::abs(k->beta[i] - c.beta[i])});
        }
        return d < 1e-6;
      });
      if (!seen) {
        kept.push_back(&c);
        out.near_optimal.push_back(c.T);
      }
    }
    std::sort(out.near_optimal.begin(), out.near_optimal.end());
  }
  return out;
}

const char* to_string(HermitianCase c) {
  switch (c) {
    case HermitianCase::kCollinear: return "collinear";
    case HermitianCase::kCosVanishing: return "cos-vanishing";
    case HermitianCase::kProportionalTriple: return "proportional-triple";
    case HermitianCase::kTangentFixedPoint: return "tangent-fixed-point";
    case HermitianCase::kNotHermitian: return "not-hermitian";
  }
  return "unknown";
}

HermiticityReport hermitian_endpoint_check(const Vec3& alpha, const Vec3& beta, double tol) {
  const double a = norm3(alpha);
  const double b = norm3(beta);
  if (!(a > 0.0) || !(b > 0.0)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "hermitian_endpoint_check: vectors must be nonzero");
  }
  HermiticityReport rep;
  rep.beta = b;

  // Reduced frame: alpha -> (a, 0, 0).
  const AxisAlignment al = align_to_first_axis(alpha);
  const Vec3 br = rotate(al.R, beta);
  const cplx w = 0.5 * std::sqrt(cplx{a * a - b * b, 2.0 * a * br[0]});
  const double x = w.real();
  const double y = w.imag();
  rep.x = x;
  rep.y = y;
  rep.identity_residual = std::abs(4.0 * x * y - a * br[0]);

  const double half = 0.5 * b;
  const double inf = std::numeric_limits<double>::infinity();

  const double r_collinear = norm3(cross3(alpha, beta)) / (a * b);
  const double r_cos = std::max({std::abs(x), std::abs(std::cos(half)), std::abs(std::cos(y))});
  double r_prop = inf;
  const bool xy_zero = std::abs(x) <= tol && std::abs(y) <= tol;
  if (!xy_zero && std::abs(std::cos(half)) > tol && std::abs(std::cos(y)) > tol) {
    // 2x2 minors of [(x, y, b/2); (th x, tg y, tg b/2)], each multiplied by
    // the cosines in its denominators.
    const double thx = std::tanh(x);
    const double m1 = x * std::sin(y) - y * thx * std::cos(y);
    const double m2 = x * std::sin(half) - half * thx * std::cos(half);
    const double m3 = y * std::sin(half) * std::cos(y) - half * std::sin(y) * std::cos(half);
    r_prop = std::max({std::abs(m1), std::abs(m2), std::abs(m3)});
  }
  const double r_tan = std::max({std::abs(x), std::abs(y), std::abs(std::sin(half) - half * std::cos(half))});

  rep.condition_margin = std::min({r_collinear, r_cos, r_prop, r_tan});
  if (r_collinear <= tol) {
    rep.which = HermitianCase::kCollinear;
  } else if (r_cos <= tol) {
    rep.which = HermitianCase::kCosVanishing;
  } else if (r_prop <= tol) {
    rep.which = HermitianCase::kProportionalTriple;
  } else if (r_tan <= tol) {
    rep.which = HermitianCase::kTangentFixedPoint;
  }

  AlgCoords ab;
  AlgCoords bb;
  for (int i = 0; i < 3; ++i) {
    ab[i + 1] = alpha[static_cast<std::size_t>(i)];
    ab[i + 4] = beta[static_cast<std::size_t>(i)];
    bb[i + 4] = -beta[static_cast<std::size_t>(i)];
  }
  const Mat2C m = exp_series(from_coords(ab)) * exp_series(from_coords(bb));
  rep.residual = (m - m.adjoint()).frobenius_norm();
  return rep;
}

}  // namespace sublorentz
