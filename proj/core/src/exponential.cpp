#include "sublorentz/exponential.hpp"

#include <algorithm>
#include <cmath>

namespace sublorentz {

namespace {

constexpr cplx kI{0.0, 1.0};
// Below this |w t| the quotients sh(wt)/w and sin(wt)/w switch to their
// even Taylor expansion.
constexpr double kSmallArgument = 1e-8;

}  // namespace

cplx ComplexAlgVec::w() const { return 0.5 * std::sqrt(z[1] * z[1] + z[2] * z[2] + z[3] * z[3]); }

Mat2C ComplexAlgVec::matrix() const {
  return 0.5 * Mat2C(z[0] + z[3], z[1] + kI * z[2], z[1] - kI * z[2], z[0] - z[3]);
}

ComplexAlgVec ComplexAlgVec::from_matrix(const Mat2C& m) {
  return ComplexAlgVec{{m(0, 0) + m(1, 1), m(0, 1) + m(1, 0), -kI * (m(0, 1) - m(1, 0)), m(0, 0) - m(1, 1)}};
}

ComplexAlgVec ComplexAlgVec::from_coords(const AlgCoords& c) {
  return ComplexAlgVec{{cplx{c[0], c[7]}, cplx{c[1], c[4]}, cplx{c[2], c[5]}, cplx{c[3], c[6]}}};
}

cplx sinh_over(cplx w, double t) {
  const cplx wt = w * t;
  if (std::abs(wt) < kSmallArgument) {
    const cplx q = wt * wt;
    return t * (1.0 + q / 6.0 + q * q / 120.0);
  }
  return std::sinh(wt) / w;
}

double sin_over(double w, double t) {
  const double wt = w * t;
  if (std::abs(wt) < kSmallArgument) {
    const double q = wt * wt;
    return t * (1.0 - q / 6.0 + q * q / 120.0);
  }
  return std::sin(wt) / w;
}

Mat2C exp_closed_with_root(const ComplexAlgVec& a, cplx w, double t) {
  const cplx scale = std::exp(a.z[0] * t / 2.0);
  const cplx ch = std::cosh(w * t);
  const cplx sh = sinh_over(w, t);
  // 2 ch e0 = ch I; sum z_i e_i over i = 1..3 is the traceless part of A.
  const cplx d = sh * a.z[3] * 0.5;
  const cplx off_up = sh * (a.z[1] + kI * a.z[2]) * 0.5;
  const cplx off_dn = sh * (a.z[1] - kI * a.z[2]) * 0.5;
  return scale * Mat2C(ch + d, off_up, off_dn, ch - d);
}

Mat2C exp_closed(const ComplexAlgVec& a, double t) { return exp_closed_with_root(a, a.w(), t); }

Mat2C exp_series(const Mat2C& m) {
  // Infinity norm drives the scaling exponent.
  const double norm = std::max(std::abs(m(0, 0)) + std::abs(m(0, 1)), std::abs(m(1, 0)) + std::abs(m(1, 1)));
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);

  std::array<cplx, 4> x{m(0, 0) * scale, m(0, 1) * scale, m(1, 0) * scale, m(1, 1) * scale};
  auto mul = [](const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
    return std::array<cplx, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                               a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };

  // Horner evaluation of sum_{k=0..N} x^k / k!; with ||x|| <= 1/2 the tail
  // after N = 20 is below 1e-25 relative.
  constexpr int kTerms = 20;
  std::array<cplx, 4> r{1.0, 0.0, 0.0, 1.0};
  for (int k = kTerms; k >= 1; --k) {
    std::array<cplx, 4> p = mul(x, r);
    for (auto& v : p) v /= static_cast<double>(k);
    p[0] += 1.0;
    p[3] += 1.0;
    r = p;
  }
  for (int s = 0; s < squarings; ++s) {
    r = mul(r, r);
    for (const cplx& v : r) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw GeometryError(ErrorCode::kOverflow, "exp_series: result overflows double precision");
      }
    }
  }
  return Mat2C(r[0], r[1], r[2], r[3]);
}

AlgCoords log_posdef(const Mat2C& p, double tol) {
  if (!p.is_hermitian(tol)) throw GeometryError(ErrorCode::kNotHermitian, "log_posdef: matrix is not Hermitian");
  const AlgCoords h = to_coords(p);
  const double h0 = h[0];
  const double r = std::hypot(h[1], h[2], h[3]);
  if (!(h0 > 0.0) || !(h0 > r)) {
    throw GeometryError(ErrorCode::kNotPositiveDefinite, "log_posdef: matrix is not positive definite");
  }
  const double lam_plus = 0.5 * (h0 + r);
  const double lam_minus = 0.25 * (h0 - r) * (h0 + r) / lam_plus;
  if (!(lam_minus > 0.0)) {
    throw GeometryError(ErrorCode::kNotPositiveDefinite, "log_posdef: matrix is not positive definite");
  }
  // ln(lam+) - ln(lam-) = 2 atanh(r / h0); divided by r it stays finite as r -> 0.
  const double q = r / h0;
  const double slope = q < kSmallArgument ? (2.0 / h0) * (1.0 + q * q / 3.0) : 2.0 * std::atanh(q) / r;
  AlgCoords x;
  x[0] = std::log(lam_plus) + std::log(lam_minus);
  x[1] = slope * h[1];
  x[2] = slope * h[2];
  x[3] = slope * h[3];
  return x;
}

Mat2C log_principal(const Mat2C& m) {
  const cplx s = 0.5 * m.trace();
  if (s == 0.0) throw GeometryError(ErrorCode::kInvalidArgument, "log_principal: zero trace");
  const Mat2C d = m - s * Mat2C::identity();
  const cplx delta = std::sqrt(-d.det());
  const cplx q = delta / s;
  const cplx slope = std::abs(q) < kSmallArgument ? (1.0 + q * q / 3.0) / s : std::atanh(q) / delta;
  const cplx center = std::log(s) + 0.5 * std::log(1.0 - q * q);
  return center * Mat2C::identity() + slope * d;
}

cplx ProductExpParams::w1() const {
  cplx s = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const cplx z{alpha[i], alpha[i + 3]};
    s += z * z;
  }
  return 0.5 * std::sqrt(s);
}

double ProductExpParams::w2() const { return 0.5 * std::hypot(alpha[4], alpha[5], alpha[6]); }

cplx ProductExpParams::m1(double t) const { return std::cosh(w1() * t); }
cplx ProductExpParams::n1(double t) const { return sinh_over(w1(), t); }
double ProductExpParams::m2(double t) const { return std::cos(w2() * t); }
double ProductExpParams::n2(double t) const { return sin_over(w2(), t); }

std::array<cplx, 8> ProductExpParams::coefficients(double t) const {
  const auto& a = alpha;
  const double e = std::exp(a[0] * t / 2.0);
  const double w2v = w2();
  const cplx mm1 = m1(t);
  const cplx nn1 = n1(t);
  const double mm2 = m2(t);
  const double nn2 = n2(t);

  std::array<cplx, 8> c{};
  c[0] = 2.0 * e * (mm1 * mm2 + nn1 * nn2 * w2v * w2v);
  c[7] = -0.5 * e * nn1 * nn2 * (a[1] * a[4] + a[2] * a[5] + a[3] * a[6]);
  c[1] = 0.5 * e * nn1 * (2.0 * a[1] * mm2 + (a[3] * a[5] - a[2] * a[6]) * nn2);
  c[2] = 0.5 * e * nn1 * (2.0 * a[2] * mm2 + (a[1] * a[6] - a[3] * a[4]) * nn2);
  c[3] = 0.5 * e * nn1 * (2.0 * a[3] * mm2 + (a[2] * a[4] - a[1] * a[5]) * nn2);
  const cplx rot = e * (mm2 * nn1 - mm1 * nn2);
  for (int i = 4; i <= 6; ++i) c[i] = rot * a[i];
  return c;
}

Mat2C ProductExpParams::evaluate(double t) const {
  const std::array<cplx, 8> c = coefficients(t);
  // Complex-linear combination: c0 e0 + ... + c6 e6 + c7 (i e0).
  const cplx z0 = c[0] + kI * c[7];
  const cplx z1 = c[1] + kI * c[4];
  const cplx z2 = c[2] + kI * c[5];
  const cplx z3 = c[3] + kI * c[6];
  return ComplexAlgVec{{z0, z1, z2, z3}}.matrix();
}

PolarDecomposition polar_decompose(const Mat2C& g, double tol) {
  const cplx det = g.det();
  if (std::abs(det) == 0.0) throw GeometryError(ErrorCode::kSingular, "polar_decompose: singular matrix");
  if (std::abs(det.imag()) > tol * std::abs(det) || det.real() <= 0.0) {
    throw GeometryError(ErrorCode::kNotInGLPlus, "polar_decompose: determinant is not real positive");
  }
  PolarDecomposition out;
  out.xi = std::log(det.real());
  const Mat2C g1 = std::exp(-out.xi / 2.0) * g;
  // sqrt(g1 g1*) = exp(X) with X = log(g1 g1*) / 2; det(g1 g1*) = 1 puts X in H0.
  out.X = 0.5 * log_posdef(g1 * g1.adjoint(), std::max(tol, 1e-12));
  out.X[0] = 0.0;
  out.k = exp_closed(ComplexAlgVec::from_coords(-1.0 * out.X), 1.0) * g1;
  return out;
}

}  // namespace sublorentz
