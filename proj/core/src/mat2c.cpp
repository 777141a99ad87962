#include "sublorentz/mat2c.hpp"

#include <algorithm>
#include <cmath>

namespace sublorentz {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kNonFinite: return "non_finite";
    case ErrorCode::kNotInSubspace: return "not_in_subspace";
    case ErrorCode::kNotHermitian: return "not_hermitian";
    case ErrorCode::kNotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::kNotUnimodular: return "not_unimodular";
    case ErrorCode::kNotSpecialUnitary: return "not_special_unitary";
    case ErrorCode::kNotInGLPlus: return "not_in_gl_plus";
    case ErrorCode::kSingular: return "singular";
    case ErrorCode::kBadNormalization: return "bad_normalization";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kDivergence: return "divergence";
    case ErrorCode::kNotReachable: return "not_reachable";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Mat2C::Mat2C(cplx a11, cplx a12, cplx a21, cplx a22) : a_{a11, a12, a21, a22} {
  for (const cplx& z : a_) {
    if (!finite(z)) throw GeometryError(ErrorCode::kNonFinite, "Mat2C: non-finite entry");
  }
}

Mat2C Mat2C::adjoint() const {
  return Mat2C(Unchecked{}, {std::conj(a_[0]), std::conj(a_[2]), std::conj(a_[1]), std::conj(a_[3])});
}

Mat2C Mat2C::inverse() const {
  const cplx d = det();
  if (d == 0.0) throw GeometryError(ErrorCode::kSingular, "Mat2C::inverse: singular matrix");
  return Mat2C(a_[3] / d, -a_[1] / d, -a_[2] / d, a_[0] / d);
}

double Mat2C::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double Mat2C::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

bool Mat2C::is_hermitian(double tol) const {
  return max_abs_diff(*this, adjoint()) <= tol * std::max(1.0, max_abs());
}

bool Mat2C::is_skew_hermitian(double tol) const {
  return max_abs_diff(*this, -adjoint()) <= tol * std::max(1.0, max_abs());
}

bool Mat2C::is_special(double tol) const { return std::abs(det() - 1.0) <= tol; }

bool Mat2C::is_unitary(double tol) const {
  return max_abs_diff((*this) * adjoint(), identity()) <= tol;
}

bool Mat2C::is_special_unitary(double tol) const { return is_unitary(tol) && is_special(tol); }

bool Mat2C::is_positive_definite_hermitian(double tol) const {
  if (!is_hermitian(tol)) return false;
  // 2x2 Hermitian: positive definite iff trace > 0 and det > 0.
  return trace().real() > 0.0 && det().real() > tol * std::max(1.0, std::norm(trace()));
}

Mat2C operator+(const Mat2C& x, const Mat2C& y) {
  return Mat2C(Mat2C::Unchecked{}, {x.a_[0] + y.a_[0], x.a_[1] + y.a_[1], x.a_[2] + y.a_[2], x.a_[3] + y.a_[3]});
}

Mat2C operator-(const Mat2C& x, const Mat2C& y) {
  return Mat2C(Mat2C::Unchecked{}, {x.a_[0] - y.a_[0], x.a_[1] - y.a_[1], x.a_[2] - y.a_[2], x.a_[3] - y.a_[3]});
}

Mat2C operator-(const Mat2C& x) { return Mat2C(Mat2C::Unchecked{}, {-x.a_[0], -x.a_[1], -x.a_[2], -x.a_[3]}); }

Mat2C operator*(const Mat2C& x, const Mat2C& y) {
  const auto& a = x.a_;
  const auto& b = y.a_;
  return Mat2C(Mat2C::Unchecked{}, {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                    a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]});
}

Mat2C operator*(cplx s, const Mat2C& x) {
  return Mat2C(Mat2C::Unchecked{}, {s * x.a_[0], s * x.a_[1], s * x.a_[2], s * x.a_[3]});
}

double max_abs_diff(const Mat2C& x, const Mat2C& y) { return (x - y).max_abs(); }

double rel_diff(const Mat2C& x, const Mat2C& reference) {
  return max_abs_diff(x, reference) / std::max(1.0, reference.max_abs());
}

Mat2C commutator(const Mat2C& a, const Mat2C& b) { return a * b - b * a; }

}  // namespace sublorentz
