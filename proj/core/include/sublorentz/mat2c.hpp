#pragma once

#include <array>
#include <complex>

#include "sublorentz/common.hpp"

namespace sublorentz {

using cplx = std::complex<double>;

/// Complex 2x2 matrix, row-major. Entries are finite by construction.
class Mat2C {
 public:
  /// Zero matrix.
  constexpr Mat2C() = default;

  Mat2C(cplx a11, cplx a12, cplx a21, cplx a22);

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

  cplx operator()(int row, int col) const { return a_[2 * row + col]; }
  const std::array<cplx, 4>& entries() const { return a_; }

  cplx det() const { return a_[0] * a_[3] - a_[1] * a_[2]; }
  cplx trace() const { return a_[0] + a_[3]; }

  /// Conjugate transpose.
  Mat2C adjoint() const;
  /// Throws GeometryError(kSingular) when det == 0.
  Mat2C inverse() const;

  double frobenius_norm() const;
  double max_abs() const;

  bool is_hermitian(double tol = kDefaultTolerance) const;
  bool is_skew_hermitian(double tol = kDefaultTolerance) const;
  bool is_special(double tol = kDefaultTolerance) const;
  bool is_unitary(double tol = kDefaultTolerance) const;
  bool is_special_unitary(double tol = kDefaultTolerance) const;
  bool is_positive_definite_hermitian(double tol = kDefaultTolerance) const;

  friend Mat2C operator+(const Mat2C& x, const Mat2C& y);
  friend Mat2C operator-(const Mat2C& x, const Mat2C& y);
  friend Mat2C operator-(const Mat2C& x);
  friend Mat2C operator*(const Mat2C& x, const Mat2C& y);
  friend Mat2C operator*(cplx s, const Mat2C& x);
  friend Mat2C operator*(const Mat2C& x, cplx s) { return s * x; }
  friend Mat2C operator/(const Mat2C& x, cplx s) { return (1.0 / s) * x; }

  Mat2C& operator+=(const Mat2C& y) { return *this = *this + y; }
  Mat2C& operator-=(const Mat2C& y) { return *this = *this - y; }
  Mat2C& operator*=(const Mat2C& y) { return *this = *this * y; }

  friend bool operator==(const Mat2C&, const Mat2C&) = default;

 private:
  struct Unchecked {};
  Mat2C(Unchecked, const std::array<cplx, 4>& a) : a_(a) {}

  std::array<cplx, 4> a_{};
};

/// Largest entrywise modulus of x - y.
double max_abs_diff(const Mat2C& x, const Mat2C& y);

/// max_abs_diff scaled by max(1, max_abs(reference)).
double rel_diff(const Mat2C& x, const Mat2C& reference);

/// ab - ba.
Mat2C commutator(const Mat2C& a, const Mat2C& b);

}  // namespace sublorentz
