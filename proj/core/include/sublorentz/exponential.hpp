#pragma once

#include <array>

#include "sublorentz/lie_algebra.hpp"
#include "sublorentz/mat2c.hpp"

namespace sublorentz {

/// A = sum_{i=0..3} z_i e_i with complex coefficients. Every complex 2x2
/// matrix has exactly one such representation.
struct ComplexAlgVec {
  std::array<cplx, 4> z{};

  /// (1/2) sqrt(z1^2 + z2^2 + z3^2), principal branch.
  cplx w() const;
  Mat2C matrix() const;

  static ComplexAlgVec from_matrix(const Mat2C& m);
  /// Embeds real gl+ coordinates: z0 = u0 + i u7, z_k = u_k + i u_{k+3}.
  static ComplexAlgVec from_coords(const AlgCoords& c);
};

/// sinh(w t) / w, continuous at w = 0 (value t).
cplx sinh_over(cplx w, double t);
/// sin(w t) / w, continuous at w = 0 (value t).
double sin_over(double w, double t);

/// exp(tA) from the closed two-case formula.
Mat2C exp_closed(const ComplexAlgVec& a, double t);

/// Same formula evaluated with an explicitly chosen square root for w, used
/// to check that the result does not depend on the branch.
Mat2C exp_closed_with_root(const ComplexAlgVec& a, cplx w, double t);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// Independent of the closed form; throws kOverflow when the result is not
/// representable.
Mat2C exp_series(const Mat2C& m);

/// Principal logarithm of a Hermitian positive definite matrix, returned as
/// coordinates in H.
AlgCoords log_posdef(const Mat2C& p, double tol = kDefaultTolerance);

/// Principal logarithm of a matrix whose eigenvalues avoid the closed
/// negative real axis (in practice: matrices near the identity).
Mat2C log_principal(const Mat2C& m);

/**
 * Coefficients of the product exp(t sum_{i=0..6} a_i e_i) exp(-t sum_{i=4..6} a_i e_i).
 *
 * The product equals sum_{i=0..6} c_i e_i + c_7 i e0 with complex scalar
 * functions c_i(t) built from m1 = ch(w1 t), n1 = sh(w1 t)/w1,
 * m2 = cos(w2 t), n2 = sin(w2 t)/w2.
 */
struct ProductExpParams {
  std::array<double, 7> alpha{};

  cplx w1() const;
  double w2() const;

  cplx m1(double t) const;
  cplx n1(double t) const;
  double m2(double t) const;
  double n2(double t) const;

  std::array<cplx, 8> coefficients(double t) const;
  Mat2C evaluate(double t) const;
};

struct PolarDecomposition {
  double xi = 0.0;  ///< ln det g
  AlgCoords X;      ///< element of H0 with g = e^{xi/2} exp(X) k
  Mat2C k;          ///< element of SU(2)
};

/// g = e^{xi/2} exp(X) k for g in GL+(2,C). Rejects singular g and
/// determinants that are not real positive.
PolarDecomposition polar_decompose(const Mat2C& g, double tol = kDefaultTolerance);

}  // namespace sublorentz
