#pragma once

#include <array>

#include "sublorentz/mat2c.hpp"

namespace sublorentz {

/**
 * Real coordinates of a complex 2x2 matrix in the basis
 *
 *   e0 = s0/2, e1 = s1/2, e2 = s2/2, e3 = s3/2,
 *   e4 = i e1, e5 = i e2, e6 = i e3, e7 = i e0,
 *
 * with s1 = [[0,1],[1,0]], s2 = [[0,i],[-i,0]], s3 = [[1,0],[0,-1]].
 *
 * e0..e3 span the Hermitian matrices H, e4..e6 span su(2), and e0..e6 span
 * gl+(2,C) (complex matrices with real trace). The eighth direction makes the
 * coordinates a bijection on all of M(2,C), so products of group elements stay
 * representable.
 */
struct AlgCoords {
  std::array<double, 8> u{};

  double& operator[](int i) { return u[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return u[static_cast<std::size_t>(i)]; }

  bool in_gl_plus(double tol = kDefaultTolerance) const;
  bool in_H(double tol = kDefaultTolerance) const;
  bool in_H0(double tol = kDefaultTolerance) const;
  bool in_su2(double tol = kDefaultTolerance) const;

  friend AlgCoords operator+(const AlgCoords& a, const AlgCoords& b);
  friend AlgCoords operator-(const AlgCoords& a, const AlgCoords& b);
  friend AlgCoords operator*(double s, const AlgCoords& a);
  friend bool operator==(const AlgCoords&, const AlgCoords&) = default;
};

/// Coordinates with u_i = 1 at `index`, zero elsewhere.
AlgCoords unit_coords(int index);

/// Basis matrix e_i, i in 0..7. Throws kIndexOutOfRange otherwise.
Mat2C basis_matrix(int index);

AlgCoords to_coords(const Mat2C& m);
Mat2C from_coords(const AlgCoords& c);

/// C[i][j][k] with [e_i, e_j] = sum_k C[i][j][k] e_k, i, j, k in 0..6.
using StructureTable = std::array<std::array<std::array<double, 7>, 7>, 7>;

/// Computed once from matrix commutators; all entries are exactly 0 or +-1.
const StructureTable& structure_constants();

/// Polarized form <u,v> = u0 v0 - sum_{k=1..6} u_k v_k on gl+(2,C).
/// Throws kNotInSubspace when either argument has a nonzero e7 component.
double lorentz_form(const AlgCoords& u, const AlgCoords& v, double tol = kDefaultTolerance);

/// h0^2 - h1^2 - h2^2 - h3^2 for h in H; equals 4 det h.
double herm_form(const AlgCoords& h, double tol = kDefaultTolerance);

/// Scalar product (.,.) on sl(2,C): Euclidean dot product of u1..u6.
double riem_product(const AlgCoords& x, const AlgCoords& y, double tol = kDefaultTolerance);

enum class CausalCharacter { kTimelike, kSpacelike, kIsotropic };
enum class TimeOrientation { kFuture, kPast, kNone };

struct VectorClass {
  CausalCharacter character;
  TimeOrientation orientation;  // kNone for spacelike vectors
  friend bool operator==(const VectorClass&, const VectorClass&) = default;
};

/// Causal character of a vector of H. Throws kNotInSubspace outside H.
VectorClass vector_class(const AlgCoords& u, double tol = kDefaultTolerance);

const char* to_string(CausalCharacter c);
const char* to_string(TimeOrientation o);

struct CliffordReport {
  /// anticommutators[l][k] = s_{l+1} s_{k+1} + s_{k+1} s_{l+1}
  std::array<std::array<Mat2C, 3>, 3> anticommutators;
  double max_residual = 0.0;
};

/// Checks s_l s_k + s_k s_l = 2 delta_lk I for the three Pauli matrices.
CliffordReport clifford_check();

}  // namespace sublorentz
