#include "sublorentz/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sublorentz {

namespace {

constexpr cplx kI{0.0, 1.0};

bool near_zero(double x, double tol) { return std::abs(x) <= tol; }

double coord_scale(const AlgCoords& c) {
  double m = 0.0;
  for (double x : c.u) m = std::max(m, std::abs(x));
  return std::max(1.0, m);
}

void require(bool ok, const char* what) {
  if (!ok) throw GeometryError(ErrorCode::kNotInSubspace, what);
}

}  // namespace

bool AlgCoords::in_gl_plus(double tol) const { return near_zero(u[7], tol * coord_scale(*this)); }

bool AlgCoords::in_H(double tol) const {
  const double t = tol * coord_scale(*this);
  return near_zero(u[4], t) && near_zero(u[5], t) && near_zero(u[6], t) && near_zero(u[7], t);
}

bool AlgCoords::in_H0(double tol) const { return in_H(tol) && near_zero(u[0], tol * coord_scale(*this)); }

bool AlgCoords::in_su2(double tol) const {
  const double t = tol * coord_scale(*this);
  return near_zero(u[0], t) && near_zero(u[1], t) && near_zero(u[2], t) && near_zero(u[3], t) &&
         near_zero(u[7], t);
}

AlgCoords operator+(const AlgCoords& a, const AlgCoords& b) {
  AlgCoords r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
  return r;
}

AlgCoords operator-(const AlgCoords& a, const AlgCoords& b) {
  AlgCoords r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
  return r;
}

AlgCoords operator*(double s, const AlgCoords& a) {
  AlgCoords r;
  for (int i = 0; i < 8; ++i) r[i] = s * a[i];
  return r;
}

AlgCoords unit_coords(int index) {
  if (index < 0 || index > 7) {
    throw GeometryError(ErrorCode::kIndexOutOfRange, "unit_coords: index " + std::to_string(index));
  }
  AlgCoords c;
  c[index] = 1.0;
  return c;
}

Mat2C basis_matrix(int index) {
  switch (index) {
    case 0: return {0.5, 0.0, 0.0, 0.5};
    case 1: return {0.0, 0.5, 0.5, 0.0};
    case 2: return {0.0, 0.5 * kI, -0.5 * kI, 0.0};
    case 3: return {0.5, 0.0, 0.0, -0.5};
    case 4:
    case 5:
    case 6: return kI * basis_matrix(index - 3);
    case 7: return kI * basis_matrix(0);
    default:
      throw GeometryError(ErrorCode::kIndexOutOfRange, "basis_matrix: index " + std::to_string(index));
  }
}

AlgCoords to_coords(const Mat2C& m) {
  // m = (z0 s0 + z1 s1 + z2 s2 + z3 s3) / 2 with complex z.
  const cplx z0 = m(0, 0) + m(1, 1);
  const cplx z3 = m(0, 0) - m(1, 1);
  const cplx z1 = m(0, 1) + m(1, 0);
  const cplx z2 = -kI * (m(0, 1) - m(1, 0));
  return AlgCoords{{z0.real(), z1.real(), z2.real(), z3.real(), z1.imag(), z2.imag(), z3.imag(), z0.imag()}};
}

Mat2C from_coords(const AlgCoords& c) {
  const cplx z0{c[0], c[7]};
  const cplx z1{c[1], c[4]};
  const cplx z2{c[2], c[5]};
  const cplx z3{c[3], c[6]};
  return {0.5 * (z0 + z3), 0.5 * (z1 + kI * z2), 0.5 * (z1 - kI * z2), 0.5 * (z0 - z3)};
}

const StructureTable& structure_constants() {
  static const StructureTable table = [] {
    StructureTable t{};
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        const AlgCoords c = to_coords(commutator(basis_matrix(i), basis_matrix(j)));
        for (int k = 0; k < 7; ++k) t[i][j][k] = c[k];
      }
    }
    return t;
  }();
  return table;
}

double lorentz_form(const AlgCoords& u, const AlgCoords& v, double tol) {
  require(u.in_gl_plus(tol) && v.in_gl_plus(tol), "lorentz_form: argument has an e7 component");
  double s = u[0] * v[0];
  for (int k = 1; k <= 6; ++k) s -= u[k] * v[k];
  return s;
}

double herm_form(const AlgCoords& h, double tol) {
  require(h.in_H(tol), "herm_form: argument is not Hermitian");
  return h[0] * h[0] - h[1] * h[1] - h[2] * h[2] - h[3] * h[3];
}

double riem_product(const AlgCoords& x, const AlgCoords& y, double tol) {
  const auto traceless = [tol](const AlgCoords& c) {
    const double t = tol * coord_scale(c);
    return near_zero(c[0], t) && near_zero(c[7], t);
  };
  require(traceless(x) && traceless(y), "riem_product: argument outside sl(2,C)");
  double s = 0.0;
  for (int k = 1; k <= 6; ++k) s += x[k] * y[k];
  return s;
}

VectorClass vector_class(const AlgCoords& u, double tol) {
  const double q = herm_form(u, tol);
  const double scale = std::max(1.0, u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]);
  const bool zero = std::abs(u[0]) <= tol && std::abs(u[1]) <= tol && std::abs(u[2]) <= tol &&
                    std::abs(u[3]) <= tol;
  if (zero || q < -tol * scale) return {CausalCharacter::kSpacelike, TimeOrientation::kNone};
  const TimeOrientation o = u[0] > 0.0 ? TimeOrientation::kFuture : TimeOrientation::kPast;
  if (q > tol * scale) return {CausalCharacter::kTimelike, o};
  return {CausalCharacter::kIsotropic, o};
}

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::kTimelike: return "timelike";
    case CausalCharacter::kSpacelike: return "spacelike";
    case CausalCharacter::kIsotropic: return "isotropic";
  }
  return "unknown";
}

const char* to_string(TimeOrientation o) {
  switch (o) {
    case TimeOrientation::kFuture: return "future";
    case TimeOrientation::kPast: return "past";
    case TimeOrientation::kNone: return "none";
  }
  return "unknown";
}

CliffordReport clifford_check() {
  CliffordReport r;
  for (int l = 0; l < 3; ++l) {
    const Mat2C sl = 2.0 * basis_matrix(l + 1);
    for (int k = 0; k < 3; ++k) {
      const Mat2C sk = 2.0 * basis_matrix(k + 1);
      const Mat2C ac = sl * sk + sk * sl;
      r.anticommutators[l][k] = ac;
      const Mat2C expected = (l == k ? 2.0 : 0.0) * Mat2C::identity();
      r.max_residual = std::max(r.max_residual, max_abs_diff(ac, expected));
    }
  }
  return r;
}

}  // namespace sublorentz
