#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sublorentz/exponential.hpp"
#include "sublorentz/lie_algebra.hpp"
#include "sublorentz/mat2c.hpp"

namespace sublorentz {

using Vec3 = std::array<double, 3>;

/// Parameters of an arclength geodesic of (SL(2,C), rho) through the identity:
/// gamma(t) = exp(t (a + b)) exp(-t b), a = alpha . (e1,e2,e3), b = beta . (e4,e5,e6).
class SRGeodesicParams {
 public:
  /// Throws kBadNormalization unless |alpha| = 1 within 1e-12.
  SRGeodesicParams(const Vec3& alpha, const Vec3& beta);

  /// Rescales alpha to unit length. Throws when alpha = 0.
  static SRGeodesicParams normalized(const Vec3& alpha, const Vec3& beta);

  const Vec3& alpha() const { return alpha_; }
  const Vec3& beta() const { return beta_; }
  double beta_norm() const;

  /// Full seven-vector (0, alpha, beta) for the product-exponential formula.
  std::array<double, 7> as_alpha7() const;

 private:
  Vec3 alpha_;
  Vec3 beta_;
};

/// Closed-form coefficient evaluation of the geodesic.
Mat2C sr_geodesic(const SRGeodesicParams& p, double t);

/// Same curve as the product exp(t(a+b)) * exp(-t b) of two closed-form
/// exponentials; an independent route to sr_geodesic.
Mat2C sr_geodesic_two_factor(const SRGeodesicParams& p, double t);

/// Left-logarithmic derivative g^{-1} g' = Ad(exp(t b)) a, an element of H0.
AlgCoords sr_control(const SRGeodesicParams& p, double t);

/// rho(e, exp(X)) = sqrt((X,X)) for X in H0.
double boost_distance(const AlgCoords& X, double tol = kDefaultTolerance);

/// ln lambda_max(g1 g1*): hyperbolic distance of the projection of g1 to
/// SL(2,C)/SU(2). A lower bound for rho(e, g1).
double distance_lower_bound(const Mat2C& g1, double tol = 1e-10);

/// 2 pi / sqrt(beta^2 - 1); +infinity once the value exceeds the double range.
double cut_bound(double beta);

struct ShootOptions {
  double tol = 1e-7;          ///< Frobenius residual that counts as reaching the target
  int budget = 600;           ///< maximum number of local solves
  std::uint64_t seed = 1;
  double beta_cap = 8.0;
  double time_slack = 10.0;   ///< T is searched in [lower, lower + time_slack]
};

struct ShootWitness {
  Vec3 alpha{};  ///< unit vector
  Vec3 beta{};
  double T = 0.0;
};

struct DistanceBracket {
  double lower = 0.0;
  double upper = 0.0;  ///< +infinity when no feasible geodesic was found
  bool feasible = false;
  bool converged = false;
  ShootWitness witness;
  /// Other feasible lengths within tol of `upper`, ascending.
  std::vector<double> near_optimal;
  int solves = 0;

  double width() const { return upper - lower; }
};

/// Brackets rho(e, g1) between the projection lower bound and the shortest
/// geodesic of the closed-form family found to reach g1. Deterministic for a
/// fixed seed.
DistanceBracket distance_shoot(const Mat2C& g1, const ShootOptions& opts = {});

enum class HermitianCase { kCollinear, kCosVanishing, kProportionalTriple, kTangentFixedPoint, kNotHermitian };

const char* to_string(HermitianCase c);

struct HermiticityReport {
  double x = 0.0;
  double y = 0.0;
  double beta = 0.0;
  HermitianCase which = HermitianCase::kNotHermitian;
  /// ||M - M*||_F for M = exp(a + b) exp(-b) computed with exp_series.
  double residual = 0.0;
  /// |4xy - alpha beta_1| in the reduced frame.
  double identity_residual = 0.0;
  /// Smallest distance to any of the four condition manifolds (0 when on one).
  double condition_margin = 0.0;
};

/// Decides whether exp(a + b) exp(-b) is Hermitian from the four
/// conditions on (x, y, beta). Both vectors must be nonzero.
HermiticityReport hermitian_endpoint_check(const Vec3& alpha, const Vec3& beta, double tol = 1e-9);

/// Rotation matrix R (acting on coordinate triples) and s in SU(2) with
/// s (v . e_{1..3}) s* = (R v) . e_{1..3}; R maps `from` onto the positive first axis.
struct AxisAlignment {
  Mat2C s;
  std::array<Vec3, 3> R{};
};

AxisAlignment align_to_first_axis(const Vec3& from);

/// Rotation of H0 coordinates induced by Ad(s) for s in SU(2).
std::array<Vec3, 3> adjoint_rotation(const Mat2C& s);

Vec3 rotate(const std::array<Vec3, 3>& R, const Vec3& v);

}  // namespace sublorentz
