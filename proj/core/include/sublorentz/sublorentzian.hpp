#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sublorentz/exponential.hpp"
#include "sublorentz/lie_algebra.hpp"
#include "sublorentz/mat2c.hpp"
#include "sublorentz/subriemannian.hpp"

namespace sublorentz {

enum class Regime { kTimelike, kIsotropic };

const char* to_string(Regime r);

/// Initial data (alpha_0, ..., alpha_6) of a normal future-directed extremal
///   g(t) = exp(t sum_{i=0..6} alpha_i e_i) exp(-t sum_{i=4..6} alpha_i e_i).
class ExtremalParams {
 public:
  /// Checks the regime normalization within 1e-12:
  ///   timelike:  alpha_0 = sqrt(1 + alpha_1^2 + alpha_2^2 + alpha_3^2),
  ///   isotropic: alpha_0 = |(alpha_1, alpha_2, alpha_3)| = 1.
  ExtremalParams(const std::array<double, 7>& alpha, Regime regime);

  /// Timelike parameters with alpha_0 filled in from (alpha_1..alpha_6).
  static ExtremalParams timelike(const Vec3& a, const Vec3& b);
  /// Isotropic parameters; `a` is rescaled to unit length.
  static ExtremalParams isotropic(const Vec3& a, const Vec3& b);

  const std::array<double, 7>& alpha() const { return alpha_; }
  double operator[](int i) const { return alpha_[static_cast<std::size_t>(i)]; }
  Regime regime() const { return regime_; }

 private:
  std::array<double, 7> alpha_;
  Regime regime_;
};

Mat2C normal_extremal(const ExtremalParams& p, double t);

/// Control g^{-1} g' = alpha_0 e0 + Ad(exp(t b)) a of the extremal, an element of H.
AlgCoords normal_extremal_control(const ExtremalParams& p, double t);

/// Same extremal for alpha_2 = alpha_3 = 0 from the simplified coefficient
/// formulas of the reduced frame.
Mat2C normal_extremal_reduced(double alpha1, double alpha4, double alpha5, double alpha6, double alpha0, double t);

/// Covector coordinates in the dual basis of e0, -e1, ..., -e6.
struct CovectorState {
  std::array<double, 7> psi{};

  /// psi_0^2 - psi_1^2 - psi_2^2 - psi_3^2; constant along normal extremals.
  double hamiltonian() const;
  /// Control u = psi_0 e0 - sum_{i=1..3} psi_i e_i selected by the minimum condition.
  AlgCoords control() const;
};

/// psi(0) of the extremal with the given parameters and back.
CovectorState covector_from_params(const ExtremalParams& p);
ExtremalParams params_from_covector(const CovectorState& psi, Regime regime);

/// Right-hand side psi_j' = sum_{i,k} u_i C_ij^k psi_k of the co-adjoint system.
std::array<double, 7> coadjoint_rhs(const AlgCoords& u, const std::array<double, 7>& psi);

struct PathSample {
  std::vector<double> times;
  std::vector<Mat2C> points;
  std::vector<AlgCoords> controls;
  /// Empty when the path carries no covector.
  std::vector<CovectorState> covectors;

  std::size_t size() const { return times.size(); }
};

/// Raised when an integration produces a non-finite state.
class DivergenceError : public GeometryError {
 public:
  DivergenceError(double time, const std::string& what)
      : GeometryError(ErrorCode::kDivergence, what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

struct PontryaginResult {
  PathSample path;
  /// max_t |H(t) - H(0)| for the covector Hamiltonian.
  double hamiltonian_drift = 0.0;
};

/// Fixed-step RK4 integration of the covector system coupled to g' = g u(t)
/// on [0, T] with `steps` steps. Every step is recorded.
PontryaginResult pontryagin_integrate(const CovectorState& psi0, Regime regime, double T, int steps);

enum class CausalClass { kIdentity, kTimelike, kIsotropic, kUnreachable, kIndeterminate };

const char* to_string(CausalClass c);

/// Distance value with out-of-band states: -infinity for unreachable targets
/// and unknown for indeterminate ones. Never used in arithmetic directly.
struct SLDistance {
  enum class Kind { kFinite, kMinusInfinity, kUnknown };
  Kind kind = Kind::kUnknown;
  double value = 0.0;  ///< meaningful only for kFinite

  static SLDistance finite(double v) { return {Kind::kFinite, v}; }
  static SLDistance minus_infinity() { return {Kind::kMinusInfinity, 0.0}; }
  static SLDistance unknown() { return {Kind::kUnknown, 0.0}; }
  bool is_finite() const { return kind == Kind::kFinite; }
};

struct CausalReport {
  double xi = 0.0;  ///< ln det g
  DistanceBracket eta;
  CausalClass cls = CausalClass::kIndeterminate;
  SLDistance distance;
  /// Range of sqrt(xi^2 - eta^2) over the eta bracket (timelike class only).
  double distance_lower = 0.0;
  double distance_upper = 0.0;
  /// Rapidity c with xi = k ch c, eta = k sh c (timelike class only).
  std::optional<double> c_param;
  /// True when g1 is in SU(2) \ {I}, a case outside the proven trichotomy.
  bool extrapolated = false;
  /// eta is exact (boost or scalar targets) rather than shot.
  bool exact_eta = false;
};

/// Classifies g relative to the identity; ties against the eta bracket are
/// reported as indeterminate.
CausalReport causal_classify(const Mat2C& g, const ShootOptions& opts = {});

/// Thrown by longest_arc for targets that are not classified as timelike or isotropic.
class NotReachableError : public GeometryError {
 public:
  NotReachableError(CausalReport report, const std::string& what)
      : GeometryError(ErrorCode::kNotReachable, what), report_(std::move(report)) {}
  const CausalReport& report() const noexcept { return report_; }

 private:
  CausalReport report_;
};

struct LongestArc {
  CausalReport report;
  std::optional<ExtremalParams> params;  ///< absent for g = I
  double duration = 0.0;                 ///< k (timelike) or xi (isotropic)
  PathSample path;
  /// Entrywise endpoint mismatch relative to max(1, |g|).
  double endpoint_residual = 0.0;
};

/// Longest arc from I to g through the shooting witness; `samples` >= 2 points.
LongestArc longest_arc(const Mat2C& g, int samples, const ShootOptions& opts = {});

/// Samples of a real function with linear interpolation between nodes and
/// constant extension outside.
struct KappaSamples {
  std::vector<double> times;
  std::vector<double> values;

  double operator()(double t) const;
  /// Samples f on [0, T] with n equal intervals.
  static KappaSamples from_function(const std::function<double(double)>& f, double T, int n);
};

struct AbnormalResult {
  PathSample path;
  /// Largest coadjoint right-hand side for psi = (0, 0, 0, 0, -beta_hat) along the path.
  double covector_residual = 0.0;
};

/// Integrates g' = g u(t) with u = u0 e0 - s(kappa) beta_hat . (e1, e2, e3),
/// (u0, s) = (ch, sh) for timelike and (|.|, identity) for isotropic paths,
/// over the sample range of kappa.
AbnormalResult abnormal_extremal(const KappaSamples& kappa, const Vec3& beta_dir, Regime regime, int steps);

struct NonstrictReport {
  bool nonstrict = false;
  AlgCoords control;  ///< mean recovered control
  double control_deviation = 0.0;
  std::optional<Regime> regime;
  /// Abnormal covector certifying the subgroup, when one exists.
  std::optional<std::array<double, 7>> covector;
  double covector_residual = 0.0;
};

/// Recovers controls log(g_i^{-1} g_{i+1}) / dt and tests whether the path is
/// a future-directed one-parameter subgroup of the horizontal distribution.
NonstrictReport nonstrict_abnormal_check(const PathSample& p);

/// s g s* for s in SU(2); throws kNotSpecialUnitary otherwise.
Mat2C su2_conjugate(const Mat2C& s, const Mat2C& g);

struct CanonicalForm {
  ExtremalParams params;
  Mat2C s;  ///< su2_conjugate(s, normal_extremal(p, t)) = normal_extremal(params, t)
};

/// Rotates (alpha_1, alpha_2, alpha_3) onto the positive first axis.
CanonicalForm canonical_reduce(const ExtremalParams& p);

enum class CausalRelation { kChronological, kCausalNull, kUnrelated, kIndeterminate };

const char* to_string(CausalRelation r);

CausalRelation causal_relation(const Mat2C& x, const Mat2C& y, const ShootOptions& opts = {});

}  // namespace sublorentz
