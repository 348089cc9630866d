#pragma once

// Almost toric algebras R = K[p_i(t) * chi^{u_i}] graded by Z^m, their ray
// Veronese subalgebras, and Khovanskii-finiteness reports assembled per ray.

#include <kfin/binary_forms.hpp>
#include <kfin/cone.hpp>
#include <kfin/curve_algebra.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kfin {

struct Generator {
  Poly p;
  Weight u;
};

/// A point of the t-line: a rational value, or nullopt for infinity.
using Tau = std::optional<BigRational>;

std::string to_string(const Tau& tau);

/// The point of P^1 a ray curve uses for tau: (1 : tau), or (0 : 1) at infinity.
PointP1 point_for(const Tau& tau);

/// Validated generator list. R_0 = K is enforced: the weight cone must be
/// pointed and weight-zero generators must be nonzero constants.
class MultigradedAlgebra {
 public:
  MultigradedAlgebra(std::size_t rank, std::vector<Generator> generators);

  std::size_t rank() const { return rank_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const ConeDescription& cone() const { return cone_; }

 private:
  std::size_t rank_;
  std::vector<Generator> generators_;
  ConeDescription cone_;
};

/// Largest rank accepted by the cone and ray operations.
inline constexpr std::size_t kMaxSupportedRank = 4;

ConeZm weight_cone_rays(const MultigradedAlgebra& algebra);

/// R_u as a subspace of K[t]_{<=N}, coordinates in ascending powers of t. An
/// empty piece is the zero subspace of K[t]_{<=0}.
Subspace graded_piece(const MultigradedAlgebra& algebra, const Weight& u);

/// Largest t-degree occurring in a subspace of K[t]_{<=N}; -1 for zero.
long max_t_degree(const Subspace& piece);

struct RayCurveOptions {
  std::size_t lambda_cap = 64;
};

struct RayCurveData {
  Weight ray;
  std::size_t lambda = 0;
  std::size_t big_degree = 0;  // D
  CurveAlgebra curve;          // L = {s^D f(t/s) : f in R_{lambda*ray}}
};

/// The Veronese subalgebra along a ray as a curve algebra. lambda starts at
/// the least level with R_{lambda*ray} != 0 and doubles until
/// dim L^k = dim R_{k*lambda*ray} for all k <= kmax. Throws NotStabilized
/// ("ray Veronese not stabilized") once lambda passes the cap.
RayCurveData ray_curve(const MultigradedAlgebra& algebra, const Weight& ray, std::size_t kmax,
                       const RayCurveOptions& options = {});

/// A machine-readable qualification attached to a report.
struct Caveat {
  std::string code;
  std::string message;
};

/// Reports only cover the extreme rays of the weight cone plus any extra
/// rays requested; the rays that matter are those of the valuation cone.
Caveat ray_coverage_caveat();

struct RayVerdict {
  Weight ray;
  bool extra = false;  // supplied by the caller rather than an extreme ray
  std::size_t lambda = 0;
  KfVerdict verdict;
};

struct MultigradedKfReport {
  std::vector<RayVerdict> per_ray;
  /// Finite iff every ray is Finite (witness is the largest ray witness);
  /// Unknown if any ray is Unknown; Unsupported otherwise.
  KfVerdict combined;
  std::vector<Caveat> caveats;
};

MultigradedKfReport multigraded_kf(const MultigradedAlgebra& algebra, const Tau& tau,
                                   std::size_t kmax, const std::vector<Weight>& extra_rays = {});

struct RayGenus {
  Weight ray;
  std::size_t lambda = 0;
  std::int64_t degree = 0;
  std::int64_t genus = 0;
};

enum class HkfVerdict { HomogeneouslyKF, NotHomogeneouslyKF };

std::string to_string(HkfVerdict v);

struct HkfReport {
  std::vector<RayGenus> per_ray;
  HkfVerdict verdict = HkfVerdict::HomogeneouslyKF;
  /// Index into per_ray of the first ray with positive genus.
  std::optional<std::size_t> offending;
  std::vector<Caveat> caveats;
};

/// Genus of every extreme-ray curve. A ray whose Veronese is a polynomial
/// ring in one variable counts as genus 0.
HkfReport hkf_report(const MultigradedAlgebra& algebra, std::size_t kmax);

}  // namespace kfin
