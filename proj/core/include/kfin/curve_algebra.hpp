#pragma once

// The graded ring R(L) = sum_k L^k of a linear system L of binary forms of
// degree a, and the order-of-vanishing valuations nu_Q on it.

#include <kfin/binary_forms.hpp>
#include <kfin/exact.hpp>
#include <kfin/semigroup.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace kfin {

/// R(L) for L a nonzero subspace of Sym^a. Power spaces L^k are computed on
/// demand and cached; copies share the cache. Reading from several threads
/// is safe, cache extension is serialized internally.
class CurveAlgebra {
 public:
  /// Throws DimensionMismatch if a form has degree != a and
  /// PreconditionError if the forms span zero.
  CurveAlgebra(std::size_t ambient_degree, const std::vector<BinaryForm>& basis);

  std::size_t ambient_degree() const { return ambient_degree_; }
  /// dim L.
  std::size_t dim() const { return linear_system().dim(); }
  const Subspace& linear_system() const { return power_space(1); }
  /// The canonical basis of L as forms.
  std::vector<BinaryForm> basis_forms() const;

  /// L^k inside Sym^(k*a). L^0 is the constants (ambient dimension 1).
  const Subspace& power_space(std::size_t k) const;

 private:
  struct Cache;
  std::size_t ambient_degree_;
  std::shared_ptr<Cache> cache_;
};

CurveAlgebra new_curve(std::size_t ambient_degree, const std::vector<BinaryForm>& basis);

/// The forms spanning a subspace of Sym^degree.
std::vector<BinaryForm> forms_of(const Subspace& space);

struct CommonFactor {
  BinaryForm factor;     // normalized gcd h of L
  CurveAlgebra reduced;  // L / h in Sym^(a - deg h)
};

/// Removes the base locus of L. Value semigroups are related by the shear
/// (k, b) -> (k, b + k * ord_Q(h)).
CommonFactor reduce_common_factor(const CurveAlgebra& curve);

/// Copy of L^k.
Subspace power_space(const CurveAlgebra& curve, std::size_t k);

/// dim L^k for k = 0..kmax.
std::vector<std::size_t> hilbert(const CurveAlgebra& curve, std::size_t kmax);

struct CurveInvariants {
  std::int64_t degree = 0;          // d
  std::int64_t genus = 0;           // arithmetic genus g
  std::size_t stabilization_k = 0;  // dim L^k = d*k + 1 - g for k0 <= k <= kmax
};

/// Fits dim L^k = d*k + 1 - g on the terminal run of the Hilbert function.
/// Requires kmax >= 3 and dim L >= 2. Throws NotStabilized unless the last
/// three first differences agree.
CurveInvariants invariants(const CurveAlgebra& curve, std::size_t kmax);

/// {ord_Q(f) : f in L^k, f != 0}, ascending. Has exactly dim L^k entries.
std::vector<std::int64_t> attainable_orders(const CurveAlgebra& curve, std::size_t k,
                                            const PointP1& q);

/// Slices of S(R(L), nu_Q) for levels 1..kmax.
SemigroupSample value_semigroup(const CurveAlgebra& curve, const PointP1& q, std::size_t kmax);

struct KfFinite {
  std::size_t witness_k;
};
struct KfUnknown {
  std::size_t kmax_searched;
};
struct KfUnsupported {
  std::string reason;
};
using KfVerdict = std::variant<KfFinite, KfUnknown, KfUnsupported>;

inline bool is_finite(const KfVerdict& v) { return std::holds_alternative<KfFinite>(v); }
inline bool is_unknown(const KfVerdict& v) { return std::holds_alternative<KfUnknown>(v); }
std::string verdict_name(const KfVerdict& v);

/// Semi-decides Khovanskii-finiteness of nu_Q: Finite(k) for the least
/// k <= kmax with (beta*s - alpha*t)^(d*k) in L^k, computed after removing
/// base points. Unknown(kmax) is never a negative answer. Unsupported when
/// the reduced L has degree d below its ambient degree.
KfVerdict kf_test(const CurveAlgebra& curve, const PointP1& q, std::size_t kmax);

struct KfLocus {
  std::size_t k = 0;
  std::int64_t degree = 0;
  /// True when L^k is all of Sym^(d*k). Every Q passes; `form` is then the
  /// zero form (the gcd of no constraints) and `roots` is empty.
  bool identically_satisfied = false;
  /// Normalized form in (alpha, beta) of degree d*k whose zeros are exactly
  /// the Q with (beta*s - alpha*t)^(d*k) in L^k.
  BinaryForm form{0};
  RationalRoots roots;
};

/// Same degree precondition as kf_test; throws PreconditionError otherwise.
KfLocus kf_locus(const CurveAlgebra& curve, std::size_t k);

enum class GenusClass { HomogeneouslyKF, SomeKfValuationExists, NoGuarantee };

std::string to_string(GenusClass c);

struct GenusReport {
  CurveInvariants invariants;
  GenusClass classification;
};

/// g = 0: every nu_Q is Khovanskii-finite; g = 1: some nu_Q is; g >= 2: no
/// claim either way. kmax is raised to at least a + 3 internally.
GenusReport genus_classification(const CurveAlgebra& curve, std::size_t kmax = 0);

/// Sample depth that guarantees a settled Hilbert function for a base-point
/// free L of ambient degree a.
std::size_t stable_sample_depth(const CurveAlgebra& reduced, std::size_t requested);

}  // namespace kfin
