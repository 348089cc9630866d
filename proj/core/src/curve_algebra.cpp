#include <kfin/curve_algebra.hpp>

#include <kfin/error.hpp>
#include <kfin/integer.hpp>

#include <algorithm>
#include <deque>
#include <mutex>

namespace kfin {

struct CurveAlgebra::Cache {
  std::mutex mutex;
  std::deque<Subspace> levels;  // levels[k] = L^k; deque keeps references stable
};

std::vector<BinaryForm> forms_of(const Subspace& space) {
  std::vector<BinaryForm> forms;
  forms.reserve(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) forms.push_back(BinaryForm::from_vector(space.basis().row(i)));
  return forms;
}

CurveAlgebra::CurveAlgebra(std::size_t ambient_degree, const std::vector<BinaryForm>& basis)
    : ambient_degree_(ambient_degree), cache_(std::make_shared<Cache>()) {
  std::vector<Vector> vectors;
  vectors.reserve(basis.size());
  for (const auto& f : basis) {
    if (f.degree() != ambient_degree) {
      throw DimensionMismatch("basis form " + to_string(f) + " has degree " + std::to_string(f.degree()) +
                              ", expected " + std::to_string(ambient_degree));
    }
    vectors.push_back(f.coeffs());
  }
  Subspace span = subspace_from_spanning(vectors, ambient_degree + 1);
  if (span.is_zero()) throw PreconditionError("linear system spans the zero space");
  cache_->levels.push_back(Subspace::full(1));
  cache_->levels.push_back(std::move(span));
}

CurveAlgebra new_curve(std::size_t ambient_degree, const std::vector<BinaryForm>& basis) {
  return CurveAlgebra(ambient_degree, basis);
}

std::vector<BinaryForm> CurveAlgebra::basis_forms() const { return forms_of(linear_system()); }

const Subspace& CurveAlgebra::power_space(std::size_t k) const {
  std::lock_guard lock(cache_->mutex);
  auto& levels = cache_->levels;
  while (levels.size() <= k) {
    const std::size_t next = levels.size();
    const auto lower = forms_of(levels.back());
    const auto gens = forms_of(levels[1]);
    std::vector<Vector> products;
    products.reserve(lower.size() * gens.size());
    for (const auto& f : lower) {
      for (const auto& g : gens) products.push_back(mul(f, g).coeffs());
    }
    levels.push_back(subspace_from_spanning(products, next * ambient_degree_ + 1));
  }
  return levels[k];
}

Subspace power_space(const CurveAlgebra& curve, std::size_t k) { return curve.power_space(k); }

CommonFactor reduce_common_factor(const CurveAlgebra& curve) {
  const auto basis = curve.basis_forms();
  BinaryForm h = basis.front().normalized();
  for (std::size_t i = 1; i < basis.size(); ++i) h = form_gcd(h, basis[i]);
  if (h.degree() == 0) return {BinaryForm(0, Vector{1}), curve};
  std::vector<BinaryForm> reduced;
  reduced.reserve(basis.size());
  for (const auto& f : basis) reduced.push_back(divide_exact(f, h));
  return {h, CurveAlgebra(curve.ambient_degree() - h.degree(), reduced)};
}

std::vector<std::size_t> hilbert(const CurveAlgebra& curve, std::size_t kmax) {
  if (kmax < 1) throw PreconditionError("hilbert needs kmax >= 1");
  std::vector<std::size_t> dims(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) dims[k] = curve.power_space(k).dim();
  return dims;
}

CurveInvariants invariants(const CurveAlgebra& curve, std::size_t kmax) {
  if (kmax < 3) throw PreconditionError("invariants needs kmax >= 3");
  if (curve.dim() < 2) {
    throw PreconditionError("a one-dimensional linear system has a constant Hilbert function");
  }
  const auto dims = hilbert(curve, kmax);
  auto diff = [&](std::size_t k) {
    return static_cast<std::int64_t>(dims[k]) - static_cast<std::int64_t>(dims[k - 1]);
  };
  const std::int64_t d = diff(kmax);
  if (diff(kmax - 1) != d || diff(kmax - 2) != d) {
    throw NotStabilized("Hilbert function not stabilized by k=" + std::to_string(kmax) +
                        " (last differences " + std::to_string(diff(kmax - 2)) + ", " +
                        std::to_string(diff(kmax - 1)) + ", " + std::to_string(d) +
                        "); raise kmax");
  }
  const auto top = static_cast<std::int64_t>(kmax);
  const std::int64_t g = d * top + 1 - static_cast<std::int64_t>(dims[kmax]);
  if (d < 1 || g < 0) {
    throw NotStabilized("fitted Hilbert polynomial " + std::to_string(d) + "k + " +
                        std::to_string(1 - g) + " is not that of a curve; raise kmax");
  }
  std::size_t k0 = kmax;
  while (k0 > 0 && static_cast<std::int64_t>(dims[k0 - 1]) ==
                       d * static_cast<std::int64_t>(k0 - 1) + 1 - g) {
    --k0;
  }
  return {d, g, k0};
}

std::vector<std::int64_t> attainable_orders(const CurveAlgebra& curve, std::size_t k,
                                            const PointP1& q) {
  const Subspace& space = curve.power_space(k);
  std::vector<Vector> digits;
  digits.reserve(space.dim());
  for (const auto& f : forms_of(space)) digits.push_back(linear_adic_digits(f, q));
  // Columns run over increasing powers of the linear form, so pivots of any
  // echelon form are the attainable orders.
  const Subspace filtered = subspace_from_spanning(digits, space.ambient_dim());
  std::vector<std::int64_t> orders;
  orders.reserve(filtered.dim());
  for (auto p : filtered.pivots()) orders.push_back(static_cast<std::int64_t>(p));
  return orders;
}

SemigroupSample value_semigroup(const CurveAlgebra& curve, const PointP1& q, std::size_t kmax) {
  if (kmax < 1) throw PreconditionError("value_semigroup needs kmax >= 1");
  std::vector<std::vector<std::int64_t>> levels;
  levels.reserve(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) levels.push_back(attainable_orders(curve, k, q));
  return SemigroupSample(std::move(levels));
}

std::string verdict_name(const KfVerdict& v) {
  if (std::holds_alternative<KfFinite>(v)) return "Finite";
  if (std::holds_alternative<KfUnknown>(v)) return "Unknown";
  return "Unsupported";
}

std::size_t stable_sample_depth(const CurveAlgebra& reduced, std::size_t requested) {
  // For a base-point free L the Hilbert function is polynomial from k = a on.
  return std::max({requested, reduced.ambient_degree() + 3, std::size_t{3}});
}

namespace {

struct DegreeCheck {
  CommonFactor reduced;
  std::optional<CurveInvariants> invariants;
  std::string unsupported;
};

DegreeCheck check_degree(const CurveAlgebra& curve, std::size_t kmax) {
  DegreeCheck out{reduce_common_factor(curve), std::nullopt, {}};
  const CurveAlgebra& base = out.reduced.reduced;
  if (base.dim() < 2) {
    out.unsupported = "linear system is one-dimensional after removing base points";
    return out;
  }
  out.invariants = invariants(base, stable_sample_depth(base, kmax));
  const auto a0 = static_cast<std::int64_t>(base.ambient_degree());
  if (out.invariants->degree != a0) {
    out.unsupported = "degree d=" + std::to_string(out.invariants->degree) +
                      " differs from ambient degree " + std::to_string(a0) +
                      " after removing base points";
  }
  return out;
}

}  // namespace

KfVerdict kf_test(const CurveAlgebra& curve, const PointP1& q, std::size_t kmax) {
  if (kmax < 1) throw PreconditionError("kf_test needs kmax >= 1");
  auto check = check_degree(curve, kmax);
  if (!check.unsupported.empty()) return KfUnsupported{check.unsupported};
  const CurveAlgebra& base = check.reduced.reduced;
  const auto d = static_cast<std::size_t>(check.invariants->degree);
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (member(linear_power(q, d * k).coeffs(), base.power_space(k))) return KfFinite{k};
  }
  return KfUnknown{kmax};
}

KfLocus kf_locus(const CurveAlgebra& curve, std::size_t k) {
  if (k < 1) throw PreconditionError("kf_locus needs k >= 1");
  auto check = check_degree(curve, k);
  if (!check.unsupported.empty()) throw PreconditionError("kf_locus unsupported: " + check.unsupported);
  const CurveAlgebra& base = check.reduced.reduced;
  const std::int64_t d = check.invariants->degree;
  const std::size_t n = static_cast<std::size_t>(d) * k;

  KfLocus out;
  out.k = k;
  out.degree = d;
  const Subspace constraints = annihilator(base.power_space(k));
  if (constraints.is_zero()) {
    out.identically_satisfied = true;
    out.form = BinaryForm(n);
    return out;
  }
  // phi((beta s - alpha t)^n) = sum_j phi_j C(n,j) (-1)^j alpha^j beta^(n-j),
  // stored with index n - j in the (alpha, beta) coefficient convention.
  std::optional<BinaryForm> g;
  for (std::size_t r = 0; r < constraints.dim(); ++r) {
    Vector c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      const BigRational& phi = constraints.basis()(r, j);
      if (phi == 0) continue;
      BigRational term = phi * BigRational(binomial(n, j));
      c[n - j] = (j % 2 == 0) ? term : BigRational(-term);
    }
    BinaryForm constraint(n, std::move(c));
    g = g ? form_gcd(*g, constraint) : constraint.normalized();
  }
  out.form = *g;
  out.roots = rational_roots(out.form);
  return out;
}

std::string to_string(GenusClass c) {
  switch (c) {
    case GenusClass::HomogeneouslyKF:
      return "HomogeneouslyKF";
    case GenusClass::SomeKfValuationExists:
      return "SomeKfValuationExists";
    case GenusClass::NoGuarantee:
      return "NoGuarantee";
  }
  return "?";
}

GenusReport genus_classification(const CurveAlgebra& curve, std::size_t kmax) {
  const CurveAlgebra base = reduce_common_factor(curve).reduced;
  const CurveInvariants inv = invariants(base, stable_sample_depth(base, kmax));
  GenusClass c = GenusClass::NoGuarantee;
  if (inv.genus == 0) c = GenusClass::HomogeneouslyKF;
  else if (inv.genus == 1) c = GenusClass::SomeKfValuationExists;
  return {inv, c};
}

}  // namespace kfin
