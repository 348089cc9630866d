#include <kfin/multigraded.hpp>

#include <kfin/error.hpp>

#include <algorithm>
#include <functional>

namespace kfin {

std::string to_string(const Tau& tau) { return tau ? tau->get_str() : std::string("inf"); }

PointP1 point_for(const Tau& tau) { return tau ? PointP1::affine(*tau) : PointP1::infinity(); }

namespace {

bool is_zero_weight(const Weight& u) {
  return std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x == 0; });
}

void require_supported_rank(const MultigradedAlgebra& algebra) {
  if (algebra.rank() > kMaxSupportedRank) {
    throw PreconditionError("rank " + std::to_string(algebra.rank()) + " exceeds the supported maximum " +
                            std::to_string(kMaxSupportedRank));
  }
}

Weight scaled(const Weight& u, std::size_t c) {
  Weight out(u);
  for (auto& x : out) x *= static_cast<std::int64_t>(c);
  return out;
}

}  // namespace

MultigradedAlgebra::MultigradedAlgebra(std::size_t rank, std::vector<Generator> generators)
    : rank_(rank), generators_(std::move(generators)) {
  if (rank_ == 0) throw PreconditionError("multigraded algebra needs rank >= 1");
  std::vector<Weight> weights;
  for (const auto& g : generators_) {
    if (g.u.size() != rank_) {
      throw DimensionMismatch("weight " + to_string(g.u) + " is not in Z^" + std::to_string(rank_));
    }
    if (g.p.is_zero()) throw PreconditionError("generator with zero polynomial");
    if (is_zero_weight(g.u) && g.p.degree() > 0) {
      throw PreconditionError("generator " + to_string(g.p) + " of weight zero is not constant, so R_0 != K");
    }
    weights.push_back(g.u);
  }
  cone_ = describe_cone(weights, rank_);
}

ConeZm weight_cone_rays(const MultigradedAlgebra& algebra) {
  require_supported_rank(algebra);
  return algebra.cone().cone;
}

long max_t_degree(const Subspace& piece) {
  long deg = -1;
  for (std::size_t i = 0; i < piece.dim(); ++i) {
    const auto row = piece.basis().row(i);
    for (std::size_t j = row.size(); j-- > 0;) {
      if (row[j] != 0) {
        deg = std::max(deg, static_cast<long>(j));
        break;
      }
    }
  }
  return deg;
}

Subspace graded_piece(const MultigradedAlgebra& algebra, const Weight& u) {
  if (u.size() != algebra.rank()) {
    throw DimensionMismatch("weight " + to_string(u) + " is not in Z^" + std::to_string(algebra.rank()));
  }
  if (is_zero_weight(u)) return Subspace::full(1);

  const ConeDescription& cone = algebra.cone();
  std::vector<const Generator*> gens;
  std::vector<BigInt> height;
  for (const auto& g : algebra.generators()) {
    if (is_zero_weight(g.u)) continue;
    gens.push_back(&g);
    height.push_back(pairing(cone.positive_functional, g.u));
  }

  std::vector<Poly> products;
  Weight rem = u;
  // Every exponent vector satisfies sum e_i <w, u_i> = <w, u> for the
  // positive functional w, so the search is finite; facet normals prune
  // branches whose remainder has left the cone.
  std::function<void(std::size_t, const Poly&)> dfs = [&](std::size_t i, const Poly& acc) {
    for (const auto& f : cone.facets) {
      if (pairing(f, rem) < 0) return;
    }
    const BigInt budget = pairing(cone.positive_functional, rem);
    if (budget < 0) return;
    if (i == gens.size()) {
      if (is_zero_weight(rem)) products.push_back(acc);
      return;
    }
    if (budget == 0) {
      if (is_zero_weight(rem)) products.push_back(acc);
      return;
    }
    const BigInt max_e = budget / height[i];
    Poly current = acc;
    for (BigInt e = 0;; ++e) {
      dfs(i + 1, current);
      if (e == max_e) break;
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= gens[i]->u[j];
      current = current * gens[i]->p;
    }
    for (std::size_t j = 0; j < rem.size(); ++j) {
      rem[j] += static_cast<std::int64_t>(max_e.get_si()) * gens[i]->u[j];
    }
  };
  dfs(0, Poly::constant(1));

  if (products.empty()) return Subspace(1);
  long n = 0;
  for (const auto& p : products) n = std::max(n, p.degree());
  std::vector<Vector> vectors;
  vectors.reserve(products.size());
  for (const auto& p : products) {
    Vector v(static_cast<std::size_t>(n) + 1);
    std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin());
    vectors.push_back(std::move(v));
  }
  return subspace_from_spanning(vectors, static_cast<std::size_t>(n) + 1);
}

RayCurveData ray_curve(const MultigradedAlgebra& algebra, const Weight& ray, std::size_t kmax,
                       const RayCurveOptions& options) {
  require_supported_rank(algebra);
  if (kmax < 1) throw PreconditionError("ray_curve needs kmax >= 1");
  if (ray.size() != algebra.rank()) {
    throw DimensionMismatch("ray " + to_string(ray) + " is not in Z^" + std::to_string(algebra.rank()));
  }
  const Weight r = primitive_weight(ray);

  std::size_t lambda = 1;
  while (lambda <= options.lambda_cap && graded_piece(algebra, scaled(r, lambda)).is_zero()) ++lambda;
  if (lambda > options.lambda_cap) {
    throw PreconditionError("no nonzero graded piece along ray " + to_string(r) + " up to lambda=" +
                            std::to_string(options.lambda_cap));
  }

  for (; lambda <= options.lambda_cap; lambda *= 2) {
    const Subspace piece = graded_piece(algebra, scaled(r, lambda));
    const auto big_degree = static_cast<std::size_t>(max_t_degree(piece));
    std::vector<BinaryForm> forms;
    for (std::size_t i = 0; i < piece.dim(); ++i) {
      Vector row = piece.basis_vector(i);
      row.resize(big_degree + 1);
      forms.push_back(BinaryForm(big_degree, std::move(row)));
    }
    CurveAlgebra curve(big_degree, forms);

    std::vector<Subspace> levels;
    bool certified = true;
    for (std::size_t k = 2; k <= kmax && certified; ++k) {
      levels.push_back(graded_piece(algebra, scaled(r, k * lambda)));
      certified = curve.power_space(k).dim() == levels.back().dim();
    }
    if (!certified) continue;
    for (std::size_t k = 2; k <= kmax; ++k) {
      const long deg = max_t_degree(levels[k - 2]);
      if (deg > static_cast<long>(k * big_degree)) {
        throw PreconditionError("graded piece at k=" + std::to_string(k) + " along ray " + to_string(r) +
                                " has t-degree " + std::to_string(deg) + " > k*D = " +
                                std::to_string(k * big_degree));
      }
    }
    return RayCurveData{r, lambda, big_degree, std::move(curve)};
  }
  throw NotStabilized("ray Veronese not stabilized along ray " + to_string(r) + " for lambda up to " +
                      std::to_string(options.lambda_cap));
}

Caveat ray_coverage_caveat() {
  return {"ray_coverage",
          "verdict covers the extreme rays of the weight cone plus any extra rays; rays of the "
          "valuation cone projecting into the interior of the weight cone are not analyzed"};
}

MultigradedKfReport multigraded_kf(const MultigradedAlgebra& algebra, const Tau& tau, std::size_t kmax,
                                   const std::vector<Weight>& extra_rays) {
  std::vector<std::pair<Weight, bool>> rays;
  for (const auto& r : weight_cone_rays(algebra).rays) rays.emplace_back(r, false);
  for (const auto& e : extra_rays) {
    if (e.size() != algebra.rank()) {
      throw DimensionMismatch("extra ray " + to_string(e) + " is not in Z^" + std::to_string(algebra.rank()));
    }
    Weight r = primitive_weight(e);
    if (std::none_of(rays.begin(), rays.end(), [&](const auto& x) { return x.first == r; })) {
      rays.emplace_back(std::move(r), true);
    }
  }

  MultigradedKfReport report;
  const PointP1 q = point_for(tau);
  for (const auto& [r, extra] : rays) {
    RayCurveData data = ray_curve(algebra, r, kmax);
    report.per_ray.push_back({r, extra, data.lambda, kf_test(data.curve, q, kmax)});
  }

  std::size_t witness = 0;
  bool all_finite = true;
  bool any_unknown = false;
  std::string reasons;
  for (const auto& entry : report.per_ray) {
    if (const auto* f = std::get_if<KfFinite>(&entry.verdict)) {
      witness = std::max(witness, f->witness_k);
      continue;
    }
    all_finite = false;
    if (is_unknown(entry.verdict)) any_unknown = true;
    if (const auto* u = std::get_if<KfUnsupported>(&entry.verdict)) {
      if (!reasons.empty()) reasons += "; ";
      reasons += "ray " + to_string(entry.ray) + ": " + u->reason;
    }
  }
  if (all_finite) report.combined = KfFinite{witness};
  else if (any_unknown) report.combined = KfUnknown{kmax};
  else report.combined = KfUnsupported{reasons};
  report.caveats.push_back(ray_coverage_caveat());
  return report;
}

std::string to_string(HkfVerdict v) {
  return v == HkfVerdict::HomogeneouslyKF ? "HomogeneouslyKF" : "NotHomogeneouslyKF";
}

HkfReport hkf_report(const MultigradedAlgebra& algebra, std::size_t kmax) {
  HkfReport report;
  for (const auto& r : weight_cone_rays(algebra).rays) {
    RayCurveData data = ray_curve(algebra, r, kmax);
    RayGenus entry{r, data.lambda, 0, 0};
    if (data.curve.dim() > 1) {
      const GenusReport g = genus_classification(data.curve, kmax);
      entry.degree = g.invariants.degree;
      entry.genus = g.invariants.genus;
    }
    if (entry.genus > 0 && !report.offending) report.offending = report.per_ray.size();
    report.per_ray.push_back(std::move(entry));
  }
  report.verdict = report.offending ? HkfVerdict::NotHomogeneouslyKF : HkfVerdict::HomogeneouslyKF;
  report.caveats.push_back(ray_coverage_caveat());
  return report;
}

}  // namespace kfin
