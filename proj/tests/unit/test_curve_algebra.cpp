#include <doctest.h>

#include <kfin/curve_algebra.hpp>
#include <kfin/error.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <thread>

using namespace kfin;
using fixtures::mono;

namespace {

std::vector<Vector> vectors_of(const Subspace& v) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < v.dim(); ++i) rows.push_back(v.basis_vector(i));
  return rows;
}

Subspace span_of(const std::vector<BinaryForm>& forms) {
  std::vector<Vector> v;
  for (const auto& f : forms) v.push_back(f.coeffs());
  return subspace_from_spanning(v, forms.front().degree() + 1);
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> r;
  for (auto i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

}  // namespace

TEST_SUITE("curve_algebra") {
  TEST_CASE("new_curve") {
    CHECK(fixtures::cuspidal_cubic().dim() == 3);
    CHECK(fixtures::plane_quartic().dim() == 3);
    CHECK(new_curve(2, {mono(2, 0), mono(2, 0, 2)}).dim() == 1);
    CHECK_THROWS_AS(new_curve(3, {mono(3, 0), mono(1, 1)}), DimensionMismatch);
    CHECK_THROWS_AS(new_curve(2, {BinaryForm(2)}), PreconditionError);
  }

  TEST_CASE("reduce_common_factor") {
    auto a = reduce_common_factor(new_curve(3, {mono(3, 0), mono(2, 1)}));
    CHECK(a.factor == mono(2, 0));
    CHECK(a.reduced.linear_system() == fixtures::line().linear_system());

    auto b = reduce_common_factor(fixtures::cuspidal_cubic());
    CHECK(b.factor == BinaryForm(0, Vector{1}));
    CHECK(b.reduced.linear_system() == fixtures::cuspidal_cubic().linear_system());

    auto c = reduce_common_factor(new_curve(3, {mono(2, 1), mono(1, 2)}));
    CHECK(c.factor == mono(1, 1));
    CHECK(c.reduced.ambient_degree() == 1);
    CHECK(c.reduced.linear_system() == Subspace::full(2));
  }

  TEST_CASE("power_space examples") {
    const auto cubic = fixtures::cuspidal_cubic();
    const Subspace l2 = power_space(cubic, 2);
    CHECK(l2 == span_of({mono(6, 0), mono(5, 1), mono(4, 2), mono(3, 3), mono(2, 4), mono(0, 6)}));
    CHECK(power_space(cubic, 1) == cubic.linear_system());
    CHECK(power_space(cubic, 0) == Subspace::full(1));

    const Subspace r2 = power_space(fixtures::root_cubic(), 2);
    CHECK(r2.dim() == 6);
    CHECK(r2 == span_of({mono(5, 1), mono(4, 2), mono(3, 3), mono(2, 4), mono(1, 5), mono(6, 0) + mono(0, 6)}));
  }

  TEST_CASE("power_space equals the span of all products for a <= 4, k <= 4") {
    std::mt19937_64 rng(2024);
    std::vector<CurveAlgebra> curves;
    for (const auto& n : fixtures::all_curves()) {
      if (n.curve.ambient_degree() <= 4) curves.push_back(n.curve);
    }
    for (int i = 0; i < 12; ++i) {
      const std::size_t a = 1 + static_cast<std::size_t>(i % 4);
      std::vector<BinaryForm> basis;
      for (int j = 0; j < 2 + i % 2; ++j) basis.push_back(oracle::random_form(rng, a, 3));
      curves.push_back(new_curve(a, basis));
    }
    for (const auto& c : curves) {
      const auto basis = c.basis_forms();
      for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(vectors_of(c.power_space(k)) == oracle::all_products_span(basis, k));
      }
    }
  }

  TEST_CASE("hilbert") {
    const auto cubic_dims = hilbert(fixtures::cuspidal_cubic(), 4);
    CHECK(cubic_dims == std::vector<std::size_t>{1, 3, 6, 9, 12});
    // the same numbers from naive product spans
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(oracle::all_products_span(fixtures::cuspidal_cubic().basis_forms(), k).size() == cubic_dims[k]);
    }
    CHECK(hilbert(fixtures::line(), 3) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(hilbert(fixtures::plane_quartic(), 4) == std::vector<std::size_t>{1, 3, 6, 10, 14});
    CHECK_THROWS_AS(hilbert(fixtures::line(), 0), PreconditionError);
  }

  TEST_CASE("invariants") {
    const auto cubic = invariants(fixtures::cuspidal_cubic(), 6);
    CHECK(cubic.degree == 3);
    CHECK(cubic.genus == 1);
    CHECK(cubic.stabilization_k == 1);

    const auto quartic = invariants(fixtures::plane_quartic(), 6);
    CHECK(quartic.degree == 4);
    CHECK(quartic.genus == 3);
    CHECK(quartic.stabilization_k == 2);

    const auto rational_normal_like =
        invariants(new_curve(5, {mono(5, 0), mono(4, 1), mono(3, 2), mono(0, 5)}), 8);
    CHECK(rational_normal_like.degree == 5);

    CHECK(invariants(fixtures::line(), 3).genus == 0);
  }

  TEST_CASE("invariants refuses to guess") {
    // 3, 6, 10: differences 3, 4 have not settled
    CHECK_THROWS_AS(invariants(fixtures::plane_quartic(), 3), NotStabilized);
    CHECK_THROWS_AS(invariants(fixtures::cuspidal_cubic(), 2), PreconditionError);
    CHECK_THROWS_AS(invariants(new_curve(2, {mono(2, 0)}), 4), PreconditionError);
  }

  TEST_CASE("attainable_orders examples") {
    const auto cubic = fixtures::cuspidal_cubic();
    CHECK(attainable_orders(cubic, 1, PointP1(0, 1)) == std::vector<std::int64_t>{0, 2, 3});
    CHECK(attainable_orders(cubic, 2, PointP1(0, 1)) == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6});
    const auto oracle_orders = oracle::attainable_orders(vectors_of(cubic.power_space(2)), 6, PointP1(0, 1));
    CHECK(oracle_orders == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6});
  }

  TEST_CASE("attainable_orders agree with the filtration oracle and have dim L^k elements") {
    std::mt19937_64 rng(31);
    for (const auto& [name, curve] : fixtures::all_curves()) {
      std::vector<PointP1> points{PointP1(0, 1), PointP1(1, 0), PointP1(1, 1), PointP1(1, -1)};
      for (int i = 0; i < 2; ++i) points.push_back(oracle::random_point(rng, 5));
      for (std::size_t k = 1; k <= 6; ++k) {
        const std::size_t n = k * curve.ambient_degree();
        for (const auto& q : points) {
          const auto orders = attainable_orders(curve, k, q);
          CHECK_MESSAGE(orders.size() == curve.power_space(k).dim(), name);
          CHECK(std::is_sorted(orders.begin(), orders.end()));
          if (k <= 3) {
            CHECK_MESSAGE(orders == oracle::attainable_orders(vectors_of(curve.power_space(k)), n, q), name);
          }
        }
      }
    }
  }

  TEST_CASE("value_semigroup examples") {
    const auto toric = value_semigroup(fixtures::toric_quartic(), PointP1(0, 1), 3);
    CHECK(toric.slice(1) == std::vector<std::int64_t>{0, 3, 4});
    // every level is the set of sums of level-one values
    for (std::int64_t k = 2; k <= 3; ++k) {
      std::vector<std::int64_t> sums;
      for (auto a : toric.slice(k - 1)) {
        for (auto b : toric.slice(1)) sums.push_back(a + b);
      }
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
      CHECK(toric.slice(k) == sums);
    }

    const auto quartic = value_semigroup(fixtures::plane_quartic(), PointP1(0, 1), 3);
    CHECK(quartic.slice(1) == std::vector<std::int64_t>{0, 2, 3});
    CHECK(quartic.slice(2) == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6});
    // {0} together with 2..4k-2; confirmed against the filtration oracle
    std::vector<std::int64_t> s3{0};
    for (auto b : range(2, 10)) s3.push_back(b);
    CHECK(quartic.slice(3) == s3);
    CHECK(oracle::attainable_orders(vectors_of(fixtures::plane_quartic().power_space(3)), 12, PointP1(0, 1)) == s3);

    const auto line = value_semigroup(fixtures::line(), PointP1(3, 7), 2);
    CHECK(line.slice(1) == range(0, 1));
    CHECK(line.slice(2) == range(0, 2));
  }

  TEST_CASE("slices are closed under addition and sit in cone((1,0),(1,d))") {
    for (const auto& [name, curve] : fixtures::all_curves()) {
      const std::int64_t d = invariants(curve, stable_sample_depth(curve, 6)).degree;
      for (const PointP1& q : {PointP1(0, 1), PointP1(1, 0), PointP1(1, 1), PointP1(2, -1)}) {
        const auto s = value_semigroup(curve, q, 6);
        for (std::int64_t k1 = 1; k1 <= 6; ++k1) {
          CHECK_MESSAGE(s.slice(k1).front() == 0, name);
          CHECK_MESSAGE(s.slice(k1).back() <= d * k1, name);
          for (std::int64_t k2 = 1; k1 + k2 <= 6; ++k2) {
            for (auto a : s.slice(k1)) {
              for (auto b : s.slice(k2)) CHECK_MESSAGE(s.contains(k1 + k2, a + b), name);
            }
          }
        }
      }
    }
  }

  TEST_CASE("normalization asymptotics on the fixtures") {
    // max(S_k) >= d*k - c with the defect c seen at small k
    struct Case {
      CurveAlgebra curve;
      PointP1 q;
      std::int64_t c;
    };
    const std::vector<Case> cases{{fixtures::cuspidal_cubic(), PointP1(0, 1), 0},
                                  {fixtures::plane_quartic(), PointP1(0, 1), 2},
                                  {fixtures::toric_quartic(), PointP1(0, 1), 0},
                                  {fixtures::quintic_family(), PointP1(0, 1), 2}};
    for (const auto& c : cases) {
      const std::int64_t d = invariants(c.curve, stable_sample_depth(c.curve, 6)).degree;
      const auto s = value_semigroup(c.curve, c.q, 6);
      for (std::int64_t k = 1; k <= 6; ++k) {
        CHECK(s.slice(k).back() >= d * k - c.c);
        if (k >= 2) {
          // max(S_k)/k does not decrease along multiples
          if (6 % k == 0) CHECK(s.slice(6).back() * k >= s.slice(k).back() * 6);
        }
      }
    }
  }

  TEST_CASE("base points shear the value semigroup") {
    const BinaryForm h = mul(mono(1, 0) - mono(0, 1), mono(0, 1));  // (s - t) t
    std::vector<BinaryForm> lifted;
    for (const auto& f : fixtures::cuspidal_cubic().basis_forms()) lifted.push_back(mul(h, f));
    const CurveAlgebra a = new_curve(5, lifted);
    const auto reduced = reduce_common_factor(a);
    CHECK(reduced.factor == h.normalized());
    for (const PointP1& q : {PointP1(1, 1), PointP1(1, 0), PointP1(0, 1), PointP1(1, 2)}) {
      const auto big = value_semigroup(a, q, 4);
      const auto small = value_semigroup(reduced.reduced, q, 4);
      const auto shift = static_cast<std::int64_t>(ord_at(h, q));
      for (std::int64_t k = 1; k <= 4; ++k) {
        std::vector<std::int64_t> sheared;
        for (auto b : small.slice(k)) sheared.push_back(b + k * shift);
        CHECK(big.slice(k) == sheared);
      }
    }
  }

  TEST_CASE("kf_test examples") {
    const auto cubic_inf = kf_test(fixtures::cuspidal_cubic(), PointP1(1, 0), 5);
    REQUIRE(is_finite(cubic_inf));
    CHECK(std::get<KfFinite>(cubic_inf).witness_k == 1);

    const auto root = kf_test(fixtures::root_cubic(), PointP1(1, -1), 5);
    REQUIRE(is_finite(root));
    CHECK(std::get<KfFinite>(root).witness_k == 1);
    // (s + t)^3 = s^3 + 3 s^2 t + 3 s t^2 + t^3
    CHECK(member(linear_power(PointP1(1, -1), 3).coeffs(), fixtures::root_cubic().linear_system()));

    const auto quintic = fixtures::quintic_family();
    std::mt19937_64 rng(8);
    for (int i = 0; i < 5; ++i) {
      const auto v = kf_test(quintic, oracle::random_point(rng, 9), 6);
      REQUIRE(is_unknown(v));
      CHECK(std::get<KfUnknown>(v).kmax_searched == 6);
    }

    const auto composite = kf_test(new_curve(2, {mono(2, 0), mono(0, 2)}), PointP1(0, 1), 4);
    CHECK(std::holds_alternative<KfUnsupported>(composite));
    CHECK(verdict_name(composite) == "Unsupported");
  }

  TEST_CASE("kf_test removes base points first") {
    std::vector<BinaryForm> lifted;
    for (const auto& f : fixtures::cuspidal_cubic().basis_forms()) lifted.push_back(mul(mono(1, 0), f));
    const auto v = kf_test(new_curve(4, lifted), PointP1(1, 0), 3);
    REQUIRE(is_finite(v));
    CHECK(std::get<KfFinite>(v).witness_k == 1);
  }

  TEST_CASE("kf_locus examples") {
    const auto cubic = kf_locus(fixtures::cuspidal_cubic(), 1);
    CHECK(cubic.degree == 3);
    CHECK(cubic.form == mono(2, 1));  // alpha^2 beta
    REQUIRE(cubic.roots.roots.size() == 2);
    CHECK(cubic.roots.roots[0].first == PointP1(0, 1));
    CHECK(cubic.roots.roots[1].first == PointP1(1, 0));

    const auto root = kf_locus(fixtures::root_cubic(), 1);
    CHECK(root.form == mono(3, 0) + mono(0, 3));
    REQUIRE(root.roots.roots.size() == 1);
    CHECK(root.roots.roots[0].first == PointP1(1, -1));
    CHECK(root.roots.residual_degree == 2);

    const auto quintic = kf_locus(fixtures::quintic_family(), 1);
    CHECK(quintic.form.degree() == 0);
    CHECK_FALSE(quintic.form.is_zero());
    CHECK(quintic.roots.roots.empty());
    CHECK_FALSE(quintic.identically_satisfied);

    const auto line = kf_locus(fixtures::line(), 2);
    CHECK(line.identically_satisfied);
    CHECK(line.form.is_zero());
    CHECK_THROWS_AS(kf_locus(new_curve(2, {mono(2, 0), mono(0, 2)}), 1), PreconditionError);
  }

  TEST_CASE("kf_test witness is the first level whose locus vanishes at q") {
    // membership of u^(dk) in L^k is not monotone in k, so each level is checked
    std::mt19937_64 rng(41);
    constexpr std::size_t kTop = 3;
    for (const auto& [name, curve] : fixtures::all_curves()) {
      if (name == "line") continue;
      std::vector<KfLocus> loci;
      for (std::size_t k = 1; k <= kTop; ++k) loci.push_back(kf_locus(curve, k));
      std::vector<PointP1> points{PointP1(0, 1), PointP1(1, 0), PointP1(1, 1), PointP1(1, -1)};
      for (const auto& locus : loci) {
        for (const auto& [q, m] : locus.roots.roots) points.push_back(q);
      }
      for (int i = 0; i < 3; ++i) points.push_back(oracle::random_point(rng, 6));
      for (const auto& q : points) {
        std::optional<std::size_t> first;
        for (std::size_t k = 1; k <= kTop && !first; ++k) {
          if (loci[k - 1].form.evaluate(BigRational(q.alpha()), BigRational(q.beta())) == 0) first = k;
        }
        for (std::size_t k = 1; k <= kTop; ++k) {
          const KfVerdict v = kf_test(curve, q, k);
          const bool expect = first && *first <= k;
          REQUIRE_MESSAGE(is_finite(v) == expect, name << " k=" << k << " q=" << to_string(q));
          if (expect) CHECK(std::get<KfFinite>(v).witness_k == *first);
        }
      }
    }
  }

  TEST_CASE("root cubic at (1:1) is finite at level 2 but off the level-3 locus") {
    const auto curve = fixtures::root_cubic();
    const PointP1 q(1, 1);
    CHECK(kf_locus(curve, 2).form.evaluate(1, 1) == 0);
    CHECK(kf_locus(curve, 3).form.evaluate(1, 1) != 0);
    CHECK(std::get<KfFinite>(kf_test(curve, q, 3)).witness_k == 2);
  }

  TEST_CASE("genus_classification") {
    CHECK(genus_classification(fixtures::line()).classification == GenusClass::HomogeneouslyKF);
    CHECK(genus_classification(fixtures::cuspidal_cubic()).classification == GenusClass::SomeKfValuationExists);
    CHECK(genus_classification(fixtures::plane_quartic()).classification == GenusClass::NoGuarantee);
    CHECK(to_string(GenusClass::NoGuarantee) == "NoGuarantee");
  }

  TEST_CASE("power spaces can be requested from several threads") {
    const auto curve = fixtures::quintic_family();
    const auto fresh = fixtures::quintic_family();
    std::vector<std::vector<std::size_t>> seen(4);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < 4; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t k = 8; k-- > 0;) seen[w].push_back(curve.power_space((k + w) % 8).dim());
      });
    }
    for (auto& th : workers) th.join();
    for (std::size_t w = 0; w < 4; ++w) {
      for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t k = (7 - i + w) % 8;
        CHECK(seen[w][i] == fresh.power_space(k).dim());
      }
    }
  }
}
