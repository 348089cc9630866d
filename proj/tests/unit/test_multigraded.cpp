#include <doctest.h>

#include <kfin/error.hpp>
#include <kfin/multigraded.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace kfin;
using fixtures::mono;
using fixtures::poly;

namespace {

MultigradedAlgebra with_weights(std::size_t rank, const std::vector<Weight>& weights) {
  std::vector<Generator> gens;
  for (const auto& w : weights) gens.push_back({poly({1}), w});
  return MultigradedAlgebra(rank, gens);
}

Subspace poly_span(const std::vector<Poly>& polys) {
  long n = 0;
  for (const auto& p : polys) n = std::max(n, p.degree());
  std::vector<Vector> v;
  for (const auto& p : polys) {
    Vector c(static_cast<std::size_t>(n) + 1);
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin());
    v.push_back(c);
  }
  return subspace_from_spanning(v, static_cast<std::size_t>(n) + 1);
}

Subspace form_span(const std::vector<BinaryForm>& forms) {
  std::vector<Vector> v;
  for (const auto& f : forms) v.push_back(f.coeffs());
  return subspace_from_spanning(v, forms.front().degree() + 1);
}

}  // namespace

TEST_SUITE("multigraded") {
  TEST_CASE("weight_cone_rays examples") {
    CHECK(weight_cone_rays(fixtures::example_algebra()).rays == std::vector<Weight>{{1, 0}, {0, 1}});
    CHECK(weight_cone_rays(with_weights(2, {{1, 0}, {1, 1}, {0, 1}})).rays == std::vector<Weight>{{1, 0}, {0, 1}});
    CHECK(weight_cone_rays(with_weights(2, {{2, 1}, {1, 2}})).rays == std::vector<Weight>{{2, 1}, {1, 2}});
  }

  TEST_CASE("weight cones that are lower dimensional or not pointed") {
    CHECK(weight_cone_rays(with_weights(3, {{1, 1, 0}, {2, 2, 0}})).rays == std::vector<Weight>{{1, 1, 0}});
    CHECK(weight_cone_rays(with_weights(3, {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})).rays ==
          std::vector<Weight>{{1, 0, 1}, {0, 1, 1}});
    CHECK_THROWS_AS(with_weights(2, {{1, 0}, {-1, 0}}), PreconditionError);
    CHECK_THROWS_AS(with_weights(2, {{1, 0}, {0, 1}, {-1, -1}}), PreconditionError);
    CHECK_THROWS_AS(with_weights(1, {{2}, {-3}}), PreconditionError);
  }

  TEST_CASE("weight_cone_rays agrees with the brute-force oracle up to rank 3") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> entry(0, 4);
    std::uniform_int_distribution<int> count(2, 7);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t rank = 2 + static_cast<std::size_t>(trial % 2);
      std::vector<Weight> weights;
      const int n = count(rng);
      for (int i = 0; i < n; ++i) {
        Weight w(rank);
        for (auto& x : w) x = entry(rng) - (trial % 3 == 0 ? 1 : 0);
        weights.push_back(w);
      }
      std::vector<Weight> nonzero;
      for (const auto& w : weights) {
        if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x != 0; })) nonzero.push_back(w);
      }
      if (nonzero.empty()) continue;
      try {
        const auto rays = describe_cone(weights, rank).cone.rays;
        CHECK(rays == oracle::extreme_rays(weights));
        ++checked;
      } catch (const PreconditionError&) {
        // not pointed: then some nonzero v has -v in the cone
      }
    }
    CHECK(checked > 150);
  }

  TEST_CASE("algebra validation") {
    CHECK_THROWS_AS(MultigradedAlgebra(2, {{poly({0, 1}), {0, 0}}, {poly({1}), {1, 0}}}), PreconditionError);
    CHECK_THROWS_AS(MultigradedAlgebra(2, {{Poly(), {1, 0}}}), PreconditionError);
    CHECK_THROWS_AS(MultigradedAlgebra(2, {{poly({1}), {1, 0, 0}}}), DimensionMismatch);
    CHECK_NOTHROW(MultigradedAlgebra(1, {{poly({3}), {0}}, {poly({1}), {1}}}));
  }

  TEST_CASE("graded_piece examples") {
    const auto alg = fixtures::example_algebra();
    CHECK(graded_piece(alg, {1, 0}) == poly_span({poly({1}), poly({-1, 1}), poly({-1, 3, -3, 1})}));
    CHECK(graded_piece(alg, {0, 1}) == poly_span({poly({0, 1}), poly({0, 0, 1}), poly({1, 0, 0, 1})}));
    CHECK(graded_piece(alg, {0, 0}) == Subspace::full(1));
    CHECK(graded_piece(alg, {-1, 0}).is_zero());
    // products of {1, t, t^3} and {t, t^2, 1 + t^3} fill a 7-dim part of degree <= 6
    CHECK(graded_piece(alg, {1, 1}).dim() == 7);
  }

  TEST_CASE("graded pieces multiply into graded pieces") {
    const auto alg = fixtures::example_algebra();
    const std::vector<Weight> degrees{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    for (const auto& u : degrees) {
      for (const auto& v : degrees) {
        const Subspace pu = graded_piece(alg, u);
        const Subspace pv = graded_piece(alg, v);
        const Subspace puv = graded_piece(alg, {u[0] + v[0], u[1] + v[1]});
        for (std::size_t i = 0; i < pu.dim(); ++i) {
          for (std::size_t j = 0; j < pv.dim(); ++j) {
            const Poly prod = Poly(pu.basis_vector(i)) * Poly(pv.basis_vector(j));
            Vector c(puv.ambient_dim());
            REQUIRE(prod.coeffs().size() <= c.size());
            std::copy(prod.coeffs().begin(), prod.coeffs().end(), c.begin());
            CHECK(member(c, puv));
          }
        }
      }
    }
  }

  TEST_CASE("ray_curve on the worked example") {
    const auto alg = fixtures::example_algebra();
    const auto rho1 = ray_curve(alg, {1, 0}, 6);
    CHECK(rho1.lambda == 1);
    CHECK(rho1.big_degree == 3);
    const BinaryForm s = mono(1, 0), t = mono(0, 1);
    CHECK(rho1.curve.linear_system() ==
          form_span({mono(3, 0), mul(mono(2, 0), t - s), mul(mul(t - s, t - s), t - s)}));
    const auto rho2 = ray_curve(alg, {0, 1}, 6);
    CHECK(rho2.lambda == 1);
    CHECK(rho2.big_degree == 3);
    CHECK(rho2.curve.linear_system() == fixtures::root_cubic().linear_system());
    for (std::size_t k = 1; k <= 6; ++k) {
      CHECK(rho1.curve.power_space(k).dim() == graded_piece(alg, {static_cast<std::int64_t>(k), 0}).dim());
    }
  }

  TEST_CASE("ray_curve on a smooth ray and with doubling") {
    const MultigradedAlgebra smooth(2, {{poly({1}), {1, 0}}, {poly({0, 1}), {1, 0}}, {poly({1}), {0, 1}}});
    const auto r = ray_curve(smooth, {1, 0}, 4);
    CHECK(r.curve.linear_system() == fixtures::line().linear_system());
    CHECK(invariants(r.curve, 4).degree == 1);

    // R_1 = <1> but R_2 = <1, t>: generated in degree one only from lambda = 2
    const MultigradedAlgebra late(1, {{poly({1}), {1}}, {poly({0, 1}), {2}}});
    const auto d = ray_curve(late, {1}, 4);
    CHECK(d.lambda == 2);
    CHECK(d.big_degree == 1);

    // never generated in degree one for lambda <= 2
    CHECK_THROWS_WITH_AS(ray_curve(late, {1}, 4, RayCurveOptions{1}),
                         doctest::Contains("ray Veronese not stabilized"), NotStabilized);
    CHECK_THROWS_AS(ray_curve(smooth, {-1, 0}, 3), PreconditionError);
  }

  TEST_CASE("multigraded_kf on the worked example") {
    const auto alg = fixtures::example_algebra();
    const auto at1 = multigraded_kf(alg, BigRational(1), 8);
    REQUIRE(at1.per_ray.size() == 2);
    CHECK(std::get<KfFinite>(at1.per_ray[0].verdict).witness_k == 1);
    CHECK(std::get<KfFinite>(at1.per_ray[1].verdict).witness_k == 2);
    CHECK(is_finite(at1.combined));
    REQUIRE(at1.caveats.size() == 1);
    CHECK(at1.caveats[0].code == "ray_coverage");

    const auto at_inf = multigraded_kf(alg, std::nullopt, 8);
    CHECK(is_finite(at_inf.per_ray[0].verdict));
    CHECK(is_unknown(at_inf.per_ray[1].verdict));
    CHECK(is_unknown(at_inf.combined));

    for (long tau : {0L, 2L}) {
      const auto r = multigraded_kf(alg, BigRational(tau), 8);
      CHECK(is_unknown(r.per_ray[0].verdict));
      CHECK(is_unknown(r.combined));
    }

    const auto at_minus1 = multigraded_kf(alg, BigRational(-1), 6);
    CHECK(std::get<KfFinite>(at_minus1.per_ray[1].verdict).witness_k == 1);
  }

  TEST_CASE("extra rays are analyzed and flagged") {
    const auto alg = fixtures::example_algebra();
    const auto r = multigraded_kf(alg, BigRational(1), 4, {{2, 2}, {1, 0}});
    REQUIRE(r.per_ray.size() == 3);
    CHECK(r.per_ray[2].ray == Weight{1, 1});
    CHECK(r.per_ray[2].extra);
  }

  TEST_CASE("monomial generators reproduce the toric case") {
    const MultigradedAlgebra toric(2, {{poly({1}), {1, 0}},
                                       {poly({0, 1}), {1, 0}},
                                       {poly({0, 0, 0, 1}), {1, 0}},
                                       {poly({0, 1}), {0, 1}},
                                       {poly({0, 0, 1}), {0, 1}},
                                       {poly({0, 0, 0, 0, 1}), {0, 1}}});
    for (const Tau& tau : {Tau(BigRational(0)), Tau(std::nullopt)}) {
      const auto r = multigraded_kf(toric, tau, 6);
      CHECK(is_finite(r.combined));
    }
  }

  TEST_CASE("hkf_report") {
    const auto ex = hkf_report(fixtures::example_algebra(), 8);
    CHECK(ex.verdict == HkfVerdict::NotHomogeneouslyKF);
    REQUIRE(ex.per_ray.size() == 2);
    CHECK(ex.per_ray[0].genus == 1);
    CHECK(ex.per_ray[1].genus == 1);
    CHECK(ex.offending == std::size_t{0});
    CHECK(ex.caveats.at(0).code == "ray_coverage");

    const MultigradedAlgebra smooth(
        2, {{poly({1}), {1, 0}}, {poly({0, 1}), {1, 0}}, {poly({1}), {0, 1}}, {poly({0, 1}), {0, 1}}});
    const auto sm = hkf_report(smooth, 6);
    CHECK(sm.verdict == HkfVerdict::HomogeneouslyKF);
    CHECK(sm.per_ray[0].genus == 0);
    CHECK(sm.per_ray[1].genus == 0);

    const MultigradedAlgebra single(1, {{poly({1}), {1}}, {poly({0, 1}), {1}}, {poly({0, 0, 0, 1}), {1}}});
    const auto one = hkf_report(single, 6);
    CHECK(one.per_ray.at(0).genus == 1);
    CHECK(one.verdict == HkfVerdict::NotHomogeneouslyKF);
  }

  TEST_CASE("rank above the supported range is rejected") {
    const auto big = with_weights(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
    CHECK_THROWS_AS(weight_cone_rays(big), PreconditionError);
  }
}
