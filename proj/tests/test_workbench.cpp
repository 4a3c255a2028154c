#include <catch_amalgamated.hpp>

#include "fincat/fincat.hpp"

using namespace fincat;

TEST_CASE("enhancement of the dual numbers") {
  auto a3 = examples::dual_numbers(Fp(0, 3));
  auto r3 = check_enhancement(a3);
  CHECK(r3.invertible == Verdict::yes);
  REQUIRE(r3.sigma);
  CHECK(describe_morphism(*a3, *r3.sigma) == std::vector<std::string>{"x -> -x"});
  auto a2 = examples::dual_numbers(Fp(0, 2));
  auto r2 = check_enhancement(a2);
  CHECK(r2.invertible == Verdict::yes);
  REQUIRE(r2.sigma);
  CHECK(describe_morphism(*a2, *r2.sigma) == std::vector<std::string>{"x -> x"});
}

TEST_CASE("truncated polynomial ring of length 3 has no enhancement") {
  auto r = check_enhancement(examples::truncated_poly(Fp(0, 3), 3));
  CHECK(r.self_injective);
  CHECK_FALSE(r.separable);
  CHECK(r.invertible == Verdict::no);
}

TEST_CASE("separable algebras and permutations") {
  Fp z(0, 5);
  auto a = examples::product_field(z, 3);
  auto r = check_enhancement(a);
  CHECK(r.separable);
  CHECK(r.invertible == Verdict::yes);
  Matrix<Fp> perm(3, 3, z);
  perm(1, 0) = perm(2, 1) = perm(0, 2) = z.one();
  CHECK(find_suspension(a, {}, std::optional<Matrix<Fp>>(perm)));
}

TEST_CASE("non-self-injective input is flagged") {
  QuiverPresentation<Fp> q{Fp(0, 3), {"0", "1"}, {{"a", 0, 1, 0}}, {}, 1, false};
  auto a = std::make_shared<const Algebra<Fp>>(build_algebra(q));
  auto r = check_enhancement(a);
  CHECK_FALSE(r.self_injective);
  CHECK(r.invertible == Verdict::no);
}

TEST_CASE("edge unit evaluated on the simple module") {
  Fp z(0, 3);
  auto a = examples::dual_numbers(z);
  auto sigma = *find_suspension(a);
  auto ctx = ModuleContext<Fp>::bimodule(a);
  auto res = minimal_resolution(regular_bimodule(ctx), 4);
  auto cx = HochschildComplex<Fp>::create(lambda_sigma_coefficients(a, sigma, -2, 2));
  const auto& h = cx->cohomology(3, -1);
  auto s = simple_right_module(ModuleContext<Fp>::right(a), 0);
  CHECK(s.dim == 1);
  bool found = false;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto phi = cx->from_vector(3, -1, h.rep(i));
    if (!is_edge_unit(phi, res)) continue;
    found = true;
    auto e = evaluate_class_on_module(phi, res, s);
    CHECK(is_stable_isomorphism(e.source.module, e.target.module, e.map));
  }
  CHECK(found);
  auto zero = cx->zero_cochain(3, -1);
  auto e0 = evaluate_class_on_module(zero, res, s);
  CHECK(factors_through_projective(e0.source.module, e0.target.module, e0.map));
}

TEST_CASE("verdicts do not depend on the labelling of the quiver") {
  Fp z(0, 3);
  for (std::size_t n : {1u, 2u}) {
    // the cyclic quiver on 3 vertices, listed in the order 2, 0, 1 with renamed arrows
    QuiverPresentation<Fp> q{z, {"c", "a", "b"}, {}, {}, n, false};
    q.arrows = {{"u", 1, 2, 0}, {"v", 2, 0, 0}, {"w", 0, 1, 0}};
    for (std::size_t s = 0; s < 3; ++s) {
      std::vector<std::size_t> path;
      for (std::size_t k = 0; k <= n; ++k) path.push_back((s + k) % 3);
      q.relations.push_back({{z.one(), path}});
    }
    auto relabelled = check_enhancement(std::make_shared<const Algebra<Fp>>(build_algebra(q)));
    auto standard = check_enhancement(examples::nakayama(z, 3, n));
    CHECK(relabelled.invertible == standard.invertible);
    CHECK(relabelled.omega3_stripped_dim == standard.omega3_stripped_dim);
    CHECK(relabelled.cover_dim == standard.cover_dim);
  }
}

TEST_CASE("stable and plain isomorphism agree on the stripped third syzygy") {
  Fp z(0, 3);
  for (auto a : {examples::dual_numbers(z), examples::nakayama(z, 2, 1), examples::nakayama(z, 3, 1)}) {
    auto r = check_enhancement(a);
    REQUIRE(r.sigma);
    auto ctx = ModuleContext<Fp>::bimodule(a);
    auto res = minimal_resolution(regular_bimodule(ctx), 3);
    auto stripped = strip_projective_summands(res.omega(3)).module;
    auto inv = AlgebraMorphism<Fp>{a, a, *r.sigma}.inverse()->matrix;
    auto tw = twisted_bimodule<Fp>(ctx, inv);
    CHECK(is_stably_isomorphic(stripped, tw).verdict == Verdict::yes);
    CHECK(stripped.dim == tw.dim);
  }
}
