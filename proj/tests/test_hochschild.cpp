#include <catch_amalgamated.hpp>

#include "fincat/examples.hpp"
#include "fincat/hochschild.hpp"

using namespace fincat;

namespace {

ComplexPtr<Fp> regular(AlgebraPtr<Fp> a) { return HochschildComplex<Fp>::create(regular_coefficients(a)); }

bool in_coboundaries(const Cochain<Fp>& c) {
  if (c.arity == 0) return c.is_zero();
  auto b = Subspace<Fp>::column_span(c.cx->dprime_matrix(c.arity - 1, c.q));
  return b.contains(c.data);
}

}  // namespace

TEST_CASE("d squares to zero") {
  for (auto a : {examples::dual_numbers(Fp(0, 3)), examples::dual_numbers(Fp(0, 5), 1), examples::nakayama(Fp(0, 3), 2, 1)}) {
    auto cx = regular(a);
    for (std::size_t n = 0; n < 4; ++n)
      for (int q = -1; q <= 1; ++q) CHECK((cx->d_matrix(n + 1, q) * cx->d_matrix(n, q)).is_zero());
  }
}

TEST_CASE("Hochschild cohomology of the dual numbers") {
  auto c3 = regular(examples::dual_numbers(Fp(0, 3)));
  auto c2 = regular(examples::dual_numbers(Fp(0, 2)));
  std::vector<std::size_t> d3, d2;
  for (std::size_t n = 0; n <= 5; ++n) {
    d3.push_back(c3->hh_dim(n, 0));
    d2.push_back(c2->hh_dim(n, 0));
  }
  CHECK(d3 == std::vector<std::size_t>{2, 1, 1, 1, 1, 1});
  CHECK(d2 == std::vector<std::size_t>{2, 2, 2, 2, 2, 2});
}

TEST_CASE("Euler class") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto cx = regular(examples::dual_numbers(Fp(0, p), 1));
    auto delta = euler(cx);
    CHECK(cx->d(delta).is_zero());
    CHECK(cx->d(beta(cx)) == cup(delta, delta));
    std::mt19937_64 rng(7);
    for (std::size_t n = 0; n <= 3; ++n)
      for (int q = -2; q <= 1; ++q) {
        auto phi = cx->random_cochain(n, q, rng);
        CHECK(bracket(delta, phi) == phi.scaled(Fp(q, p)));
      }
    if (p == 2) CHECK(sq(delta) == delta);
  }
}

TEST_CASE("d' is the bracket with the product") {
  auto cx = regular(examples::dual_numbers(Fp(0, 5), 1));
  auto m = m2(cx);
  std::mt19937_64 rng(3);
  for (std::size_t n = 0; n <= 3; ++n)
    for (int q = -1; q <= 1; ++q) {
      auto phi = cx->random_cochain(n, q, rng);
      CHECK(bracket(m, phi) == cx->dprime(phi));
    }
}

TEST_CASE("cup product is associative and Leibniz") {
  auto cx = regular(examples::nakayama(Fp(0, 3), 2, 1));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = cx->random_cochain(trial % 3, 0, rng);
    auto y = cx->random_cochain((trial + 1) % 2, 0, rng);
    auto z = cx->random_cochain(1, 0, rng);
    CHECK(cup(cup(x, y), z) == cup(x, cup(y, z)));
    auto lhs = cx->dprime(dot(x, y));
    auto rhs = dot(cx->dprime(x), y) + dot(x, cx->dprime(y)).scaled(sign_of(Fp(0, 3), x.total_degree()));
    CHECK(lhs == rhs);
  }
  CHECK(in_coboundaries(cx->dprime(cx->random_cochain(1, 0, rng))));
}

namespace {

Matrix<Fp> negate_arrows(const AlgebraPtr<Fp>& a) {
  std::vector<Vec<Fp>> imgs;
  for (std::size_t g = 0; g < a->generators().size(); ++g) {
    auto v = a->basis_vector(a->generators()[g]);
    if (a->generator_in_radical(g))
      for (auto& x : v) x = -x;
    imgs.push_back(v);
  }
  return morphism_from_generators(a, a, imgs).matrix;
}

}  // namespace

TEST_CASE("bar resolution") {
  auto a = examples::nakayama(Fp(0, 3), 2, 1);
  auto ctx = ModuleContext<Fp>::bimodule(a);
  auto bar = bar_resolution(ctx, 3);
  CHECK((bar.augmentation * bar.d[0]).is_zero());
  for (std::size_t k = 0; k + 1 < bar.d.size(); ++k) CHECK((bar.d[k] * bar.d[k + 1]).is_zero());
  auto res = minimal_resolution(regular_bimodule(ctx), 4);
  auto c = comparison_maps(res, bar, 3);
  CHECK(c.size() == 4);
}

TEST_CASE("two computations of HH agree") {
  for (std::uint32_t p : {2u, 3u}) {
    auto a = examples::dual_numbers(Fp(0, p));
    auto ctx = ModuleContext<Fp>::bimodule(a);
    auto reg = regular_bimodule(ctx);
    auto res = minimal_resolution(reg, 8);
    auto viaP = resolution_hh_dims(res, reg, 6);
    auto cx = regular(a);
    std::vector<std::size_t> viaBar;
    for (std::size_t n = 0; n <= 6; ++n) viaBar.push_back(cx->hh_dim(n, 0));
    CHECK(viaP == viaBar);
  }
}

TEST_CASE("edge units of the dual numbers") {
  auto a = examples::dual_numbers(Fp(0, 3));
  auto ctx = ModuleContext<Fp>::bimodule(a);
  auto res = minimal_resolution(regular_bimodule(ctx), 4);
  auto id = Matrix<Fp>::identity(2, Fp(0, 3));
  for (bool twisted : {true, false}) {
    auto cx = HochschildComplex<Fp>::create(lambda_sigma_coefficients(a, twisted ? negate_arrows(a) : id, -2, 2));
    const auto& h = cx->cohomology(3, -1);
    bool found = false;
    for (std::size_t i = 0; i < h.dim(); ++i)
      found = found || is_edge_unit(cx->from_vector(3, -1, h.rep(i)), res);
    CHECK(found == twisted);
    CHECK(h.dim() == cx->hh_dim(3, -1));
  }
}
