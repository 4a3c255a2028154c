#include <catch_amalgamated.hpp>

#include "fincat/algebra.hpp"

using namespace fincat;

namespace {

QuiverPresentation<Fp> truncated(std::uint32_t p, std::size_t n) {
  QuiverPresentation<Fp> q{Fp(0, p), {"0"}, {{"x", 0, 0, 1}}, {}, n - 1, false};
  q.relations.push_back({{Fp(1, p), std::vector<std::size_t>(n, 0)}});
  return q;
}

QuiverPresentation<Rational> nakayama(std::size_t m, std::size_t n) {
  QuiverPresentation<Rational> q{Rational(0), {}, {}, {}, n, false};
  for (std::size_t i = 0; i < m; ++i) {
    q.vertices.push_back(std::to_string(i));
    q.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % m, 0});
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> path;
    for (std::size_t k = 0; k <= n; ++k) path.push_back((i + k) % m);
    q.relations.push_back({{Rational(1), path}});
  }
  return q;
}

}  // namespace

TEST_CASE("dual numbers") {
  auto a = build_algebra(truncated(3, 2));
  REQUIRE(a.dim() == 2);
  CHECK(a.label(0) == "e_0");
  CHECK(a.label(1) == "x");
  CHECK(a.product(1, 1).empty());
  CHECK(a.check_associative());
  CHECK(a.check_unit());
  CHECK(center_basis(a).dim() == 2);
  CHECK(radical_basis(a).dim() == 1);
}

TEST_CASE("truncated polynomials and Nakayama algebras") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto a = build_algebra(truncated(5, n));
    CHECK(a.dim() == n);
    CHECK(a.check_associative());
  }
  auto b = build_algebra(nakayama(3, 2));
  CHECK(b.dim() == 9);
  CHECK(b.num_vertices() == 3);
  CHECK(b.check_associative());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto v = b.basis_vector(i);
    CHECK(b.multiply(b.idempotent(b.left_vertex(i)), v) == v);
    CHECK(b.multiply(v, b.idempotent(b.right_vertex(i))) == v);
  }
}

TEST_CASE("non-admissible and non-nilpotent presentations are rejected") {
  auto q = truncated(3, 2);
  q.relations[0][0].arrows = {0};
  CHECK_THROWS_AS(build_algebra(q), AlgebraError);
  auto r = truncated(3, 3);
  r.bound = 1;
  CHECK_THROWS_AS(build_algebra(r), AlgebraError);
  auto s = truncated(3, 2);
  s.relations.clear();
  CHECK_THROWS_AS(build_algebra(s), AlgebraError);
}

TEST_CASE("commutativity relation on a square") {
  QuiverPresentation<Rational> q{Rational(0), {"0", "1", "2", "3"},
                                 {{"a", 0, 1, 0}, {"b", 1, 3, 0}, {"c", 0, 2, 0}, {"d", 2, 3, 0}}, {}, 2, false};
  q.relations.push_back({{Rational(1), {0, 1}}, {Rational(-1), {2, 3}}});
  auto a = build_algebra(q);
  CHECK(a.dim() == 9);
  CHECK(a.check_associative());
}

TEST_CASE("enveloping algebra") {
  auto a = build_algebra(truncated(2, 2));
  auto e = enveloping_algebra(a);
  CHECK(e.dim() == 4);
  CHECK(e.check_associative());
  CHECK(e.check_unit());
  CHECK(e.radical_indices().size() == 3);
  auto n = build_algebra(nakayama(2, 1));
  auto en = enveloping_algebra(n);
  CHECK(en.dim() == 16);
  CHECK(en.num_vertices() == 4);
  CHECK(en.check_associative());
}

TEST_CASE("morphisms") {
  auto a = std::make_shared<const Algebra<Fp>>(build_algebra(truncated(5, 3)));
  Fp z(0, 5);
  // x -> 2x is an automorphism; x -> x + x^2 too; x -> 1 is not.
  auto f = morphism_from_generators<Fp>(a, a, {a->unit(), Vec<Fp>{z, Fp(2, 5), z}});
  CHECK(check_morphism(f));
  auto g = morphism_from_generators<Fp>(a, a, {a->unit(), Vec<Fp>{z, Fp(1, 5), Fp(1, 5)}});
  CHECK(check_morphism(g));
  CHECK(check_morphism(g.compose(f)));
  CHECK(g.power(-1).compose(g) == AlgebraMorphism<Fp>::identity(a));
  AlgebraMorphism<Fp> bad{a, a, Matrix<Fp>::identity(3, z)};
  bad.matrix(2, 2) = Fp(2, 5);
  CHECK_FALSE(check_morphism(bad));
}
