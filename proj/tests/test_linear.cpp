#include <catch_amalgamated.hpp>

#include "fincat/field.hpp"
#include "fincat/matrix.hpp"

using namespace fincat;

TEST_CASE("prime field arithmetic") {
  Fp a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b) == a);
  CHECK((-a).value() == 4);
  CHECK(Fp(-1, 7).value() == 6);
  CHECK_THROWS_AS(a + Fp(1, 5), FieldMismatch);
  CHECK_THROWS(Fp(0, 7).inverse());
  CHECK(a.from_fraction(1, 2).value() == 4);
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK((a - a).is_zero());
  CHECK(Rational(2, 4).to_string() == "1/2");
}

TEST_CASE("rref is deterministic and picks the first nonzero pivot") {
  Fp z(0, 5);
  auto m = Matrix<Fp>::from_ints({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}}, z);
  auto piv = rref(m);
  REQUIRE(piv == std::vector<std::size_t>{0, 1});
  CHECK(m(0, 0).is_one());
  CHECK(m(1, 1).is_one());
  CHECK(m(2, 2).is_zero());
}

TEMPLATE_TEST_CASE("kernel, solve and inverse", "", Fp, Rational) {
  TestType z = [] {
    if constexpr (std::is_same_v<TestType, Fp>) return Fp(0, 101);
    else return Rational(0);
  }();
  auto a = Matrix<TestType>::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, z);
  auto ker = kernel_basis(a);
  REQUIRE(ker.dim() == 1);
  CHECK(is_zero_vec(a * ker.vector(0)));
  CHECK(rank(a) == 2);

  auto b = Matrix<TestType>::from_ints({{2, 1}, {1, 1}}, z);
  auto inv = inverse(b);
  REQUIRE(inv);
  CHECK(b * *inv == Matrix<TestType>::identity(2, z));
  CHECK_FALSE(inverse(a));

  Vec<TestType> rhs{z.from_int(4), z.from_int(8), z.from_int(2)};
  auto x = solve_vec(a, rhs);
  REQUIRE(x);
  CHECK(a * *x == rhs);
  rhs[1] = z.from_int(9);
  CHECK_FALSE(solve_vec(a, rhs));
}

TEST_CASE("subspaces") {
  Rational z(0);
  auto s = Subspace<Rational>::span({{Rational(1), Rational(1), Rational(0)}, {Rational(2), Rational(2), Rational(0)}}, 3, z);
  CHECK(s.dim() == 1);
  CHECK(s.contains(Vec<Rational>{Rational(3), Rational(3), Rational(0)}));
  CHECK_FALSE(s.contains(Vec<Rational>{Rational(1), Rational(0), Rational(0)}));
  auto t = s + Subspace<Rational>::span({{Rational(0), Rational(0), Rational(1)}}, 3, z);
  CHECK(t.dim() == 2);
  auto c = t.coordinates(Vec<Rational>{Rational(2), Rational(2), Rational(5)});
  REQUIRE(c);
  CHECK((*c)[0] == Rational(2));
  CHECK((*c)[1] == Rational(5));
}
