#include <catch_amalgamated.hpp>

#include "fincat/examples.hpp"
#include "fincat/io.hpp"

using namespace fincat;

namespace {

std::string share(const std::string& f) { return std::string(FINCAT_SHARE_DIR) + "/algebras/" + f; }

}  // namespace

TEST_CASE("path expressions") {
  auto t = parse_expression("2*a*b - 1/2*c + d");
  REQUIRE(t.size() == 3);
  CHECK(t[0].num == 2);
  CHECK(t[0].atoms == std::vector<std::string>{"a", "b"});
  CHECK(t[1].num == -1);
  CHECK(t[1].den == 2);
  CHECK(t[2].atoms == std::vector<std::string>{"d"});
  CHECK_THROWS_AS(parse_expression("a b"), SpecError);
  CHECK_THROWS_AS(parse_expression(""), SpecError);
  CHECK_THROWS_AS(parse_expression("1/0*a"), SpecError);
}

TEST_CASE("sample spec files") {
  struct Case {
    const char* file;
    std::size_t dim;
  };
  for (auto c : {Case{"dual_numbers_f3.yaml", 2}, Case{"dual_numbers_graded_f5.yaml", 2}, Case{"truncated_x3_f3.yaml", 3},
                 Case{"nakayama_2_1_f3.yaml", 4}, Case{"nakayama_2_2_f3.yaml", 6}, Case{"product_field_3_f5.yaml", 3},
                 Case{"d4_preprojective_f2.yaml", 28}}) {
    auto s = load_spec(share(c.file));
    auto a = build_from_spec(s, Fp(0, s.prime()));
    INFO(c.file);
    CHECK(a->dim() == c.dim);
  }
  auto q = load_spec(share("dual_numbers_q.yaml"));
  CHECK(q.rational());
  auto a = build_from_spec(q, Rational(0));
  auto sigma = automorphism_from_images(a, q.automorphism);
  CHECK(sigma(1, 1) == Rational(-1));
}

TEST_CASE("automorphisms permute vertices") {
  auto s = load_spec(share("nakayama_2_1_f3.yaml"));
  auto a = build_from_spec(s, Fp(0, 3));
  auto m = automorphism_from_images(a, s.automorphism);
  CHECK(m.col(0) == a->idempotent(1));
  CHECK_THROWS_AS(automorphism_from_images(a, {{"a0", "a0*a1"}}), SpecError);
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(parse_spec(YAML::Load("field: 4\nvertices: [0]\nbound: 1")), SpecError);
  CHECK_THROWS_AS(parse_spec(YAML::Load("field: 3\nbound: 1")), SpecError);
  CHECK_THROWS_AS(parse_spec(YAML::Load("field: 3\nvertices: [0]\narrows: [[x, 0, 1]]\nbound: 1")), SpecError);
  auto s = parse_spec(YAML::Load("field: 3\nvertices: [0]\narrows: [[x, 0, 0]]\nrelations: ['x*y']\nbound: 1"));
  CHECK_THROWS_AS(build_from_spec(s, Fp(0, 3)), SpecError);
}
