#include <catch_amalgamated.hpp>

#include "fincat/module.hpp"

using namespace fincat;

namespace {

AlgebraPtr<Fp> truncated(std::uint32_t p, std::size_t n) {
  QuiverPresentation<Fp> q{Fp(0, p), {"0"}, {{"x", 0, 0, 1}}, {}, n - 1, false};
  q.relations.push_back({{Fp(1, p), std::vector<std::size_t>(n, 0)}});
  return std::make_shared<const Algebra<Fp>>(build_algebra(q));
}

AlgebraPtr<Fp> nakayama(std::uint32_t p, std::size_t m, std::size_t n) {
  QuiverPresentation<Fp> q{Fp(0, p), {}, {}, {}, n, false};
  for (std::size_t i = 0; i < m; ++i) {
    q.vertices.push_back(std::to_string(i));
    q.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % m, 0});
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> path;
    for (std::size_t k = 0; k <= n; ++k) path.push_back((i + k) % m);
    q.relations.push_back({{Fp(1, p), path}});
  }
  return std::make_shared<const Algebra<Fp>>(build_algebra(q));
}

}  // namespace

TEST_CASE("regular modules and projectives satisfy the module axioms") {
  auto a = nakayama(3, 3, 2);
  auto rc = ModuleContext<Fp>::right(a);
  auto bc = ModuleContext<Fp>::bimodule(a);
  CHECK(check_module(regular_right_module(rc)));
  CHECK(check_module(regular_bimodule(bc)));
  for (std::size_t v = 0; v < 3; ++v) {
    auto p = indecomposable_projective(rc, v);
    CHECK(p.module.dim == 3);
    CHECK(check_module(p.module));
  }
  auto q = indecomposable_projective(bc, 1);
  CHECK(q.module.dim == 9);
  CHECK(check_module(q.module));
}

TEST_CASE("projective covers and homomorphisms") {
  auto a = truncated(5, 2);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto reg = regular_bimodule(bc);
  auto c = projective_cover(reg);
  CHECK(c.P.module.dim == 4);
  CHECK(is_homomorphism(c.P.module, reg, c.pi));
  CHECK(rank(c.pi) == 2);
  CHECK_FALSE(is_projective(reg));
  CHECK(is_projective(c.P.module));
  // End of the regular bimodule is the center.
  CHECK(hom_space(reg, reg).size() == 2);
  for (const auto& f : hom_space(reg, reg)) CHECK(is_homomorphism(reg, reg, f));

  auto rc = ModuleContext<Fp>::right(a);
  auto rr = regular_right_module(rc);
  CHECK(hom_space(rr, rr).size() == 2);
  CHECK(is_projective(rr));
}

TEST_CASE("syzygies of the dual numbers") {
  auto a = truncated(7, 2);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto res = minimal_resolution(regular_bimodule(bc), 4);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(res.omega(i).dim == 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(res.P(i).module.dim == 4);
  for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i)
    CHECK((res.differentials[i] * res.differentials[i + 1]).is_zero());
  auto om = canonical_omega(bc);
  CHECK(om.module.dim == 2);
}

TEST_CASE("Nakayama bimodule syzygies") {
  auto a = nakayama(2, 2, 1);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto reg = regular_bimodule(bc);
  auto res = minimal_resolution(reg, 3);
  CHECK(res.P(0).num_summands() == 2);
  CHECK(res.omega(1).dim == res.P(0).module.dim - a->dim());
  CHECK(check_module(res.omega(2)));
  auto om = canonical_omega(bc);
  CHECK(om.module.dim == a->dim() * a->dim() - a->dim());
}
