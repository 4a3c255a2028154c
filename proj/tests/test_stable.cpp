#include <catch_amalgamated.hpp>

#include "fincat/stable.hpp"

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

TEST_CASE("self-injectivity") {
  CHECK(is_self_injective(truncated(3, 3)));
  CHECK(is_self_injective(nakayama(3, 3, 1)));
  QuiverPresentation<Fp> q{Fp(0, 3), {"0", "1"}, {{"a", 0, 1, 0}}, {}, 1, false};
  auto a2 = std::make_shared<const Algebra<Fp>>(build_algebra(q));
  CHECK_FALSE(is_self_injective(a2));
  CHECK_FALSE(is_separable(truncated(3, 2)));
}

TEST_CASE("syzygies of the dual numbers are twisted bimodules") {
  auto a = truncated(5, 2);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto res = minimal_resolution(regular_bimodule(bc), 2);
  auto s1 = find_invertible_structure(res.omega(1));
  REQUIRE(s1);
  // x -> -x
  CHECK((*s1)(1, 1) == Fp(4, 5));
  auto s2 = find_invertible_structure(res.omega(2));
  REQUIRE(s2);
  CHECK(*s2 == Matrix<Fp>::identity(2, Fp(0, 5)));
  auto reg = regular_bimodule(bc);
  CHECK(is_stably_isomorphic(res.omega(2), reg).verdict == Verdict::yes);
  auto no = is_stably_isomorphic(res.omega(1), reg);
  CHECK(no.verdict == Verdict::no);
  CHECK_FALSE(find_invertible_structure(res.P(0).module));
}

TEST_CASE("stripping projective summands") {
  auto a = truncated(3, 3);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto reg = regular_bimodule(bc);
  auto p = indecomposable_projective(bc, 0);
  auto sum = direct_sum(reg, p.module);
  auto s = strip_projective_summands(sum);
  CHECK(s.module.dim == 3);
  CHECK(s.removed[0] == 1);
  CHECK(strip_projective_summands(p.module).module.dim == 0);
}

TEST_CASE("stable hom and stable isomorphisms of maps") {
  auto a = truncated(3, 2);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto reg = regular_bimodule(bc);
  auto st = stable_hom_space(reg, reg);
  CHECK(st.hom.size() == 2);
  CHECK(st.dim() == 1);
  CHECK(is_stable_isomorphism(reg, reg, reg.identity()));
  Matrix<Fp> x = a->left_mult(a->basis_vector(1));
  CHECK_FALSE(is_stable_isomorphism(reg, reg, x));
  CHECK(factors_through_projective(reg, reg, x));
}

TEST_CASE("tensor products and unitors") {
  auto a = nakayama(5, 2, 2);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto reg = regular_bimodule(bc);
  auto t = tensor(reg, reg);
  CHECK(t.module.dim == a->dim());
  CHECK(check_module(t.module));
  auto u = left_unitor(t, reg);
  CHECK(is_homomorphism(t.module, reg, u));
  CHECK(inverse(u).has_value());
  auto om = canonical_omega(bc);
  auto to = tensor(reg, om.module);
  CHECK(to.module.dim == om.module.dim);
  CHECK(inverse(left_unitor(to, om.module)).has_value());
  auto ot = tensor(om.module, reg);
  CHECK(inverse(right_unitor(ot, om.module)).has_value());
  auto rc = ModuleContext<Fp>::right(a);
  auto rt = tensor(regular_right_module(rc), om.module);
  CHECK(rt.module.dim == om.module.dim);
  CHECK(check_module(rt.module));
}

TEST_CASE("zeta map") {
  auto a = truncated(5, 2);
  auto bc = ModuleContext<Fp>::bimodule(a);
  auto reg = regular_bimodule(bc);
  auto z = zeta_map(reg);
  CHECK(inverse(z.map).has_value());
  CHECK(is_homomorphism(z.omega_m.module, z.m_omega.module, z.map));
  auto zo = zeta_map(z.omega);
  CHECK(is_homomorphism(zo.omega_m.module, zo.m_omega.module, zo.map));
  Matrix<Fp> h = zo.map + zo.omega_m.module.identity();
  CHECK(factors_through_projective(zo.omega_m.module, zo.m_omega.module, h));
  Matrix<Fp> h2 = zo.map - zo.omega_m.module.identity();
  CHECK_FALSE(factors_through_projective(zo.omega_m.module, zo.m_omega.module, h2));
}
