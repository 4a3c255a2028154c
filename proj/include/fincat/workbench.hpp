#pragma once

// Enhancement checker, suspension recovery and evaluation of Hochschild
// classes on modules.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fincat/examples.hpp"
#include "fincat/hochschild.hpp"
#include "fincat/stable.hpp"

namespace fincat {

/// Signed representative for prime fields, so that -1 prints as -1.
template <class K>
std::string scalar_string(const K& c) {
  if constexpr (std::is_same_v<K, Fp>) {
    const auto p = static_cast<std::int64_t>(c.modulus());
    const auto v = static_cast<std::int64_t>(c.value());
    return std::to_string(2 * v > p ? v - p : v);
  } else {
    return c.to_string();
  }
}

template <class K>
std::string vector_string(const Algebra<K>& a, const Vec<K>& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = scalar_string(v[i]);
    const bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (c != "1") os << c << "*";
    os << a.label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

/// "g -> s(g)" for every arrow generator.
template <class K>
std::vector<std::string> describe_morphism(const Algebra<K>& a, const Matrix<K>& s) {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    if (!a.generator_in_radical(g)) continue;
    const std::size_t b = a.generators()[g];
    out.push_back(a.label(b) + " -> " + vector_string(a, s.col(b)));
  }
  return out;
}

template <class K>
struct EnhancementReport {
  std::string algebra;
  std::size_t dim = 0;
  bool self_injective = false;
  bool separable = false;
  std::size_t cover_dim = 0;         // projective cover of Lambda as a bimodule
  std::size_t omega3_dim = 0;
  std::size_t omega3_stripped_dim = 0;
  Verdict invertible = Verdict::undetermined;
  std::optional<Matrix<K>> sigma;
  std::string reason;

  bool decided() const { return invertible != Verdict::undetermined; }
};

namespace detail {

template <class K>
Verdict verify_suspension(AlgebraPtr<K> a, const Matrix<K>& sigma, const SearchOptions& opt, std::string& why) {
  AlgebraMorphism<K> s{a, a, sigma};
  if (!check_morphism(s)) {
    why = "candidate is not an algebra morphism";
    return Verdict::no;
  }
  auto inv = s.inverse();
  if (!inv) {
    why = "candidate is not invertible";
    return Verdict::no;
  }
  auto ctx = ModuleContext<K>::bimodule(a);
  auto res = minimal_resolution(regular_bimodule(ctx), 3);
  auto r = is_stably_isomorphic(res.omega(3), twisted_bimodule<K>(ctx, inv->matrix), opt);
  why = r.reason;
  return r.verdict;
}

}  // namespace detail

/// Whether the stable category of a self-injective algebra admits an
/// enhanced triangulated structure: Lambda self-injective, and Omega^3(Lambda)
/// stably isomorphic to an invertible bimodule _s Lambda_1. Then sigma = s^{-1}
/// and Omega^3(Lambda) is stably _{sigma^{-1}} Lambda_1.
template <class K>
EnhancementReport<K> check_enhancement(AlgebraPtr<K> a, const SearchOptions& opt = {}, std::string name = {}) {
  EnhancementReport<K> r;
  r.algebra = name.empty() ? "algebra of dimension " + std::to_string(a->dim()) : std::move(name);
  r.dim = a->dim();
  r.self_injective = is_self_injective(a);
  auto ctx = ModuleContext<K>::bimodule(a);
  auto reg = regular_bimodule(ctx);
  r.cover_dim = projective_cover(reg).P.module.dim;
  if (!r.self_injective) {
    r.invertible = Verdict::no;
    r.reason = "not self-injective, so the stable category is not triangulated";
    return r;
  }
  r.separable = r.cover_dim == reg.dim;
  if (r.separable) {
    r.invertible = Verdict::yes;
    r.sigma = Matrix<K>::identity(a->dim(), a->zero());
    r.reason = "separable: every bimodule is projective";
    return r;
  }
  auto res = minimal_resolution(reg, 3);
  r.omega3_dim = res.omega(3).dim;
  auto stripped = strip_projective_summands(res.omega(3));
  r.omega3_stripped_dim = stripped.module.dim;
  auto s = find_invertible_structure(stripped.module);
  if (!s) {
    r.invertible = Verdict::no;
    r.reason = "the non-projective part of Omega^3 is not a twisted bimodule";
    return r;
  }
  AlgebraMorphism<K> sm{a, a, *s};
  r.sigma = sm.inverse()->matrix;
  std::string why;
  r.invertible = detail::verify_suspension(a, *r.sigma, opt, why);
  if (r.invertible == Verdict::no) {
    r.reason = "re-verification failed: " + why;
    r.sigma.reset();
  } else if (r.invertible == Verdict::undetermined) {
    r.reason = "re-verification undetermined: " + why;
  } else {
    r.reason = "Omega^3 is stably a twisted bimodule; " + why;
  }
  return r;
}

/// An automorphism sigma with Omega^3(Lambda) stably isomorphic to
/// _{sigma^{-1}} Lambda_1. A supplied candidate is verified instead of searched.
template <class K>
std::optional<Matrix<K>> find_suspension(AlgebraPtr<K> a, const SearchOptions& opt = {},
                                         const std::optional<Matrix<K>>& candidate = std::nullopt) {
  if (candidate) {
    std::string why;
    if (!is_self_injective(a)) return std::nullopt;
    if (detail::verify_suspension(a, *candidate, opt, why) == Verdict::yes) return candidate;
    return std::nullopt;
  }
  auto r = check_enhancement(a, opt);
  if (r.invertible != Verdict::yes) return std::nullopt;
  return r.sigma;
}

/// The twisted bimodule _{sigma^q} Lambda_1.
template <class K>
Module<K> sigma_power_bimodule(ContextPtr<K> ctx, const Matrix<K>& sigma, int q) {
  AlgebraMorphism<K> s{ctx->algebra_ptr(), ctx->algebra_ptr(), sigma};
  return twisted_bimodule<K>(ctx, s.power(q).matrix);
}

template <class K>
struct ClassOnModule {
  Tensor<K> source;  // M (x) Omega^n(Lambda)
  Tensor<K> target;  // M (x) V^q
  Matrix<K> map;
};

/// M (x) f for the syzygy map f : Omega^n(Lambda) -> V^q of a class phi in
/// HH^{n,q}(Lambda, V), where res resolves Lambda as a bimodule.
template <class K>
ClassOnModule<K> evaluate_class_on_module(const Cochain<K>& phi, const Resolution<K>& res, const Module<K>& m) {
  if (phi.arity == 0) throw HochschildError("evaluate_class_on_module: n > 0 required");
  auto [v, off] = component_module(phi.coefficients(), phi.q, res.omega(0).ctx);
  Matrix<K> f = class_to_syzygy_map(phi, res, v, off);
  const auto& om = res.omega(phi.arity);
  auto src = tensor(m, om);
  auto dst = tensor(m, v);
  Matrix<K> mf = tensor_map(src, dst, m, v, m.identity(), f);
  return ClassOnModule<K>{std::move(src), std::move(dst), std::move(mf)};
}

/// The simple right module at vertex v.
template <class K>
Module<K> simple_right_module(ContextPtr<K> rctx, std::size_t v) {
  auto reg = regular_right_module(rctx);
  auto top = quotient(reg, radical_of(reg)).module;
  Subspace<K> others = Subspace<K>::span({}, top.dim, top.zero());
  for (std::size_t u = 0; u < rctx->num_vertices(); ++u)
    if (u != v) others = others + top.vertex_part(u);
  return quotient(top, others).module;
}

}  // namespace fincat
