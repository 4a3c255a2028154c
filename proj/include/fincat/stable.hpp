#pragma once

// Tensor products over the algebra, lifting problems, the stable category
// (maps modulo those factoring through projectives) and detection of
// invertible bimodules.

#include <cstdint>
#include <random>
#include <string>

#include "fincat/module.hpp"

namespace fincat {

/// g.n for an algebra element g (coordinate vector) acting on the left of a bimodule.
template <class K>
Vec<K> act_left(const Module<K>& n, const Vec<K>& a, const Vec<K>& x) {
  Vec<K> r = n.zero_vector();
  const auto& A = n.algebra();
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (a[b].is_zero()) continue;
    Vec<K> y = x;
    const auto& w = A.word(b);
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = n.act[n.ctx->left_gen(*it)] * y;
    r = axpy(r, a[b], y);
  }
  return r;
}

/// x.a for an algebra element a acting on the right.
template <class K>
Vec<K> act_right(const Module<K>& n, const Vec<K>& x, const Vec<K>& a) {
  Vec<K> r = n.zero_vector();
  const auto& A = n.algebra();
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (a[b].is_zero()) continue;
    Vec<K> y = x;
    for (auto g : A.word(b)) y = n.act[n.ctx->right_gen(g)] * y;
    r = axpy(r, a[b], y);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tensor products

/// M (x)_A N for a right module or bimodule M and a bimodule N. Elements are
/// represented in the sum over vertices x of (M e_x) (x) (e_x N) modulo the
/// relations m.a (x) n = m (x) a.n for the non-idempotent generators a.
template <class K>
struct Tensor {
  Module<K> module;
  std::vector<Subspace<K>> left_part, right_part;  // M e_x, e_x N
  std::vector<std::size_t> offset;
  std::size_t raw_dim = 0;
  Subspace<K> relations;
  std::vector<std::size_t> keep;
  std::vector<std::pair<Vec<K>, Vec<K>>> reps;  // a pure tensor for each basis vector

  Vec<K> raw(const Module<K>& m, const Module<K>& n, const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> r(raw_dim, m.zero());
    for (std::size_t v = 0; v < offset.size(); ++v) {
      auto cx = left_part[v].pivot_coordinates(left_proj(m, v) * x);
      auto cy = right_part[v].pivot_coordinates(right_proj(n, v) * y);
      const std::size_t ny = cy.size();
      for (std::size_t i = 0; i < cx.size(); ++i) {
        if (cx[i].is_zero()) continue;
        for (std::size_t j = 0; j < ny; ++j)
          if (!cy[j].is_zero()) r[offset[v] + i * ny + j] += cx[i] * cy[j];
      }
    }
    return r;
  }
  Vec<K> reduce(const Vec<K>& r) const {
    Vec<K> red = relations.reduce(r);
    Vec<K> out;
    out.reserve(keep.size());
    for (auto k : keep) out.push_back(red[k]);
    return out;
  }
  /// Coordinates of the class of x (x) y.
  Vec<K> element(const Module<K>& m, const Module<K>& n, const Vec<K>& x, const Vec<K>& y) const {
    return reduce(raw(m, n, x, y));
  }

  static Matrix<K> left_proj(const Module<K>& m, std::size_t v) {
    return m.act[m.ctx->right_gen(m.ctx->vertex_gen(v))];
  }
  static Matrix<K> right_proj(const Module<K>& n, std::size_t v) {
    return n.act[n.ctx->left_gen(n.ctx->vertex_gen(v))];
  }
};

template <class K>
Tensor<K> tensor(const Module<K>& m, const Module<K>& n) {
  if (!n.is_bimodule()) throw ModuleError("tensor: right factor must be a bimodule");
  if (m.ctx->algebra_ptr() != n.ctx->algebra_ptr()) throw ModuleError("tensor: different algebras");
  const auto& A = m.algebra();
  const std::size_t nv = A.num_vertices();
  Tensor<K> t;
  for (std::size_t v = 0; v < nv; ++v) {
    t.left_part.push_back(Subspace<K>::column_span(Tensor<K>::left_proj(m, v)));
    t.right_part.push_back(Subspace<K>::column_span(Tensor<K>::right_proj(n, v)));
    t.offset.push_back(t.raw_dim);
    t.raw_dim += t.left_part[v].dim() * t.right_part[v].dim();
  }
  std::vector<Vec<K>> rels;
  for (std::size_t g = 0; g < A.generators().size(); ++g) {
    if (m.ctx->is_vertex_gen(g)) continue;
    const std::size_t b = A.generators()[g];
    const std::size_t x = A.left_vertex(b), y = A.right_vertex(b);
    const Matrix<K>& ra = m.act[m.ctx->right_gen(g)];
    const Matrix<K>& la = n.act[n.ctx->left_gen(g)];
    for (std::size_t i = 0; i < t.left_part[x].dim(); ++i) {
      Vec<K> mi = t.left_part[x].vector(i);
      Vec<K> ma = ra * mi;
      for (std::size_t j = 0; j < t.right_part[y].dim(); ++j) {
        Vec<K> nj = t.right_part[y].vector(j);
        Vec<K> r = t.raw(m, n, ma, nj);
        Vec<K> s = t.raw(m, n, mi, la * nj);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= s[k];
        if (!is_zero_vec(r)) rels.push_back(std::move(r));
      }
    }
  }
  t.relations = Subspace<K>::span(rels, t.raw_dim, m.zero());
  std::vector<bool> piv(t.raw_dim, false);
  for (auto p : t.relations.pivots()) piv[p] = true;
  for (std::size_t k = 0; k < t.raw_dim; ++k)
    if (!piv[k]) t.keep.push_back(k);
  for (auto k : t.keep) {
    std::size_t v = 0;
    while (v + 1 < nv && t.offset[v + 1] <= k) ++v;
    const std::size_t ny = t.right_part[v].dim();
    const std::size_t i = (k - t.offset[v]) / ny, j = (k - t.offset[v]) % ny;
    t.reps.emplace_back(t.left_part[v].vector(i), t.right_part[v].vector(j));
  }
  const auto ctx = m.ctx;
  std::vector<Matrix<K>> act;
  const std::size_t q = t.keep.size();
  for (std::size_t g = 0; g < ctx->num_gens(); ++g) {
    Matrix<K> a(q, q, m.zero());
    const bool left = ctx->is_left(g);
    const Matrix<K>& op = left ? m.act[g] : n.act[n.ctx->right_gen(ctx->algebra_gen(g))];
    for (std::size_t c = 0; c < q; ++c) {
      const auto& [x, y] = t.reps[c];
      a.set_col(c, left ? t.element(m, n, op * x, y) : t.element(m, n, x, op * y));
    }
    act.push_back(std::move(a));
  }
  t.module = Module<K>(ctx, q, std::move(act));
  return t;
}

/// f (x) h : M (x) N -> M' (x) N'.
template <class K>
Matrix<K> tensor_map(const Tensor<K>& src, const Tensor<K>& dst, const Module<K>& m2, const Module<K>& n2,
                     const Matrix<K>& f, const Matrix<K>& h) {
  Matrix<K> r(dst.module.dim, src.module.dim, f.zero());
  for (std::size_t c = 0; c < src.reps.size(); ++c) {
    const auto& [x, y] = src.reps[c];
    r.set_col(c, dst.element(m2, n2, f * x, h * y));
  }
  return r;
}

/// A (x)_A N -> N, a (x) n -> a.n (t must be tensor(regular bimodule, N)).
template <class K>
Matrix<K> left_unitor(const Tensor<K>& t, const Module<K>& n) {
  Matrix<K> r(n.dim, t.module.dim, n.zero());
  for (std::size_t c = 0; c < t.reps.size(); ++c) r.set_col(c, act_left(n, t.reps[c].first, t.reps[c].second));
  return r;
}

/// M (x)_A A -> M, m (x) a -> m.a.
template <class K>
Matrix<K> right_unitor(const Tensor<K>& t, const Module<K>& m) {
  Matrix<K> r(m.dim, t.module.dim, m.zero());
  for (std::size_t c = 0; c < t.reps.size(); ++c) r.set_col(c, act_right(m, t.reps[c].first, t.reps[c].second));
  return r;
}

// ---------------------------------------------------------------------------
// Lifting

/// Some k : P -> N' with beta k = alpha, for P projective.
template <class K>
std::optional<Matrix<K>> lift_through(const Projective<K>& p, const Matrix<K>& alpha, const Module<K>& n2,
                                      const Matrix<K>& beta) {
  std::vector<Vec<K>> imgs;
  for (std::size_t i = 0; i < p.num_summands(); ++i) {
    Vec<K> target = alpha.col(p.tops[i]);
    Matrix<K> part = n2.vertex_part(p.vertices[i]).as_columns();
    auto c = solve_vec(beta * part, target);
    if (!c) return std::nullopt;
    imgs.push_back(part * *c);
  }
  return p.map_to(n2, imgs);
}

/// Some k in Hom(X, Z) with beta k = h, by linear algebra over Hom(X, Z).
template <class K>
std::optional<Matrix<K>> factor_through(const Module<K>& x, const Module<K>& z, const Matrix<K>& beta,
                                        const Matrix<K>& h) {
  auto hom = hom_space(x, z);
  const std::size_t rows = h.rows() * h.cols();
  Matrix<K> sys(rows, hom.size(), x.zero());
  for (std::size_t a = 0; a < hom.size(); ++a) {
    Matrix<K> img = beta * hom[a];
    for (std::size_t i = 0; i < img.rows(); ++i)
      for (std::size_t j = 0; j < img.cols(); ++j) sys(i * img.cols() + j, a) = img(i, j);
  }
  Vec<K> rhs(rows, x.zero());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) rhs[i * h.cols() + j] = h(i, j);
  if (h.is_zero()) return Matrix<K>(z.dim, x.dim, x.zero());
  auto c = solve_vec(sys, rhs);
  if (!c) return std::nullopt;
  Matrix<K> k(z.dim, x.dim, x.zero());
  for (std::size_t a = 0; a < hom.size(); ++a)
    if (!(*c)[a].is_zero()) k += hom[a].scaled((*c)[a]);
  return k;
}

// ---------------------------------------------------------------------------
// Stable category

template <class K>
bool factors_through_projective(const Module<K>& m, const Module<K>& n, const Matrix<K>& f) {
  if (f.is_zero()) return true;
  auto c = projective_cover(n);
  return factor_through(m, c.P.module, c.pi, f).has_value();
}

template <class K>
struct StableHom {
  std::vector<Matrix<K>> hom;
  std::size_t projective_rank = 0;  // dimension of the maps factoring through projectives
  std::size_t dim() const { return hom.size() - projective_rank; }
};

template <class K>
StableHom<K> stable_hom_space(const Module<K>& m, const Module<K>& n) {
  StableHom<K> s{hom_space(m, n), 0};
  if (s.hom.empty()) return s;
  auto c = projective_cover(n);
  std::vector<Vec<K>> vs;
  for (const auto& k : hom_space(m, c.P.module)) {
    Matrix<K> f = c.pi * k;
    vs.emplace_back(f.rows() * f.cols(), m.zero());
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) vs.back()[i * f.cols() + j] = f(i, j);
  }
  s.projective_rank = vs.empty() ? 0 : Subspace<K>::span(vs, n.dim * m.dim, m.zero()).dim();
  return s;
}

namespace detail {
template <class K>
void put_vec(Matrix<K>& sys, std::size_t col, std::size_t row0, const Matrix<K>& f) {
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) sys(row0 + i * f.cols() + j, col) = f(i, j);
}
}  // namespace detail

/// True iff f : M -> N becomes invertible in the stable category, i.e. there
/// is g : N -> M with fg - 1 and gf - 1 factoring through projectives.
template <class K>
bool is_stable_isomorphism(const Module<K>& m, const Module<K>& n, const Matrix<K>& f) {
  auto g = hom_space(n, m);
  auto cn = projective_cover(n);
  auto cm = projective_cover(m);
  auto k1 = hom_space(n, cn.P.module);
  auto k2 = hom_space(m, cm.P.module);
  const std::size_t rn = n.dim * n.dim, rm = m.dim * m.dim;
  const std::size_t cols = g.size() + k1.size() + k2.size();
  Matrix<K> sys(rn + rm, cols, m.zero());
  std::size_t c = 0;
  for (const auto& ga : g) {
    detail::put_vec(sys, c, 0, f * ga);
    detail::put_vec(sys, c, rn, ga * f);
    ++c;
  }
  for (const auto& kb : k1) detail::put_vec(sys, c++, 0, -(cn.pi * kb));
  for (const auto& kc : k2) detail::put_vec(sys, c++, rn, -(cm.pi * kc));
  Vec<K> rhs(rn + rm, m.zero());
  for (std::size_t i = 0; i < n.dim; ++i) rhs[i * n.dim + i] = m.zero().one();
  for (std::size_t i = 0; i < m.dim; ++i) rhs[rn + i * m.dim + i] = m.zero().one();
  return solve_vec(sys, rhs).has_value();
}

/// Socle element of an indecomposable projective (requires a simple socle).
template <class K>
Vec<K> projective_socle(const Projective<K>& p) {
  const auto& mod = p.module;
  Matrix<K> all(0, mod.dim, mod.zero());
  for (std::size_t g = 0; g < mod.act.size(); ++g)
    if (mod.ctx->in_radical(g)) all = all.vstack(mod.act[g]);
  auto soc = kernel_basis(all);
  if (soc.dim() != 1)
    throw ModuleError("projective at vertex " + mod.ctx->vertex_name(p.vertices[0]) +
                      " has a non-simple socle; the algebra is not self-injective");
  return soc.vector(0);
}

template <class K>
struct Stripped {
  Module<K> module;
  std::vector<std::size_t> removed;  // number of P_v summands split off, per vertex
};

/// Splits off projective-injective summands over a self-injective algebra: a
/// map P_v -> M not killing the socle of P_v embeds P_v as a direct summand.
template <class K>
Stripped<K> strip_projective_summands(const Module<K>& m) {
  const auto ctx = m.ctx;
  const std::size_t nv = ctx->num_vertices();
  std::vector<Projective<K>> ps;
  std::vector<Vec<K>> socs;
  for (std::size_t v = 0; v < nv; ++v) {
    ps.push_back(indecomposable_projective(ctx, v));
    socs.push_back(projective_socle(ps.back()));
  }
  Stripped<K> s{m, std::vector<std::size_t>(nv, 0)};
  bool again = true;
  while (again && s.module.dim > 0) {
    again = false;
    for (std::size_t v = 0; v < nv && !again; ++v) {
      auto part = s.module.vertex_part(v);
      for (std::size_t t = 0; t < part.dim(); ++t) {
        Matrix<K> f = ps[v].summand_map(s.module, 0, part.vector(t));
        if (is_zero_vec(f * socs[v])) continue;
        s.module = quotient(s.module, Subspace<K>::column_span(f)).module;
        ++s.removed[v];
        again = true;
        break;
      }
    }
  }
  return s;
}

enum class Verdict { yes, no, undetermined };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "undetermined";
  }
}

struct SearchOptions {
  std::size_t budget = 200;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = 65536;  // enumerate Hom when p^dim is at most this
};

template <class K>
struct StableIsoResult {
  Verdict verdict = Verdict::undetermined;
  std::optional<Matrix<K>> iso;  // between the stripped modules
  std::string reason;
  std::size_t tried = 0;
};

namespace detail {
template <class K>
K random_scalar(const K& z, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<K, Fp>) {
    std::uniform_int_distribution<std::int64_t> d(0, z.modulus() - 1);
    return z.from_int(d(rng));
  } else {
    std::uniform_int_distribution<std::int64_t> d(-5, 5);
    return z.from_int(d(rng));
  }
}
}  // namespace detail

/// Three-valued stable isomorphism test over a self-injective algebra: after
/// splitting off projective summands, modules are stably isomorphic iff
/// isomorphic. Negative answers come from invariants or exhaustive search;
/// otherwise random elements of Hom are tested for invertibility.
template <class K>
StableIsoResult<K> is_stably_isomorphic(const Module<K>& m, const Module<K>& n, const SearchOptions& opt = {}) {
  require_same_context(m, n, "is_stably_isomorphic");
  StableIsoResult<K> r;
  auto a = strip_projective_summands(m).module;
  auto b = strip_projective_summands(n).module;
  if (a.dim != b.dim) {
    r.verdict = Verdict::no;
    r.reason = "non-projective parts differ in dimension";
    return r;
  }
  if (a.dim == 0) {
    r.verdict = Verdict::yes;
    r.iso = Matrix<K>(0, 0, m.zero());
    r.reason = "both modules are projective";
    return r;
  }
  for (std::size_t v = 0; v < a.ctx->num_vertices(); ++v)
    if (a.vertex_part(v).dim() != b.vertex_part(v).dim()) {
      r.verdict = Verdict::no;
      r.reason = "vertex components differ in dimension";
      return r;
    }
  auto hom = hom_space(a, b);
  if (hom.size() != hom_space(a, a).size()) {
    r.verdict = Verdict::no;
    r.reason = "dim Hom(M,N) differs from dim End(M)";
    return r;
  }
  auto invertible = [&](const Matrix<K>& f) { return rank(f) == f.rows(); };
  const std::uint64_t p = m.zero().characteristic();
  bool exhaustive = false;
  if (p > 0) {
    std::uint64_t total = 1;
    exhaustive = true;
    for (std::size_t i = 0; i < hom.size(); ++i) {
      total *= p;
      if (total > opt.exhaustive_limit) {
        exhaustive = false;
        break;
      }
    }
  }
  if (exhaustive) {
    std::vector<std::uint64_t> c(hom.size(), 0);
    while (true) {
      std::size_t k = 0;
      while (k < c.size() && ++c[k] == p) c[k++] = 0;
      if (k == c.size()) break;
      Matrix<K> f(b.dim, a.dim, m.zero());
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) f += hom[i].scaled(m.zero().from_int(static_cast<std::int64_t>(c[i])));
      ++r.tried;
      if (invertible(f)) {
        r.verdict = Verdict::yes;
        r.iso = f;
        r.reason = "isomorphism found by exhaustive search";
        return r;
      }
    }
    r.verdict = Verdict::no;
    r.reason = "no isomorphism in an exhaustive search of Hom";
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.budget; ++t) {
    Matrix<K> f(b.dim, a.dim, m.zero());
    for (const auto& h : hom) f += h.scaled(detail::random_scalar(m.zero(), rng));
    ++r.tried;
    if (invertible(f)) {
      r.verdict = Verdict::yes;
      r.iso = f;
      r.reason = "isomorphism found by random search";
      return r;
    }
  }
  r.verdict = Verdict::undetermined;
  r.reason = "search budget exhausted";
  return r;
}

/// If M is isomorphic to the twisted bimodule _s A_1 for an automorphism s,
/// returns the matrix of one such s (unique up to inner automorphisms).
/// Exact: M is of this form iff M is free of rank one as a right module on a
/// generator m0, and then a.m0 = m0.s(a) defines s.
template <class K>
std::optional<Matrix<K>> find_invertible_structure(const Module<K>& m) {
  if (!m.is_bimodule()) throw ModuleError("find_invertible_structure: needs a bimodule");
  const auto& A = m.algebra();
  const std::size_t d = A.dim();
  if (m.dim != d) return std::nullopt;
  auto rctx = ModuleContext<K>::right(m.ctx->algebra_ptr());
  auto mr = restrict_to_right(m, rctx);
  auto tops = top_generators(mr, Subspace<K>::full(mr.dim, m.zero()), radical_of(mr));
  std::vector<std::size_t> count(A.num_vertices(), 0);
  Vec<K> m0 = m.zero_vector();
  for (const auto& [v, w] : tops) {
    ++count[v];
    m0 = axpy(m0, m.zero().one(), w);
  }
  for (auto c : count)
    if (c != 1) return std::nullopt;
  Matrix<K> r0(d, d, m.zero());
  for (std::size_t b = 0; b < d; ++b) r0.set_col(b, act_right(m, m0, A.basis_vector(b)));
  auto r0inv = inverse(r0);
  if (!r0inv) return std::nullopt;
  Matrix<K> s(d, d, m.zero());
  for (std::size_t b = 0; b < d; ++b) s.set_col(b, *r0inv * act_left(m, A.basis_vector(b), m0));
  AlgebraMorphism<K> sm{m.ctx->algebra_ptr(), m.ctx->algebra_ptr(), s};
  if (!sm.inverse() || !check_morphism(sm)) return std::nullopt;
  for (std::size_t g = 0; g < A.generators().size(); ++g) {
    const std::size_t b = A.generators()[g];
    if (!(m.act[m.ctx->left_gen(g)] * r0 == r0 * A.left_mult(s.col(b)))) return std::nullopt;
    if (!(m.act[m.ctx->right_gen(g)] * r0 == r0 * A.right_mult(A.basis_vector(b)))) return std::nullopt;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Duality

/// D M = Hom_k(M, k) with (a.f)(m) = f(m.a) and (f.b)(m) = f(b.m).
template <class K>
Module<K> dual_bimodule(const Module<K>& m) {
  if (!m.is_bimodule()) throw ModuleError("dual_bimodule: needs a bimodule");
  const std::size_t G = m.ctx->num_algebra_gens();
  std::vector<Matrix<K>> act(2 * G);
  for (std::size_t g = 0; g < G; ++g) {
    act[g] = m.act[G + g].transpose();
    act[G + g] = m.act[g].transpose();
  }
  return Module<K>(m.ctx, m.dim, std::move(act));
}

/// D(A) as a right module: (f.a)(x) = f(a x).
template <class K>
Module<K> dual_of_left_regular(ContextPtr<K> right_ctx) {
  const auto& A = right_ctx->algebra();
  std::vector<Matrix<K>> act;
  for (auto b : A.generators()) act.push_back(A.left_mult(A.basis_vector(b)).transpose());
  return Module<K>(right_ctx, A.dim(), std::move(act));
}

/// A is self-injective iff D(A) is projective.
template <class K>
bool is_self_injective(AlgebraPtr<K> a) {
  return is_projective(dual_of_left_regular(ModuleContext<K>::right(std::move(a))));
}

template <class K>
bool is_separable(AlgebraPtr<K> a) {
  return is_projective(regular_bimodule(ModuleContext<K>::bimodule(std::move(a))));
}

/// Omega^{-1} M = D Omega D M.
template <class K>
Module<K> cosyzygy(const Module<K>& m) {
  auto r = minimal_resolution(dual_bimodule(m), 1);
  return dual_bimodule(r.omega(1));
}

// ---------------------------------------------------------------------------
// The comparison map zeta_M : Omega (x) M -> M (x) Omega

template <class K>
struct Zeta {
  Module<K> omega;
  Tensor<K> omega_m, m_omega;  // Omega (x) M and M (x) Omega
  Matrix<K> map;
};

/// For a bimodule M projective as a right module. With P = A (x)_k A, the
/// maps P (x) M -> M and M (x) P -> M induced by multiplication are related by
/// a lift g : P (x) M -> M (x) P, and zeta is the restriction of g to the
/// kernels.
template <class K>
Zeta<K> zeta_map(const Module<K>& m) {
  if (!m.is_bimodule()) throw ModuleError("zeta_map: needs a bimodule");
  auto [P, mu] = free_bimodule_cover(m.ctx);
  auto om = kernel_module(P.module, mu);
  auto pm = tensor(P.module, m);
  auto mp = tensor(m, P.module);
  Module<K> reg = regular_bimodule(m.ctx);
  Matrix<K> alpha(m.dim, pm.module.dim, m.zero());
  for (std::size_t c = 0; c < pm.reps.size(); ++c)
    alpha.set_col(c, act_left(m, mu * pm.reps[c].first, pm.reps[c].second));
  Matrix<K> beta(m.dim, mp.module.dim, m.zero());
  for (std::size_t c = 0; c < mp.reps.size(); ++c)
    beta.set_col(c, act_right(m, mp.reps[c].first, mu * mp.reps[c].second));
  auto cov = projective_cover(pm.module);
  auto pinv = inverse(cov.pi);
  if (!pinv) throw ModuleError("zeta_map: M is not projective as a right module");
  auto lifted = lift_through(cov.P, alpha * cov.pi, mp.module, beta);
  if (!lifted) throw ModuleError("zeta_map: lifting failed");
  Matrix<K> g = *lifted * *pinv;
  auto om_m = tensor(om.module, m);
  auto m_om = tensor(m, om.module);
  Matrix<K> j1 = tensor_map(om_m, pm, P.module, m, om.inclusion, m.identity());
  Matrix<K> j2 = tensor_map(m_om, mp, m, P.module, m.identity(), om.inclusion);
  auto z = solve(j2, g * j1);
  if (!z) throw ModuleError("zeta_map: image outside M (x) Omega");
  return Zeta<K>{om.module, std::move(om_m), std::move(m_om), std::move(*z)};
}

}  // namespace fincat
