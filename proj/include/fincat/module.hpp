#pragma once

// Right modules and bimodules over a finite-dimensional algebra, stored by the
// matrices of the algebra generators. A bimodule is a right module over the
// enveloping algebra; its context has the left generators followed by the
// right generators. Matrices act on column vectors: act[g] * m is g.m for a
// left generator and m.g for a right generator.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fincat/algebra.hpp"

namespace fincat {

struct ModuleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class K>
class ModuleContext {
 public:
  ModuleContext(AlgebraPtr<K> a, bool bimodule) : alg_(std::move(a)), bimodule_(bimodule) {
    if (!alg_->idempotents_are_basis()) throw ModuleError("modules need vertex idempotents among the basis");
    const auto& gens = alg_->generators();
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) {
      auto it = std::find(gens.begin(), gens.end(), *alg_->idempotent_index(v));
      if (it == gens.end()) throw ModuleError("vertex idempotent is not a generator");
      vertex_gen_.push_back(static_cast<std::size_t>(it - gens.begin()));
    }
  }
  static std::shared_ptr<const ModuleContext> right(AlgebraPtr<K> a) {
    return std::make_shared<const ModuleContext>(std::move(a), false);
  }
  static std::shared_ptr<const ModuleContext> bimodule(AlgebraPtr<K> a) {
    return std::make_shared<const ModuleContext>(std::move(a), true);
  }

  const Algebra<K>& algebra() const { return *alg_; }
  const AlgebraPtr<K>& algebra_ptr() const { return alg_; }
  bool is_bimodule() const { return bimodule_; }
  K zero() const { return alg_->zero(); }

  std::size_t num_algebra_gens() const { return alg_->generators().size(); }
  std::size_t num_gens() const { return bimodule_ ? 2 * num_algebra_gens() : num_algebra_gens(); }
  std::size_t algebra_gen(std::size_t g) const { return g % num_algebra_gens(); }
  bool is_left(std::size_t g) const { return bimodule_ && g < num_algebra_gens(); }
  std::size_t left_gen(std::size_t ag) const {
    if (!bimodule_) throw ModuleError("right modules have no left action");
    return ag;
  }
  std::size_t right_gen(std::size_t ag) const { return bimodule_ ? num_algebra_gens() + ag : ag; }
  bool in_radical(std::size_t g) const { return alg_->generator_in_radical(algebra_gen(g)); }
  bool is_vertex_gen(std::size_t g) const {
    return std::find(vertex_gen_.begin(), vertex_gen_.end(), algebra_gen(g)) != vertex_gen_.end();
  }
  std::size_t vertex_gen(std::size_t alg_vertex) const { return vertex_gen_[alg_vertex]; }

  std::size_t num_algebra_vertices() const { return alg_->num_vertices(); }
  /// Right modules: algebra vertices. Bimodules: pairs (x, y) at x*m + y,
  /// standing for e_x M e_y.
  std::size_t num_vertices() const {
    const std::size_t m = num_algebra_vertices();
    return bimodule_ ? m * m : m;
  }
  std::vector<std::size_t> vertex_gens(std::size_t v) const {
    const std::size_t m = num_algebra_vertices();
    if (!bimodule_) return {vertex_gen_[v]};
    return {vertex_gen_[v / m], right_gen(vertex_gen_[v % m])};
  }
  std::string vertex_name(std::size_t v) const {
    const auto& n = alg_->vertex_names();
    const std::size_t m = num_algebra_vertices();
    return bimodule_ ? "(" + n[v / m] + "," + n[v % m] + ")" : n[v];
  }

  bool operator==(const ModuleContext& o) const { return alg_ == o.alg_ && bimodule_ == o.bimodule_; }

 private:
  AlgebraPtr<K> alg_;
  bool bimodule_;
  std::vector<std::size_t> vertex_gen_;
};

template <class K>
using ContextPtr = std::shared_ptr<const ModuleContext<K>>;

template <class K>
struct Module {
  ContextPtr<K> ctx;
  std::size_t dim = 0;
  std::vector<Matrix<K>> act;

  Module() = default;
  Module(ContextPtr<K> c, std::size_t d, std::vector<Matrix<K>> a) : ctx(std::move(c)), dim(d), act(std::move(a)) {
    if (act.size() != ctx->num_gens()) throw ModuleError("module: one matrix per generator required");
    for (const auto& m : act)
      if (m.rows() != dim || m.cols() != dim) throw ModuleError("module: action matrix has wrong shape");
  }
  static Module zero_module(ContextPtr<K> c) {
    std::vector<Matrix<K>> a(c->num_gens(), Matrix<K>(0, 0, c->zero()));
    return Module(c, 0, std::move(a));
  }

  const Algebra<K>& algebra() const { return ctx->algebra(); }
  K zero() const { return ctx->zero(); }
  bool is_bimodule() const { return ctx->is_bimodule(); }
  Vec<K> zero_vector() const { return Vec<K>(dim, zero()); }
  Vec<K> unit_vector(std::size_t i) const {
    Vec<K> v = zero_vector();
    v[i] = zero().one();
    return v;
  }
  Matrix<K> identity() const { return Matrix<K>::identity(dim, zero()); }

  Vec<K> apply_word(const std::vector<std::size_t>& w, Vec<K> v) const {
    for (auto g : w) v = act[g] * v;
    return v;
  }
  /// Projection onto the vertex component (e_v M, or e_x M e_y).
  Matrix<K> projector(std::size_t v) const {
    auto gs = ctx->vertex_gens(v);
    Matrix<K> p = act[gs[0]];
    for (std::size_t k = 1; k < gs.size(); ++k) p = act[gs[k]] * p;
    return p;
  }
  Subspace<K> vertex_part(std::size_t v) const { return Subspace<K>::column_span(projector(v)); }

  /// Matrix of m -> m.b for the basis element b (composed along its word).
  Matrix<K> right_basis_action(std::size_t b) const {
    Matrix<K> r = identity();
    for (auto g : algebra().word(b)) r = act[ctx->right_gen(g)] * r;
    return r;
  }
  Matrix<K> left_basis_action(std::size_t b) const {
    Matrix<K> r = identity();
    for (auto g : algebra().word(b)) r = r * act[ctx->left_gen(g)];
    return r;
  }
  Matrix<K> right_action(const Vec<K>& a) const {
    Matrix<K> r(dim, dim, zero());
    for (std::size_t b = 0; b < a.size(); ++b)
      if (!a[b].is_zero()) r += right_basis_action(b).scaled(a[b]);
    return r;
  }
  Matrix<K> left_action(const Vec<K>& a) const {
    Matrix<K> r(dim, dim, zero());
    for (std::size_t b = 0; b < a.size(); ++b)
      if (!a[b].is_zero()) r += left_basis_action(b).scaled(a[b]);
    return r;
  }
};

template <class K>
void require_same_context(const Module<K>& a, const Module<K>& b, const char* what) {
  if (!(*a.ctx == *b.ctx)) throw ModuleError(std::string(what) + ": modules over different contexts");
}

/// Checks that the generator matrices define a module: basis-element actions
/// multiply like the algebra, the unit acts trivially, and (for bimodules) the
/// two actions commute. Cost grows like dim(A)^2 dim(M)^3.
template <class K>
bool check_module(const Module<K>& m) {
  const auto& A = m.algebra();
  const std::size_t d = A.dim();
  std::vector<Matrix<K>> rho(d), lam;
  for (std::size_t b = 0; b < d; ++b) rho[b] = m.right_basis_action(b);
  if (m.is_bimodule())
    for (std::size_t b = 0; b < d; ++b) lam.push_back(m.left_basis_action(b));
  auto combine = [&](const std::vector<Matrix<K>>& ms, const Sparse<K>& s) {
    Matrix<K> r(m.dim, m.dim, m.zero());
    for (const auto& [k, c] : s) r += ms[k].scaled(c);
    return r;
  };
  Sparse<K> unit;
  for (std::size_t b = 0; b < d; ++b)
    if (!A.unit()[b].is_zero()) unit.emplace_back(b, A.unit()[b]);
  if (!(combine(rho, unit) == m.identity())) return false;
  if (m.is_bimodule() && !(combine(lam, unit) == m.identity())) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (!(combine(rho, A.product(i, j)) == rho[j] * rho[i])) return false;
      if (m.is_bimodule()) {
        if (!(combine(lam, A.product(i, j)) == lam[i] * lam[j])) return false;
        if (!(lam[i] * rho[j] == rho[j] * lam[i])) return false;
      }
    }
  for (std::size_t g = 0; g < m.ctx->num_gens(); ++g) {
    std::size_t b = m.algebra().generators()[m.ctx->algebra_gen(g)];
    const Matrix<K>& expect = m.ctx->is_left(g) ? lam[b] : rho[b];
    if (!(expect == m.act[g])) return false;
  }
  return true;
}

template <class K>
bool is_homomorphism(const Module<K>& m, const Module<K>& n, const Matrix<K>& f) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (std::size_t g = 0; g < m.act.size(); ++g)
    if (!(f * m.act[g] == n.act[g] * f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Standard modules

template <class K>
Module<K> regular_right_module(ContextPtr<K> ctx) {
  if (ctx->is_bimodule()) throw ModuleError("regular_right_module: needs a right-module context");
  const auto& A = ctx->algebra();
  std::vector<Matrix<K>> act;
  for (auto b : A.generators()) act.push_back(A.right_mult(A.basis_vector(b)));
  return Module<K>(ctx, A.dim(), std::move(act));
}

/// The bimodule _s A_t: a.x.b = s(a) x t(b). Missing twists are identities.
template <class K>
Module<K> twisted_bimodule(ContextPtr<K> ctx, const std::optional<Matrix<K>>& left_twist,
                           const std::optional<Matrix<K>>& right_twist = std::nullopt) {
  if (!ctx->is_bimodule()) throw ModuleError("twisted_bimodule: needs a bimodule context");
  const auto& A = ctx->algebra();
  std::vector<Matrix<K>> act;
  for (auto b : A.generators()) {
    Vec<K> x = left_twist ? left_twist->col(b) : A.basis_vector(b);
    act.push_back(A.left_mult(x));
  }
  for (auto b : A.generators()) {
    Vec<K> x = right_twist ? right_twist->col(b) : A.basis_vector(b);
    act.push_back(A.right_mult(x));
  }
  return Module<K>(ctx, A.dim(), std::move(act));
}

template <class K>
Module<K> regular_bimodule(ContextPtr<K> ctx) {
  return twisted_bimodule<K>(ctx, std::nullopt, std::nullopt);
}

/// Forgets the left action of a bimodule.
template <class K>
Module<K> restrict_to_right(const Module<K>& m, ContextPtr<K> right_ctx) {
  if (!m.is_bimodule() || right_ctx->is_bimodule() || right_ctx->algebra_ptr() != m.ctx->algebra_ptr())
    throw ModuleError("restrict_to_right: context mismatch");
  std::vector<Matrix<K>> act;
  const std::size_t G = m.ctx->num_algebra_gens();
  for (std::size_t g = 0; g < G; ++g) act.push_back(m.act[G + g]);
  return Module<K>(right_ctx, m.dim, std::move(act));
}

template <class K>
Module<K> direct_sum(const std::vector<const Module<K>*>& ms, ContextPtr<K> ctx) {
  std::size_t total = 0;
  for (auto* m : ms) {
    if (!(*m->ctx == *ctx)) throw ModuleError("direct_sum: context mismatch");
    total += m->dim;
  }
  std::vector<Matrix<K>> act(ctx->num_gens(), Matrix<K>(total, total, ctx->zero()));
  std::size_t off = 0;
  for (auto* m : ms) {
    for (std::size_t g = 0; g < act.size(); ++g) act[g].set_block(off, off, m->act[g]);
    off += m->dim;
  }
  return Module<K>(ctx, total, std::move(act));
}

template <class K>
Module<K> direct_sum(const Module<K>& a, const Module<K>& b) {
  return direct_sum<K>({&a, &b}, a.ctx);
}

// ---------------------------------------------------------------------------
// Sub- and quotient modules

template <class K>
struct Submodule {
  Module<K> module;
  Matrix<K> inclusion;  // ambient.dim x module.dim
};

template <class K>
Submodule<K> submodule(const Module<K>& m, const Subspace<K>& s) {
  const std::size_t k = s.dim();
  std::vector<Matrix<K>> act;
  for (const auto& a : m.act) {
    Matrix<K> r(k, k, m.zero());
    for (std::size_t i = 0; i < k; ++i) {
      Vec<K> img = a * s.vector(i);
      Vec<K> c = s.pivot_coordinates(img);
      for (std::size_t t = 0; t < k; ++t) r(t, i) = c[t];
    }
    act.push_back(std::move(r));
  }
  Submodule<K> out{Module<K>(m.ctx, k, std::move(act)), s.as_columns()};
  for (std::size_t g = 0; g < m.act.size(); ++g)
    if (!(m.act[g] * out.inclusion == out.inclusion * out.module.act[g]))
      throw ModuleError("submodule: subspace is not stable under the action");
  return out;
}

template <class K>
Submodule<K> kernel_module(const Module<K>& m, const Matrix<K>& f) {
  return submodule(m, kernel_basis(f));
}

template <class K>
struct Quotient {
  Module<K> module;
  Matrix<K> projection;  // module.dim x ambient.dim
  Matrix<K> section;     // ambient.dim x module.dim, projection * section = id
};

template <class K>
Quotient<K> quotient(const Module<K>& m, const Subspace<K>& s) {
  std::vector<bool> piv(m.dim, false);
  for (auto p : s.pivots()) piv[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.dim; ++j)
    if (!piv[j]) keep.push_back(j);
  const std::size_t q = keep.size();
  Matrix<K> proj(q, m.dim, m.zero());
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec<K> r = s.reduce(m.unit_vector(j));
    for (std::size_t t = 0; t < q; ++t) proj(t, j) = r[keep[t]];
  }
  Matrix<K> sec(m.dim, q, m.zero());
  for (std::size_t t = 0; t < q; ++t) sec(keep[t], t) = m.zero().one();
  std::vector<Matrix<K>> act;
  for (const auto& a : m.act) act.push_back(proj * (a * sec));
  Quotient<K> out{Module<K>(m.ctx, q, std::move(act)), std::move(proj), std::move(sec)};
  return out;
}

/// rad M: the span of the images of the radical generators.
template <class K>
Subspace<K> radical_of(const Module<K>& m) {
  if (!m.algebra().has_radical()) throw ModuleError("radical_of: algebra has no declared radical (unsupported)");
  Matrix<K> all(m.dim, 0, m.zero());
  for (std::size_t g = 0; g < m.act.size(); ++g)
    if (m.ctx->in_radical(g)) all = all.hstack(m.act[g]);
  return Subspace<K>::column_span(all);
}

template <class K>
Subspace<K> radical_of(const Module<K>& m, const Subspace<K>& sub) {
  Matrix<K> basis = sub.as_columns();
  Matrix<K> all(m.dim, 0, m.zero());
  for (std::size_t g = 0; g < m.act.size(); ++g)
    if (m.ctx->in_radical(g)) all = all.hstack(m.act[g] * basis);
  return Subspace<K>::column_span(all);
}

/// Elements of sub whose classes form a basis of sub / rad(sub), listed
/// per vertex in echelon order; each lies in one vertex component.
template <class K>
std::vector<std::pair<std::size_t, Vec<K>>> top_generators(const Module<K>& m, const Subspace<K>& sub,
                                                           Subspace<K> rad) {
  std::vector<std::pair<std::size_t, Vec<K>>> out;
  Matrix<K> basis = sub.as_columns();
  for (std::size_t v = 0; v < m.ctx->num_vertices(); ++v) {
    auto part = Subspace<K>::column_span(m.projector(v) * basis);
    for (std::size_t i = 0; i < part.dim(); ++i) {
      Vec<K> w = part.vector(i);
      if (rad.contains(w)) continue;
      rad = rad + Subspace<K>::span({w}, m.dim, m.zero());
      out.emplace_back(v, std::move(w));
    }
  }
  if (rad.dim() != sub.dim()) throw ModuleError("top_generators: vertex idempotents do not cover the module");
  return out;
}

// ---------------------------------------------------------------------------
// Projective modules with their summand structure

template <class K>
struct Projective {
  Module<K> module;
  std::vector<std::size_t> vertices;  // vertex of each indecomposable summand
  std::vector<std::size_t> offsets;   // first basis index of each summand
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> tops;      // basis index of each summand's generator
  // Per basis element: its summand and how to reach it from another basis
  // element of the same summand (parent) by applying a word of generators.
  std::vector<std::size_t> summand_of;
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> step;
  std::vector<std::size_t> order;  // parents before children

  static constexpr std::size_t none = std::size_t(-1);

  std::size_t num_summands() const { return vertices.size(); }
  Vec<K> generator(std::size_t i) const { return module.unit_vector(tops[i]); }

  /// Columns of the map P_{v_i} -> N sending the generator of summand i to n.
  Matrix<K> summand_map(const Module<K>& n, std::size_t i, const Vec<K>& img) const {
    Matrix<K> r(n.dim, sizes[i], module.zero());
    std::vector<Vec<K>> val(sizes[i]);
    for (auto j : order) {
      if (summand_of[j] != i) continue;
      const std::size_t lj = j - offsets[i];
      val[lj] = parent[j] == none ? img : n.apply_word(step[j], val[parent[j] - offsets[i]]);
      r.set_col(lj, val[lj]);
    }
    return r;
  }
  /// The homomorphism P -> N determined by images of the summand generators.
  /// Each image must lie in the matching vertex component of N.
  Matrix<K> map_to(const Module<K>& n, const std::vector<Vec<K>>& imgs) const {
    if (imgs.size() != num_summands()) throw ModuleError("map_to: one image per summand required");
    Matrix<K> r(n.dim, module.dim, module.zero());
    for (std::size_t i = 0; i < num_summands(); ++i) r.set_block(0, offsets[i], summand_map(n, i, imgs[i]));
    return r;
  }
};

namespace detail {

template <class K>
void finish_projective(Projective<K>& p, const std::vector<std::vector<std::size_t>>& words, std::size_t top) {
  const std::size_t n = words.size();
  std::map<std::vector<std::size_t>, std::size_t> by_word;
  for (std::size_t j = 0; j < n; ++j) by_word[words[j]] = j;
  p.parent.assign(n, Projective<K>::none);
  p.step.assign(n, {});
  p.summand_of.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == top) continue;
    const auto& w = words[j];
    std::vector<std::size_t> pre(w.begin(), w.end() - 1);
    auto it = pre.empty() ? by_word.find({}) : by_word.find(pre);
    if (it != by_word.end()) {
      p.parent[j] = it->second;
      p.step[j] = {w.back()};
    } else {
      p.parent[j] = top;
      p.step[j] = w;
    }
  }
  std::vector<std::size_t> depth(n, 0);
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t k = j;
    while (p.parent[k] != Projective<K>::none) {
      ++depth[j];
      k = p.parent[k];
    }
    idx[j] = j;
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
  p.order = idx;
  p.vertices = {};
  p.offsets = {0};
  p.sizes = {n};
  p.tops = {top};
}

}  // namespace detail

/// The indecomposable projective at vertex v: e_v A for right modules,
/// A e_x (x) e_y A for the bimodule vertex (x, y).
template <class K>
Projective<K> indecomposable_projective(ContextPtr<K> ctx, std::size_t v) {
  const auto& A = ctx->algebra();
  const std::size_t d = A.dim();
  const K z = A.zero();
  Projective<K> p;
  std::vector<std::vector<std::size_t>> words;
  std::size_t top = 0;
  if (!ctx->is_bimodule()) {
    std::vector<std::size_t> basis, local(d, Projective<K>::none);
    for (std::size_t b = 0; b < d; ++b)
      if (A.left_vertex(b) == v) {
        local[b] = basis.size();
        basis.push_back(b);
      }
    const std::size_t e = *A.idempotent_index(v);
    std::vector<Matrix<K>> act;
    for (auto g : A.generators()) {
      Matrix<K> m(basis.size(), basis.size(), z);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [k, c] : A.product(basis[i], g)) m(local.at(k), i) += c;
      act.push_back(std::move(m));
    }
    p.module = Module<K>(ctx, basis.size(), std::move(act));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == e) {
        top = i;
        words.push_back({});
      } else {
        words.push_back(A.word(basis[i]));
      }
    }
  } else {
    const std::size_t m = A.num_vertices();
    const std::size_t x = v / m, y = v % m;
    std::vector<std::size_t> la, lb, loca(d, Projective<K>::none), locb(d, Projective<K>::none);
    for (std::size_t b = 0; b < d; ++b) {
      if (A.right_vertex(b) == x) {
        loca[b] = la.size();
        la.push_back(b);
      }
      if (A.left_vertex(b) == y) {
        locb[b] = lb.size();
        lb.push_back(b);
      }
    }
    const std::size_t na = la.size(), nb = lb.size(), n = na * nb;
    const std::size_t ex = *A.idempotent_index(x), ey = *A.idempotent_index(y);
    std::vector<Matrix<K>> act;
    for (auto g : A.generators()) {
      Matrix<K> mm(n, n, z);
      for (std::size_t i = 0; i < na; ++i)
        for (const auto& [k, c] : A.product(g, la[i]))
          for (std::size_t j = 0; j < nb; ++j) mm(loca.at(k) * nb + j, i * nb + j) += c;
      act.push_back(std::move(mm));
    }
    for (auto g : A.generators()) {
      Matrix<K> mm(n, n, z);
      for (std::size_t j = 0; j < nb; ++j)
        for (const auto& [k, c] : A.product(lb[j], g))
          for (std::size_t i = 0; i < na; ++i) mm(i * nb + locb.at(k), i * nb + j) += c;
      act.push_back(std::move(mm));
    }
    p.module = Module<K>(ctx, n, std::move(act));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        std::vector<std::size_t> w;
        if (la[i] != ex) {
          const auto& wa = A.word(la[i]);
          for (auto it = wa.rbegin(); it != wa.rend(); ++it) w.push_back(ctx->left_gen(*it));
        }
        if (lb[j] != ey)
          for (auto g : A.word(lb[j])) w.push_back(ctx->right_gen(g));
        if (la[i] == ex && lb[j] == ey) top = i * nb + j;
        words.push_back(std::move(w));
      }
  }
  detail::finish_projective(p, words, top);
  p.vertices = {v};
  return p;
}

template <class K>
Projective<K> projective_sum(ContextPtr<K> ctx, const std::vector<std::size_t>& vertices) {
  std::map<std::size_t, Projective<K>> cache;
  std::vector<const Module<K>*> mods;
  Projective<K> out;
  for (auto v : vertices)
    if (!cache.count(v)) cache.emplace(v, indecomposable_projective(ctx, v));
  std::size_t off = 0;
  for (auto v : vertices) {
    const auto& q = cache.at(v);
    mods.push_back(&q.module);
    const std::size_t s = out.vertices.size();
    out.vertices.push_back(v);
    out.offsets.push_back(off);
    out.sizes.push_back(q.module.dim);
    out.tops.push_back(off + q.tops[0]);
    for (std::size_t j = 0; j < q.module.dim; ++j) {
      out.summand_of.push_back(s);
      out.parent.push_back(q.parent[j] == Projective<K>::none ? Projective<K>::none : off + q.parent[j]);
      out.step.push_back(q.step[j]);
    }
    for (auto j : q.order) out.order.push_back(off + j);
    off += q.module.dim;
  }
  out.module = direct_sum<K>(mods, ctx);
  return out;
}

// ---------------------------------------------------------------------------
// Covers, homomorphisms, resolutions

template <class K>
struct Cover {
  Projective<K> P;
  Matrix<K> pi;               // P -> M
  std::vector<Vec<K>> gens;   // images of the summand generators
};

/// Minimal projective cover: one summand P_v for each basis vector of the
/// v-component of M / rad M, chosen in echelon order.
template <class K>
Cover<K> projective_cover(const Module<K>& m) {
  auto tops = top_generators(m, Subspace<K>::full(m.dim, m.zero()), radical_of(m));
  std::vector<std::size_t> vs;
  Cover<K> c;
  for (auto& [v, w] : tops) {
    vs.push_back(v);
    c.gens.push_back(std::move(w));
  }
  c.P = projective_sum(m.ctx, vs);
  c.pi = c.P.map_to(m, c.gens);
  return c;
}

/// M is projective iff its projective cover has the same dimension.
template <class K>
bool is_projective(const Module<K>& m) {
  return projective_cover(m).P.module.dim == m.dim;
}

/// Basis of Hom(M, N), each a dim N x dim M matrix. Computed from a
/// presentation of M: generator images in the vertex components of N that
/// kill the generators of the relation module.
template <class K>
std::vector<Matrix<K>> hom_space(const Module<K>& m, const Module<K>& n) {
  require_same_context(m, n, "hom_space");
  if (m.dim == 0 || n.dim == 0) return {};
  const Cover<K> c = projective_cover(m);
  const auto& P = c.P;
  auto ker = kernel_basis(c.pi);
  std::vector<Vec<K>> rel;
  if (ker.dim() > 0)
    for (auto& [v, w] : top_generators(P.module, ker, radical_of(P.module, ker))) rel.push_back(std::move(w));
  auto section = solve(c.pi, m.identity());
  if (!section) throw ModuleError("hom_space: cover is not surjective");

  struct Unknown {
    std::size_t summand;
    Matrix<K> block;  // P_{v_i} -> N
  };
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < P.num_summands(); ++i) {
    auto part = n.vertex_part(P.vertices[i]);
    for (std::size_t t = 0; t < part.dim(); ++t) unknowns.push_back({i, P.summand_map(n, i, part.vector(t))});
  }
  const std::size_t u = unknowns.size();
  if (u == 0) return {};
  Matrix<K> cons(rel.size() * n.dim, u, m.zero());
  for (std::size_t k = 0; k < u; ++k) {
    const auto& uk = unknowns[k];
    const std::size_t off = P.offsets[uk.summand], sz = P.sizes[uk.summand];
    for (std::size_t r = 0; r < rel.size(); ++r) {
      Vec<K> part(rel[r].begin() + off, rel[r].begin() + off + sz);
      Vec<K> img = uk.block * part;
      for (std::size_t i = 0; i < n.dim; ++i) cons(r * n.dim + i, k) = img[i];
    }
  }
  auto sol = kernel_basis(cons);
  std::vector<Matrix<K>> out;
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    Vec<K> coeff = sol.vector(s);
    Matrix<K> f(n.dim, P.module.dim, m.zero());
    for (std::size_t k = 0; k < u; ++k) {
      if (coeff[k].is_zero()) continue;
      const auto& uk = unknowns[k];
      Matrix<K> blk = f.block(0, P.offsets[uk.summand], n.dim, P.sizes[uk.summand]) + uk.block.scaled(coeff[k]);
      f.set_block(0, P.offsets[uk.summand], blk);
    }
    out.push_back(f * *section);
  }
  return out;
}

template <class K>
struct Resolution {
  std::vector<Cover<K>> covers;        // covers[i]: P_i -> Omega^i
  std::vector<Module<K>> syzygies;     // Omega^0 = M, ..., Omega^n
  std::vector<Matrix<K>> inclusions;   // inclusions[i]: Omega^{i+1} -> P_i
  std::vector<Matrix<K>> differentials;  // differentials[i]: P_{i+1} -> P_i

  const Projective<K>& P(std::size_t i) const { return covers.at(i).P; }
  const Module<K>& omega(std::size_t i) const { return syzygies.at(i); }
};

/// Minimal projective resolution up to Omega^n (covers P_0 .. P_{n-1}).
template <class K>
Resolution<K> minimal_resolution(const Module<K>& m, std::size_t n) {
  Resolution<K> r;
  r.syzygies.push_back(m);
  for (std::size_t i = 0; i < n; ++i) {
    r.covers.push_back(projective_cover(r.syzygies.back()));
    auto k = kernel_module(r.covers.back().P.module, r.covers.back().pi);
    r.syzygies.push_back(std::move(k.module));
    r.inclusions.push_back(std::move(k.inclusion));
    if (i > 0) r.differentials.push_back(r.inclusions[i - 1] * r.covers[i].pi);
  }
  return r;
}

/// The bimodule A (x)_k A as the sum of A e_x (x) e_y A over all vertex pairs,
/// with multiplication onto A.
template <class K>
std::pair<Projective<K>, Matrix<K>> free_bimodule_cover(ContextPtr<K> ctx) {
  const auto& A = ctx->algebra();
  const std::size_t m = A.num_vertices();
  std::vector<std::size_t> vs;
  std::vector<Vec<K>> imgs;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      vs.push_back(x * m + y);
      imgs.push_back(x == y ? A.idempotent(x) : A.zero_vector());
    }
  auto P = projective_sum(ctx, vs);
  Module<K> reg = regular_bimodule(ctx);
  Matrix<K> mu = P.map_to(reg, imgs);
  return {std::move(P), std::move(mu)};
}

/// Omega(A) = ker(A (x)_k A -> A), with its inclusion.
template <class K>
Submodule<K> canonical_omega(ContextPtr<K> ctx) {
  auto [P, mu] = free_bimodule_cover(ctx);
  return kernel_module(P.module, mu);
}

}  // namespace fincat
