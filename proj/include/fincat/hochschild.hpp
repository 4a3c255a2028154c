#pragma once

// Hochschild cochains of a small linear category, presented as a basic
// algebra whose objects are its vertex idempotents, with coefficients in a
// graded bimodule. A p-cochain of internal degree q assigns to every
// composable tuple of basis morphisms f1..fp, f_i : X_i -> X_{i-1}, a vector
// of e_{X_0} V e_{X_p} of degree |f1| + ... + |fp| + q.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>

#include "fincat/stable.hpp"

namespace fincat {

struct HochschildError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int parity(long e) { return static_cast<int>(((e % 2) + 2) % 2); }

template <class K>
K sign_of(const K& z, long e) {
  return parity(e) ? -z.one() : z.one();
}

namespace detail {
struct TupleHash {
  std::size_t operator()(const std::vector<std::size_t>& t) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : t) h = (h ^ (x + 0x9e3779b97f4a7c15ull)) * 0x100000001b3ull;
    return h ^ t.size();
  }
};
}  // namespace detail

// ---------------------------------------------------------------------------
// Coefficients

/// A graded bimodule V over the algebra, given by the action matrices of the
/// basis on either side. Monoids also carry a product table and a unit.
template <class K>
struct Coefficients {
  static constexpr std::size_t none = std::size_t(-1);

  AlgebraPtr<K> alg;
  std::size_t dim = 0;
  std::vector<int> degree;
  std::vector<Matrix<K>> left, right;
  std::vector<std::size_t> left_vertex, right_vertex;
  std::vector<Vec<K>> unit;        // per vertex; monoids only
  std::vector<Sparse<K>> mult;     // dim * dim; monoids only
  // When V is an algebra C acting through a functor F : alg -> C.
  AlgebraPtr<K> values;
  std::optional<Matrix<K>> functor;
  std::optional<std::pair<int, int>> window;

  K zero() const { return alg->zero(); }
  Vec<K> zero_vector() const { return Vec<K>(dim, zero()); }
  bool is_monoid() const { return !mult.empty(); }
  bool is_regular() const { return values && values == alg && functor && *functor == Matrix<K>::identity(alg->dim(), zero()); }

  Vec<K> product(const Vec<K>& a, const Vec<K>& b) const {
    if (!is_monoid()) throw HochschildError("coefficients carry no product");
    Vec<K> r = zero_vector();
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        const K c = a[i] * b[j];
        for (const auto& [k, v] : mult[i * dim + j]) r[k] += c * v;
      }
    }
    return r;
  }
  Matrix<K> left_of(const Vec<K>& a) const {
    Matrix<K> m(dim, dim, zero());
    for (std::size_t b = 0; b < a.size(); ++b)
      if (!a[b].is_zero()) m += left[b].scaled(a[b]);
    return m;
  }
  Matrix<K> right_of(const Vec<K>& a) const {
    Matrix<K> m(dim, dim, zero());
    for (std::size_t b = 0; b < a.size(); ++b)
      if (!a[b].is_zero()) m += right[b].scaled(a[b]);
    return m;
  }

  /// Assigns each basis vector to the block e_x V e_y containing it.
  void locate() {
    const std::size_t m = alg->num_vertices();
    left_vertex.assign(dim, none);
    right_vertex.assign(dim, none);
    for (std::size_t x = 0; x < m; ++x) {
      auto L = left_of(alg->idempotent(x));
      auto R = right_of(alg->idempotent(x));
      for (std::size_t v = 0; v < dim; ++v) {
        Vec<K> e(dim, zero());
        e[v] = zero().one();
        if (L.col(v) == e) left_vertex[v] = x;
        if (R.col(v) == e) right_vertex[v] = x;
      }
    }
  }
};

template <class K>
using CoefficientsPtr = std::shared_ptr<const Coefficients<K>>;

/// Lambda as a bimodule over itself, graded by the algebra degrees.
template <class K>
CoefficientsPtr<K> regular_coefficients(AlgebraPtr<K> a) {
  auto c = std::make_shared<Coefficients<K>>();
  const std::size_t d = a->dim();
  c->alg = a;
  c->dim = d;
  for (std::size_t b = 0; b < d; ++b) {
    c->degree.push_back(a->degree(b));
    c->left.push_back(a->left_mult(a->basis_vector(b)));
    c->right.push_back(a->right_mult(a->basis_vector(b)));
  }
  for (std::size_t x = 0; x < a->num_vertices(); ++x) c->unit.push_back(a->idempotent(x));
  c->mult.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c->mult[i * d + j] = a->product(i, j);
  c->values = a;
  c->functor = Matrix<K>::identity(d, a->zero());
  c->locate();
  return c;
}

/// Lambda(sigma) = Lambda<iota^{+-1}>/(iota x - sigma(x) iota), |iota| = -1,
/// truncated to degrees qmin..qmax. The degree j part is _{sigma^j}Lambda_1
/// via iota^{-j}; basis (j, b) sits at (j - qmin) * d + b. Products leaving
/// the window are dropped.
template <class K>
CoefficientsPtr<K> lambda_sigma_coefficients(AlgebraPtr<K> a, const Matrix<K>& sigma, int qmin, int qmax) {
  if (qmin > 0 || qmax < 0) throw HochschildError("lambda_sigma: window must contain 0");
  AlgebraMorphism<K> s{a, a, sigma};
  if (!check_morphism(s) || !s.inverse()) throw HochschildError("lambda_sigma: sigma is not an automorphism");
  const std::size_t d = a->dim();
  const std::size_t n = static_cast<std::size_t>(qmax - qmin + 1);
  std::vector<Matrix<K>> pw;
  for (int j = qmin; j <= qmax; ++j) pw.push_back(s.power(j).matrix);
  auto c = std::make_shared<Coefficients<K>>();
  c->alg = a;
  c->dim = n * d;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < d; ++b) c->degree.push_back(qmin + static_cast<int>(k));
  for (std::size_t b = 0; b < d; ++b) {
    Matrix<K> L(n * d, n * d, a->zero()), R(n * d, n * d, a->zero());
    for (std::size_t k = 0; k < n; ++k) {
      L.set_block(k * d, k * d, a->left_mult(pw[k].col(b)));
      R.set_block(k * d, k * d, a->right_mult(a->basis_vector(b)));
    }
    c->left.push_back(std::move(L));
    c->right.push_back(std::move(R));
  }
  const std::size_t k0 = static_cast<std::size_t>(-qmin);
  for (std::size_t x = 0; x < a->num_vertices(); ++x) {
    Vec<K> u(n * d, a->zero());
    for (std::size_t b = 0; b < d; ++b) u[k0 * d + b] = a->idempotent(x)[b];
    c->unit.push_back(std::move(u));
  }
  c->mult.resize(n * d * n * d);
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const long k = static_cast<long>(k1 + k2) + qmin;
      if (k < 0 || k >= static_cast<long>(n)) continue;
      for (std::size_t i = 0; i < d; ++i) {
        Vec<K> si = pw[k2].col(i);
        for (std::size_t j = 0; j < d; ++j) {
          Vec<K> p = a->multiply(si, a->basis_vector(j));
          auto& dst = c->mult[(k1 * d + i) * n * d + k2 * d + j];
          for (std::size_t b = 0; b < d; ++b)
            if (!p[b].is_zero()) dst.emplace_back(static_cast<std::size_t>(k) * d + b, p[b]);
        }
      }
    }
  c->window = std::pair{qmin, qmax};
  c->locate();
  return c;
}

/// An ungraded bimodule concentrated in degree 0.
template <class K>
CoefficientsPtr<K> bimodule_coefficients(const Module<K>& m) {
  if (!m.is_bimodule()) throw HochschildError("bimodule_coefficients: needs a bimodule");
  auto c = std::make_shared<Coefficients<K>>();
  c->alg = m.ctx->algebra_ptr();
  c->dim = m.dim;
  c->degree.assign(m.dim, 0);
  for (std::size_t b = 0; b < c->alg->dim(); ++b) {
    c->left.push_back(m.left_basis_action(b));
    c->right.push_back(m.right_basis_action(b));
  }
  c->window = std::pair{0, 0};
  c->locate();
  return c;
}

/// Vertex map of a functor: X -> the vertex whose idempotent is F(e_X).
template <class K>
std::vector<std::size_t> object_map(const AlgebraMorphism<K>& f) {
  std::vector<std::size_t> r;
  for (std::size_t x = 0; x < f.source->num_vertices(); ++x) {
    auto img = f(f.source->idempotent(x));
    std::size_t found = Coefficients<K>::none;
    for (std::size_t y = 0; y < f.target->num_vertices(); ++y)
      if (f.target->idempotent(y) == img) found = y;
    if (found == Coefficients<K>::none) throw HochschildError("functor must send vertices to vertices");
    r.push_back(found);
  }
  return r;
}

/// V(F, F): the coefficients of c seen over the source of F.
template <class K>
CoefficientsPtr<K> restrict_coefficients(const Coefficients<K>& c, const AlgebraMorphism<K>& f) {
  if (f.target != c.alg) throw HochschildError("restrict_coefficients: functor target differs");
  auto om = object_map(f);
  auto r = std::make_shared<Coefficients<K>>();
  r->alg = f.source;
  r->dim = c.dim;
  r->degree = c.degree;
  for (std::size_t g = 0; g < f.source->dim(); ++g) {
    r->left.push_back(c.left_of(f.image(g)));
    r->right.push_back(c.right_of(f.image(g)));
  }
  if (c.is_monoid())
    for (auto y : om) r->unit.push_back(c.unit[y]);
  r->mult = c.mult;
  r->values = c.values;
  if (c.functor) r->functor = *c.functor * f.matrix;
  r->window = c.window;
  r->locate();
  return r;
}

// ---------------------------------------------------------------------------
// Cochain spaces

template <class K>
struct CochainSpace {
  std::size_t arity = 0;
  int q = 0;
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> source, target;  // X_0 and X_p; the object itself in arity 0
  std::vector<std::vector<std::size_t>> block;
  std::vector<std::size_t> offset;
  std::size_t dim = 0;
  std::unordered_map<std::vector<std::size_t>, std::size_t, detail::TupleHash> index;

  std::optional<std::size_t> find(const std::vector<std::size_t>& t, std::size_t obj) const {
    auto it = index.find(t.empty() ? std::vector<std::size_t>{obj} : t);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

template <class K>
class HochschildComplex;
template <class K>
using ComplexPtr = std::shared_ptr<const HochschildComplex<K>>;

template <class K>
struct Cochain {
  ComplexPtr<K> cx;
  std::size_t arity = 0;
  int q = 0;
  Vec<K> data;

  const CochainSpace<K>& space() const;
  const Algebra<K>& algebra() const;
  const Coefficients<K>& coefficients() const;
  int total_degree() const { return static_cast<int>(arity) + q; }
  bool is_zero() const { return is_zero_vec(data); }

  /// Value on a tuple of basis morphisms (on the object obj in arity 0).
  Vec<K> value(const std::vector<std::size_t>& t, std::size_t obj = 0) const;
  /// Multilinear value on algebra vectors.
  Vec<K> value_on(const std::vector<Vec<K>>& args, std::size_t obj = 0) const;

  Cochain operator+(const Cochain& o) const { return combine(o, zero_k().one()); }
  Cochain operator-(const Cochain& o) const { return combine(o, -zero_k().one()); }
  Cochain operator-() const { return scaled(-zero_k().one()); }
  Cochain scaled(const K& c) const {
    Cochain r = *this;
    for (auto& x : r.data) x *= c;
    return r;
  }
  bool operator==(const Cochain& o) const {
    return cx == o.cx && arity == o.arity && q == o.q && data == o.data;
  }

 private:
  K zero_k() const;
  Cochain combine(const Cochain& o, const K& c) const {
    if (cx != o.cx || arity != o.arity || q != o.q) throw HochschildError("cochains live in different spaces");
    Cochain r = *this;
    for (std::size_t i = 0; i < data.size(); ++i) r.data[i] += c * o.data[i];
    return r;
  }
};

/// H^{n,q}: boundaries and a basis of representatives of cohomology classes.
template <class K>
struct Cohomology {
  std::size_t n = 0;
  int q = 0;
  Matrix<K> boundaries;  // columns span B
  Matrix<K> reps;        // columns: one cocycle per basis class
  Matrix<K> cocycle_test;  // d, zero exactly on cocycles

  std::size_t dim() const { return reps.cols(); }
  Vec<K> rep(std::size_t i) const { return reps.col(i); }
  bool is_cocycle(const Vec<K>& v) const { return is_zero_vec(cocycle_test * v); }
  /// Class coordinates of a cocycle.
  Vec<K> coordinates(const Vec<K>& v) const {
    if (!is_cocycle(v)) throw HochschildError("coordinates: not a cocycle");
    auto x = solve_vec(boundaries.hstack(reps), v);
    if (!x) throw HochschildError("coordinates: inconsistent cohomology data");
    return Vec<K>(x->begin() + static_cast<long>(boundaries.cols()), x->end());
  }
  bool is_coboundary(const Vec<K>& v) const { return is_zero_vec(coordinates(v)); }
};

/// Cohomology at a spot of a cochain complex given by its two differentials.
template <class K>
Cohomology<K> cohomology_from(const Matrix<K>& into, const Matrix<K>& out, std::size_t n = 0, int q = 0) {
  Cohomology<K> h;
  h.n = n;
  h.q = q;
  const K z = out.zero();
  Subspace<K> b = Subspace<K>::column_span(into);
  h.boundaries = b.as_columns();
  if (h.boundaries.rows() != out.cols()) h.boundaries = Matrix<K>(out.cols(), 0, z);
  Subspace<K> zc = kernel_basis(out);
  Matrix<K> both = h.boundaries.hstack(zc.as_columns());
  auto piv = rref(both);
  std::vector<std::size_t> pick;
  for (auto p : piv)
    if (p >= h.boundaries.cols()) pick.push_back(p - h.boundaries.cols());
  h.reps = zc.as_columns().select_cols(pick);
  h.cocycle_test = out;
  return h;
}

template <class K>
class HochschildComplex : public std::enable_shared_from_this<HochschildComplex<K>> {
 public:
  static constexpr std::size_t tuple_limit = 1u << 20;

  static ComplexPtr<K> create(CoefficientsPtr<K> c) {
    return ComplexPtr<K>(new HochschildComplex(std::move(c)));
  }

  const Algebra<K>& algebra() const { return *coeff_->alg; }
  const AlgebraPtr<K>& algebra_ptr() const { return coeff_->alg; }
  const Coefficients<K>& coefficients() const { return *coeff_; }
  const CoefficientsPtr<K>& coefficients_ptr() const { return coeff_; }
  K zero() const { return coeff_->zero(); }

  int tuple_degree(const std::vector<std::size_t>& t) const {
    int s = 0;
    for (auto f : t) s += algebra().degree(f);
    return s;
  }
  /// X_i of a tuple: X_0 = left(f1), X_i = right(f_i); obj in arity 0.
  std::size_t object_at(const std::vector<std::size_t>& t, std::size_t i, std::size_t obj) const {
    if (t.empty()) return obj;
    return i == 0 ? algebra().left_vertex(t[0]) : algebra().right_vertex(t[i - 1]);
  }

  const CochainSpace<K>& space(std::size_t n, int q) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::pair{n, q};
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return *it->second;
    if (coeff_->window && (q < coeff_->window->first || q > coeff_->window->second))
      throw HochschildError("internal degree outside the coefficient window");
    auto s = std::make_unique<CochainSpace<K>>();
    build_space(*s, n, q);
    return *(spaces_[key] = std::move(s));
  }

  Cochain<K> zero_cochain(std::size_t n, int q) const {
    return {this->shared_from_this(), n, q, Vec<K>(space(n, q).dim, zero())};
  }
  Cochain<K> basis_cochain(std::size_t n, int q, std::size_t k) const {
    auto c = zero_cochain(n, q);
    c.data.at(k) = zero().one();
    return c;
  }
  Cochain<K> from_vector(std::size_t n, int q, Vec<K> v) const {
    if (v.size() != space(n, q).dim) throw HochschildError("from_vector: wrong length");
    return {this->shared_from_this(), n, q, std::move(v)};
  }
  template <class Rng>
  Cochain<K> random_cochain(std::size_t n, int q, Rng& rng) const {
    auto c = zero_cochain(n, q);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (auto& x : c.data) x = zero().from_int(dist(rng));
    return c;
  }
  /// Cochain with prescribed values; fn(tuple, obj) returns a vector of V,
  /// read off on the allowed block.
  Cochain<K> from_function(std::size_t n, int q,
                           const std::function<Vec<K>(const std::vector<std::size_t>&, std::size_t)>& fn) const {
    const auto& s = space(n, q);
    auto c = zero_cochain(n, q);
    for (std::size_t i = 0; i < s.tuples.size(); ++i) {
      Vec<K> v = fn(s.tuples[i], s.source[i]);
      for (std::size_t r = 0; r < s.block[i].size(); ++r) c.data[s.offset[i] + r] = v[s.block[i][r]];
    }
    return c;
  }

  /// Matrix of the unsigned differential d : HC^{n,q} -> HC^{n+1,q}.
  const Matrix<K>& d_matrix(std::size_t n, int q) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = dmat_.find({n, q});
      if (it != dmat_.end()) return *it->second;
    }
    auto m = std::make_unique<Matrix<K>>(build_d(n, q));
    std::lock_guard<std::mutex> lock(mu_);
    return *(dmat_[{n, q}] = std::move(m));
  }
  /// d' = (-1)^q d.
  Matrix<K> dprime_matrix(std::size_t n, int q) const { return d_matrix(n, q).scaled(sign_of(zero(), q)); }

  Cochain<K> d(const Cochain<K>& phi) const {
    check_own(phi);
    return from_vector(phi.arity + 1, phi.q, d_matrix(phi.arity, phi.q) * phi.data);
  }
  Cochain<K> dprime(const Cochain<K>& phi) const { return d(phi).scaled(sign_of(zero(), phi.q)); }

  const Cohomology<K>& cohomology(std::size_t n, int q) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = coh_.find({n, q});
      if (it != coh_.end()) return *it->second;
    }
    Matrix<K> into = n == 0 ? Matrix<K>(space(0, q).dim, 0, zero()) : dprime_matrix(n - 1, q);
    auto h = std::make_unique<Cohomology<K>>(cohomology_from(into, dprime_matrix(n, q), n, q));
    std::lock_guard<std::mutex> lock(mu_);
    return *(coh_[{n, q}] = std::move(h));
  }
  std::size_t hh_dim(std::size_t n, int q) const { return cohomology(n, q).dim(); }

  void check_own(const Cochain<K>& phi) const {
    if (phi.cx.get() != this) throw HochschildError("cochain belongs to another complex");
  }

 private:
  explicit HochschildComplex(CoefficientsPtr<K> c) : coeff_(std::move(c)) {}

  void build_space(CochainSpace<K>& s, std::size_t n, int q) const {
    const auto& A = algebra();
    const auto& V = *coeff_;
    s.arity = n;
    s.q = q;
    if (n == 0) {
      for (std::size_t x = 0; x < A.num_vertices(); ++x) {
        s.tuples.push_back({});
        s.source.push_back(x);
        s.target.push_back(x);
      }
    } else {
      std::vector<std::vector<std::size_t>> by_left(A.num_vertices());
      for (std::size_t b = 0; b < A.dim(); ++b) by_left[A.left_vertex(b)].push_back(b);
      std::vector<std::size_t> cur;
      std::function<void()> grow = [&]() {
        if (cur.size() == n) {
          if (s.tuples.size() >= tuple_limit) throw HochschildError("cochain space too large");
          s.tuples.push_back(cur);
          s.source.push_back(A.left_vertex(cur.front()));
          s.target.push_back(A.right_vertex(cur.back()));
          return;
        }
        const auto& next = cur.empty() ? std::vector<std::size_t>{} : by_left[A.right_vertex(cur.back())];
        if (cur.empty()) {
          for (std::size_t b = 0; b < A.dim(); ++b) {
            cur.push_back(b);
            grow();
            cur.pop_back();
          }
        } else {
          for (auto b : next) {
            cur.push_back(b);
            grow();
            cur.pop_back();
          }
        }
      };
      grow();
    }
    for (std::size_t i = 0; i < s.tuples.size(); ++i) {
      const int deg = tuple_degree(s.tuples[i]) + q;
      std::vector<std::size_t> blk;
      for (std::size_t v = 0; v < V.dim; ++v)
        if (V.degree[v] == deg && V.left_vertex[v] == s.source[i] && V.right_vertex[v] == s.target[i])
          blk.push_back(v);
      s.offset.push_back(s.dim);
      s.dim += blk.size();
      s.block.push_back(std::move(blk));
      s.index[s.tuples[i].empty() ? std::vector<std::size_t>{s.source[i]} : s.tuples[i]] = i;
    }
  }

  Matrix<K> build_d(std::size_t n, int q) const {
    const auto& A = algebra();
    const auto& V = *coeff_;
    const auto& src = space(n, q);
    const auto& dst = space(n + 1, q);
    const K one = zero().one();
    Matrix<K> m(dst.dim, src.dim, zero());
    // Adds c * A restricted to the blocks, where act(v, u) is the entry of A.
    auto add = [&](std::size_t T, const std::vector<std::size_t>& s, std::size_t obj, const K& c,
                   const std::function<K(std::size_t, std::size_t)>& act) {
      auto S = src.find(s, obj);
      if (!S) return;
      for (std::size_t k = 0; k < src.block[*S].size(); ++k)
        for (std::size_t r = 0; r < dst.block[T].size(); ++r) {
          K a = act(dst.block[T][r], src.block[*S][k]);
          if (!a.is_zero()) m(dst.offset[T] + r, src.offset[*S] + k) += c * a;
        }
    };
    auto ident = [&](std::size_t v, std::size_t u) { return v == u ? one : zero(); };
    for (std::size_t T = 0; T < dst.tuples.size(); ++T) {
      const auto& t = dst.tuples[T];
      const std::size_t f1 = t.front(), fl = t.back();
      std::vector<std::size_t> tail(t.begin() + 1, t.end()), head(t.begin(), t.end() - 1);
      add(T, tail, A.right_vertex(f1), sign_of(one, static_cast<long>(q) * A.degree(f1)),
          [&](std::size_t v, std::size_t u) { return V.left[f1](v, u); });
      for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& [k, c] : A.product(t[i - 1], t[i])) {
          std::vector<std::size_t> s;
          s.insert(s.end(), t.begin(), t.begin() + static_cast<long>(i - 1));
          s.push_back(k);
          s.insert(s.end(), t.begin() + static_cast<long>(i + 1), t.end());
          add(T, s, 0, sign_of(one, static_cast<long>(i)) * c, ident);
        }
      }
      add(T, head, A.left_vertex(f1), sign_of(one, static_cast<long>(n + 1)),
          [&](std::size_t v, std::size_t u) { return V.right[fl](v, u); });
    }
    return m;
  }

  CoefficientsPtr<K> coeff_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<CochainSpace<K>>> spaces_;
  mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<Matrix<K>>> dmat_;
  mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<Cohomology<K>>> coh_;
};

template <class K>
const CochainSpace<K>& Cochain<K>::space() const {
  return cx->space(arity, q);
}
template <class K>
const Algebra<K>& Cochain<K>::algebra() const {
  return cx->algebra();
}
template <class K>
const Coefficients<K>& Cochain<K>::coefficients() const {
  return cx->coefficients();
}
template <class K>
K Cochain<K>::zero_k() const {
  return cx->zero();
}

template <class K>
Vec<K> Cochain<K>::value(const std::vector<std::size_t>& t, std::size_t obj) const {
  const auto& s = space();
  Vec<K> r = coefficients().zero_vector();
  if (t.size() != arity) throw HochschildError("value: wrong number of arguments");
  auto i = s.find(t, obj);
  if (!i) return r;
  for (std::size_t k = 0; k < s.block[*i].size(); ++k) r[s.block[*i][k]] = data[s.offset[*i] + k];
  return r;
}

template <class K>
Vec<K> Cochain<K>::value_on(const std::vector<Vec<K>>& args, std::size_t obj) const {
  const auto& A = algebra();
  Vec<K> r = coefficients().zero_vector();
  if (args.size() != arity) throw HochschildError("value_on: wrong number of arguments");
  if (arity == 0) return value({}, obj);
  std::vector<std::size_t> t(arity);
  std::function<void(std::size_t, K)> walk = [&](std::size_t i, K c) {
    if (i == arity) {
      r = axpy(r, c, value(t, obj));
      return;
    }
    for (std::size_t b = 0; b < args[i].size(); ++b) {
      if (args[i][b].is_zero()) continue;
      if (i > 0 && A.right_vertex(t[i - 1]) != A.left_vertex(b)) continue;
      t[i] = b;
      walk(i + 1, c * args[i][b]);
    }
  };
  walk(0, zero_k().one());
  return r;
}

// ---------------------------------------------------------------------------
// Operations

namespace detail {

/// Cochain of cx in HC^{n,q} whose value on the i-th tuple is fn(i).
template <class K>
Cochain<K> fill(const ComplexPtr<K>& cx, std::size_t n, int q, const std::function<Vec<K>(std::size_t)>& fn) {
  const auto& s = cx->space(n, q);
  auto c = cx->zero_cochain(n, q);
  for (std::size_t i = 0; i < s.tuples.size(); ++i) {
    if (s.block[i].empty()) continue;
    Vec<K> v = fn(i);
    for (std::size_t r = 0; r < s.block[i].size(); ++r) c.data[s.offset[i] + r] = v[s.block[i][r]];
  }
  return c;
}

inline std::vector<std::size_t> slice(const std::vector<std::size_t>& t, std::size_t a, std::size_t b) {
  return {t.begin() + static_cast<long>(a), t.begin() + static_cast<long>(b)};
}

}  // namespace detail

/// (phi cup psi)(f1..f_{p+s}) = (-1)^{t(|f1|+..+|fp|)} phi(f1..fp) psi(f_{p+1}..).
template <class K>
Cochain<K> cup(const Cochain<K>& phi, const Cochain<K>& psi) {
  if (phi.cx != psi.cx) throw HochschildError("cup: cochains from different complexes");
  const auto& cx = phi.cx;
  const auto& V = cx->coefficients();
  const std::size_t p = phi.arity, n = phi.arity + psi.arity;
  const auto& s = cx->space(n, phi.q + psi.q);
  return detail::fill<K>(cx, n, phi.q + psi.q, [&](std::size_t i) {
    const auto& t = s.tuples[i];
    const std::size_t obj = s.source[i];
    Vec<K> a = phi.value(detail::slice(t, 0, p), obj);
    Vec<K> b = psi.value(detail::slice(t, p, n), cx->object_at(t, p, obj));
    Vec<K> r = V.product(a, b);
    const long e = static_cast<long>(psi.q) * cx->tuple_degree(detail::slice(t, 0, p));
    if (parity(e))
      for (auto& x : r) x = -x;
    return r;
  });
}

/// phi . psi = (-1)^{tp} phi cup psi.
template <class K>
Cochain<K> dot(const Cochain<K>& phi, const Cochain<K>& psi) {
  return cup(phi, psi).scaled(sign_of(phi.cx->zero(), static_cast<long>(psi.q) * static_cast<long>(phi.arity)));
}

/// Composition along a functor F : D -> C. phi is a cochain of C with
/// coefficients in C, psi one of D with coefficients in C(F, F):
/// (phi . psi)(g..) = sum_i (-1)^{(s-1)(p-i) + t(p-1+|g_1|+..+|g_{i-1}|)}
///   phi(Fg_1, .., Fg_{i-1}, psi(g_i, .., g_{i+s-1}), Fg_{i+s}, ..).
template <class K>
Cochain<K> bullet(const Cochain<K>& phi, const Cochain<K>& psi) {
  const auto& C = phi.coefficients();
  const auto& W = psi.coefficients();
  if (!C.is_regular()) throw HochschildError("bullet: first cochain needs regular coefficients");
  if (W.values != C.alg || !W.functor) throw HochschildError("bullet: second cochain must take values in the same algebra");
  const auto& F = *W.functor;
  const auto& cx = psi.cx;
  const std::size_t p = phi.arity, s = psi.arity;
  if (p == 0) return cx->zero_cochain(s == 0 ? 0 : s - 1, phi.q + psi.q);
  const std::size_t n = p + s - 1;
  const int t = psi.q;
  const auto& sp = cx->space(n, phi.q + psi.q);
  const K one = cx->zero().one();
  return detail::fill<K>(cx, n, phi.q + psi.q, [&](std::size_t idx) {
    const auto& g = sp.tuples[idx];
    const std::size_t obj = sp.source[idx];
    Vec<K> r = C.zero_vector();
    long before = 0;
    for (std::size_t i = 1; i <= p; ++i) {
      Vec<K> inner = psi.value(detail::slice(g, i - 1, i - 1 + s), cx->object_at(g, i - 1, obj));
      if (!is_zero_vec(inner)) {
        std::vector<Vec<K>> args;
        for (std::size_t j = 0; j + 1 < i; ++j) args.push_back(F.col(g[j]));
        args.push_back(inner);
        for (std::size_t j = i - 1 + s; j < n; ++j) args.push_back(F.col(g[j]));
        const long e = static_cast<long>(s - 1) * static_cast<long>(p - i) +
                       static_cast<long>(t) * (static_cast<long>(p) - 1 + before);
        r = axpy(r, sign_of(one, e), phi.value_on(args, cx->object_at(g, 0, obj)));
      }
      if (i - 1 < n) before += cx->algebra().degree(g[i - 1]);
    }
    return r;
  });
}

template <class K>
Cochain<K> pre_lie(const Cochain<K>& phi, const Cochain<K>& psi) {
  if (phi.cx != psi.cx) throw HochschildError("pre_lie: cochains from different complexes");
  return bullet(phi, psi);
}

/// [phi, psi] = phi . psi - (-1)^{(|phi|-1)(|psi|-1)} psi . phi.
template <class K>
Cochain<K> bracket(const Cochain<K>& phi, const Cochain<K>& psi) {
  const long e = static_cast<long>(phi.total_degree() - 1) * (psi.total_degree() - 1);
  return pre_lie(phi, psi) - pre_lie(psi, phi).scaled(sign_of(phi.cx->zero(), e));
}

template <class K>
bool sq_defined(const Cochain<K>& phi) {
  return parity(phi.total_degree()) == 0 || phi.cx->zero().characteristic() == 2;
}

template <class K>
Cochain<K> sq(const Cochain<K>& phi) {
  if (!sq_defined(phi)) throw HochschildError("Sq: needs even total degree or characteristic 2");
  return pre_lie(phi, phi);
}

/// The unit 0-cochain X -> 1_X of monoid coefficients.
template <class K>
Cochain<K> unit_cochain(const ComplexPtr<K>& cx) {
  const auto& V = cx->coefficients();
  if (!V.is_monoid()) throw HochschildError("unit_cochain: coefficients are not a monoid");
  const auto& s = cx->space(0, 0);
  return detail::fill<K>(cx, 0, 0, [&](std::size_t i) { return V.unit[s.source[i]]; });
}

namespace detail {
template <class K>
Cochain<K> weighted_identity(const ComplexPtr<K>& cx, const std::function<K(int)>& w) {
  const auto& V = cx->coefficients();
  if (!V.functor) throw HochschildError("coefficients do not contain the algebra");
  const auto& s = cx->space(1, 0);
  return fill<K>(cx, 1, 0, [&](std::size_t i) {
    const std::size_t f = s.tuples[i][0];
    Vec<K> v = V.functor->col(f);
    const K c = w(cx->algebra().degree(f));
    for (auto& x : v) x *= c;
    return v;
  });
}
}  // namespace detail

/// Euler derivation delta(f) = |f| f.
template <class K>
Cochain<K> euler(const ComplexPtr<K>& cx) {
  const K z = cx->zero();
  return detail::weighted_identity<K>(cx, [z](int d) { return z.from_int(d); });
}

/// beta(f) = |f|(1-|f|)/2 f, with d(beta) = delta . delta.
template <class K>
Cochain<K> beta(const ComplexPtr<K>& cx) {
  const K z = cx->zero();
  return detail::weighted_identity<K>(cx, [z](int d) { return z.from_int(static_cast<long>(d) * (1 - d) / 2); });
}

/// The product m2(f1, f2) = f1 f2.
template <class K>
Cochain<K> m2(const ComplexPtr<K>& cx) {
  const auto& V = cx->coefficients();
  if (!V.functor) throw HochschildError("m2: coefficients do not contain the algebra");
  const auto& s = cx->space(2, 0);
  const auto& C = *V.values;
  return detail::fill<K>(cx, 2, 0, [&](std::size_t i) {
    return C.multiply(V.functor->col(s.tuples[i][0]), V.functor->col(s.tuples[i][1]));
  });
}

/// F^*(phi)(g1..gn) = phi(F g1, .., F gn); target has coefficients V(F, F).
template <class K>
Cochain<K> pullback(const Cochain<K>& phi, const AlgebraMorphism<K>& f, const ComplexPtr<K>& target) {
  if (f.target != phi.cx->algebra_ptr() || f.source != target->algebra_ptr())
    throw HochschildError("pullback: functor does not match the complexes");
  if (target->coefficients().dim != phi.coefficients().dim) throw HochschildError("pullback: coefficient mismatch");
  auto om = object_map(f);
  const auto& s = target->space(phi.arity, phi.q);
  return detail::fill<K>(target, phi.arity, phi.q, [&](std::size_t i) {
    std::vector<Vec<K>> args;
    for (auto g : s.tuples[i]) args.push_back(f.image(g));
    return phi.value_on(args, om[s.source[i]]);
  });
}

/// tau_*(phi) = tau o phi for a map of coefficients tau : V -> W of degree deg.
template <class K>
Cochain<K> pushforward(const Cochain<K>& phi, const Matrix<K>& tau, int deg, const ComplexPtr<K>& target) {
  if (target->algebra_ptr() != phi.cx->algebra_ptr()) throw HochschildError("pushforward: different algebras");
  const auto& s = target->space(phi.arity, phi.q + deg);
  return detail::fill<K>(target, phi.arity, phi.q + deg,
                         [&](std::size_t i) { return tau * phi.value(s.tuples[i], s.source[i]); });
}

/// Matrix of a linear operator between cochain spaces, column by column.
template <class K>
Matrix<K> operator_matrix(const ComplexPtr<K>& src, std::size_t n, int q, std::size_t rows,
                          const std::function<Vec<K>(const Cochain<K>&)>& op) {
  const std::size_t cols = src->space(n, q).dim;
  Matrix<K> m(rows, cols, src->zero());
  for (std::size_t k = 0; k < cols; ++k) m.set_col(k, op(src->basis_cochain(n, q, k)));
  return m;
}

/// Whether phi is a cocycle (for d').
template <class K>
bool is_cocycle(const Cochain<K>& phi) {
  return phi.cx->d(phi).is_zero();
}

/// Class coordinates of a cocycle in the chosen cohomology basis.
template <class K>
Vec<K> class_of(const Cochain<K>& phi) {
  return phi.cx->cohomology(phi.arity, phi.q).coordinates(phi.data);
}

// ---------------------------------------------------------------------------
// Resolutions and syzygy maps

/// The degree-q part of the coefficients as a bimodule over ctx, together
/// with the index in V of its first basis vector.
template <class K>
std::pair<Module<K>, std::size_t> component_module(const Coefficients<K>& c, int q, ContextPtr<K> ctx) {
  if (!ctx->is_bimodule() || ctx->algebra_ptr() != c.alg) throw HochschildError("component_module: context mismatch");
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < c.dim; ++v)
    if (c.degree[v] == q) idx.push_back(v);
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] != idx[0] + i) throw HochschildError("component_module: component is not contiguous");
  const std::size_t off = idx.empty() ? 0 : idx[0];
  const std::size_t n = idx.size();
  std::vector<Matrix<K>> act;
  for (auto g : c.alg->generators()) act.push_back(c.left[g].block(off, off, n, n));
  for (auto g : c.alg->generators()) act.push_back(c.right[g].block(off, off, n, n));
  return {Module<K>(ctx, n, std::move(act)), off};
}

/// The bar resolution B_k = sum over composable k-tuples t of
/// Lambda e_{X_0} (x) e_{X_k} Lambda, with generator [t].
template <class K>
struct BarResolution {
  ContextPtr<K> ctx;
  std::vector<Projective<K>> B;
  std::vector<std::vector<std::vector<std::size_t>>> tuples;
  std::vector<std::unordered_map<std::vector<std::size_t>, std::size_t, detail::TupleHash>> index;
  std::vector<Matrix<K>> d;  // d[k] : B_{k+1} -> B_k
  Matrix<K> augmentation;    // B_0 -> Lambda

  std::size_t length() const { return B.size() - 1; }
};

template <class K>
BarResolution<K> bar_resolution(ContextPtr<K> ctx, std::size_t n) {
  const auto& A = ctx->algebra();
  const std::size_t m = A.num_vertices();
  auto cx = HochschildComplex<K>::create(regular_coefficients(ctx->algebra_ptr()));
  BarResolution<K> r;
  r.ctx = ctx;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& s = cx->space(k, 0);
    std::vector<std::size_t> vs;
    r.tuples.push_back({});
    r.index.push_back({});
    for (std::size_t i = 0; i < s.tuples.size(); ++i) {
      vs.push_back(s.source[i] * m + s.target[i]);
      r.index.back()[k == 0 ? std::vector<std::size_t>{s.source[i]} : s.tuples[i]] = i;
      r.tuples.back().push_back(k == 0 ? std::vector<std::size_t>{s.source[i]} : s.tuples[i]);
    }
    r.B.push_back(projective_sum(ctx, vs));
  }
  Module<K> reg = regular_bimodule(ctx);
  std::vector<Vec<K>> aug;
  for (const auto& t : r.tuples[0]) aug.push_back(A.idempotent(t[0]));
  r.augmentation = r.B[0].map_to(reg, aug);
  const K one = A.zero().one();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& P = r.B[k - 1];
    auto gen = [&](const std::vector<std::size_t>& t) { return P.generator(r.index[k - 1].at(t)); };
    std::vector<Vec<K>> imgs;
    for (const auto& t : r.tuples[k]) {
      std::vector<std::size_t> tail(t.begin() + 1, t.end()), head(t.begin(), t.end() - 1);
      if (k == 1) {
        tail = {A.right_vertex(t[0])};
        head = {A.left_vertex(t[0])};
      }
      Vec<K> v = act_left(P.module, A.basis_vector(t.front()), gen(tail));
      for (std::size_t i = 1; i < k; ++i)
        for (const auto& [b, c] : A.product(t[i - 1], t[i])) {
          std::vector<std::size_t> u(t.begin(), t.begin() + static_cast<long>(i - 1));
          u.push_back(b);
          u.insert(u.end(), t.begin() + static_cast<long>(i + 1), t.end());
          v = axpy(v, sign_of(one, static_cast<long>(i)) * c, gen(u));
        }
      v = axpy(v, sign_of(one, static_cast<long>(k)), act_right(P.module, gen(head), A.basis_vector(t.back())));
      imgs.push_back(std::move(v));
    }
    r.d.push_back(r.B[k].map_to(P.module, imgs));
  }
  return r;
}

/// Chain map c_k : P_k -> B_k from a minimal resolution of Lambda to the bar
/// resolution, over the identity of Lambda.
template <class K>
std::vector<Matrix<K>> comparison_maps(const Resolution<K>& res, const BarResolution<K>& bar, std::size_t n) {
  std::vector<Matrix<K>> c;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<K> alpha = k == 0 ? res.covers.at(0).pi : c[k - 1] * res.differentials.at(k - 1);
    const Matrix<K>& beta = k == 0 ? bar.augmentation : bar.d.at(k - 1);
    auto l = lift_through(res.P(k), alpha, bar.B.at(k).module, beta);
    if (!l) throw HochschildError("comparison_maps: lift failed");
    c.push_back(std::move(*l));
  }
  return c;
}

/// Hochschild cohomology dimensions from Hom(P_*, M) for a minimal
/// resolution with covers P_0 .. P_{nmax+1}.
template <class K>
std::vector<std::size_t> resolution_hh_dims(const Resolution<K>& res, const Module<K>& m, std::size_t nmax) {
  if (res.covers.size() < nmax + 2) throw HochschildError("resolution_hh_dims: resolution too short");
  auto parts = [&](const Projective<K>& P) {
    std::vector<Subspace<K>> s;
    for (auto v : P.vertices) s.push_back(m.vertex_part(v));
    return s;
  };
  auto hom_dim = [](const std::vector<Subspace<K>>& s) {
    std::size_t n = 0;
    for (const auto& x : s) n += x.dim();
    return n;
  };
  std::vector<Matrix<K>> delta;
  for (std::size_t k = 0; k <= nmax; ++k) {
    const auto& P = res.P(k);
    const auto& Q = res.P(k + 1);
    auto sp = parts(P), sq = parts(Q);
    Matrix<K> D(hom_dim(sq), hom_dim(sp), m.zero());
    std::size_t col = 0;
    for (std::size_t i = 0; i < P.num_summands(); ++i) {
      Matrix<K> di = res.differentials[k].block(P.offsets[i], 0, P.sizes[i], Q.module.dim);
      for (std::size_t u = 0; u < sp[i].dim(); ++u, ++col) {
        Matrix<K> f = P.summand_map(m, i, sp[i].vector(u)) * di;
        std::size_t row = 0;
        for (std::size_t j = 0; j < Q.num_summands(); ++j) {
          auto c = sq[j].pivot_coordinates(f.col(Q.tops[j]));
          for (std::size_t a = 0; a < c.size(); ++a) D(row + a, col) = c[a];
          row += sq[j].dim();
        }
      }
    }
    delta.push_back(std::move(D));
  }
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= nmax; ++k) {
    const std::size_t z = delta[k].cols() - rank(delta[k]);
    const std::size_t b = k == 0 ? 0 : rank(delta[k - 1]);
    dims.push_back(z - b);
  }
  return dims;
}

/// The map Omega^n(Lambda) -> M representing the class of a cocycle phi of
/// HC^{n,q}, where M is the degree-q component of the coefficients. Needs a
/// minimal resolution with covers P_0 .. P_n.
template <class K>
Matrix<K> class_to_syzygy_map(const Cochain<K>& phi, const Resolution<K>& res, const Module<K>& m, std::size_t offset) {
  const std::size_t n = phi.arity;
  if (n == 0) throw HochschildError("class_to_syzygy_map: n > 0 required");
  if (res.covers.size() < n + 1) throw HochschildError("class_to_syzygy_map: resolution too short");
  if (!is_cocycle(phi)) throw HochschildError("class_to_syzygy_map: not a cocycle");
  auto bar = bar_resolution(res.omega(0).ctx, n);
  auto c = comparison_maps(res, bar, n);
  std::vector<Vec<K>> imgs;
  for (const auto& t : bar.tuples[n]) {
    Vec<K> v = phi.value(t);
    imgs.emplace_back(v.begin() + static_cast<long>(offset), v.begin() + static_cast<long>(offset + m.dim));
  }
  Matrix<K> Phi = bar.B[n].map_to(m, imgs);
  const auto& pi = res.covers[n].pi;
  auto section = solve(pi, Matrix<K>::identity(pi.rows(), m.zero()));
  if (!section) throw HochschildError("class_to_syzygy_map: cover is not onto");
  return Phi * c[n] * *section;
}

/// Whether the class of phi in HC^{n,q}(Lambda, V) is an edge unit: its
/// syzygy map Omega^n(Lambda) -> V^q is a stable isomorphism.
template <class K>
bool is_edge_unit(const Cochain<K>& phi, const Resolution<K>& res) {
  if (phi.cx->cohomology(phi.arity, phi.q).is_coboundary(phi.data)) return false;
  auto [m, off] = component_module(phi.coefficients(), phi.q, res.omega(0).ctx);
  Matrix<K> f = class_to_syzygy_map(phi, res, m, off);
  return is_stable_isomorphism(res.omega(phi.arity), m, f);
}

}  // namespace fincat
