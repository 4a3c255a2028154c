#pragma once

// Finite-dimensional algebras given by structure constants, built either
// directly or from a quiver with relations.
//
// Path convention: a path is written left to right in the order its arrows are
// traversed, so for arrows a: i -> j and b: j -> k the product a*b is the path
// i -> k, and a lies in e_i A e_j. Every basis element b satisfies
// e_{left(b)} b e_{right(b)} = b.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fincat/matrix.hpp"

namespace fincat {

template <class K>
using Sparse = std::vector<std::pair<std::size_t, K>>;

struct AlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class K>
class Algebra {
 public:
  /// Algebra from a full structure-constant table: products[i][j] is the
  /// coordinate vector of b_i b_j. Single object, unit as given.
  static Algebra from_structure_constants(std::vector<std::string> labels,
                                          const std::vector<std::vector<Vec<K>>>& products,
                                          Vec<K> unit, const K& zero) {
    Algebra a;
    a.zero_ = zero.zero();
    a.dim_ = labels.size();
    a.labels_ = std::move(labels);
    const std::size_t d = a.dim_;
    if (products.size() != d || unit.size() != d) throw AlgebraError("structure constants: shape mismatch");
    a.prod_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i) {
      if (products[i].size() != d) throw AlgebraError("structure constants: shape mismatch");
      for (std::size_t j = 0; j < d; ++j) {
        if (products[i][j].size() != d) throw AlgebraError("structure constants: shape mismatch");
        for (std::size_t k = 0; k < d; ++k)
          if (!products[i][j][k].is_zero()) a.prod_[i * d + j].emplace_back(k, products[i][j][k]);
      }
    }
    a.unit_ = std::move(unit);
    a.init_single_object();
    if (!a.check_unit()) throw AlgebraError("structure constants: unit law fails");
    return a;
  }

  std::size_t dim() const { return dim_; }
  const K& zero() const { return zero_; }
  K one_scalar() const { return zero_.one(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  const Sparse<K>& product(std::size_t i, std::size_t j) const { return prod_[i * dim_ + j]; }
  const Vec<K>& unit() const { return unit_; }
  Vec<K> basis_vector(std::size_t i) const {
    Vec<K> v(dim_, zero_);
    v[i] = zero_.one();
    return v;
  }
  Vec<K> zero_vector() const { return Vec<K>(dim_, zero_); }

  Vec<K> multiply(const Vec<K>& a, const Vec<K>& b) const {
    Vec<K> r(dim_, zero_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        const K c = a[i] * b[j];
        for (const auto& [k, v] : product(i, j)) r[k] += c * v;
      }
    }
    return r;
  }
  /// Matrix of x -> a x.
  Matrix<K> left_mult(const Vec<K>& a) const {
    Matrix<K> m(dim_, dim_, zero_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, v] : product(i, j)) m(k, j) += a[i] * v;
    }
    return m;
  }
  /// Matrix of x -> x a.
  Matrix<K> right_mult(const Vec<K>& a) const {
    Matrix<K> m(dim_, dim_, zero_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (a[j].is_zero()) continue;
      for (std::size_t i = 0; i < dim_; ++i)
        for (const auto& [k, v] : product(i, j)) m(k, i) += a[j] * v;
    }
    return m;
  }

  // Objects (vertices) and their idempotents.
  std::size_t num_vertices() const { return idempotents_.size(); }
  const Vec<K>& idempotent(std::size_t v) const { return idempotents_[v]; }
  /// Basis index of e_v when the idempotent is itself a basis element.
  std::optional<std::size_t> idempotent_index(std::size_t v) const {
    if (idempotent_index_.empty()) return std::nullopt;
    return idempotent_index_[v];
  }
  bool idempotents_are_basis() const { return !idempotent_index_.empty(); }
  std::size_t left_vertex(std::size_t i) const { return left_vertex_[i]; }
  std::size_t right_vertex(std::size_t i) const { return right_vertex_[i]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  // Generators: basis elements generating the algebra, with each basis
  // element expressed as a word (product, in order) of generators.
  const std::vector<std::size_t>& generators() const { return gens_; }
  bool generator_in_radical(std::size_t g) const { return gen_radical_[g]; }
  const std::vector<std::size_t>& word(std::size_t i) const { return words_[i]; }

  bool has_radical() const { return radical_.has_value(); }
  const std::vector<std::size_t>& radical_indices() const {
    if (!radical_) throw AlgebraError("algebra has no declared radical");
    return *radical_;
  }
  bool is_quiver_presented() const { return quiver_; }

  bool is_graded() const { return degrees_.has_value(); }
  int degree(std::size_t i) const { return degrees_ ? (*degrees_)[i] : 0; }

  /// Declares a radical (list of basis indices spanning an ideal) for algebras
  /// given by structure constants. Required by module theory.
  Algebra with_radical(std::vector<std::size_t> rad) const {
    Algebra a = *this;
    a.radical_ = std::move(rad);
    for (std::size_t g = 0; g < a.gens_.size(); ++g)
      a.gen_radical_[g] = std::find(a.radical_->begin(), a.radical_->end(), a.gens_[g]) != a.radical_->end();
    return a;
  }
  /// Declares a grading by basis degrees (checked to be multiplicative).
  Algebra with_degrees(std::vector<int> deg) const {
    Algebra a = *this;
    if (deg.size() != dim_) throw AlgebraError("with_degrees: wrong length");
    a.degrees_ = std::move(deg);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, v] : a.product(i, j))
          if ((*a.degrees_)[k] != (*a.degrees_)[i] + (*a.degrees_)[j])
            throw AlgebraError("with_degrees: grading not multiplicative");
    return a;
  }
  /// Declares orthogonal vertex idempotents (basis indices) with every basis
  /// element homogeneous with respect to them.
  Algebra with_vertex_idempotents(const std::vector<std::size_t>& idx) const {
    Algebra a = *this;
    a.idempotent_index_ = idx;
    a.idempotents_.clear();
    for (auto i : idx) a.idempotents_.push_back(basis_vector(i));
    a.vertex_names_.clear();
    for (std::size_t v = 0; v < idx.size(); ++v) a.vertex_names_.push_back(std::to_string(v));
    for (std::size_t b = 0; b < dim_; ++b) {
      bool found_l = false, found_r = false;
      for (std::size_t v = 0; v < idx.size(); ++v) {
        if (a.multiply(a.idempotents_[v], basis_vector(b)) == basis_vector(b)) {
          a.left_vertex_[b] = v;
          found_l = true;
        }
        if (a.multiply(basis_vector(b), a.idempotents_[v]) == basis_vector(b)) {
          a.right_vertex_[b] = v;
          found_r = true;
        }
      }
      if (!found_l || !found_r) throw AlgebraError("with_vertex_idempotents: basis not homogeneous");
    }
    return a;
  }

  bool check_unit() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      auto b = basis_vector(i);
      if (multiply(unit_, b) != b || multiply(b, unit_) != b) return false;
    }
    return true;
  }
  bool check_associative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Vec<K> ij(dim_, zero_);
        for (const auto& [k, v] : product(i, j)) ij[k] += v;
        for (std::size_t l = 0; l < dim_; ++l) {
          Vec<K> jl(dim_, zero_);
          for (const auto& [k, v] : product(j, l)) jl[k] += v;
          if (multiply(ij, basis_vector(l)) != multiply(basis_vector(i), jl)) return false;
        }
      }
    return true;
  }

 private:
  template <class>
  friend class AlgebraBuilder;
  template <class T>
  friend Algebra<T> enveloping_algebra(const Algebra<T>&);

  void init_single_object() {
    idempotents_ = {unit_};
    vertex_names_ = {"0"};
    left_vertex_.assign(dim_, 0);
    right_vertex_.assign(dim_, 0);
    idempotent_index_.clear();
    for (std::size_t i = 0; i < dim_; ++i)
      if (unit_ == basis_vector(i)) idempotent_index_ = {i};
    gens_.resize(dim_);
    std::iota(gens_.begin(), gens_.end(), 0);
    gen_radical_.assign(dim_, false);
    words_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) words_[i] = {i};
  }

  K zero_{};
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Sparse<K>> prod_;
  Vec<K> unit_;
  std::vector<Vec<K>> idempotents_;
  std::vector<std::string> vertex_names_;
  std::vector<std::size_t> idempotent_index_;
  std::vector<std::size_t> left_vertex_, right_vertex_;
  std::vector<std::size_t> gens_;
  std::vector<bool> gen_radical_;
  std::vector<std::vector<std::size_t>> words_;
  std::optional<std::vector<std::size_t>> radical_;
  std::optional<std::vector<int>> degrees_;
  bool quiver_ = false;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

// ---------------------------------------------------------------------------
// Quiver presentations

struct Arrow {
  std::string name;
  std::size_t source = 0, target = 0;
  int degree = 0;
};

template <class K>
struct PathTerm {
  K coeff;
  std::vector<std::size_t> arrows;  // arrow indices in traversal order
};

template <class K>
using Relation = std::vector<PathTerm<K>>;

template <class K>
struct QuiverPresentation {
  K field;  // any element of the ground field (carries the modulus)
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation<K>> relations;
  std::size_t bound = 0;  // maximal length of a nonzero path
  bool graded = false;    // use arrow degrees
};

template <class K>
class AlgebraBuilder {
 public:
  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };

  explicit AlgebraBuilder(const QuiverPresentation<K>& p) : p_(p) {}

  Algebra<K> build() {
    validate();
    enumerate_paths();
    reduce();
    return assemble();
  }

 private:
  void validate() {
    const std::size_t nv = p_.vertices.size();
    if (nv == 0) throw AlgebraError("presentation has no vertices");
    for (const auto& a : p_.arrows)
      if (a.source >= nv || a.target >= nv) throw AlgebraError("arrow '" + a.name + "' has an unknown endpoint");
    for (std::size_t r = 0; r < p_.relations.size(); ++r) {
      const auto& rel = p_.relations[r];
      if (rel.empty()) throw AlgebraError("relation " + std::to_string(r) + " is empty");
      std::optional<std::pair<std::size_t, std::size_t>> ends;
      std::optional<int> deg;
      for (const auto& t : rel) {
        if (t.arrows.size() < 2)
          throw AlgebraError("relation " + std::to_string(r) + " is not admissible: every term must have length >= 2");
        if (t.arrows.size() > p_.bound + 1)
          throw AlgebraError("relation " + std::to_string(r) + " is longer than bound + 1");
        for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
          if (p_.arrows.at(t.arrows[k]).target != p_.arrows.at(t.arrows[k + 1]).source)
            throw AlgebraError("relation " + std::to_string(r) + " contains a non-composable path");
        std::pair<std::size_t, std::size_t> e{p_.arrows[t.arrows.front()].source, p_.arrows[t.arrows.back()].target};
        if (ends && *ends != e) throw AlgebraError("relation " + std::to_string(r) + " has inconsistent endpoints");
        ends = e;
        int dg = 0;
        for (auto a : t.arrows) dg += p_.arrows[a].degree;
        if (p_.graded && deg && *deg != dg) throw AlgebraError("relation " + std::to_string(r) + " is not homogeneous");
        deg = dg;
      }
    }
  }

  void enumerate_paths() {
    const std::size_t L = p_.bound + 1;
    for (std::size_t v = 0; v < p_.vertices.size(); ++v) add_path({v, v, {}});
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= L; ++len) {
      std::size_t end = paths_.size();
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t a = 0; a < p_.arrows.size(); ++a)
          if (p_.arrows[a].source == paths_[i].target) {
            Path q = paths_[i];
            q.arrows.push_back(a);
            q.target = p_.arrows[a].target;
            add_path(std::move(q));
          }
      begin = end;
    }
    // Enumeration is by length, then lexicographic in arrow indices within
    // each length because arrows are appended in index order... only for a
    // fixed prefix; sort to make the order canonical.
    std::vector<std::size_t> order(paths_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = paths_[x];
      const auto& b = paths_[y];
      if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
      if (a.arrows.empty()) return a.source < b.source;
      return a.arrows < b.arrows;
    });
    std::vector<Path> sorted;
    for (auto i : order) sorted.push_back(paths_[i]);
    paths_ = std::move(sorted);
    index_.clear();
    for (std::size_t i = 0; i < paths_.size(); ++i) index_[key(paths_[i])] = i;
  }

  void add_path(Path p) {
    index_[key(p)] = paths_.size();
    paths_.push_back(std::move(p));
  }
  static std::pair<std::size_t, std::vector<std::size_t>> key(const Path& p) {
    return {p.arrows.empty() ? p.source : std::size_t(-1), p.arrows};
  }
  std::optional<std::size_t> find(const Path& p) const {
    auto it = index_.find(key(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Path concat(const Path& a, const Path& b) const {
    Path r{a.source, b.target, a.arrows};
    r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
    return r;
  }

  void reduce() {
    const std::size_t L = p_.bound + 1;
    const std::size_t P = paths_.size();
    std::vector<Vec<K>> rows;
    for (const auto& rel : p_.relations) {
      std::size_t s = p_.arrows[rel[0].arrows.front()].source;
      std::size_t t = p_.arrows[rel[0].arrows.back()].target;
      std::size_t minlen = L;
      for (const auto& term : rel) minlen = std::min(minlen, term.arrows.size());
      for (const auto& u : paths_) {
        if (u.target != s || u.arrows.size() + minlen > L) continue;
        for (const auto& v : paths_) {
          if (v.source != t || u.arrows.size() + minlen + v.arrows.size() > L) continue;
          Vec<K> row(P, p_.field.zero());
          bool nz = false;
          for (const auto& term : rel) {
            Path mid{s, t, term.arrows};
            Path w = concat(concat(u, mid), v);
            if (w.arrows.size() > L) continue;
            row[P - 1 - *find(w)] += term.coeff;
            nz = true;
          }
          if (nz && !is_zero_vec(row)) rows.push_back(std::move(row));
        }
      }
    }
    Matrix<K> m = Matrix<K>::from_rows(rows, P, p_.field.zero());
    auto piv = rref(m);
    // Column c corresponds to path P-1-c: larger paths are eliminated first.
    pivot_row_.assign(P, std::size_t(-1));
    for (std::size_t r = 0; r < piv.size(); ++r) pivot_row_[P - 1 - piv[r]] = r;
    reduced_ = std::move(m);
    for (std::size_t i = 0; i < P; ++i)
      if (pivot_row_[i] == std::size_t(-1)) {
        if (paths_[i].arrows.size() == L)
          throw AlgebraError("presentation is not nilpotent within the bound: path " + path_label(paths_[i]) +
                             " of length bound+1 survives");
        basis_of_path_[i] = basis_paths_.size();
        basis_paths_.push_back(i);
      }
    for (std::size_t i = 0; i < P; ++i)
      if (paths_[i].arrows.size() == L && !normal_form(i).empty())
        throw AlgebraError("presentation is not nilpotent within the bound: path " + path_label(paths_[i]) +
                           " of length bound+1 is not in the ideal");
  }

  Sparse<K> normal_form(std::size_t path) const {
    if (pivot_row_[path] == std::size_t(-1)) return {{basis_of_path_.at(path), p_.field.one()}};
    const std::size_t P = paths_.size();
    Sparse<K> r;
    auto row = reduced_.row(pivot_row_[path]);
    for (std::size_t c = 0; c < P; ++c) {
      std::size_t q = P - 1 - c;
      if (q == path || row[c].is_zero()) continue;
      r.emplace_back(basis_of_path_.at(q), -row[c]);
    }
    return r;
  }

  std::string path_label(const Path& p) const {
    if (p.arrows.empty()) return "e_" + p_.vertices[p.source];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) s += (k ? "*" : "") + p_.arrows[p.arrows[k]].name;
    return s;
  }

  Algebra<K> assemble() {
    Algebra<K> a;
    const K zero = p_.field.zero();
    a.zero_ = zero;
    a.quiver_ = true;
    const std::size_t d = basis_paths_.size();
    a.dim_ = d;
    const std::size_t L = p_.bound + 1;
    a.prod_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i) {
      const Path& pi = paths_[basis_paths_[i]];
      a.labels_.push_back(path_label(pi));
      for (std::size_t j = 0; j < d; ++j) {
        const Path& pj = paths_[basis_paths_[j]];
        if (pi.target != pj.source) continue;
        if (pi.arrows.size() + pj.arrows.size() > L) continue;
        a.prod_[i * d + j] = normal_form(*find(concat(pi, pj)));
      }
    }
    const std::size_t nv = p_.vertices.size();
    a.vertex_names_ = p_.vertices;
    a.unit_.assign(d, zero);
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t idx = basis_of_path_.at(*find(Path{v, v, {}}));
      a.idempotent_index_.push_back(idx);
      a.idempotents_.push_back(a.basis_vector(idx));
      a.unit_[idx] = zero.one();
    }
    a.left_vertex_.resize(d);
    a.right_vertex_.resize(d);
    std::vector<std::size_t> rad;
    std::vector<int> deg(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      const Path& pi = paths_[basis_paths_[i]];
      a.left_vertex_[i] = pi.source;
      a.right_vertex_[i] = pi.target;
      if (!pi.arrows.empty()) rad.push_back(i);
      for (auto ar : pi.arrows) deg[i] += p_.arrows[ar].degree;
    }
    a.radical_ = rad;
    if (p_.graded) a.degrees_ = deg;
    // Generators: vertex idempotents followed by arrows.
    std::vector<std::size_t> gen_of_arrow(p_.arrows.size());
    for (std::size_t v = 0; v < nv; ++v) {
      a.gens_.push_back(a.idempotent_index_[v]);
      a.gen_radical_.push_back(false);
    }
    for (std::size_t ar = 0; ar < p_.arrows.size(); ++ar) {
      auto pi = find(Path{p_.arrows[ar].source, p_.arrows[ar].target, {ar}});
      auto idx = basis_of_path_.find(*pi);
      if (idx == basis_of_path_.end()) throw AlgebraError("arrow " + p_.arrows[ar].name + " vanishes");
      gen_of_arrow[ar] = a.gens_.size();
      a.gens_.push_back(idx->second);
      a.gen_radical_.push_back(true);
    }
    a.words_.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      const Path& pi = paths_[basis_paths_[i]];
      if (pi.arrows.empty())
        a.words_[i] = {pi.source};
      else
        for (auto ar : pi.arrows) a.words_[i].push_back(gen_of_arrow[ar]);
    }
    return a;
  }

  const QuiverPresentation<K>& p_;
  std::vector<Path> paths_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
  Matrix<K> reduced_;
  std::vector<std::size_t> pivot_row_;
  std::map<std::size_t, std::size_t> basis_of_path_;
  std::vector<std::size_t> basis_paths_;
};

/// Quotient of the path algebra by the ideal generated by the relations,
/// truncated at the bound. Rejects presentations where some path of length
/// bound+1 survives.
template <class K>
Algebra<K> build_algebra(const QuiverPresentation<K>& p) {
  return AlgebraBuilder<K>(p).build();
}

/// Lambda^e = Lambda (x) Lambda^op with (a(x)b)(a'(x)b') = aa' (x) b'b; basis
/// element (i, j) sits at index i*d + j.
template <class K>
Algebra<K> enveloping_algebra(const Algebra<K>& a) {
  const std::size_t d = a.dim();
  Algebra<K> e;
  e.zero_ = a.zero();
  e.dim_ = d * d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e.labels_.push_back(a.label(i) + "|" + a.label(j));
  e.prod_.assign(d * d * d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& ik = a.product(i, k);
        if (ik.empty()) continue;
        for (std::size_t l = 0; l < d; ++l) {
          const auto& lj = a.product(l, j);
          if (lj.empty()) continue;
          auto& out = e.prod_[(i * d + j) * d * d + (k * d + l)];
          for (const auto& [x, u] : ik)
            for (const auto& [y, v] : lj) out.emplace_back(x * d + y, u * v);
        }
      }
  e.unit_.assign(d * d, a.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e.unit_[i * d + j] = a.unit()[i] * a.unit()[j];
  const std::size_t m = a.num_vertices();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t u = 0; u < m; ++u) {
      Vec<K> v(d * d, a.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v[i * d + j] = a.idempotent(x)[i] * a.idempotent(u)[j];
      e.idempotents_.push_back(std::move(v));
      e.vertex_names_.push_back(a.vertex_names()[x] + "|" + a.vertex_names()[u]);
      if (a.idempotents_are_basis()) e.idempotent_index_.push_back(*a.idempotent_index(x) * d + *a.idempotent_index(u));
    }
  e.left_vertex_.resize(d * d);
  e.right_vertex_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      e.left_vertex_[i * d + j] = a.left_vertex(i) * m + a.right_vertex(j);
      e.right_vertex_[i * d + j] = a.right_vertex(i) * m + a.left_vertex(j);
    }
  e.gens_.resize(d * d);
  std::iota(e.gens_.begin(), e.gens_.end(), 0);
  e.words_.resize(d * d);
  for (std::size_t i = 0; i < d * d; ++i) e.words_[i] = {i};
  e.gen_radical_.assign(d * d, false);
  if (a.has_radical()) {
    std::vector<bool> in_rad(d, false);
    for (auto r : a.radical_indices()) in_rad[r] = true;
    std::vector<std::size_t> rad;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (in_rad[i] || in_rad[j]) {
          rad.push_back(i * d + j);
          e.gen_radical_[i * d + j] = true;
        }
    e.radical_ = rad;
  }
  if (a.is_graded()) {
    std::vector<int> deg(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) deg[i * d + j] = a.degree(i) + a.degree(j);
    e.degrees_ = deg;
  }
  return e;
}

/// Span of the arrow ideal (paths of length >= 1) or the declared radical.
template <class K>
Subspace<K> radical_basis(const Algebra<K>& a) {
  if (!a.has_radical()) throw AlgebraError("radical_basis: algebra has no declared radical (unsupported)");
  std::vector<Vec<K>> vs;
  for (auto i : a.radical_indices()) vs.push_back(a.basis_vector(i));
  return Subspace<K>::span(vs, a.dim(), a.zero());
}

template <class K>
Subspace<K> center_basis(const Algebra<K>& a) {
  const std::size_t d = a.dim();
  Matrix<K> eqs(d * d, d, a.zero());
  for (std::size_t i = 0; i < d; ++i) {
    auto b = a.basis_vector(i);
    eqs.set_block(i * d, 0, a.right_mult(b) - a.left_mult(b));
  }
  return kernel_basis(eqs);
}

// ---------------------------------------------------------------------------
// Morphisms

template <class K>
struct AlgebraMorphism {
  AlgebraPtr<K> source, target;
  Matrix<K> matrix;  // target.dim x source.dim; column i is the image of b_i

  Vec<K> operator()(const Vec<K>& x) const { return matrix * x; }
  Vec<K> image(std::size_t i) const { return matrix.col(i); }

  static AlgebraMorphism identity(AlgebraPtr<K> a) {
    return {a, a, Matrix<K>::identity(a->dim(), a->zero())};
  }
  /// this after other
  AlgebraMorphism compose(const AlgebraMorphism& other) const {
    if (other.target->dim() != source->dim()) throw AlgebraError("compose: shape mismatch");
    return {other.source, target, matrix * other.matrix};
  }
  std::optional<AlgebraMorphism> inverse() const {
    auto inv = fincat::inverse(matrix);
    if (!inv) return std::nullopt;
    return AlgebraMorphism{target, source, *inv};
  }
  AlgebraMorphism power(int n) const {
    if (n < 0) {
      auto inv = inverse();
      if (!inv) throw AlgebraError("power: morphism is not invertible");
      return inv->power(-n);
    }
    AlgebraMorphism r = identity(source);
    for (int k = 0; k < n; ++k) r = compose(r);
    return r;
  }
  bool operator==(const AlgebraMorphism& o) const { return matrix == o.matrix; }
};

/// True iff the matrix preserves the unit, all products of basis pairs, and
/// degrees when both sides are graded.
template <class K>
bool check_morphism(const AlgebraMorphism<K>& f) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  if (f.matrix.rows() != B.dim() || f.matrix.cols() != A.dim()) throw AlgebraError("check_morphism: shape mismatch");
  if (f(A.unit()) != B.unit()) return false;
  std::vector<Vec<K>> img(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) img[i] = f.image(i);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec<K> ij(A.dim(), A.zero());
      for (const auto& [k, v] : A.product(i, j)) ij[k] += v;
      if (f(ij) != B.multiply(img[i], img[j])) return false;
    }
  if (A.is_graded() && B.is_graded())
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t k = 0; k < B.dim(); ++k)
        if (!img[i][k].is_zero() && B.degree(k) != A.degree(i)) return false;
  return true;
}

/// Automorphism (or morphism) determined by images of the generators: each
/// basis element's image is the product of the images along its word.
template <class K>
AlgebraMorphism<K> morphism_from_generators(AlgebraPtr<K> src, AlgebraPtr<K> tgt,
                                            const std::vector<Vec<K>>& gen_images) {
  if (gen_images.size() != src->generators().size())
    throw AlgebraError("morphism_from_generators: one image per generator required");
  Matrix<K> m(tgt->dim(), src->dim(), src->zero());
  for (std::size_t i = 0; i < src->dim(); ++i) {
    const auto& w = src->word(i);
    Vec<K> v = gen_images.at(w.at(0));
    for (std::size_t k = 1; k < w.size(); ++k) v = tgt->multiply(v, gen_images[w[k]]);
    m.set_col(i, v);
  }
  return {std::move(src), std::move(tgt), std::move(m)};
}

}  // namespace fincat
