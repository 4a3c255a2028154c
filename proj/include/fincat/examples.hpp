#pragma once

// Named example algebras, built from quiver presentations over any field.
// Paths are arrow sequences in the order they are traversed.

#include <memory>
#include <string>

#include "fincat/algebra.hpp"

namespace fincat::examples {

/// k[x]/(x^n), with x of degree deg when graded.
template <class K>
AlgebraPtr<K> truncated_poly(const K& z, std::size_t n, std::optional<int> deg = std::nullopt) {
  if (n < 1) throw AlgebraError("truncated_poly: n >= 1 required");
  QuiverPresentation<K> q{z.zero(), {"0"}, {{"x", 0, 0, deg.value_or(0)}}, {}, n - 1, deg.has_value()};
  q.relations.push_back({{z.one(), std::vector<std::size_t>(n, 0)}});
  return std::make_shared<const Algebra<K>>(build_algebra(q));
}

template <class K>
AlgebraPtr<K> dual_numbers(const K& z, std::optional<int> deg = std::nullopt) {
  return truncated_poly(z, 2, deg);
}

/// N_m^n: the cyclic quiver with m vertices modulo all paths of length n+1.
template <class K>
AlgebraPtr<K> nakayama(const K& z, std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw AlgebraError("nakayama: m, n >= 1 required");
  QuiverPresentation<K> q{z.zero(), {}, {}, {}, n, false};
  for (std::size_t i = 0; i < m; ++i) {
    q.vertices.push_back(std::to_string(i));
    q.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % m, 0});
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> path;
    for (std::size_t k = 0; k <= n; ++k) path.push_back((i + k) % m);
    q.relations.push_back({{z.one(), path}});
  }
  return std::make_shared<const Algebra<K>>(build_algebra(q));
}

/// k^n: n vertices, no arrows.
template <class K>
AlgebraPtr<K> product_field(const K& z, std::size_t n) {
  if (n < 1) throw AlgebraError("product_field: n >= 1 required");
  QuiverPresentation<K> q{z.zero(), {}, {}, {}, 0, false};
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i));
  return std::make_shared<const Algebra<K>>(build_algebra(q));
}

/// Deformed preprojective algebra of type D4 in characteristic 2. The usual
/// relations ab = "b then a" are entered as traversal sequences.
template <class K>
AlgebraPtr<K> d4_deformed_preprojective(const K& z) {
  if (z.characteristic() != 2) throw AlgebraError("d4_deformed_preprojective: characteristic 2 required");
  QuiverPresentation<K> q{z.zero(), {"0", "1", "2", "3"}, {}, {}, 6, false};
  enum : std::size_t { a0, b0, a1, b1, a2, b2 };
  q.arrows = {{"a0", 0, 2, 0}, {"ab0", 2, 0, 0}, {"a1", 1, 2, 0},
              {"ab1", 2, 1, 0}, {"a2", 2, 3, 0}, {"ab2", 3, 2, 0}};
  const K one = z.one();
  q.relations.push_back({{one, {a0, b0}}});
  q.relations.push_back({{one, {a1, b1}}});
  q.relations.push_back({{one, {b2, a2}}});
  q.relations.push_back({{one, {b0, a0}}, {one, {b1, a1}}, {one, {a2, b2}}, {one, {b0, a0, b1, a1}}});
  q.relations.push_back({{one, {b1, a1, b0, a0}}, {one, {b0, a0, b1, a1}}});
  return std::make_shared<const Algebra<K>>(build_algebra(q));
}

}  // namespace fincat::examples
