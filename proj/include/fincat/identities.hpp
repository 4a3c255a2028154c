#pragma once

// Randomized checks of the algebraic identities satisfied by Hochschild
// cochains: cochain-level laws, Gerstenhaber relations in cohomology, Euler
// class identities and functoriality along graded functors.

#include <random>
#include <string>
#include <vector>

#include "fincat/hochschild.hpp"

namespace fincat {

struct IdentityResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct IdentityReport {
  std::vector<IdentityResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (r.failures) return false;
    return true;
  }
  std::size_t checks() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.checks;
    return n;
  }
  IdentityResult& entry(const std::string& name) {
    for (auto& r : results)
      if (r.name == name) return r;
    results.push_back({name, 0, 0});
    return results.back();
  }
  void record(const std::string& name, bool ok) {
    auto& r = entry(name);
    ++r.checks;
    if (!ok) ++r.failures;
  }
};

struct IdentityOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_arity = 4;
};

/// Zero in cohomology: a cocycle whose class vanishes.
template <class K>
bool vanishes_in_cohomology(const Cochain<K>& c) {
  if (!is_cocycle(c)) return false;
  if (c.arity == 0) return c.is_zero();
  return c.cx->cohomology(c.arity, c.q).is_coboundary(c.data);
}

template <class K>
bool equal_in_cohomology(const Cochain<K>& a, const Cochain<K>& b) {
  return vanishes_in_cohomology(a - b);
}

namespace detail {

/// Internal degrees q for which HC^{n,q} can be nonzero.
template <class K>
std::vector<int> live_degrees(const HochschildComplex<K>& cx, std::size_t n) {
  const auto& V = cx.coefficients();
  const auto& A = cx.algebra();
  int dmin = 0, dmax = 0, vmin = 0, vmax = 0;
  for (std::size_t b = 0; b < A.dim(); ++b) {
    dmin = std::min(dmin, A.degree(b));
    dmax = std::max(dmax, A.degree(b));
  }
  for (std::size_t v = 0; v < V.dim; ++v) {
    vmin = std::min(vmin, V.degree[v]);
    vmax = std::max(vmax, V.degree[v]);
  }
  const int N = static_cast<int>(n);
  std::vector<int> qs;
  for (int q = vmin - N * dmax; q <= vmax - N * dmin; ++q)
    if (!V.window || (q >= V.window->first && q <= V.window->second)) qs.push_back(q);
  return qs;
}

template <class K, class Rng>
Cochain<K> random_cocycle(const ComplexPtr<K>& cx, std::size_t n, int q, Rng& rng) {
  const auto& h = cx->cohomology(n, q);
  std::uniform_int_distribution<int> dist(-3, 3);
  Vec<K> v(h.reps.rows(), cx->zero());
  for (std::size_t i = 0; i < h.dim(); ++i) v = axpy(v, cx->zero().from_int(dist(rng)), h.rep(i));
  auto c = cx->from_vector(n, q, v);
  if (n > 0) c = c + cx->dprime(cx->random_cochain(n - 1, q, rng));
  return c;
}

/// A random cocycle of arity <= max_arity, biased toward nonzero classes.
template <class K, class Rng>
Cochain<K> any_cocycle(const ComplexPtr<K>& cx, std::size_t min_arity, std::size_t max_arity, Rng& rng) {
  std::uniform_int_distribution<std::size_t> an(min_arity, max_arity);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const std::size_t n = an(rng);
    auto qs = live_degrees(*cx, n);
    std::uniform_int_distribution<std::size_t> qi(0, qs.size() - 1);
    const int q = qs[qi(rng)];
    if (cx->cohomology(n, q).dim() > 0 || attempt == 19) return random_cocycle(cx, n, q, rng);
  }
  return cx->zero_cochain(0, 0);
}

}  // namespace detail

/// Cochain-level laws on random cochains of a complex with monoid
/// coefficients: d^2 = 0, Leibniz for d', associativity of cup, d' = [m2, -].
template <class K>
void check_cochain_laws(const ComplexPtr<K>& cx, const IdentityOptions& opt, IdentityReport& rep) {
  std::mt19937_64 rng(opt.seed);
  const K z = cx->zero();
  std::uniform_int_distribution<std::size_t> an(0, opt.max_arity);
  auto pick = [&](std::size_t max) {
    std::uniform_int_distribution<std::size_t> a(0, max);
    const std::size_t n = a(rng);
    auto qs = detail::live_degrees(*cx, n);
    std::uniform_int_distribution<std::size_t> qi(0, qs.size() - 1);
    return cx->random_cochain(n, qs[qi(rng)], rng);
  };
  const bool regular = cx->coefficients().is_regular();
  for (std::size_t t = 0; t < opt.trials; ++t) {
    auto x = pick(opt.max_arity - 1);
    rep.record("d^2 = 0", cx->d(cx->d(x)).is_zero());
    auto y = pick(opt.max_arity - x.arity);
    auto lhs = cx->dprime(dot(x, y));
    auto rhs = dot(cx->dprime(x), y) + dot(x, cx->dprime(y)).scaled(sign_of(z, x.total_degree()));
    rep.record("d' Leibniz", lhs == rhs);
    if (x.arity + y.arity < opt.max_arity) {
      auto w = pick(opt.max_arity - x.arity - y.arity);
      rep.record("cup associativity", cup(cup(x, y), w) == cup(x, cup(y, w)));
    }
    if (regular) rep.record("d' = [m2, -]", bracket(m2(cx), x) == cx->dprime(x));
  }
}

/// Gerstenhaber algebra relations in HH(C, C) on random cocycles.
template <class K>
void check_gerstenhaber(const ComplexPtr<K>& cx, const IdentityOptions& opt, IdentityReport& rep) {
  std::mt19937_64 rng(opt.seed + 1);
  const K z = cx->zero();
  const std::size_t half = std::max<std::size_t>(1, opt.max_arity / 2);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    // brackets of 0-cochains would land in arity -1
    auto x = detail::any_cocycle(cx, 1, half, rng);
    auto y = detail::any_cocycle(cx, 1, half, rng);
    auto w = detail::any_cocycle(cx, 1, 1, rng);
    const long X = x.total_degree(), Y = y.total_degree();
    rep.record("(xy)z = x(yz)", equal_in_cohomology(dot(dot(x, y), w), dot(x, dot(y, w))));
    rep.record("xy = (-1)^{|x||y|} yx", equal_in_cohomology(dot(x, y), dot(y, x).scaled(sign_of(z, X * Y))));
    rep.record("[x,y] antisymmetry",
               equal_in_cohomology(bracket(x, y), -bracket(y, x).scaled(sign_of(z, (X - 1) * (Y - 1)))));
    if (parity(X)) rep.record("[x,x] = 0 for |x| odd", vanishes_in_cohomology(bracket(x, x)));
    rep.record("Jacobi", equal_in_cohomology(bracket(x, bracket(y, w)),
                                             bracket(bracket(x, y), w) +
                                                 bracket(y, bracket(x, w)).scaled(sign_of(z, (X - 1) * (Y - 1)))));
    if (!parity(X)) rep.record("[x,[x,x]] = 0 for |x| even", vanishes_in_cohomology(bracket(x, bracket(x, x))));
    rep.record("Poisson", equal_in_cohomology(bracket(x, dot(y, w)),
                                              dot(bracket(x, y), w) +
                                                  dot(y, bracket(x, w)).scaled(sign_of(z, (X - 1) * Y))));
    if (sq_defined(x)) {
      rep.record("2 Sq(x) = [x,x]", equal_in_cohomology(sq(x).scaled(z.from_int(2)), bracket(x, x)));
      rep.record("[Sq x, y] = [x,[x,y]]", equal_in_cohomology(bracket(sq(x), y), bracket(x, bracket(x, y))));
      if (sq_defined(y)) {
        rep.record("Sq(xy)", equal_in_cohomology(sq(dot(x, y)), dot(sq(x), dot(y, y)) + dot(dot(x, bracket(x, y)), y) +
                                                                    dot(dot(x, x), sq(y))));
      }
      auto x2 = detail::random_cocycle(cx, x.arity, x.q, rng);
      rep.record("Sq(x+y) = Sq x + Sq y + [x,y]", equal_in_cohomology(sq(x + x2), sq(x) + sq(x2) + bracket(x, x2)));
    }
  }
}

/// Euler class identities on a complex with regular coefficients.
template <class K>
void check_euler(const ComplexPtr<K>& cx, const IdentityOptions& opt, IdentityReport& rep) {
  std::mt19937_64 rng(opt.seed + 2);
  const K z = cx->zero();
  auto delta = euler(cx);
  rep.record("d(delta) = 0", cx->d(delta).is_zero());
  rep.record("d(beta) = delta cup delta", cx->d(beta(cx)) == cup(delta, delta));
  if (z.characteristic() == 2) rep.record("Sq(delta) = delta", sq(delta) == delta);
  std::uniform_int_distribution<std::size_t> an(0, opt.max_arity - 1);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t n = an(rng);
    auto qs = detail::live_degrees(*cx, n);
    std::uniform_int_distribution<std::size_t> qi(0, qs.size() - 1);
    auto phi = cx->random_cochain(n, qs[qi(rng)], rng);
    rep.record("[delta, phi] = q phi", bracket(delta, phi) == phi.scaled(z.from_int(phi.q)));
  }
}

/// Functoriality along F : D -> C: F^* tau_* = tau_* F^*, F^*(phi . phi') =
/// phi . F^*(phi'), the commutator formula for F^*(phi) . psi, and
/// F^*(x) = 0 => F^*(Sq x) = 0 in cohomology.
template <class K>
void check_functor(const ComplexPtr<K>& c, const AlgebraMorphism<K>& f, const std::optional<Matrix<K>>& tau, int tau_deg,
                   const IdentityOptions& opt, IdentityReport& rep) {
  std::mt19937_64 rng(opt.seed + 3);
  const K z = c->zero();
  auto dcx = HochschildComplex<K>::create(restrict_coefficients(c->coefficients(), f));
  auto pick = [&](const ComplexPtr<K>& cx, std::size_t max) {
    std::uniform_int_distribution<std::size_t> a(0, max);
    const std::size_t n = a(rng);
    auto qs = detail::live_degrees(*cx, n);
    std::uniform_int_distribution<std::size_t> qi(0, qs.size() - 1);
    return cx->random_cochain(n, qs[qi(rng)], rng);
  };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    auto phi = pick(c, opt.max_arity - 1);
    if (tau) {
      auto lhs = pullback(pushforward(phi, *tau, tau_deg, c), f, dcx);
      auto rhs = pushforward(pullback(phi, f, dcx), *tau, tau_deg, dcx);
      rep.record("F^* tau_* = tau_* F^*", lhs == rhs);
    }
    auto phi2 = pick(c, opt.max_arity - phi.arity);
    if (phi.arity >= 1)
      rep.record("F^*(phi . phi') = phi . F^*(phi')",
                 pullback(pre_lie(phi, phi2), f, dcx) == bullet(phi, pullback(phi2, f, dcx)));
    auto psi = pick(dcx, opt.max_arity - std::max<std::size_t>(phi.arity, 1));
    if (phi.arity + psi.arity == 0) continue;
    const long P = phi.total_degree(), S = psi.total_degree();
    auto fp = pullback(phi, f, dcx);
    auto lhs = dot(fp, psi) - dot(psi, fp).scaled(sign_of(z, P * S));
    auto inner = dcx->dprime(bullet(phi, psi)) - bullet(c->dprime(phi), psi) +
                 bullet(phi, dcx->dprime(psi)).scaled(sign_of(z, P));
    rep.record("commutator formula", lhs == inner.scaled(sign_of(z, P)));
  }
  std::size_t tried = 0;
  for (std::size_t t = 0; t < opt.trials && tried < opt.trials; ++t) {
    auto x = detail::any_cocycle(c, 1, std::max<std::size_t>(1, opt.max_arity / 2), rng);
    if (!sq_defined(x)) continue;
    if (!vanishes_in_cohomology(pullback(x, f, dcx))) continue;
    ++tried;
    rep.record("F^*(x) = 0 => F^*(Sq x) = 0", vanishes_in_cohomology(pullback(sq(x), f, dcx)));
  }
}

}  // namespace fincat
