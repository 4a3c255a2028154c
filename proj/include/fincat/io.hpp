#pragma once

// Algebra spec files (YAML):
//
//   name: dual numbers            # optional
//   field: 3                      # a prime, or Q
//   vertices: [0]
//   arrows:
//     - {name: x, source: 0, target: 0, degree: 1}   # degree optional
//   relations: ["x*x"]
//   bound: 1
//   automorphism: {x: "-x"}       # optional
//
// A path a*b traverses a first, then b. Coefficients are integers or
// fractions: "2*a*b - 1/2*c*d". The idempotent at vertex v is written e_v.

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincat/algebra.hpp"

namespace fincat {

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AlgebraSpec {
  std::string name;
  std::string field;  // "Q" or a prime
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::string> relations;
  std::size_t bound = 0;
  bool graded = false;
  std::vector<std::pair<std::string, std::string>> automorphism;

  bool rational() const { return field == "Q"; }
  std::uint32_t prime() const;
};

inline std::uint32_t AlgebraSpec::prime() const {
  if (rational()) throw SpecError("field is Q, not a prime field");
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(field, &used);
    if (used != field.size()) throw SpecError("");
  } catch (const std::exception&) {
    throw SpecError("field must be Q or a prime, got '" + field + "'");
  }
  if (!is_prime(p) || p > (1u << 31)) throw SpecError("field must be Q or a prime, got '" + field + "'");
  return static_cast<std::uint32_t>(p);
}

namespace detail {

inline std::size_t vertex_index(const std::vector<std::string>& vs, const std::string& v) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v) return i;
  throw SpecError("unknown vertex '" + v + "'");
}

inline std::vector<std::pair<std::string, std::string>> parse_automorphism(const YAML::Node& n) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!n) return out;
  if (!n.IsMap()) throw SpecError("automorphism must map arrow names to expressions");
  for (const auto& kv : n) out.emplace_back(kv.first.as<std::string>(), kv.second.as<std::string>());
  return out;
}

}  // namespace detail

inline AlgebraSpec parse_spec(const YAML::Node& root) {
  if (!root.IsMap()) throw SpecError("spec must be a mapping");
  AlgebraSpec s;
  try {
    s.name = root["name"] ? root["name"].as<std::string>() : "";
    if (!root["field"]) throw SpecError("missing key 'field'");
    s.field = root["field"].as<std::string>();
    if (!s.rational()) (void)s.prime();
    if (!root["vertices"] || !root["vertices"].IsSequence()) throw SpecError("missing list 'vertices'");
    for (const auto& v : root["vertices"]) s.vertices.push_back(v.as<std::string>());
    if (s.vertices.empty()) throw SpecError("at least one vertex required");
    if (root["arrows"]) {
      for (const auto& a : root["arrows"]) {
        Arrow ar;
        if (a.IsSequence()) {
          if (a.size() < 3 || a.size() > 4) throw SpecError("arrow as a list is [name, source, target, degree?]");
          ar.name = a[0].as<std::string>();
          ar.source = detail::vertex_index(s.vertices, a[1].as<std::string>());
          ar.target = detail::vertex_index(s.vertices, a[2].as<std::string>());
          if (a.size() == 4) {
            ar.degree = a[3].as<int>();
            s.graded = true;
          }
        } else {
          if (!a["name"] || !a["source"] || !a["target"]) throw SpecError("arrow needs name, source and target");
          ar.name = a["name"].as<std::string>();
          ar.source = detail::vertex_index(s.vertices, a["source"].as<std::string>());
          ar.target = detail::vertex_index(s.vertices, a["target"].as<std::string>());
          if (a["degree"]) {
            ar.degree = a["degree"].as<int>();
            s.graded = true;
          }
        }
        s.arrows.push_back(std::move(ar));
      }
    }
    if (root["relations"])
      for (const auto& r : root["relations"]) s.relations.push_back(r.as<std::string>());
    if (!root["bound"]) throw SpecError("missing key 'bound'");
    s.bound = root["bound"].as<std::size_t>();
    s.automorphism = detail::parse_automorphism(root["automorphism"]);
  } catch (const YAML::Exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
  return s;
}

inline AlgebraSpec load_spec(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw SpecError(path + ": " + e.what());
  }
  return parse_spec(root);
}

/// The automorphism entry of a separate file (for twisted coefficients).
inline std::vector<std::pair<std::string, std::string>> load_automorphism(const std::string& path) {
  try {
    auto root = YAML::LoadFile(path);
    if (!root["automorphism"]) throw SpecError(path + ": missing key 'automorphism'");
    return detail::parse_automorphism(root["automorphism"]);
  } catch (const YAML::Exception& e) {
    throw SpecError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Path expressions

struct ExprTerm {
  std::int64_t num = 1, den = 1;
  std::vector<std::string> atoms;  // arrow names or e_v, in traversal order
};

inline std::vector<ExprTerm> parse_expression(const std::string& text) {
  std::vector<ExprTerm> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::int64_t {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    auto v = std::stoll(text.substr(i, j - i));
    i = j;
    return v;
  };
  auto fail = [&](const std::string& what) {
    throw SpecError("cannot parse '" + text + "' at position " + std::to_string(i) + ": " + what);
  };
  skip();
  if (i == text.size()) fail("empty expression");
  bool first = true;
  while (i < text.size()) {
    ExprTerm t;
    bool neg = false;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    bool need_atom = true;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      t.num = number();
      skip();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected denominator");
        t.den = number();
        if (t.den == 0) fail("zero denominator");
        skip();
      }
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      } else {
        need_atom = false;
      }
    }
    while (need_atom) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      if (j == i) fail("expected an arrow name");
      t.atoms.push_back(text.substr(i, j - i));
      i = j;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      } else {
        need_atom = false;
      }
    }
    if (neg) t.num = -t.num;
    terms.push_back(std::move(t));
    skip();
  }
  return terms;
}

template <class K>
K scalar_from(const K& z, std::int64_t num, std::int64_t den) {
  if constexpr (std::is_same_v<K, Fp>) {
    K d = z.from_int(den);
    if (d.is_zero()) throw SpecError("denominator divisible by the characteristic");
    return z.from_int(num) / d;
  } else {
    return z.from_int(num) / z.from_int(den);
  }
}

template <class K>
QuiverPresentation<K> presentation(const AlgebraSpec& s, const K& z) {
  QuiverPresentation<K> q{z.zero(), s.vertices, s.arrows, {}, s.bound, s.graded};
  std::map<std::string, std::size_t> idx;
  for (std::size_t a = 0; a < s.arrows.size(); ++a) {
    if (!idx.emplace(s.arrows[a].name, a).second) throw SpecError("duplicate arrow '" + s.arrows[a].name + "'");
  }
  for (const auto& r : s.relations) {
    Relation<K> rel;
    for (const auto& t : parse_expression(r)) {
      PathTerm<K> p{scalar_from(z, t.num, t.den), {}};
      for (const auto& a : t.atoms) {
        auto it = idx.find(a);
        if (it == idx.end()) throw SpecError("relation '" + r + "': unknown arrow '" + a + "'");
        p.arrows.push_back(it->second);
      }
      if (p.arrows.empty()) throw SpecError("relation '" + r + "': scalar terms are not allowed");
      rel.push_back(std::move(p));
    }
    q.relations.push_back(std::move(rel));
  }
  return q;
}

template <class K>
AlgebraPtr<K> build_from_spec(const AlgebraSpec& s, const K& z) {
  return std::make_shared<const Algebra<K>>(build_algebra(presentation(s, z)));
}

/// Element of A given by a path expression in arrow labels and e_v.
template <class K>
Vec<K> evaluate_expression(const Algebra<K>& a, const std::string& text) {
  std::map<std::string, std::size_t> gen;
  for (auto b : a.generators()) gen.emplace(a.label(b), b);
  Vec<K> out = a.zero_vector();
  for (const auto& t : parse_expression(text)) {
    if (t.atoms.empty()) throw SpecError("'" + text + "': scalar terms are not allowed");
    Vec<K> v;
    for (const auto& at : t.atoms) {
      auto it = gen.find(at);
      if (it == gen.end()) throw SpecError("'" + text + "': unknown generator '" + at + "'");
      v = v.empty() ? a.basis_vector(it->second) : a.multiply(v, a.basis_vector(it->second));
    }
    out = axpy(out, scalar_from(a.zero(), t.num, t.den), v);
  }
  return out;
}

/// The automorphism with the given arrow images. Arrows not listed are fixed;
/// vertex images are read off from the sources and targets of arrow images.
template <class K>
Matrix<K> automorphism_from_images(AlgebraPtr<K> a, const std::vector<std::pair<std::string, std::string>>& images) {
  const auto& A = *a;
  const std::size_t nv = A.num_vertices();
  std::map<std::string, Vec<K>> img;
  for (const auto& [name, expr] : images) {
    bool found = false;
    for (auto b : A.generators()) found = found || A.label(b) == name;
    if (!found) throw SpecError("automorphism: unknown generator '" + name + "'");
    img[name] = evaluate_expression(A, expr);
  }
  auto vertex_of = [&](const Vec<K>& v, bool left) -> std::optional<std::size_t> {
    for (std::size_t u = 0; u < nv; ++u) {
      Vec<K> w = left ? A.multiply(A.idempotent(u), v) : A.multiply(v, A.idempotent(u));
      if (w == v && !is_zero_vec(v)) return u;
    }
    return std::nullopt;
  };
  std::vector<std::optional<std::size_t>> vmap(nv);
  for (std::size_t g = 0; g < A.generators().size(); ++g) {
    if (!A.generator_in_radical(g)) continue;
    const std::size_t b = A.generators()[g];
    auto it = img.find(A.label(b));
    if (it == img.end()) continue;
    auto s = vertex_of(A.basis_vector(b), true), t = vertex_of(A.basis_vector(b), false);
    auto s2 = vertex_of(it->second, true), t2 = vertex_of(it->second, false);
    if (!s2 || !t2) throw SpecError("automorphism: image of '" + A.label(b) + "' is not homogeneous in the vertices");
    for (auto [x, y] : {std::pair{s, s2}, std::pair{t, t2}}) {
      if (vmap[*x] && *vmap[*x] != *y) throw SpecError("automorphism: inconsistent vertex images");
      vmap[*x] = y;
    }
  }
  std::vector<Vec<K>> gens;
  for (std::size_t g = 0; g < A.generators().size(); ++g) {
    const std::size_t b = A.generators()[g];
    auto it = img.find(A.label(b));
    if (it != img.end()) {
      gens.push_back(it->second);
    } else if (!A.generator_in_radical(g)) {
      std::size_t u = *vertex_of(A.basis_vector(b), true);
      gens.push_back(A.idempotent(vmap[u].value_or(u)));
    } else {
      gens.push_back(A.basis_vector(b));
    }
  }
  auto m = morphism_from_generators(a, a, gens);
  if (!check_morphism(m)) throw SpecError("automorphism: images do not respect the relations");
  if (!m.inverse()) throw SpecError("automorphism: map is not invertible");
  return m.matrix;
}

}  // namespace fincat
