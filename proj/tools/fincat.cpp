// fincat: command line front end.
//
// Exit codes: 0 decided / success, 2 undetermined, 3 an identity or exactness
// check failed, 1 input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "fincat/identities.hpp"
#include "fincat/io.hpp"
#include "fincat/lambda_sigma.hpp"
#include "fincat/workbench.hpp"

using namespace fincat;

namespace {

constexpr int kOk = 0, kInputError = 1, kUndetermined = 2, kCheckFailed = 3;

struct Options {
  std::string file, sigma_file, output = "text", name, field = "3";
  std::vector<int> params;
  long n = 0, q = 0, p = 0, length = 3;
  bool bimodule = false;
  std::size_t budget = 200, trials = 100;
  std::uint64_t seed = 1;
};

void kv(const std::string& k, const std::string& v) { std::cout << k << "=" << v << "\n"; }
template <class T>
void kv(const std::string& k, const T& v) {
  std::ostringstream os;
  os << v;
  kv(k, os.str());
}
std::string yesno(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <class K>
std::string field_name(const K& z) {
  if constexpr (std::is_same_v<K, Fp>) return z.field_name();
  else return "Q";
}

template <class K>
void print_algebra(const std::string& name, const AlgebraPtr<K>& a) {
  kv("algebra", name);
  kv("field", field_name(a->zero()));
  kv("dim", a->dim());
  kv("vertices", a->num_vertices());
  kv("graded", yesno(a->is_graded()));
  kv("basis", join(a->labels(), ","));
}

template <class K>
Matrix<K> sigma_from_file(const Options& o, const AlgebraPtr<K>& a) {
  return automorphism_from_images(a, load_automorphism(o.sigma_file));
}

template <class K>
int cmd_build(const Options& o, const AlgebraSpec& s, AlgebraPtr<K> a) {
  print_algebra(s.name.empty() ? o.file : s.name, a);
  kv("self_injective", yesno(is_self_injective(a)));
  if (!s.automorphism.empty())
    kv("automorphism", join(describe_morphism(*a, automorphism_from_images(a, s.automorphism)), "; "));
  return kOk;
}

template <class K>
int cmd_hh(const Options& o, const AlgebraSpec&, AlgebraPtr<K> a) {
  if (o.n < 0) throw SpecError("--n must be non-negative");
  const auto n = static_cast<std::size_t>(o.n);
  const int q = static_cast<int>(o.q);
  ComplexPtr<K> cx;
  if (o.sigma_file.empty()) {
    cx = HochschildComplex<K>::create(regular_coefficients(a));
  } else {
    cx = HochschildComplex<K>::create(
        lambda_sigma_coefficients(a, sigma_from_file(o, a), std::min(q, 0), std::max(q, 0)));
  }
  kv("coefficients", o.sigma_file.empty() ? "regular" : "lambda_sigma");
  kv("n", n);
  kv("q", q);
  kv("cochains", cx->space(n, q).dim);
  kv("hh_dim", cx->hh_dim(n, q));
  return kOk;
}

template <class K>
int cmd_resolve(const Options& o, const AlgebraSpec&, AlgebraPtr<K> a) {
  if (o.length < 0) throw SpecError("--length must be non-negative");
  auto ctx = o.bimodule ? ModuleContext<K>::bimodule(a) : ModuleContext<K>::right(a);
  auto m = o.bimodule ? regular_bimodule(ctx) : [&] {
    auto rc = ModuleContext<K>::right(a);
    return simple_right_module(rc, 0);
  }();
  auto res = minimal_resolution(m, static_cast<std::size_t>(o.length));
  kv("module", o.bimodule ? "regular bimodule" : "simple right module at the first vertex");
  for (std::size_t i = 0; i < res.covers.size(); ++i) {
    kv("P" + std::to_string(i) + "_dim", res.P(i).module.dim);
    kv("Omega" + std::to_string(i + 1) + "_dim", res.omega(i + 1).dim);
  }
  return kOk;
}

template <class K>
int print_report(const Options& o, const EnhancementReport<K>& r, const Algebra<K>& a) {
  std::string sigma = r.sigma ? join(describe_morphism(a, *r.sigma), "; ") : "none";
  if (sigma.empty()) sigma = "identity";
  const std::string status = r.decided() ? "decided" : "undetermined-budget";
  if (o.output == "machine") {
    kv("algebra", r.algebra);
    kv("dim", r.dim);
    kv("frobenius", yesno(r.self_injective));
    kv("separable", yesno(r.separable));
    kv("bimodule_cover_dim", r.cover_dim);
    kv("omega3_dim", r.omega3_dim);
    kv("omega3_stripped_dim", r.omega3_stripped_dim);
    kv("invertible", to_string(r.invertible));
    kv("sigma", sigma);
    kv("status", status);
    kv("reason", r.reason);
  } else {
    std::cout << r.algebra << " (dimension " << r.dim << ")\n"
              << "  self-injective: " << yesno(r.self_injective) << "\n"
              << "  separable: " << yesno(r.separable) << "\n"
              << "  projective cover of the regular bimodule: dimension " << r.cover_dim << "\n";
    if (r.self_injective && !r.separable)
      std::cout << "  Omega^3: dimension " << r.omega3_dim << ", " << r.omega3_stripped_dim
                << " after removing projective summands\n";
    std::cout << "  enhancement: " << to_string(r.invertible) << " (" << status << ")\n"
              << "  suspension automorphism: " << sigma << "\n"
              << "  " << r.reason << "\n";
  }
  return r.decided() ? kOk : kUndetermined;
}

template <class K>
int cmd_check(const Options& o, const AlgebraSpec& s, AlgebraPtr<K> a) {
  SearchOptions opt;
  opt.budget = o.budget;
  opt.seed = o.seed;
  auto r = check_enhancement(a, opt, s.name.empty() ? o.file : s.name);
  return print_report(o, r, *a);
}

template <class K>
int cmd_lambda_sigma(const Options& o, const AlgebraSpec&, AlgebraPtr<K> a) {
  if (o.p < 0) throw SpecError("--p must be non-negative");
  const auto p = static_cast<std::size_t>(o.p);
  const int q = static_cast<int>(o.q);
  auto sigma = sigma_from_file(o, a);
  const int lo = std::min(q, 0) - 1, hi = std::max(q, 0) + 1;
  LambdaSigma<K> ls(a, sigma, lo - static_cast<int>(p) - 1, hi + 1);
  kv("sigma", join(describe_morphism(*a, sigma), "; "));
  kv("p", p);
  kv("q", q);
  kv("hh_lambda_lambda_sigma", ls.complex()->hh_dim(p, q));
  kv("hh_lambda_sigma", ls.cone_cohomology(p, q).dim());
  auto les = ls.verify_les(p, q, q);
  kv("les_nodes", les.nodes.size());
  kv("les_exact", yesno(les.all_exact()));
  return les.all_exact() ? kOk : kCheckFailed;
}

template <class K>
int cmd_identities(const Options& o, const AlgebraSpec&, AlgebraPtr<K> a) {
  IdentityOptions opt;
  opt.trials = o.trials;
  opt.seed = o.seed;
  auto cx = HochschildComplex<K>::create(regular_coefficients(a));
  IdentityReport rep;
  check_cochain_laws(cx, opt, rep);
  check_gerstenhaber(cx, opt, rep);
  if (a->is_graded()) check_euler(cx, opt, rep);
  for (const auto& r : rep.results)
    std::cout << (r.failures ? "FAIL " : "ok   ") << r.name << " (" << r.checks - r.failures << "/" << r.checks
              << ")\n";
  kv("checks", rep.checks());
  kv("all_passed", yesno(rep.ok()));
  return rep.ok() ? kOk : kCheckFailed;
}

template <class K>
AlgebraPtr<K> named_example(const Options& o, const K& z) {
  auto param = [&](std::size_t i, const char* what) {
    if (o.params.size() <= i || o.params[i] < 1) throw SpecError(o.name + ": missing positive parameter " + what);
    return static_cast<std::size_t>(o.params[i]);
  };
  if (o.name == "dual_numbers") return examples::dual_numbers(z);
  if (o.name == "truncated_poly") return examples::truncated_poly(z, param(0, "n"));
  if (o.name == "nakayama") return examples::nakayama(z, param(0, "m"), param(1, "n"));
  if (o.name == "product_field") return examples::product_field(z, param(0, "n"));
  if (o.name == "d4_deformed_preprojective") return examples::d4_deformed_preprojective(z);
  throw SpecError("unknown example '" + o.name +
                  "' (dual_numbers, truncated_poly, nakayama, product_field, d4_deformed_preprojective)");
}

template <class K>
int cmd_example(const Options& o, const K& z) {
  auto a = named_example(o, z);
  kv("field", field_name(z));
  kv("basis", join(a->labels(), ","));
  SearchOptions opt;
  opt.budget = o.budget;
  opt.seed = o.seed;
  Options mo = o;
  mo.output = "machine";
  auto r = check_enhancement(a, opt, o.name);
  return print_report(mo, r, *a);
}

template <class F>
int with_field(const std::string& field, F&& f) {
  if (field == "Q") return f(Rational(0));
  AlgebraSpec s;
  s.field = field;
  return f(Fp(0, s.prime()));
}

template <class Cmd>
int with_spec(const Options& o, Cmd cmd) {
  auto s = load_spec(o.file);
  return with_field(s.field, [&](auto z) { return cmd(o, s, build_from_spec(s, z)); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite dimensional algebras: Hochschild cohomology, stable categories and enhancements"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "build an algebra from a spec file and print its basis");
  build->add_option("file", o.file)->required()->check(CLI::ExistingFile);

  auto* hh = app.add_subcommand("hh", "dimension of HH^{n,q}");
  hh->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  hh->add_option("--n", o.n)->required();
  hh->add_option("--q", o.q)->required();
  hh->add_option("--coefficients", o.sigma_file, "automorphism file; coefficients in Lambda(sigma)")
      ->check(CLI::ExistingFile);

  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution");
  resolve->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  resolve->add_option("--length", o.length)->required();
  resolve->add_flag("--bimodule", o.bimodule, "resolve Lambda as a bimodule instead of the first simple module");

  auto* check = app.add_subcommand("check-enhancement", "decide whether an enhancement exists");
  check->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  check->add_option("--budget", o.budget);
  check->add_option("--seed", o.seed);
  check->add_option("--output", o.output)->check(CLI::IsMember({"text", "machine"}));

  auto* ls = app.add_subcommand("lambda-sigma", "HH of Lambda(sigma) and the long exact sequence");
  ls->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  ls->add_option("--sigma", o.sigma_file)->required()->check(CLI::ExistingFile);
  ls->add_option("--p", o.p)->required();
  ls->add_option("--q", o.q)->required();

  auto* ids = app.add_subcommand("verify-identities", "randomized checks of the Gerstenhaber identities");
  ids->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  ids->add_option("--trials", o.trials);
  ids->add_option("--seed", o.seed);

  auto* ex = app.add_subcommand("example", "build a named example and check it");
  ex->add_option("name", o.name)->required();
  ex->add_option("--params", o.params);
  ex->add_option("--field", o.field, "a prime or Q");
  ex->add_option("--budget", o.budget);
  ex->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*build) return with_spec(o, [](auto&&... x) { return cmd_build(x...); });
    if (*hh) return with_spec(o, [](auto&&... x) { return cmd_hh(x...); });
    if (*resolve) return with_spec(o, [](auto&&... x) { return cmd_resolve(x...); });
    if (*check) return with_spec(o, [](auto&&... x) { return cmd_check(x...); });
    if (*ls) return with_spec(o, [](auto&&... x) { return cmd_lambda_sigma(x...); });
    if (*ids) return with_spec(o, [](auto&&... x) { return cmd_identities(x...); });
    if (*ex) return with_field(o.field, [&](auto z) { return cmd_example(o, z); });
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
