#include <catch_amalgamated.hpp>

#include "fincat/examples.hpp"
#include "fincat/identities.hpp"

using namespace fincat;

namespace {

void require_ok(const IdentityReport& r) {
  for (const auto& e : r.results) {
    INFO(e.name << ": " << e.failures << " failures of " << e.checks);
    CHECK(e.failures == 0);
  }
}

}  // namespace

TEST_CASE("identities on the dual numbers") {
  IdentityOptions opt;
  opt.trials = 20;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (bool graded : {false, true}) {
      auto a = examples::dual_numbers(Fp(0, p), graded ? std::optional<int>(1) : std::nullopt);
      auto cx = HochschildComplex<Fp>::create(regular_coefficients(a));
      IdentityReport rep;
      check_cochain_laws(cx, opt, rep);
      check_gerstenhaber(cx, opt, rep);
      if (graded) check_euler(cx, opt, rep);
      INFO("p = " << p << " graded = " << graded);
      require_ok(rep);
    }
}

TEST_CASE("functoriality along graded functors") {
  IdentityOptions opt;
  opt.trials = 20;
  for (std::uint32_t p : {2u, 3u}) {
    Fp z(0, p);
    auto c = examples::truncated_poly(z, 3, 1);
    auto k = examples::product_field(z, 1);
    AlgebraMorphism<Fp> unit{k, c, Matrix<Fp>::from_columns({c->unit()}, c->dim(), z)};
    auto cx = HochschildComplex<Fp>::create(regular_coefficients(c));
    IdentityReport rep;
    check_functor<Fp>(cx, unit, Matrix<Fp>::identity(3, z).scaled(z.from_int(2)), 0, opt, rep);
    auto d = examples::truncated_poly(z, 2, 2);
    // x -> x^2
    Matrix<Fp> m(3, 2, z);
    m(0, 0) = z.one();
    m(2, 1) = z.one();
    AlgebraMorphism<Fp> sq2{d, c, m};
    REQUIRE(check_morphism(sq2));
    check_functor<Fp>(cx, sq2, std::nullopt, 0, opt, rep);
    INFO("p = " << p);
    require_ok(rep);
  }
}

TEST_CASE("identities on a Nakayama algebra") {
  IdentityOptions opt;
  opt.trials = 20;
  auto cx = HochschildComplex<Fp>::create(regular_coefficients(examples::nakayama(Fp(0, 3), 2, 1)));
  IdentityReport rep;
  check_cochain_laws(cx, opt, rep);
  check_gerstenhaber(cx, opt, rep);
  require_ok(rep);
}

TEST_CASE("D4 deformed preprojective algebra") {
  auto a = examples::d4_deformed_preprojective(Fp(0, 2));
  CHECK(a->dim() == 28);
  CHECK_THROWS(examples::d4_deformed_preprojective(Fp(0, 3)));
}
