#include "doctest.h"

#include "cubsym/cyclofield.hpp"
#include "cubsym/errors.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace cubsym;
using namespace cubsym::testing;

namespace {
CycNum k(std::string_view n) { return constant(n); }
CycNum q(long p, long d = 1) { return CycNum(Rational(p, d)); }
}  // namespace

TEST_CASE("addition and multiplication") {
  const CycNum z = CycNum::zeta(1);
  CHECK((z + (-z)).is_zero());
  const CycNum w = k("omega");
  CHECK((w * w + w + 1).is_zero());
}

TEST_CASE("sqrt5 squared is 5, against an independent reduction mod Phi_120") {
  const CycNum e = k("eps");
  const CycNum s5 = CycNum(2) * (e + e.pow(4)) + 1;
  CHECK(s5 * s5 == CycNum(5));

  const QPoly phi = cyclotomic(120);
  CHECK(phi.size() == 33);
  QPoly root = poly_mul({Rational(2)}, QPoly(zeta_power(24)));
  const QPoly z96 = zeta_power(96);
  root.resize(std::max(root.size(), z96.size()), Rational(0));
  for (std::size_t j = 0; j < z96.size(); ++j) root[j] += 2 * z96[j];
  root[0] += 1;
  const QPoly square = poly_divmod(poly_mul(trim(root), trim(root)), phi);
  CHECK(square == QPoly{Rational(5)});
  CHECK(as_poly(s5) == trim(root));
}

TEST_CASE("inverse") {
  const CycNum e = k("eps");
  const CycNum a = CycNum(2) * e.pow(3) + CycNum(4) * e.pow(2) + CycNum(3) * e + 1;
  CHECK(a.inv() == (CycNum(7) * e.pow(3) + CycNum(4) * e.pow(2) + e + 8) * q(1, 5));
  CHECK(CycNum(1).inv() == CycNum(1));
  CHECK(CycNum::zeta(1).inv() == CycNum::zeta(119));
  CHECK_THROWS_AS(CycNum().inv(), DomainError);
}

TEST_CASE("named constants") {
  const CycNum e = k("eps");
  CHECK(k("alpha") == e.pow(3) + e.pow(2) + 1);
  CHECK(k("omega").pow(3) == CycNum(1));
  CHECK(k("omega") != CycNum(1));
  CHECK(k("nu1") * k("nu2") == CycNum(1));
  CHECK(k("nu1").pow(2) + k("nu2").pow(2) == q(-1, 2));
  CHECK(near(embed(k("nu1")), {std::sqrt(3.0 / 8), std::sqrt(5.0 / 8)}));
  CHECK(near(embed(k("sqrt15")), std::sqrt(15.0)));
  CHECK(near(embed(e), std::polar(1.0, 2 * std::numbers::pi / 5)));
  CHECK(k("beta") == k("alpha").pow(2));
  CHECK(k("gamma") == -k("alpha"));
  CHECK(k("zeta8") == CycNum::zeta(15));
  CHECK_THROWS_AS(constant("phi"), DomainError);
}

TEST_CASE("square roots and i") {
  CHECK(k("sqrt2").pow(2) == CycNum(2));
  CHECK(k("sqrt3").pow(2) == CycNum(3));
  CHECK(k("sqrt5").pow(2) == CycNum(5));
  CHECK(k("sqrt15").pow(2) == CycNum(15));
  CHECK(k("i").pow(2) == CycNum(-1));
  CHECK(near(embed(k("sqrt2")), std::sqrt(2.0)));
  CHECK(near(embed(k("sqrt3")), std::sqrt(3.0)));
  CHECK(near(embed(k("sqrt5")), std::sqrt(5.0)));
}

TEST_CASE("galois") {
  Sampler s;
  const CycNum a = s.scalar();
  CHECK(galois(1, a) == a);
  CHECK(galois(7, k("eps")) == k("eps").pow(2));
  CHECK(galois(7, k("sqrt5")) == -k("sqrt5"));
  CHECK_THROWS_AS(galois(6, a), DomainError);
}

TEST_CASE("galois maps are ring homomorphisms and compose") {
  Sampler s(kSeed + 10);
  const int units[] = {7, 11, 13, 17, 49, 77, 119};
  for (int n = 0; n < 50; ++n) {
    const CycNum a = s.scalar();
    const CycNum b = s.scalar();
    const long g = units[n % 7];
    const long h = units[(n + 3) % 7];
    CHECK(galois(g, a + b) == galois(g, a) + galois(g, b));
    CHECK(galois(g, a * b) == galois(g, a) * galois(g, b));
    CHECK(galois(g, galois(h, a)) == galois((g * h) % 120, a));
    CHECK(galois(g, q(3, 7)) == q(3, 7));
  }
}

TEST_CASE("roots of unity") {
  CHECK(as_root_of_unity(k("omega")) == 40);
  CHECK_FALSE(as_root_of_unity(CycNum(2)).has_value());
  CHECK(as_root_of_unity(CycNum(-1)) == 60);
  CHECK(as_root_of_unity(k("i")) == 30);
  CHECK(as_root_of_unity(CycNum(1)) == 0);
}

TEST_CASE("canonical form") {
  Sampler s(kSeed + 11);
  for (int n = 0; n < 100; ++n) {
    const CycNum a = s.scalar();
    const CycNum z = a + (-a);
    for (int j = 0; j < CycNum::kDegree; ++j) CHECK(z.coeff(j) == 0);
  }
  CHECK(CycNum(Rational(60, 27)) == q(20, 9));
  CHECK(CycNum(Rational(60, 27)).denominator() == 9);
}

TEST_CASE("nonzero elements are invertible") {
  Sampler s(kSeed + 12);
  for (int n = 0; n < 200; ++n) {
    const CycNum a = s.nonzero_scalar();
    CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("scalar syntax round trip") {
  CHECK(parse_scalar("w") == k("omega"));
  CHECK(parse_scalar("e5") == k("eps"));
  CHECK(parse_scalar("3/4*s15 - i") == q(3, 4) * k("sqrt15") - k("i"));
  CHECK(parse_scalar("z120^7") == CycNum::zeta(7));
  CHECK(parse_scalar("(1+i)/s2") == k("zeta8"));
  CHECK_THROWS_AS(parse_scalar("3*"), ParseError);
  Sampler s(kSeed + 13);
  for (int n = 0; n < 200; ++n) {
    const CycNum a = s.scalar();
    CHECK(parse_scalar(to_string(a)) == a);
  }
}
