#include "doctest.h"

#include "cubsym/catalog.hpp"
#include "cubsym/errors.hpp"
#include "cubsym/forms.hpp"
#include "cubsym/projgroup.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace cubsym;
using namespace cubsym::testing;

namespace {
CycNum k(std::string_view n) { return constant(n); }
Form f(std::string_view text) { return parse_form(text); }
const Catalog& cat() {
  static const Catalog c;
  return c;
}
const char* const kG1Form = "3*s15*x^3 + 10*(y^3+z^3+t^3) - 3*s15*x*y^2 - 6*(s15*x+5*y)*z*t";
const char* const kClebsch = "x^2*y+y^2*z+z^2*t+t^2*x";
}  // namespace

TEST_CASE("monomial order and basis") {
  const auto& b3 = monomial_basis(3);
  CHECK(b3.size() == 20);
  CHECK(to_string(b3.front()) == "x^3");
  CHECK(to_string(b3.back()) == "t^3");
  for (std::size_t j = 0; j + 1 < b3.size(); ++j) CHECK(GrevlexGreater{}(b3[j], b3[j + 1]));
  CHECK(GrevlexGreater{}(f("y^3").leading_monomial(), f("x*z^2").leading_monomial()));
  for (std::size_t j = 0; j < b3.size(); ++j) CHECK(monomial_index(b3[j]) == j);
}

TEST_CASE("act") {
  const Form g = f(kClebsch);
  CHECK(act(Matrix::identity(4), g) == g);
  const CycNum alpha = k("alpha");
  CHECK(act(mat_inv(cat().matrix("I")), g) == CycNum(5) * (CycNum(4) * alpha + 3) * g);

  // Direct double substitution: act(B, x^2 y) swaps x and y, then act(A, .)
  // scales x by omega^-1.
  const Matrix a = Matrix::diag({k("omega"), 1, 1, 1});
  const Matrix b = cat().matrix("S4hat.12");
  const Form mono = f("x^2*y");
  const Form twice = act(a, act(b, mono));
  CHECK(twice == act(a * b, mono));
  CHECK(twice == k("omega").inv() * f("x*y^2"));
  CHECK_THROWS_AS(act(Matrix::diag({1, 1, 0, 1}), mono), DomainError);
}

TEST_CASE("partials") {
  const auto pf = partials(f("x^3+y^3+z^3+t^3"));
  CHECK(pf[0] == f("3*x^2"));
  CHECK(pf[1] == f("3*y^2"));
  CHECK(pf[2] == f("3*z^2"));
  CHECK(pf[3] == f("3*t^2"));
  const auto px = partials(f("x^2*y"));
  CHECK(px[0] == f("2*x*y"));
  CHECK(px[1] == f("x^2"));
  CHECK(px[2].is_zero());
  CHECK(px[3].is_zero());
  const Form g1 = f(kG1Form);
  const auto pg = partials(g1);
  for (int v = 0; v < kVars; ++v) CHECK(pg[static_cast<std::size_t>(v)] == termwise_partial(g1, v));
}

TEST_CASE("evaluation") {
  CHECK(eval(f("x^3+y^3+z^3+t^3"), ProjPoint::coordinate(0)) == CycNum(1));
  CHECK(eval(f(kClebsch), ProjPoint::coordinate(0)).is_zero());
  const ProjPoint p({0, 0, 1, -1});
  CHECK(eval(f(kG1Form), p).is_zero());
  const std::array<CycNum, 4> v{2, 3, 5, 7};
  // x^2 y + y^2 z + z^2 t + t^2 x at (2, 3, 5, 7), expanded by hand.
  CHECK(eval(f(kClebsch), std::span<const CycNum, 4>(v)) == CycNum(4 * 3 + 9 * 5 + 25 * 7 + 49 * 2));
}

TEST_CASE("projective points") {
  const ProjPoint p({0, 2, 4, 0});
  CHECK(p[1] == CycNum(1));
  CHECK(p[2] == CycNum(2));
  CHECK(to_string(ProjPoint::coordinate(3)) == "(0, 0, 0, 1)");
  CHECK_THROWS_AS(ProjPoint({0, 0, 0, 0}), DomainError);
}

TEST_CASE("proportional forms") {
  const Form g = f(kG1Form);
  CHECK(proportional_forms(CycNum(2) * g, g) == CycNum(2));
  const Form c = f(kClebsch);
  const auto ratio = proportional_forms(act(mat_inv(cat().matrix("H")), c), c);
  REQUIRE(ratio.has_value());
  CHECK(ratio->pow(5) == CycNum(1));
  CHECK_FALSE(proportional_forms(f("x^3"), f("y^3")).has_value());
}

TEST_CASE("representation matrices") {
  CHECK(rep_matrix(Matrix::identity(4), 3) == Matrix::identity(20));
  const CycNum l = k("omega") + 2;
  CHECK(rep_matrix(l * Matrix::identity(4), 3) == l.pow(-3) * Matrix::identity(20));

  // Oracle: act-composition on all 20 basis monomials.
  Sampler s(kSeed + 30);
  for (int n = 0; n < 10; ++n) {
    const Matrix a = s.catalog_matrix(cat());
    const Matrix b = s.catalog_matrix(cat());
    const Matrix rab = rep_matrix(a * b, 3);
    CHECK(rep_matrix(a, 3) * rep_matrix(b, 3) == rab);
    for (std::size_t j = 0; j < 20; ++j) {
      const Form mono = Form::monomial(monomial_basis(3)[j]);
      CHECK(coefficients(act(a, act(b, mono)), 3) == rab.column(j));
    }
  }
}

TEST_CASE("coefficient vectors") {
  Sampler s(kSeed + 31);
  for (int n = 0; n < 50; ++n) {
    const Form g = s.form(3, 6);
    CHECK(from_coefficients(coefficients(g, 3), 3) == g);
  }
}

TEST_CASE("divisibility by a variable") {
  CHECK(divisible_by_variable(f("x^3 + x^2*y")) == 0);
  CHECK_FALSE(divisible_by_variable(f("x^3+y^3+z^3+t^3")).has_value());
  CHECK(divisible_by_variable(f("x^2*z + y^2*z + z^2*t")) == 2);
  CHECK_FALSE(divisible_by_variable(f("x^2*z + y^2*z + z^2*t + x*t^2")).has_value());
  CHECK_FALSE(divisible_by_variable(Form(3)).has_value());
}

TEST_CASE("parsing and printing") {
  const Form fermat = f("x^3+y^3+z^3+t^3");
  CHECK(fermat.size() == 4);
  CHECK(fermat.degree() == 3);
  const Form g1 = f(kG1Form);
  const CycNum s15 = k("sqrt15");
  Form expected(3);
  expected.add_term(f("x^3").leading_monomial(), 3 * s15);
  for (const auto* m : {"y^3", "z^3", "t^3"}) expected.add_term(f(m).leading_monomial(), 10);
  expected.add_term(f("x*y^2").leading_monomial(), -3 * s15);
  expected.add_term(f("x*z*t").leading_monomial(), -6 * s15);
  expected.add_term(f("y*z*t").leading_monomial(), -30);
  CHECK(g1 == expected);
  const Form zero = f("x^2*y - x^2*y");
  CHECK(zero.is_zero());
  CHECK(to_string(zero) == "0");
  CHECK(f("(x+y)^2") == f("x^2 + 2*x*y + y^2"));
  CHECK(f("2 x y") == f("2*x*y"));
  CHECK_THROWS_AS(f("x^2 + y"), DomainError);
  CHECK_THROWS_AS(f("x^2 + * y^2"), ParseError);
  CHECK_THROWS_AS(f("x^2 * q"), ParseError);

  Sampler s(kSeed + 32);
  for (int n = 0; n < 100; ++n) {
    const Form g = s.form(s.uniform(1, 4), 5);
    CHECK(f(to_string(g)) == g);
  }
}

TEST_CASE("act composes") {
  Sampler s(kSeed + 33);
  for (int n = 0; n < 100; ++n) {
    const Matrix a = s.catalog_matrix(cat());
    const Matrix b = s.catalog_matrix(cat());
    const Form g = s.form(3, 3);
    CHECK(act(a, act(b, g)) == act(a * b, g));
    CHECK(coefficients(act(a, g), 3) == rep_matrix(a, 3) * coefficients(g, 3));
  }
}

TEST_CASE("gradient rows transform covariantly at fixed points") {
  // For (A) fixing a coordinate point p on V(f) with f_A ~ f, the gradient
  // row at p times A is proportional to the gradient row at p.
  const std::vector<std::pair<std::string, std::string>> cases{
      {"G27.A1", "x^3+y^3+z^3+t^3"}, {"S4hat.12", "x^3+y^3+z^3+t^3"}, {"H", kClebsch}, {"G1.E1", kG1Form}};
  int checked = 0;
  for (const auto& [name, text] : cases) {
    const Matrix& a = cat().matrix(name);
    const Form g = f(text);
    REQUIRE(is_automorphism(a, g));
    for (int v = 0; v < kVars; ++v) {
      const ProjPoint p = ProjPoint::coordinate(v);
      Vector image = a * Vector(p.coords().begin(), p.coords().end());
      if (!proportional(image, Vector(p.coords().begin(), p.coords().end()))) continue;
      if (!eval(g, p).is_zero()) continue;
      Vector grad(4);
      const auto pg = partials(g);
      for (int j = 0; j < kVars; ++j) grad[static_cast<std::size_t>(j)] = eval(pg[static_cast<std::size_t>(j)], p);
      const Vector row = a.transpose() * grad;
      const bool zero = std::all_of(grad.begin(), grad.end(), [](const CycNum& c) { return c.is_zero(); });
      CHECK((zero || proportional(row, grad).has_value()));
      ++checked;
    }
  }
  CHECK(checked > 0);
}
