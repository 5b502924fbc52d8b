#include "doctest.h"

#include "cubsym/errors.hpp"
#include "cubsym/jacobian.hpp"
#include "sampling.hpp"

using namespace cubsym;
using namespace cubsym::testing;

namespace {
Form f(std::string_view text) { return parse_form(text); }
std::vector<Form> fs(std::initializer_list<std::string_view> texts) {
  std::vector<Form> out;
  for (auto t : texts) out.push_back(parse_form(t));
  return out;
}
std::vector<Form> grads(const Form& g) {
  const auto p = partials(g);
  return {p.begin(), p.end()};
}
const char* const kG1Form = "3*s15*x^3 + 10*(y^3+z^3+t^3) - 3*s15*x*y^2 - 6*(s15*x+5*y)*z*t";
}  // namespace

TEST_CASE("groebner bases of monomial ideals") {
  CHECK(groebner(fs({"x", "y", "z", "t"})).elements == fs({"x", "y", "z", "t"}));
  CHECK(groebner(grads(f("x^3+y^3+z^3+t^3"))).elements == fs({"x^2", "y^2", "z^2", "t^2"}));
  CHECK(groebner(grads(f("y^3+z^3+t^3"))).elements == fs({"y^2", "z^2", "t^2"}));
}

TEST_CASE("groebner basis of a small non-monomial ideal") {
  // (x^2 - y^2, x*y): the S-pair gives y^3.
  const auto gb = groebner(fs({"x^2 - y^2", "x*y"}));
  CHECK(gb.elements == fs({"y^3", "x^2 - y^2", "x*y"}));
  CHECK(satisfies_buchberger_criterion(gb.elements));
  CHECK_FALSE(satisfies_buchberger_criterion(fs({"x^2 - y^2", "x*y"})));
}

TEST_CASE("normal forms and S-polynomials") {
  CHECK(s_polynomial(f("x^2 - y^2"), f("x*y")) == f("-y^3"));
  CHECK(normal_form(f("x^2*y + z^3"), fs({"x*y"})) == f("z^3"));
  CHECK(normal_form(f("x^3"), fs({"x^2 - y^2", "x*y", "y^3"})).is_zero());
}

TEST_CASE("nonsingularity") {
  CHECK(is_nonsingular(f("x^3+y^3+z^3+t^3")));
  CHECK(is_nonsingular(f("x^2*y+y^2*z+z^2*t+t^2*x")));
  CHECK(is_nonsingular(f(kG1Form)));
  const auto cone = singularity_report(f("y^3+z^3+t^3"));
  CHECK_FALSE(cone.nonsingular);
  REQUIRE(cone.witness.has_value());
  CHECK(*cone.witness == ProjPoint::coordinate(0));
  CHECK_FALSE(is_nonsingular(f("x^3+y^3+z^3")));
  // A cone over a smooth conic is singular only at its vertex.
  CHECK_FALSE(is_nonsingular(f("x^2 + y^2 + z^2")));
  CHECK(is_nonsingular(f("x^2 + y^2 + z^2 + t^2")));
  CHECK_THROWS_AS(is_nonsingular(f("x + y")), DomainError);
}

TEST_CASE("singular points") {
  CHECK(singular_at(f("y^3+z^3+t^3"), ProjPoint::coordinate(0)));
  CHECK_FALSE(singular_at(f("x^3+y^3+z^3+t^3"), ProjPoint::coordinate(0)));
  Sampler s(kSeed + 40);
  for (int n = 0; n < 20; ++n) {
    const Form g = CycNum(s.nonzero_scalar()) * f("z^2*t") + CycNum(s.scalar()) * f("x*t^2") +
                   CycNum(s.scalar()) * f("y*t^2") + CycNum(s.scalar()) * f("x*y*z");
    CHECK(singular_at(g, ProjPoint::coordinate(0)));
  }
}

TEST_CASE("recomputation is identical") {
  for (const auto* text : {kG1Form, "x^2*y+y^2*z+z^2*t+t^2*x"}) {
    const auto a = groebner(grads(f(text)));
    const auto b = groebner(grads(f(text)));
    CHECK(a.elements == b.elements);
    CHECK(a.pairs_reduced == b.pairs_reduced);
    CHECK(satisfies_buchberger_criterion(a.elements));
    for (const auto& e : a.elements) CHECK(e.leading_coeff().is_one());
  }
}

TEST_CASE("pair cap") {
  CHECK_THROWS_AS(groebner(grads(f("x^2*y+y^2*z+z^2*t+t^2*x")), 1), ResourceError);
}

TEST_CASE("forms divisible by a variable are singular") {
  Sampler s(kSeed + 41);
  for (int n = 0; n < 30; ++n) {
    const int v = s.uniform(0, 3);
    const Form g = s.integer_form(2, 5).times_term(Monomial::var(v), CycNum(1));
    if (g.is_zero()) continue;
    REQUIRE(divisible_by_variable(g).has_value());
    CHECK_FALSE(is_nonsingular(g));
  }
}

TEST_CASE("nonsingularity is invariant under linear changes of coordinates") {
  Sampler s(kSeed + 42);
  for (int n = 0; n < 10; ++n) {
    const Form g = n % 2 ? f("x^3+2*y^3+3*z^3+5*t^3") + s.integer_form(3, 2) : s.integer_form(3, 6);
    if (g.is_zero()) continue;
    const Matrix a = s.invertible_rational_matrix();
    CHECK(is_nonsingular(g) == is_nonsingular(act(a, g)));
  }
}
