#include "doctest.h"

#include <algorithm>
#include <unordered_set>

#include "cubsym/catalog.hpp"
#include "cubsym/errors.hpp"
#include "cubsym/projgroup.hpp"
#include "sampling.hpp"

using namespace cubsym;
using namespace cubsym::testing;

namespace {
CycNum k(std::string_view n) { return constant(n); }
CycNum q(long p, long d = 1) { return CycNum(Rational(p, d)); }
const Catalog& cat() {
  static const Catalog c;
  return c;
}
const Matrix& m(std::string_view n) { return cat().matrix(n); }
using ElemSet = std::unordered_set<ProjElem, ProjElemHash>;
ElemSet as_set(const std::vector<ProjElem>& v) { return ElemSet(v.begin(), v.end()); }
}  // namespace

TEST_CASE("canonical representatives") {
  CHECK(canonical(CycNum(2) * Matrix::identity(4)).matrix() == Matrix::identity(4));
  CHECK(canonical(m("G1.F")).matrix() == m("F1"));
  CHECK(canonical(k("omega") * m("G1.E1")) == canonical(m("G1.E1")));
  CHECK(ProjElem(m("K")).matrix()(0, 0) == CycNum(1));
  CHECK_THROWS_AS(ProjElem(Matrix::diag({1, 1, 1, 0})), DomainError);
  CHECK_THROWS_AS(ProjElem(Matrix::identity(3)), DomainError);
}

TEST_CASE("closure sizes") {
  CHECK(closure(cat().generators("G27")).size() == 27);
  CHECK(closure(cat().generators("G1prime")).size() == 120);
  CHECK(closure(cat().generators("G27S4")).size() == 648);
  CHECK(closure(cat().generators("D3S4")).size() == 648);
  CHECK(closure(cat().generators("G1")).size() == 120);
  CHECK(closure(cat().generators("S4hat")).size() == 24);
}

TEST_CASE("closure is a group") {
  const auto g = closure(cat().generators("G1prime"));
  const ElemSet set = as_set(g);
  CHECK(g.front().is_identity());
  CHECK(set.size() == g.size());
  for (std::size_t a = 0; a < g.size(); a += 7) {
    CHECK(set.contains(g[a].inverse()));
    for (std::size_t b = 0; b < g.size(); b += 5) CHECK(set.contains(g[a] * g[b]));
  }
}

TEST_CASE("closure cap") {
  try {
    closure(cat().generators("G27S4"), 100);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.partial() > 100);
  }
}

TEST_CASE("projective orders") {
  CHECK(proj_order(ProjElem(m("H"))) == 5);
  CHECK(proj_order(ProjElem::identity()) == 1);
  CHECK(proj_order(ProjElem(m("G1.F"))) == 2);
  CHECK(proj_order(ProjElem(m("K"))) == 5);
  CHECK(proj_order(ProjElem(m("F1"))) == 2);
  CHECK_THROWS_AS(proj_order(ProjElem(Matrix::diag({2, 1, 1, 1}))), ResourceError);
  const auto [order, lambda] = scalar_power(m("G1.F"));
  CHECK(order == 2);
  CHECK(lambda == k("i"));
}

TEST_CASE("orders divide and match cyclic closures") {
  for (const auto& group : {"G1", "G1prime", "G27S4"}) {
    const auto elems = closure(cat().generators(group));
    for (std::size_t j = 0; j < elems.size(); j += 11) {
      const int o = proj_order(elems[j]);
      const std::vector<ProjElem> one{elems[j]};
      CHECK(closure(one).size() == static_cast<std::size_t>(o));
      CHECK(elems.size() % static_cast<std::size_t>(o) == 0);
    }
  }
}

TEST_CASE("conjugation") {
  const ProjElem h(m("H"));
  const ProjElem j(m("J"));
  CHECK(conjugate(h, j) == ProjElem(m("H") * m("H")));
  CHECK(conjugate(ProjElem(m("I")), j) == ProjElem(m("Iprime")));
  CHECK(m("J") * m("I") * mat_inv(m("J")) == k("beta") * m("Iprime"));
  CHECK(conjugate(h, ProjElem::identity()) == h);
}

TEST_CASE("catalog contents") {
  const Catalog printed(true);
  const auto g1 = printed.generators("G1");
  REQUIRE(g1.size() == 4);
  const CycNum s15 = k("sqrt15");
  CHECK(g1[2](0, 0) == q(1, 4));
  CHECK(g1[2](0, 1) == -s15 * q(1, 4));
  CHECK(g1[2](1, 0) == s15 * q(1, 4));
  CHECK(cat().matrix("G1.E3@printed") == g1[2]);
  CHECK(cat().matrix("G1.E3@corrected") == cat().matrix("G1.E3"));
  const CycNum w = k("omega");
  CHECK(cat().generators("S_diag").front() == Matrix::diag({1, 1, w, w * w}));
  CHECK(cat().generators("S_diag").size() == 6);
  const auto g27 = cat().generators("G27");
  REQUIRE(g27.size() == 3);
  CHECK(g27[0] == Matrix::diag({w, 1, 1, 1}));
  CHECK(g27[1] == Matrix::diag({1, w, 1, 1}));
  CHECK(g27[2] == Matrix::diag({1, 1, w, 1}));
  CHECK_THROWS_AS(cat().matrix("nope"), DomainError);
  CHECK_THROWS_AS(cat().generators("nope"), DomainError);
  for (const auto& name : cat().matrix_names()) {
    const Matrix& a = cat().matrix(name);
    if (name == "L31sys" || name == "Bsys" || name == "CFS") continue;
    CHECK_MESSAGE(!det(a).is_zero(), name);
  }
}

TEST_CASE("mutation adds one to an entry") {
  Catalog c;
  const Matrix before = c.matrix("H");
  c.mutate("H", 0, 0);
  CHECK(c.matrix("H")(0, 0) == before(0, 0) + 1);
  CHECK_THROWS_AS(c.mutate("H", 4, 0), DomainError);
}

TEST_CASE("automorphisms") {
  const Form fermat = parse_form("x^3+y^3+z^3+t^3");
  const auto elems = closure(cat().generators("D3S4"));
  CHECK(std::all_of(elems.begin(), elems.end(), [&](const ProjElem& g) { return is_automorphism(g.matrix(), fermat); }));
  CHECK(is_automorphism(m("J"), parse_form("x^2*y+y^2*z+z^2*t+t^2*x")));
  CHECK_FALSE(is_automorphism(Matrix::diag({2, 1, 1, 1}), fermat));
}

TEST_CASE("diagonal witnesses") {
  const Matrix a = m("S_diag.6");
  const std::vector<ProjElem> targets{ProjElem(m("T_diag.3")), ProjElem(m("T_diag.4"))};
  for (int b_index = 2; b_index <= 5; ++b_index) {
    const Matrix b = m("S_diag." + std::to_string(b_index));
    bool found = false;
    Matrix ai = Matrix::identity(4);
    for (int i = 0; i < 3; ++i, ai = ai * a) {
      Matrix bj = Matrix::identity(4);
      for (int j = 0; j < 3; ++j, bj = bj * b) {
        found = found || std::find(targets.begin(), targets.end(), ProjElem(ai * bj)) != targets.end();
      }
    }
    CHECK_MESSAGE(found, b_index);
  }
  const std::vector<Matrix> ab{a, m("T_diag.3")};
  const ElemSet group = as_set(closure(ab));
  CHECK(group.contains(ProjElem(m("S_diag.2"))));
  CHECK(group.contains(ProjElem(m("S_diag.4"))));
}

TEST_CASE("permutation conjugation of diagonals") {
  std::array<int, 4> sigma{0, 1, 2, 3};
  const std::array<CycNum, 4> d{2, 3, 5, 7};
  do {
    const Matrix s = permutation_matrix(sigma);
    std::array<CycNum, 4> b;
    for (std::size_t i = 0; i < 4; ++i) b[static_cast<std::size_t>(sigma[i])] = d[i];
    CHECK(s * Matrix::diag(d) * mat_inv(s) == Matrix::diag(b));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("five-cycle and transposition generate S5") {
  CHECK(proj_order(ProjElem(m("K"))) == 5);
  CHECK(proj_order(ProjElem(m("F1"))) == 2);
  const std::vector<Matrix> kf{m("K"), m("G1.F")};
  CHECK(closure(kf).size() == 120);
}

TEST_CASE("normalized lifts") {
  const auto f = normalized_lift(m("G1.F"));
  CHECK(f.order == 2);
  CHECK(f.lift * f.lift == Matrix::identity(4));
  CHECK(f.scale * f.lift == m("G1.F"));
  const auto h = normalized_lift(CycNum(3) * m("H"));
  CHECK(h.order == 5);
  CHECK(h.lift.entries().size() == 16);
  Matrix p = Matrix::identity(4);
  for (int j = 0; j < 5; ++j) p = p * h.lift;
  CHECK(p == Matrix::identity(4));
}
