#include "doctest.h"

#include "cubsym/catalog.hpp"
#include "cubsym/errors.hpp"
#include "cubsym/exactla.hpp"
#include "oracles.hpp"
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
Matrix tkt() { return mat_inv(m("Tmat")) * m("K") * m("Tmat"); }
bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNum& x) { return x.is_zero(); });
}
}  // namespace

TEST_CASE("products and inverses") {
  CHECK(m("G1.E1") * m("F1") * m("G1.E2") * m("F1") * m("G1.E3") == m("K"));
  CHECK(mat_inv(Matrix::identity(4)) == Matrix::identity(4));
  CHECK(mat_inv(m("Tmat")) * m("F1") * m("Tmat") == Matrix::diag({1, 1, 1, -1}));
  CHECK(tkt() == m("TKT"));
  CHECK_THROWS_AS(mat_inv(Matrix::diag({1, 0, 1, 1})), DomainError);
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DomainError);
}

TEST_CASE("determinants") {
  const CycNum e = k("eps");
  const CycNum closed = -k("i") * q(8, 25) * k("sqrt3") * e.pow(3) * (e - 1).pow(3) *
                        (CycNum(3) * e.pow(3) + CycNum(6) * e.pow(2) + CycNum(4) * e + 2);
  CHECK(det(m("Smat@printed")) == closed);
  CHECK(det(Matrix::identity(4)) == CycNum(1));
  const CycNum di = det(m("I"));
  CHECK_FALSE(di.is_zero());
  CHECK(di == laplace_det(m("I")));
}

TEST_CASE("elimination and Laplace determinants agree on catalog matrices") {
  for (const auto& name : cat().matrix_names()) {
    const Matrix& a = cat().matrix(name);
    if (!a.is_square()) continue;
    CHECK_MESSAGE(det(a) == laplace_det(a), name);
  }
}

TEST_CASE("rank and kernels") {
  const Matrix& sys = m("L31sys");
  const Vector line{3 * k("sqrt15"), 10, 0, -3 * k("sqrt15")};
  CHECK(is_zero_vector(sys * line));
  // The printed system has a second independent solution.
  CHECK(rank(sys) == 2);
  const auto ker = kernel_basis(sys);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero_vector(sys * v));
  CHECK(kernel_basis(Matrix::identity(4)).empty());
  CHECK(rank(m("Bsys")) == 3);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(tkt()) == UniPoly({1, 1, 1, 1, 1}));
  CHECK(char_poly(Matrix::identity(4)) == UniPoly({1, -4, 6, -4, 1}));
  const CycNum w = k("omega");
  CHECK(char_poly(Matrix::diag({w, w * w, 1, 1})) == UniPoly({1, -1, 0, -1, 1}));
}

TEST_CASE("eigenvectors") {
  const CycNum e = k("eps");
  const CycNum r = k("sqrt15") * q(1, 15);
  const Vector expected{1, (CycNum(1) + CycNum(4) * e) * r, (CycNum(1) + e + CycNum(3) * e * e) * r,
                        k("i") * (e.pow(3) - e.pow(4)) * k("sqrt5") * q(1, 5)};
  const auto ev = eigenvectors_for(tkt(), e);
  REQUIRE(ev.size() == 1);
  CHECK(proportional(ev[0], expected).has_value());
  Vector printed = expected;
  printed[3] = k("i") * (e.pow(3) - e.pow(4)) * k("sqrt3") * q(1, 5);
  CHECK_FALSE(proportional(ev[0], printed).has_value());
  CHECK(eigenvectors_for(Matrix::identity(4), 1).size() == 4);
  CHECK(char_poly(tkt()).eval(CycNum(1)) == CycNum(5));
  CHECK(eigenvectors_for(tkt(), 1).empty());
}

TEST_CASE("cofactors") {
  CHECK(cofactor(Matrix::identity(4), 0, 0) == CycNum(1));
  const Matrix& s = m("Smat@printed");
  CycNum laplace;
  for (std::size_t j = 0; j < 4; ++j) laplace += s(0, j) * cofactor(s, 0, j);
  CHECK(laplace == det(s));
  CHECK(cofactor(Matrix::diag({2, 3, 4, 5}), 1, 1) == CycNum(40));
  CHECK_THROWS_AS(cofactor(Matrix::identity(4), 4, 0), DomainError);
}

TEST_CASE("proportionality") {
  CHECK(proportional(CycNum(2) * Matrix::identity(4), Matrix::identity(4)) == CycNum(2));
  const Matrix sp = m("Sprime");
  CHECK(proportional(mat_inv(sp) * m("G1.F") * sp, m("I")).has_value());
  CHECK_FALSE(proportional(m("G1.E1"), m("G1.F")).has_value());
  CHECK_FALSE(proportional(Matrix::identity(4), Matrix(4, 4)).has_value());
}

TEST_CASE("determinant is multiplicative") {
  Sampler s(kSeed + 20);
  for (int n = 0; n < 100; ++n) {
    const Matrix a = s.sparse_matrix();
    const Matrix b = s.sparse_matrix();
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("inverse, rank and nullity on random matrices") {
  Sampler s(kSeed + 21);
  for (int n = 0; n < 100; ++n) {
    const Matrix a = s.sparse_matrix();
    const auto ker = kernel_basis(a);
    CHECK(rank(a) + ker.size() == 4);
    for (const auto& v : ker) CHECK(is_zero_vector(a * v));
    if (!det(a).is_zero()) {
      CHECK(a * mat_inv(a) == Matrix::identity(4));
    } else {
      CHECK_THROWS_AS(mat_inv(a), DomainError);
    }
  }
}

TEST_CASE("kernel of a wide matrix is in reduced echelon form") {
  const Matrix a{{1, 2, 3}, {2, 4, 6}};
  const auto ker = kernel_basis(a);
  REQUIRE(ker.size() == 2);
  CHECK(ker[0] == Vector{1, 0, q(-1, 3)});
  CHECK(ker[1] == Vector{0, 1, q(-2, 3)});
}
