#pragma once

// Homogeneous forms in x, y, z, t over Q(zeta120) and the substitution action
// f -> f_A, where f_A(v) = f(A^-1 v). This action composes as
// (f_B)_A = f_{AB}.
//
// Monomials are ordered graded-reverse-lexicographically with x > y > z > t.
// The same order indexes coefficient vectors and drives Groebner bases.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubsym/cyclofield.hpp"
#include "cubsym/exactla.hpp"

namespace cubsym {

inline constexpr int kVars = 4;

struct Monomial {
  std::array<int, kVars> e{};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool divides(const Monomial& o) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  static Monomial var(int v, int power = 1);
  static Monomial lcm(const Monomial& a, const Monomial& b);
};

/// Strict "a comes before b" in descending grevlex order.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree d, in descending grevlex order.
const std::vector<Monomial>& monomial_basis(int d);
std::size_t monomial_index(const Monomial& m);

class Form {
 public:
  using Terms = std::map<Monomial, CycNum, GrevlexGreater>;

  explicit Form(int degree = 0) : degree_(degree) {}
  static Form monomial(const Monomial& m, const CycNum& c = CycNum(1));
  static Form variable(int v) { return monomial(Monomial::var(v)); }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CycNum coeff(const Monomial& m) const;

  /// Adds c*m; m must have this form's degree unless the form is zero.
  void add_term(const Monomial& m, const CycNum& c);

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const CycNum& leading_coeff() const { return terms_.begin()->second; }

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(const CycNum& s, const Form& f);
  Form times_term(const Monomial& m, const CycNum& c) const;

  /// Zero forms compare equal regardless of nominal degree.
  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

 private:
  int degree_;
  Terms terms_;
};

/// A point of P^3, scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::array<CycNum, kVars> coords);
  /// The coordinate point e_v.
  static ProjPoint coordinate(int v);

  const std::array<CycNum, kVars>& coords() const { return c_; }
  const CycNum& operator[](int v) const { return c_[v]; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;

 private:
  std::array<CycNum, kVars> c_;
};

std::string to_string(const ProjPoint& p);

Form partial(const Form& f, int var);
std::array<Form, kVars> partials(const Form& f);
CycNum eval(const Form& f, std::span<const CycNum, kVars> v);
CycNum eval(const Form& f, const ProjPoint& p);

/// f(L_0, ..., L_3) for linear forms L_v.
Form substitute(const Form& f, const std::array<Form, kVars>& linear);
/// f_A. Throws DomainError when A is singular.
Form act(const Matrix& a, const Form& f);
/// f_A given A^-1 directly.
Form act_with_inverse(const Matrix& a_inv, const Form& f);

std::optional<CycNum> proportional_forms(const Form& f, const Form& g);

Vector coefficients(const Form& f, int d);
Form from_coefficients(const Vector& v, int d);
/// M with coefficients(act(A, f)) = M * coefficients(f) in degree d.
Matrix rep_matrix(const Matrix& a, int d);
Matrix rep_matrix_with_inverse(const Matrix& a_inv, int d);

/// Index of a variable dividing every monomial of f; empty for f = 0.
std::optional<int> divisible_by_variable(const Form& f);

/// Grammar: form := term (('+'|'-') term)*; term := scalar? ('*'? atom)*;
/// atom := var ('^' nat)? | '(' form ')'. Throws ParseError, and DomainError
/// for inhomogeneous input.
Form parse_form(std::string_view text);
std::string to_string(const Form& f);
std::string to_string(const Monomial& m);

}  // namespace cubsym
