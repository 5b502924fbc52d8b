#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(2*pi*i/120).
//
// Elements are residues modulo the 120th cyclotomic polynomial
//   Phi_120(x) = x^32 + x^28 - x^20 - x^16 - x^12 + x^4 + 1,
// stored as 32 integer numerators over one positive common denominator.
// The representation is canonical (numerator content and denominator are
// coprime), so value equality is structural equality.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace cubsym {

using Rational = mpq_class;
using Integer = mpz_class;

class CycNum {
 public:
  static constexpr int kOrder = 120;
  static constexpr int kDegree = 32;

  CycNum() = default;
  CycNum(long v);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// zeta^k for any integer k.
  static CycNum zeta(long k);
  static CycNum from_rationals(const std::array<Rational, kDegree>& coeffs);

  /// Coefficient of zeta^j in the power basis, 0 <= j < 32.
  Rational coeff(int j) const;
  const Integer& numerator(int j) const { return num_[j]; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Number of nonzero power-basis coefficients.
  int support() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Multiplicative inverse by the extended Euclidean algorithm against
  /// Phi_120. Throws DomainError on zero.
  CycNum inv() const;
  /// Integer power; negative exponents go through inv().
  CycNum pow(long e) const;

  std::size_t hash() const;

 private:
  void normalize();
  friend CycNum mul_impl(const CycNum& a, const CycNum& b);

  std::array<Integer, kDegree> num_{};
  Integer den_{1};
};

/// Ring automorphism zeta -> zeta^k. Requires gcd(k, 120) = 1.
CycNum galois(long k, const CycNum& a);

/// k in [0, 120) with a = zeta^k, if a is a 120th root of unity.
std::optional<int> as_root_of_unity(const CycNum& a);

/// Named constants under the fixed embedding: omega, i, eps, alpha, beta,
/// gamma, nu1, nu2, sqrt2, sqrt3, sqrt5, sqrt15, zeta8. Throws DomainError
/// for other names.
CycNum constant(std::string_view name);

/// Scalar text syntax: p/q, w, i, e5, s2, s3, s5, s15, z120^k combined with
/// + - * / ^ and parentheses.
CycNum parse_scalar(std::string_view text);

/// Parseable text; tries q, p + q*c for a table of named constants c, and
/// falls back to a sum of q*z120^k terms.
std::string to_string(const CycNum& a);

/// Whether to_string(a) needs parentheses when used as a factor.
bool is_compound(const CycNum& a);

struct CycNumHash {
  std::size_t operator()(const CycNum& a) const { return a.hash(); }
};

}  // namespace cubsym
