#pragma once

// Independent reference computations for tests: a floating-point embedding
// of Q(zeta120), Phi_120 by repeated division, a Laplace-expansion
// determinant and term-wise differentiation.

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "cubsym/cyclofield.hpp"
#include "cubsym/exactla.hpp"
#include "cubsym/forms.hpp"

namespace cubsym::testing {

inline std::complex<double> embed(const CycNum& a) {
  std::complex<double> z = 0;
  for (int j = 0; j < CycNum::kDegree; ++j) {
    const double c = a.coeff(j).get_d();
    if (c != 0) z += c * std::polar(1.0, 2 * std::numbers::pi * j / CycNum::kOrder);
  }
  return z;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

using QPoly = std::vector<Rational>;  // ascending

inline QPoly trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(out);
}

// Remainder and quotient of a by a monic b.
inline QPoly poly_divmod(QPoly a, const QPoly& b, QPoly* quotient = nullptr) {
  a = trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    const Rational c = a.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a = trim(a);
  }
  if (quotient) *quotient = trim(q);
  return a;
}

// Phi_n as (x^n - 1) divided by Phi_d for every proper divisor d.
inline QPoly cyclotomic(int n) {
  QPoly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    QPoly q;
    poly_divmod(p, cyclotomic(d), &q);
    p = q;
  }
  return p;
}

// x^k reduced mod Phi_120.
inline QPoly zeta_power(int k) {
  QPoly p(static_cast<std::size_t>(k) + 1, Rational(0));
  p[static_cast<std::size_t>(k)] = 1;
  static const QPoly phi = cyclotomic(120);
  return poly_divmod(p, phi);
}

inline QPoly as_poly(const CycNum& a) {
  QPoly p(CycNum::kDegree, Rational(0));
  for (int j = 0; j < CycNum::kDegree; ++j) p[static_cast<std::size_t>(j)] = a.coeff(j);
  return trim(p);
}

inline CycNum laplace_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  CycNum out;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = a(r, c);
      }
    }
    const CycNum term = a(0, j) * laplace_det(minor);
    out += j % 2 ? -term : term;
  }
  return out;
}

inline Form termwise_partial(const Form& f, int v) {
  Form out(f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    if (m.e[v] == 0) continue;
    Monomial d = m;
    --d.e[v];
    out += Form::monomial(d, CycNum(static_cast<long>(m.e[v])) * c);
  }
  return out;
}

}  // namespace cubsym::testing
