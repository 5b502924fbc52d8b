#include "cubsym/projgroup.hpp"

#include <numeric>
#include <unordered_set>

#include "cubsym/errors.hpp"

namespace cubsym {
namespace {

Matrix scaled_to_first_entry(Matrix a) {
  const auto& e = a.entries();
  std::size_t k = 0;
  while (k < e.size() && e[k].is_zero()) ++k;
  if (k == e.size()) throw DomainError("projective element: zero matrix");
  if (e[k].is_one()) return a;
  return e[k].inv() * a;
}

bool is_scalar(const Matrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r == c ? a(r, c) != a(0, 0) : !a(r, c).is_zero()) return false;
    }
  }
  return true;
}

CycNum trace(const Matrix& a) {
  CycNum s;
  for (std::size_t k = 0; k < a.rows(); ++k) s += a(k, k);
  return s;
}

// a with a*r = 1 (mod m).
long inverse_mod(long r, long m) {
  for (long a = 1; a < m; ++a) {
    if (a * r % m == 1) return a;
  }
  return 1;
}

}  // namespace

ProjElem::ProjElem(const Matrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw DomainError("projective element: expected a 4x4 matrix");
  if (det(a).is_zero()) throw DomainError("projective element: singular matrix");
  m_ = scaled_to_first_entry(a);
  hash_ = m_.hash();
}

ProjElem::ProjElem(Matrix a, Trusted) : m_(scaled_to_first_entry(std::move(a))), hash_(m_.hash()) {}

ProjElem ProjElem::identity() { return ProjElem(Matrix::identity(4), Trusted{}); }

bool ProjElem::is_identity() const { return m_ == Matrix::identity(4); }

ProjElem ProjElem::inverse() const { return ProjElem(mat_inv(m_), Trusted{}); }

ProjElem operator*(const ProjElem& a, const ProjElem& b) { return ProjElem(a.m_ * b.m_, ProjElem::Trusted{}); }

ProjElem canonical(const Matrix& a) { return ProjElem(a); }

std::vector<ProjElem> closure(std::span<const ProjElem> gens, std::size_t cap) {
  std::vector<ProjElem> elems{ProjElem::identity()};
  std::unordered_set<ProjElem, ProjElemHash> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      ProjElem h = elems[i] * g;
      if (seen.insert(h).second) {
        elems.push_back(std::move(h));
        if (elems.size() > cap) throw ResourceError("closure: more than " + std::to_string(cap) + " elements", elems.size());
      }
    }
  }
  return elems;
}

std::vector<ProjElem> closure(std::span<const Matrix> gens, std::size_t cap) {
  std::vector<ProjElem> pg;
  pg.reserve(gens.size());
  for (const auto& g : gens) pg.emplace_back(g);
  return closure(std::span<const ProjElem>(pg), cap);
}

std::pair<int, CycNum> scalar_power(const Matrix& a, int cap) {
  if (!a.is_square()) throw DomainError("scalar_power: non-square matrix");
  Matrix x = a;
  for (int k = 1; k <= cap; ++k) {
    if (is_scalar(x)) {
      if (x(0, 0).is_zero()) throw DomainError("scalar_power: singular matrix");
      return {k, x(0, 0)};
    }
    x = x * a;
  }
  throw ResourceError("projective order exceeds " + std::to_string(cap), static_cast<std::size_t>(cap));
}

int proj_order(const ProjElem& g, int cap) { return scalar_power(g.matrix(), cap).first; }

ProjElem conjugate(const ProjElem& x, const ProjElem& g) { return g * x * g.inverse(); }

bool is_automorphism(const Matrix& a, const Form& f) {
  const auto ratio = proportional_forms(act(a, f), f);
  return ratio && !ratio->is_zero();
}

NormalizedLift normalized_lift(const Matrix& a, int cap) {
  const auto [m, lambda] = scalar_power(a, cap);
  if (lambda.is_one()) return {a, CycNum(1), m};
  if (CycNum::kOrder % m != 0) throw DomainError("normalized_lift: order does not divide 120");
  const int n = static_cast<int>(a.rows());
  const int step = CycNum::kOrder / m;

  // The eigenvalues of A are mu*zeta_m^j for one mu with mu^m = lambda, so
  // tr(A^r) = mu^r * sum_j zeta_m^(r j) for some multiset of exponents j.
  Matrix power = a;
  for (int r = 1; r < m; ++r) {
    if (r > 1) power = power * a;
    if (std::gcd(r, m) != 1) continue;
    const CycNum tr = trace(power);
    if (tr.is_zero()) continue;
    const long ar = inverse_mod(r, m);
    const long bm = (1 - ar * r) / m;
    std::vector<int> j(static_cast<std::size_t>(n), 0);
    while (true) {
      CycNum s;
      for (int e : j) s += CycNum::zeta(static_cast<long>(step) * r * e);
      if (!s.is_zero()) {
        const CycNum mu = (tr / s).pow(ar) * lambda.pow(bm);
        if (mu.pow(m) == lambda) return {mu.inv() * a, mu, m};
      }
      // Next nondecreasing tuple.
      int k = n - 1;
      while (k >= 0 && j[static_cast<std::size_t>(k)] == m - 1) --k;
      if (k < 0) break;
      const int v = j[static_cast<std::size_t>(k)] + 1;
      for (int q = k; q < n; ++q) j[static_cast<std::size_t>(q)] = v;
    }
  }
  throw DomainError("normalized_lift: no scalar with mu^m = lambda in the field");
}

}  // namespace cubsym
