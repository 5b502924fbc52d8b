#include "cubsym/cyclofield.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "cubsym/detail/expr_parser.hpp"
#include "cubsym/errors.hpp"

namespace cubsym {
namespace {

constexpr int kN = CycNum::kDegree;

// x^32 = -x^28 + x^20 + x^16 + x^12 - x^4 - 1  (mod Phi_120)
constexpr std::array<std::pair<int, int>, 6> kTail{{{28, -1}, {20, 1}, {16, 1}, {12, 1}, {4, -1}, {0, -1}}};

// Reduces r[0..len) in place so that only r[0..32) is nonzero.
void reduce_in_place(Integer* r, int len) {
  for (int k = len - 1; k >= kN; --k) {
    if (sgn(r[k]) == 0) continue;
    const int base = k - kN;
    for (auto [e, s] : kTail) {
      if (s > 0) {
        r[base + e] += r[k];
      } else {
        r[base + e] -= r[k];
      }
    }
    r[k] = 0;
  }
}

using QPoly = std::vector<Rational>;  // ascending, trimmed

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  QPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

// a = q*b + r with deg r < deg b; b nonempty.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

QPoly phi_poly() {
  QPoly p(kN + 1, Rational(0));
  p[kN] = 1;
  for (auto [e, s] : kTail) p[e] = -s;
  return p;
}

const std::array<CycNum, CycNum::kOrder>& power_table() {
  static const auto table = [] {
    std::array<CycNum, CycNum::kOrder> t;
    std::array<Integer, kN + 1> cur{};
    cur[0] = 1;
    for (int e = 0; e < CycNum::kOrder; ++e) {
      std::array<Rational, kN> q;
      for (int j = 0; j < kN; ++j) q[j] = cur[j];
      t[e] = CycNum::from_rationals(q);
      // multiply by x
      for (int j = kN; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      reduce_in_place(cur.data(), kN + 1);
    }
    return t;
  }();
  return table;
}

long mod120(long k) {
  long r = k % CycNum::kOrder;
  return r < 0 ? r + CycNum::kOrder : r;
}

}  // namespace

CycNum::CycNum(long v) { num_[0] = v; }

CycNum::CycNum(const Rational& q) {
  num_[0] = q.get_num();
  den_ = q.get_den();
  if (sgn(den_) < 0) {
    num_[0] = -num_[0];
    den_ = -den_;
  }
  normalize();
}

CycNum CycNum::zeta(long k) { return power_table()[mod120(k)]; }

CycNum CycNum::from_rationals(const std::array<Rational, kDegree>& coeffs) {
  CycNum out;
  Integer l = 1;
  for (const auto& c : coeffs) {
    if (sgn(c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  for (int j = 0; j < kDegree; ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    out.num_[j] = coeffs[j].get_num() * (l / coeffs[j].get_den());
  }
  out.den_ = l;
  out.normalize();
  return out;
}

Rational CycNum::coeff(int j) const {
  Rational q(num_[j], den_);
  q.canonicalize();
  return q;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

bool CycNum::is_one() const { return den_ == 1 && num_[0] == 1 && is_rational(); }

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

int CycNum::support() const {
  return static_cast<int>(std::count_if(num_.begin(), num_.end(), [](const Integer& v) { return sgn(v) != 0; }));
}

void CycNum::normalize() {
  Integer g = den_;
  bool any = false;
  for (const auto& v : num_) {
    if (sgn(v) == 0) continue;
    any = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (!any) {
    den_ = 1;
    return;
  }
  if (g == 1) return;
  for (auto& v : num_) {
    if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& v : out.num_) v = -v;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    for (int j = 0; j < kDegree; ++j) num_[j] += o.num_[j];
  } else {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    const Integer fa = l / den_;
    const Integer fb = l / o.den_;
    for (int j = 0; j < kDegree; ++j) {
      if (sgn(num_[j]) != 0) num_[j] *= fa;
      if (sgn(o.num_[j]) != 0) mpz_addmul(num_[j].get_mpz_t(), o.num_[j].get_mpz_t(), fb.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum mul_impl(const CycNum& a, const CycNum& b) {
  CycNum out;
  if (a.is_zero() || b.is_zero()) return out;
  std::array<int, kN> ia{}, ib{};
  int na = 0, nb = 0;
  for (int j = 0; j < kN; ++j) {
    if (sgn(a.num_[j]) != 0) ia[na++] = j;
    if (sgn(b.num_[j]) != 0) ib[nb++] = j;
  }
  thread_local std::array<Integer, 2 * kN - 1> r;
  for (auto& v : r) v = 0;
  int top = 0;
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      const int k = ia[x] + ib[y];
      mpz_addmul(r[k].get_mpz_t(), a.num_[ia[x]].get_mpz_t(), b.num_[ib[y]].get_mpz_t());
      top = std::max(top, k);
    }
  }
  reduce_in_place(r.data(), top + 1);
  for (int j = 0; j < kN; ++j) out.num_[j].swap(r[j]);
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) { return mul_impl(a, b); }

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = mul_impl(*this, o);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  *this = mul_impl(*this, o.inv());
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

CycNum CycNum::inv() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta120)");
  if (support() == 1) {
    int j = 0;
    while (sgn(num_[j]) == 0) ++j;
    Rational q(den_, num_[j]);
    q.canonicalize();
    return CycNum(q) * zeta(-j);
  }
  QPoly r0 = phi_poly();
  QPoly r1(kN);
  for (int j = 0; j < kN; ++j) r1[j] = coeff(j);
  trim(r1);
  QPoly t0, t1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly t = sub_mul(t0, q, t1);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
    // Keep the remainder monic to limit coefficient growth.
    if (!r1.empty()) {
      const Rational s = 1 / r1.back();
      for (auto& c : r1) c *= s;
      for (auto& c : t1) c *= s;
    }
  }
  // r0 is a nonzero constant since Phi_120 is irreducible.
  const Rational c = 1 / r0[0];
  std::array<Rational, kN> out;
  for (std::size_t j = 0; j < t0.size(); ++j) out[j] = t0[j] * c;
  return from_rationals(out);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum result(1);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::size_t CycNum::hash() const {
  std::size_t h = mpz_get_ui(den_.get_mpz_t());
  for (int j = 0; j < kDegree; ++j) {
    const std::size_t v = mpz_get_ui(num_[j].get_mpz_t()) * 2 + (sgn(num_[j]) < 0 ? 1 : 0);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CycNum galois(long k, const CycNum& a) {
  if (std::gcd(mod120(k), static_cast<long>(CycNum::kOrder)) != 1) {
    throw DomainError("galois: exponent " + std::to_string(k) + " is not a unit mod 120");
  }
  const auto& table = power_table();
  std::array<Integer, kN> acc{};
  for (int j = 0; j < kN; ++j) {
    if (sgn(a.numerator(j)) == 0) continue;
    const CycNum& z = table[mod120(j * k)];
    for (int m = 0; m < kN; ++m) {
      if (sgn(z.numerator(m)) != 0) {
        mpz_addmul(acc[m].get_mpz_t(), a.numerator(j).get_mpz_t(), z.numerator(m).get_mpz_t());
      }
    }
  }
  std::array<Rational, kN> q;
  for (int m = 0; m < kN; ++m) q[m] = Rational(acc[m], a.denominator());
  for (auto& v : q) v.canonicalize();
  return CycNum::from_rationals(q);
}

std::optional<int> as_root_of_unity(const CycNum& a) {
  if (a.denominator() != 1) return std::nullopt;
  const auto& table = power_table();
  for (int k = 0; k < CycNum::kOrder; ++k) {
    if (table[k] == a) return k;
  }
  return std::nullopt;
}

namespace {

struct Constants {
  CycNum i, omega, eps, zeta8, sqrt2, sqrt3, sqrt5, sqrt15, alpha, beta, gamma, nu1, nu2;
  Constants() {
    i = CycNum::zeta(30);
    omega = CycNum::zeta(40);
    eps = CycNum::zeta(24);
    zeta8 = CycNum::zeta(15);
    sqrt2 = CycNum::zeta(15) + CycNum::zeta(-15);
    sqrt3 = CycNum::zeta(10) + CycNum::zeta(-10);
    sqrt5 = CycNum(2) * (eps + eps.pow(4)) + CycNum(1);
    sqrt15 = sqrt3 * sqrt5;
    alpha = (CycNum(1) - sqrt5) * CycNum(Rational(1, 2));
    beta = alpha * alpha;
    gamma = -alpha;
    const CycNum denom = (CycNum(2) * sqrt2).inv();
    nu1 = (sqrt3 + i * sqrt5) * denom;
    nu2 = (sqrt3 - i * sqrt5) * denom;
  }
};

const Constants& constants() {
  static const Constants c;
  return c;
}

}  // namespace

CycNum constant(std::string_view name) {
  const auto& c = constants();
  if (name == "omega") return c.omega;
  if (name == "i") return c.i;
  if (name == "eps") return c.eps;
  if (name == "alpha") return c.alpha;
  if (name == "beta") return c.beta;
  if (name == "gamma") return c.gamma;
  if (name == "nu1") return c.nu1;
  if (name == "nu2") return c.nu2;
  if (name == "sqrt2") return c.sqrt2;
  if (name == "sqrt3") return c.sqrt3;
  if (name == "sqrt5") return c.sqrt5;
  if (name == "sqrt15") return c.sqrt15;
  if (name == "zeta8") return c.zeta8;
  throw DomainError("unknown constant '" + std::string(name) + "'");
}

namespace detail {

std::optional<CycNum> scalar_symbol(std::string_view name) {
  const auto& c = constants();
  if (name == "w") return c.omega;
  if (name == "i") return c.i;
  if (name == "e5") return c.eps;
  if (name == "s2") return c.sqrt2;
  if (name == "s3") return c.sqrt3;
  if (name == "s5") return c.sqrt5;
  if (name == "s15") return c.sqrt15;
  if (name == "z120") return CycNum::zeta(1);
  return std::nullopt;
}

}  // namespace detail

namespace {

struct ScalarBuilder {
  using Value = CycNum;
  Value from_scalar(const CycNum& c) { return c; }
  std::optional<Value> variable(std::string_view) { return std::nullopt; }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, long e) { return a.pow(e); }
  std::optional<CycNum> as_constant(const Value& a) { return a; }
};

struct Named {
  std::string text;
  CycNum value;
};

const std::vector<Named>& named_table() {
  static const std::vector<Named> table = [] {
    std::vector<Named> t;
    const auto& c = constants();
    const std::vector<Named> reals = {{"", CycNum(1)},
                                      {"s2", c.sqrt2},
                                      {"s3", c.sqrt3},
                                      {"s5", c.sqrt5},
                                      {"s15", c.sqrt15},
                                      {"s2*s3", c.sqrt2 * c.sqrt3},
                                      {"s2*s5", c.sqrt2 * c.sqrt5},
                                      {"s2*s15", c.sqrt2 * c.sqrt15}};
    for (const auto& r : reals) {
      if (!r.text.empty()) t.push_back(r);
    }
    for (const auto& r : reals) t.push_back({r.text.empty() ? "i" : "i*" + r.text, c.i * r.value});
    for (int k = 1; k <= 4; ++k) t.push_back({k == 1 ? "e5" : "e5^" + std::to_string(k), c.eps.pow(k)});
    t.push_back({"w", c.omega});
    t.push_back({"w^2", c.omega * c.omega});
    for (const int k : {15, 45, 75, 105}) t.push_back({"z120^" + std::to_string(k), CycNum::zeta(k)});
    return t;
  }();
  return table;
}

std::string scaled(const Rational& q, const std::string& name) {
  if (q == 1) return name;
  if (q == -1) return "-" + name;
  return q.get_str() + "*" + name;
}

}  // namespace

CycNum parse_scalar(std::string_view text) {
  ScalarBuilder b;
  return detail::ExprParser<ScalarBuilder>(text, b).parse();
}

std::string to_string(const CycNum& a) {
  if (a.is_rational()) return a.coeff(0).get_str();
  for (const auto& n : named_table()) {
    int j = 1;
    while (j < kN && sgn(n.value.numerator(j)) == 0) ++j;
    if (j == kN || sgn(a.numerator(j)) == 0) continue;
    const Rational q = a.coeff(j) / n.value.coeff(j);
    const CycNum rest = a - CycNum(q) * n.value;
    if (!rest.is_rational()) continue;
    const Rational p = rest.coeff(0);
    const std::string term = scaled(q, n.text);
    if (sgn(p) == 0) return term;
    if (term[0] == '-') return p.get_str() + " - " + term.substr(1);
    return p.get_str() + " + " + term;
  }
  std::string out;
  for (int j = 0; j < kN; ++j) {
    const Rational q = a.coeff(j);
    if (sgn(q) == 0) continue;
    std::string term = j == 0 ? q.get_str() : scaled(q, j == 1 ? "z120" : "z120^" + std::to_string(j));
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

bool is_compound(const CycNum& a) { return to_string(a).find(' ') != std::string::npos; }

}  // namespace cubsym
