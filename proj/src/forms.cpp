#include "cubsym/forms.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cubsym/detail/expr_parser.hpp"
#include "cubsym/errors.hpp"

namespace cubsym {
namespace {

constexpr int kMaxBasisDegree = 16;
constexpr std::array<char, kVars> kVarNames{'x', 'y', 'z', 't'};

}  // namespace

bool Monomial::divides(const Monomial& o) const {
  for (int v = 0; v < kVars; ++v) {
    if (e[v] > o.e[v]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kVars; ++v) m.e[v] = a.e[v] + b.e[v];
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kVars; ++v) m.e[v] = a.e[v] - b.e[v];
  return m;
}

Monomial Monomial::var(int v, int power) {
  Monomial m;
  m.e[v] = power;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kVars; ++v) m.e[v] = std::max(a.e[v], b.e[v]);
  return m;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  for (int v = kVars - 1; v >= 0; --v) {
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
  }
  return false;
}

const std::vector<Monomial>& monomial_basis(int d) {
  static const std::vector<std::vector<Monomial>> table = [] {
    std::vector<std::vector<Monomial>> t(kMaxBasisDegree + 1);
    for (int deg = 0; deg <= kMaxBasisDegree; ++deg) {
      for (int a = 0; a <= deg; ++a) {
        for (int b = 0; a + b <= deg; ++b) {
          for (int c = 0; a + b + c <= deg; ++c) t[deg].push_back(Monomial{{a, b, c, deg - a - b - c}});
        }
      }
      std::sort(t[deg].begin(), t[deg].end(), GrevlexGreater{});
    }
    return t;
  }();
  if (d < 0 || d > kMaxBasisDegree) throw DomainError("monomial_basis: degree out of range");
  return table[d];
}

std::size_t monomial_index(const Monomial& m) {
  const auto& basis = monomial_basis(m.degree());
  auto it = std::lower_bound(basis.begin(), basis.end(), m, GrevlexGreater{});
  return static_cast<std::size_t>(it - basis.begin());
}

Form Form::monomial(const Monomial& m, const CycNum& c) {
  Form f(m.degree());
  f.add_term(m, c);
  return f;
}

CycNum Form::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum() : it->second;
}

void Form::add_term(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  if (m.degree() != degree_) {
    if (!terms_.empty()) throw DomainError("form: degree mismatch");
    degree_ = m.degree();
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (o.is_zero()) return *this;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.is_zero()) return *this;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  Form out(a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Form operator*(const CycNum& s, const Form& f) {
  Form out(f.degree_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
  return out;
}

Form Form::times_term(const Monomial& m, const CycNum& c) const {
  Form out(degree_ + m.degree());
  if (c.is_zero()) return out;
  // Multiplying by a monomial preserves the term order.
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c * cc);
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

ProjPoint::ProjPoint(std::array<CycNum, kVars> coords) : c_(std::move(coords)) {
  int v = 0;
  while (v < kVars && c_[v].is_zero()) ++v;
  if (v == kVars) throw DomainError("projective point: all coordinates are zero");
  if (!c_[v].is_one()) {
    const CycNum s = c_[v].inv();
    for (auto& c : c_) c *= s;
  }
}

ProjPoint ProjPoint::coordinate(int v) {
  std::array<CycNum, kVars> c;
  c[v] = 1;
  return ProjPoint(c);
}

std::string to_string(const ProjPoint& p) {
  std::string out = "(";
  for (int v = 0; v < kVars; ++v) {
    if (v) out += ", ";
    out += to_string(p[v]);
  }
  return out + ")";
}

Form partial(const Form& f, int var) {
  Form out(std::max(f.degree() - 1, 0));
  for (const auto& [m, c] : f.terms()) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    --d.e[var];
    out.add_term(d, CycNum(m.e[var]) * c);
  }
  return out;
}

std::array<Form, kVars> partials(const Form& f) {
  return {partial(f, 0), partial(f, 1), partial(f, 2), partial(f, 3)};
}

CycNum eval(const Form& f, std::span<const CycNum, kVars> v) {
  CycNum acc;
  for (const auto& [m, c] : f.terms()) {
    CycNum term = c;
    for (int k = 0; k < kVars && !term.is_zero(); ++k) {
      if (m.e[k] > 0) term *= v[k].pow(m.e[k]);
    }
    acc += term;
  }
  return acc;
}

CycNum eval(const Form& f, const ProjPoint& p) { return eval(f, std::span<const CycNum, kVars>(p.coords())); }

namespace {

// Powers L_v^k, 0 <= k <= d, of a fixed set of linear forms.
class PowerCache {
 public:
  PowerCache(const std::array<Form, kVars>& linear, int d) {
    for (int v = 0; v < kVars; ++v) {
      pow_[v].push_back(Form::monomial(Monomial{}, CycNum(1)));
      for (int k = 1; k <= d; ++k) pow_[v].push_back(pow_[v].back() * linear[v]);
    }
  }
  Form product(const Monomial& m) const {
    Form out = pow_[0][m.e[0]];
    for (int v = 1; v < kVars; ++v) {
      if (m.e[v] > 0) out = out * pow_[v][m.e[v]];
    }
    return out;
  }

 private:
  std::array<std::vector<Form>, kVars> pow_;
};

std::array<Form, kVars> rows_as_linear_forms(const Matrix& b) {
  if (b.rows() != kVars || b.cols() != kVars) throw DomainError("forms: expected a 4x4 matrix");
  std::array<Form, kVars> linear;
  for (int i = 0; i < kVars; ++i) {
    linear[i] = Form(1);
    for (int j = 0; j < kVars; ++j) linear[i].add_term(Monomial::var(j), b(i, j));
  }
  return linear;
}

}  // namespace

Form substitute(const Form& f, const std::array<Form, kVars>& linear) {
  Form out(f.degree());
  if (f.is_zero()) return out;
  const PowerCache cache(linear, f.degree());
  for (const auto& [m, c] : f.terms()) out += c * cache.product(m);
  return out;
}

Form act_with_inverse(const Matrix& a_inv, const Form& f) { return substitute(f, rows_as_linear_forms(a_inv)); }

Form act(const Matrix& a, const Form& f) { return act_with_inverse(mat_inv(a), f); }

std::optional<CycNum> proportional_forms(const Form& f, const Form& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return CycNum();
  if (f.degree() != g.degree() || f.size() != g.size()) return std::nullopt;
  const CycNum lambda = f.coeff(g.leading_monomial()) / g.leading_coeff();
  if (lambda.is_zero()) return std::nullopt;
  for (const auto& [m, c] : g.terms()) {
    if (f.coeff(m) != lambda * c) return std::nullopt;
  }
  return lambda;
}

Vector coefficients(const Form& f, int d) {
  if (!f.is_zero() && f.degree() != d) throw DomainError("coefficients: degree mismatch");
  const auto& basis = monomial_basis(d);
  Vector v(basis.size());
  for (const auto& [m, c] : f.terms()) v[monomial_index(m)] = c;
  return v;
}

Form from_coefficients(const Vector& v, int d) {
  const auto& basis = monomial_basis(d);
  if (v.size() != basis.size()) throw DomainError("from_coefficients: length mismatch");
  Form f(d);
  for (std::size_t k = 0; k < v.size(); ++k) f.add_term(basis[k], v[k]);
  return f;
}

Matrix rep_matrix_with_inverse(const Matrix& a_inv, int d) {
  const auto& basis = monomial_basis(d);
  const PowerCache cache(rows_as_linear_forms(a_inv), d);
  Matrix m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Form image = cache.product(basis[col]);
    for (const auto& [mono, c] : image.terms()) m(monomial_index(mono), col) = c;
  }
  return m;
}

Matrix rep_matrix(const Matrix& a, int d) { return rep_matrix_with_inverse(mat_inv(a), d); }

std::optional<int> divisible_by_variable(const Form& f) {
  if (f.is_zero()) return std::nullopt;
  for (int v = 0; v < kVars; ++v) {
    bool all = true;
    for (const auto& [m, c] : f.terms()) {
      if (m.e[v] == 0) {
        all = false;
        break;
      }
    }
    if (all) return v;
  }
  return std::nullopt;
}

namespace {

// Inhomogeneous polynomial used while parsing.
struct Poly {
  std::map<Monomial, CycNum, GrevlexGreater> t;
  void add(const Monomial& m, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
};

struct PolyBuilder {
  using Value = Poly;
  Value from_scalar(const CycNum& c) {
    Poly p;
    p.add(Monomial{}, c);
    return p;
  }
  std::optional<Value> variable(std::string_view name) {
    if (name.size() != 1) return std::nullopt;
    for (int v = 0; v < kVars; ++v) {
      if (name[0] == kVarNames[v]) {
        Poly p;
        p.add(Monomial::var(v), CycNum(1));
        return p;
      }
    }
    return std::nullopt;
  }
  Value add(Value a, const Value& b) {
    for (const auto& [m, c] : b.t) a.add(m, c);
    return a;
  }
  Value sub(Value a, const Value& b) {
    for (const auto& [m, c] : b.t) a.add(m, -c);
    return a;
  }
  Value neg(Value a) {
    for (auto& [m, c] : a.t) c = -c;
    return a;
  }
  Value mul(const Value& a, const Value& b) {
    Poly p;
    for (const auto& [ma, ca] : a.t) {
      for (const auto& [mb, cb] : b.t) p.add(ma * mb, ca * cb);
    }
    return p;
  }
  Value pow(const Value& a, long e) {
    if (e > 64) throw DomainError("exponent too large");
    Value out = from_scalar(CycNum(1));
    for (long k = 0; k < e; ++k) out = mul(out, a);
    return out;
  }
  std::optional<CycNum> as_constant(const Value& a) {
    if (a.t.empty()) return CycNum();
    if (a.t.size() == 1 && a.t.begin()->first.degree() == 0) return a.t.begin()->second;
    return std::nullopt;
  }
};

}  // namespace

Form parse_form(std::string_view text) {
  PolyBuilder b;
  const Poly p = detail::ExprParser<PolyBuilder>(text, b).parse();
  Form f(p.t.empty() ? 0 : p.t.begin()->first.degree());
  for (const auto& [m, c] : p.t) {
    if (m.degree() != f.degree()) throw DomainError("form is not homogeneous");
    f.add_term(m, c);
  }
  return f;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int v = 0; v < kVars; ++v) {
    if (m.e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[v];
    if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    const std::string mono = m.degree() == 0 ? "" : to_string(m);
    std::string coef = to_string(c);
    bool negative = false;
    std::string term;
    if (is_compound(c)) {
      term = "(" + coef + ")" + (mono.empty() ? "" : "*" + mono);
    } else {
      if (coef[0] == '-') {
        negative = true;
        coef = coef.substr(1);
      }
      if (mono.empty()) {
        term = coef;
      } else {
        term = coef == "1" ? mono : coef + "*" + mono;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace cubsym
