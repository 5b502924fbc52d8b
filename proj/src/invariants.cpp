#include "cubsym/invariants.hpp"

#include "cubsym/errors.hpp"
#include "cubsym/projgroup.hpp"

namespace cubsym {
namespace {

struct Prepared {
  Matrix lift;
  Matrix rep;  // matrix of g -> act(lift^-1, g)
  std::vector<int> exponents;
};

Prepared prepare(const Matrix& a, int d) {
  Prepared p;
  int m = 1;
  CycNum target(1);
  try {
    NormalizedLift nl = normalized_lift(a);
    p.lift = std::move(nl.lift);
    m = nl.order;
  } catch (const DomainError&) {
    auto [order, lambda] = scalar_power(a);
    p.lift = a;
    m = order;
    target = lambda.pow(d);
  }
  if (const auto t = as_root_of_unity(target)) {
    for (int k = 0; k < CycNum::kOrder; ++k) {
      if ((k * m - *t) % CycNum::kOrder == 0) p.exponents.push_back(k);
    }
  }
  if (static_cast<int>(p.exponents.size()) != m) throw DomainError("relative_invariants: characters of a generator lie outside the field");
  p.rep = rep_matrix_with_inverse(p.lift, d);
  return p;
}

std::vector<Prepared> prepare_all(std::span<const Matrix> generators, int d) {
  std::vector<Prepared> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(prepare(g, d));
  return out;
}

// Columns of `basis` spanning the part of span(basis) on which rep acts as mu.
std::vector<Vector> restrict_to_eigenspace(const Matrix& rep, const CycNum& mu, const std::vector<Vector>& basis) {
  const std::size_t n = rep.rows();
  Matrix shifted = rep;
  for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= mu;
  const Matrix span_matrix = Matrix::from_columns(basis);
  const auto coeffs = kernel_basis(shifted * span_matrix);
  std::vector<Vector> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(span_matrix * c);
  return out;
}

InvariantSpace make_space(const std::vector<Prepared>& gens, const std::vector<int>& exps, const std::vector<Vector>& basis, int d) {
  InvariantSpace s;
  s.degree = d;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    s.character.lifts.push_back(gens[k].lift);
    s.character.exponents.push_back(exps[k]);
    s.character.scalars.push_back(CycNum::zeta(exps[k]));
  }
  for (const auto& row : echelon_rows(basis)) s.basis.push_back(from_coefficients(row, d));
  return s;
}

void search(const std::vector<Prepared>& gens, std::size_t level, std::vector<int>& exps, const std::vector<Vector>& basis, int d,
            std::vector<InvariantSpace>& out) {
  if (level == gens.size()) {
    out.push_back(make_space(gens, exps, basis, d));
    return;
  }
  for (const int k : gens[level].exponents) {
    auto next = restrict_to_eigenspace(gens[level].rep, CycNum::zeta(k), basis);
    if (next.empty()) continue;
    exps.push_back(k);
    search(gens, level + 1, exps, next, d, out);
    exps.pop_back();
  }
}

std::vector<Vector> full_space(int d) {
  const std::size_t n = monomial_basis(d).size();
  std::vector<Vector> basis(n, Vector(n));
  for (std::size_t k = 0; k < n; ++k) basis[k][k] = 1;
  return basis;
}

}  // namespace

bool CharacterAssignment::is_trivial() const {
  for (int k : exponents) {
    if (k != 0) return false;
  }
  return true;
}

std::vector<InvariantSpace> relative_invariants(std::span<const Matrix> generators, int d) {
  const auto gens = prepare_all(generators, d);
  std::vector<InvariantSpace> out;
  std::vector<int> exps;
  search(gens, 0, exps, full_space(d), d, out);
  return out;
}

InvariantSpace strict_invariants(std::span<const Matrix> generators, int d) {
  const auto gens = prepare_all(generators, d);
  std::vector<Vector> basis = full_space(d);
  for (const auto& g : gens) {
    if (basis.empty()) break;
    basis = restrict_to_eigenspace(g.rep, CycNum(1), basis);
  }
  return make_space(gens, std::vector<int>(gens.size(), 0), basis, d);
}

std::optional<ProjPoint> common_singular_coordinate_point(std::span<const Form> forms) {
  if (forms.empty()) return std::nullopt;
  for (int v = 0; v < kVars; ++v) {
    const ProjPoint p = ProjPoint::coordinate(v);
    bool singular = true;
    for (const auto& f : forms) {
      for (const auto& df : partials(f)) {
        if (!eval(df, p).is_zero()) {
          singular = false;
          break;
        }
      }
      if (!singular) break;
    }
    if (singular) return p;
  }
  return std::nullopt;
}

std::optional<ProjPoint> common_singular_coordinate_point(const InvariantSpace& space) {
  return common_singular_coordinate_point(std::span<const Form>(space.basis));
}

std::string to_string(const CharacterAssignment& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.scalars.size(); ++k) {
    if (k) out += ", ";
    out += to_string(c.scalars[k]);
  }
  return out + "]";
}

}  // namespace cubsym
