#include "cubsym/jacobian.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cubsym/errors.hpp"

namespace cubsym {
namespace {

Form monic(const Form& f) {
  if (f.is_zero() || f.leading_coeff().is_one()) return f;
  return f.leading_coeff().inv() * f;
}

bool is_pure_power(const Monomial& m, int v) { return m.e[v] > 0 && m.e[v] == m.degree(); }

// Interreduced, monic, sorted basis from any Groebner basis.
std::vector<Form> reduce_basis(std::vector<Form> g) {
  std::vector<Form> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == k) continue;
      const Monomial& lj = g[j].leading_monomial();
      const Monomial& lk = g[k].leading_monomial();
      // For equal leading monomials keep the earlier element.
      redundant = lj.divides(lk) && (lj != lk || j < k);
    }
    if (!redundant) minimal.push_back(monic(g[k]));
  }
  std::vector<Form> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Form> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != k) others.push_back(minimal[j]);
    }
    reduced.push_back(monic(normal_form(minimal[k], others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Form& a, const Form& b) { return GrevlexGreater{}(a.leading_monomial(), b.leading_monomial()); });
  return reduced;
}

}  // namespace

Form normal_form(const Form& f, std::span<const Form> basis) {
  Form rem(f.degree());
  Form h = f;
  while (!h.is_zero()) {
    const Monomial m = h.leading_monomial();
    const CycNum c = h.leading_coeff();
    const Form* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(m)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      h -= divisor->times_term(m / divisor->leading_monomial(), c / divisor->leading_coeff());
    } else {
      rem.add_term(m, c);
      h -= Form::monomial(m, c);
    }
  }
  return rem;
}

Form s_polynomial(const Form& f, const Form& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(l / f.leading_monomial(), f.leading_coeff().inv()) -
         g.times_term(l / g.leading_monomial(), g.leading_coeff().inv());
}

bool satisfies_buchberger_criterion(std::span<const Form> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis groebner(std::span<const Form> generators, std::size_t pair_cap) {
  std::vector<Form> g;
  for (const auto& f : generators) {
    if (!f.is_zero()) g.push_back(monic(f));
  }
  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.contains({std::min(a, b), std::max(a, b)}); };

  GroebnerBasis out;
  while (!pending.empty()) {
    // Normal selection: smallest lcm of leading monomials.
    auto best = pending.begin();
    Monomial best_lcm = Monomial::lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Monomial l = Monomial::lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
      if (GrevlexGreater{}(best_lcm, l)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = g[i].leading_monomial();
    const Monomial& lj = g[j].leading_monomial();
    if (best_lcm == li * lj) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = g[k].leading_monomial().divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    if (++out.pairs_reduced > pair_cap) throw ResourceError("groebner: S-polynomial cap exceeded", out.pairs_reduced - 1);
    Form r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(monic(r));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  out.elements = reduce_basis(std::move(g));
  if (!satisfies_buchberger_criterion(out.elements)) throw Error("groebner: result fails the S-polynomial check");
  return out;
}

bool singular_at(const Form& f, const ProjPoint& p) {
  for (const auto& df : partials(f)) {
    if (!eval(df, p).is_zero()) return false;
  }
  return true;
}

SingularityReport singularity_report(const Form& f, std::size_t pair_cap) {
  if (f.degree() < 2) throw DomainError("singularity test: degree must be at least 2");
  const auto grads = partials(f);
  SingularityReport rep;
  rep.basis = groebner(grads, pair_cap);
  rep.nonsingular = true;
  for (int v = 0; v < kVars; ++v) {
    const bool found = std::any_of(rep.basis.elements.begin(), rep.basis.elements.end(),
                                   [v](const Form& e) { return is_pure_power(e.leading_monomial(), v); });
    if (!found) rep.nonsingular = false;
  }
  for (int v = 0; v < kVars && !rep.witness; ++v) {
    const ProjPoint p = ProjPoint::coordinate(v);
    if (singular_at(f, p)) rep.witness = p;
  }
  return rep;
}

bool is_nonsingular(const Form& f, std::size_t pair_cap) { return singularity_report(f, pair_cap).nonsingular; }

}  // namespace cubsym
