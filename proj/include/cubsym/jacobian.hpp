#pragma once

// Groebner bases of homogeneous ideals in x, y, z, t (grevlex) and the
// Jacobian nonsingularity test for hypersurfaces V(f).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubsym/forms.hpp"

namespace cubsym {

inline constexpr std::size_t kDefaultPairCap = 10000;

struct GroebnerBasis {
  std::vector<Form> elements;  // reduced, monic, sorted by descending leading monomial
  std::size_t pairs_reduced = 0;
};

/// Buchberger with normal pair selection and the coprime and chain criteria.
/// Inputs must be homogeneous. Throws ResourceError after `pair_cap`
/// S-polynomial reductions.
GroebnerBasis groebner(std::span<const Form> generators, std::size_t pair_cap = kDefaultPairCap);

/// Remainder of f on division by `basis`, fully reduced.
Form normal_form(const Form& f, std::span<const Form> basis);

Form s_polynomial(const Form& f, const Form& g);

/// Whether every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Form> basis);

struct SingularityReport {
  bool nonsingular = false;
  GroebnerBasis basis;  // of the ideal of partials
  std::optional<ProjPoint> witness;  // a singular coordinate point, if any
};

/// Decides nonsingularity by the pure-power criterion on the Groebner basis
/// of the partials. Requires degree >= 2.
SingularityReport singularity_report(const Form& f, std::size_t pair_cap = kDefaultPairCap);
bool is_nonsingular(const Form& f, std::size_t pair_cap = kDefaultPairCap);

/// Whether every partial of f vanishes at p.
bool singular_at(const Form& f, const ProjPoint& p);

}  // namespace cubsym
