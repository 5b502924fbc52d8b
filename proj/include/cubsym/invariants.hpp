#pragma once

// Relative invariants: forms g with act(A^-1, g) = mu * g for every
// generator lift A, enumerated over all admissible characters mu.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubsym/exactla.hpp"
#include "cubsym/forms.hpp"

namespace cubsym {

/// One scalar per generator. Each generator is replaced by a lift A/s with
/// (A/s)^m = E whenever such an s exists; mu then runs over m-th roots of
/// unity. Otherwise the given lift is kept and mu runs over the 120th roots
/// of unity with mu^m = lambda^d, where A^m = lambda E.
struct CharacterAssignment {
  std::vector<Matrix> lifts;
  std::vector<int> exponents;  // mu_i = zeta^exponents[i]
  std::vector<CycNum> scalars;

  bool is_trivial() const;
};

struct InvariantSpace {
  int degree = 0;
  CharacterAssignment character;
  std::vector<Form> basis;  // reduced echelon form over the monomial order

  std::size_t dimension() const { return basis.size(); }
};

/// Every nonzero relative-invariant space of degree d. Throws DomainError
/// when a generator has no usable lift and ResourceError when its projective
/// order exceeds the cap.
std::vector<InvariantSpace> relative_invariants(std::span<const Matrix> generators, int d);

/// The space for the all-ones character on the normalized lifts; may be empty.
InvariantSpace strict_invariants(std::span<const Matrix> generators, int d);

/// A coordinate point at which every partial of every form vanishes.
std::optional<ProjPoint> common_singular_coordinate_point(std::span<const Form> forms);
std::optional<ProjPoint> common_singular_coordinate_point(const InvariantSpace& space);

std::string to_string(const CharacterAssignment& c);

}  // namespace cubsym
