#pragma once

// Named matrices and generator lists.
//
// Entries whose printed form is inconsistent with the surrounding identities
// are stored twice: the consistent form under the plain name and the printed
// form under "<name>@printed". A catalog built with printed = true resolves
// plain names to the printed form where one exists.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubsym/exactla.hpp"

namespace cubsym {

class Catalog {
 public:
  explicit Catalog(bool printed = false);

  bool printed() const { return printed_; }

  /// Throws DomainError for unknown names.
  const Matrix& matrix(std::string_view name) const;
  std::vector<Matrix> generators(std::string_view group) const;
  const std::vector<std::string>& generator_names(std::string_view group) const;

  bool has_matrix(std::string_view name) const;
  bool has_group(std::string_view name) const;
  std::vector<std::string> matrix_names() const;
  std::vector<std::string> group_names() const;

  /// Adds 1 to entry (r, c) of the named matrix, as resolved by matrix().
  void mutate(std::string_view name, std::size_t r, std::size_t c);

 private:
  std::string resolve(std::string_view name) const;

  bool printed_;
  std::map<std::string, Matrix, std::less<>> matrices_;
  std::map<std::string, std::vector<std::string>, std::less<>> groups_;
};

/// The 4x4 permutation matrix with P e_j = e_sigma(j), sigma given zero-based.
Matrix permutation_matrix(const std::array<int, 4>& sigma);

}  // namespace cubsym
