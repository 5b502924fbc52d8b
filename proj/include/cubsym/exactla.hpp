#pragma once

// Dense exact linear algebra over Q(zeta120).
//
// Indices are zero-based throughout. Elimination picks, among the admissible
// pivots of a column, the entry with the fewest nonzero power-basis
// coefficients; that keeps most pivot inversions on the cheap monomial path.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubsym/cyclofield.hpp"

namespace cubsym {

using Vector = std::vector<CycNum>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<CycNum> entries);
  Matrix(std::initializer_list<std::initializer_list<CycNum>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diag(std::span<const CycNum> d);
  static Matrix diag(std::initializer_list<CycNum> d) { return diag(std::span<const CycNum>(d.begin(), d.size())); }
  /// Columns given as vectors.
  static Matrix from_columns(std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  CycNum& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<CycNum>& entries() const { return a_; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycNum& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> a_;
};

/// Polynomial in one variable with CycNum coefficients, ascending degree.
/// Trailing zero coefficients are trimmed on construction.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<CycNum> coeffs);

  const std::vector<CycNum>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  CycNum eval(const CycNum& x) const;
  Matrix eval(const Matrix& a) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  std::vector<CycNum> c_;
};

std::string to_string(const UniPoly& p, const std::string& var = "L");
std::string to_string(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Throws DomainError for non-square or singular input.
Matrix mat_inv(const Matrix& a);
/// Bareiss fraction-free elimination.
CycNum det(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Reduced row echelon form; pivot columns are appended to `pivots` when given.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {v : a v = 0}, itself in reduced row echelon form (leading 1s).
std::vector<Vector> kernel_basis(const Matrix& a);

/// det(L*E - a), monic, by Faddeev-LeVerrier.
UniPoly char_poly(const Matrix& a);
std::vector<Vector> eigenvectors_for(const Matrix& a, const CycNum& lambda);
/// Signed minor (-1)^(i+j) det(a without row i, column j).
CycNum cofactor(const Matrix& a, std::size_t i, std::size_t j);
/// lambda with a = lambda * b, if any. b = 0 never yields a ratio.
std::optional<CycNum> proportional(const Matrix& a, const Matrix& b);
/// Same for vectors.
std::optional<CycNum> proportional(const Vector& a, const Vector& b);

/// Row-reduces a list of row vectors; zero rows are dropped.
std::vector<Vector> echelon_rows(std::span<const Vector> rows);

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

}  // namespace cubsym
