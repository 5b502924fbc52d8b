#include "cubsym/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cubsym/errors.hpp"

namespace cubsym {
namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DomainError(std::string(op) + ": matrix is not square");
}

// Row index in [from, rows) whose entry in column c is nonzero with the
// smallest support, or rows when the column is zero there.
std::size_t pick_pivot(const Matrix& m, std::size_t from, std::size_t c) {
  std::size_t best = m.rows();
  int best_support = CycNum::kDegree + 1;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const int s = m(r, c).support();
    if (s > 0 && s < best_support) {
      best = r;
      best_support = s;
      if (s == 1) break;
    }
  }
  return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DomainError("matrix: entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<CycNum>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("matrix: ragged rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::diag(std::span<const CycNum> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
  if (cols.empty()) return {};
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows()) throw DomainError("from_columns: ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const CycNum& v) { return v.is_zero(); });
}

Vector Matrix::row(std::size_t r) const { return Vector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.a_) v = -v;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix add: dimension mismatch");
  Matrix m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sub: dimension mismatch");
  Matrix m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  }
  return m;
}

Matrix operator*(const CycNum& s, const Matrix& a) {
  Matrix m = a;
  for (auto& v : m.a_) v *= s;
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DomainError("matrix-vector product: dimension mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& v : a_) h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

UniPoly::UniPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycNum UniPoly::eval(const CycNum& x) const {
  CycNum acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix UniPoly::eval(const Matrix& a) const {
  require_square(a, "UniPoly::eval");
  Matrix acc(a.rows(), a.cols());
  const Matrix e = Matrix::identity(a.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it * e;
  return acc;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.coeffs().empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const CycNum& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coef = to_string(c);
    std::string term;
    bool negative = false;
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

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << to_string(m(r, c));
    }
    os << "]\n";
  }
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix mat_inv(const Matrix& a) {
  require_square(a, "mat_inv");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = pick_pivot(m, k, k);
    if (p == n) throw DomainError("mat_inv: singular matrix");
    swap_rows(m, k, p);
    swap_rows(inv, k, p);
    const CycNum s = m(k, k).inv();
    for (std::size_t c = 0; c < n; ++c) {
      if (!m(k, c).is_zero()) m(k, c) *= s;
      if (!inv(k, c).is_zero()) inv(k, c) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m(r, k).is_zero()) continue;
      const CycNum f = m(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        if (!m(k, c).is_zero()) m(r, c) -= f * m(k, c);
        if (!inv(k, c).is_zero()) inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

CycNum det(const Matrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  if (n == 0) return CycNum(1);
  Matrix m = a;
  bool negate = false;
  CycNum prev_inv(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t p = pick_pivot(m, k, k);
    if (p == n) return CycNum();
    if (p != k) {
      swap_rows(m, k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycNum v = m(i, j) * m(k, k);
        if (!m(i, k).is_zero() && !m(k, j).is_zero()) v -= m(i, k) * m(k, j);
        m(i, j) = v * prev_inv;
      }
      m(i, k) = CycNum();
    }
    prev_inv = m(k, k).inv();
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
  Matrix m = a;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    const std::size_t p = pick_pivot(m, row, c);
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    const CycNum s = m(row, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= s;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const CycNum f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return m;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::vector<Vector> echelon_rows(std::span<const Vector> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows[0].size();
  Matrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw DomainError("echelon_rows: ragged rows");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  std::vector<std::size_t> pivots;
  const Matrix e = rref(m, &pivots);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(e.row(r));
  return out;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  std::vector<std::size_t> pivots;
  const Matrix e = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, f);
    basis.push_back(std::move(v));
  }
  return echelon_rows(basis);
}

UniPoly char_poly(const Matrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  std::vector<CycNum> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  const Matrix e = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * e;
    const Matrix am = a * m;
    CycNum tr;
    for (std::size_t d = 0; d < n; ++d) tr += am(d, d);
    c[n - k] = -tr * CycNum(Rational(1, static_cast<long>(k)));
  }
  return UniPoly(std::move(c));
}

std::vector<Vector> eigenvectors_for(const Matrix& a, const CycNum& lambda) {
  require_square(a, "eigenvectors_for");
  return kernel_basis(a - lambda * Matrix::identity(a.rows()));
}

CycNum cofactor(const Matrix& a, std::size_t i, std::size_t j) {
  require_square(a, "cofactor");
  if (i >= a.rows() || j >= a.cols()) throw DomainError("cofactor: index out of range");
  const std::size_t n = a.rows();
  Matrix minor(n - 1, n - 1);
  for (std::size_t r = 0, mr = 0; r < n; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, mc = 0; c < n; ++c) {
      if (c == j) continue;
      minor(mr, mc++) = a(r, c);
    }
    ++mr;
  }
  const CycNum d = det(minor);
  return (i + j) % 2 == 0 ? d : -d;
}

std::optional<CycNum> proportional(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("proportional: shape mismatch");
  std::size_t k = 0;
  while (k < b.size() && b[k].is_zero()) ++k;
  if (k == b.size()) return std::nullopt;
  const CycNum lambda = a[k] / b[k];
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != lambda * b[j]) return std::nullopt;
  }
  return lambda;
}

std::optional<CycNum> proportional(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("proportional: shape mismatch");
  return proportional(a.entries(), b.entries());
}

}  // namespace cubsym
