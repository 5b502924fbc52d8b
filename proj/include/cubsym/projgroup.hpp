#pragma once

// Elements of PGL4 over Q(zeta120) and finite group enumeration.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cubsym/exactla.hpp"
#include "cubsym/forms.hpp"

namespace cubsym {

/// A coset (A) of PGL4, represented by A scaled so that its first nonzero
/// entry in row-major order is 1.
class ProjElem {
 public:
  /// Throws DomainError when A is not an invertible 4x4 matrix.
  explicit ProjElem(const Matrix& a);
  static ProjElem identity();

  const Matrix& matrix() const { return m_; }
  bool is_identity() const;
  ProjElem inverse() const;

  friend ProjElem operator*(const ProjElem& a, const ProjElem& b);
  friend bool operator==(const ProjElem& a, const ProjElem& b) { return a.m_ == b.m_; }
  std::size_t hash() const { return hash_; }

 private:
  struct Trusted {};
  ProjElem(Matrix a, Trusted);

  Matrix m_;
  std::size_t hash_ = 0;
};

struct ProjElemHash {
  std::size_t operator()(const ProjElem& g) const { return g.hash(); }
};

ProjElem canonical(const Matrix& a);

inline constexpr std::size_t kDefaultClosureCap = 100000;
inline constexpr int kDefaultOrderCap = 360;

/// The subgroup generated by `gens`, identity first, in breadth-first order.
/// Throws ResourceError (partial = elements found) once more than `cap`
/// elements appear.
std::vector<ProjElem> closure(std::span<const ProjElem> gens, std::size_t cap = kDefaultClosureCap);
std::vector<ProjElem> closure(std::span<const Matrix> gens, std::size_t cap = kDefaultClosureCap);

/// Least m >= 1 with g^m = 1. Throws ResourceError beyond `cap`.
int proj_order(const ProjElem& g, int cap = kDefaultOrderCap);

/// (m, lambda) with A^m = lambda * E and m = proj_order((A)).
std::pair<int, CycNum> scalar_power(const Matrix& a, int cap = kDefaultOrderCap);

/// g x g^-1.
ProjElem conjugate(const ProjElem& x, const ProjElem& g);

/// Whether act(A, f) is a nonzero multiple of f.
bool is_automorphism(const Matrix& a, const Form& f);

/// A scalar multiple B = A / scale with B^m = E, m = proj_order((A)), when
/// such a scale exists in the field. Throws DomainError otherwise.
struct NormalizedLift {
  Matrix lift;
  CycNum scale;
  int order = 1;
};
NormalizedLift normalized_lift(const Matrix& a, int cap = kDefaultOrderCap);

}  // namespace cubsym
