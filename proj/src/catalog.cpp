#include "cubsym/catalog.hpp"

#include "cubsym/errors.hpp"

namespace cubsym {
namespace {

CycNum q(long p, long d = 1) { return CycNum(Rational(p, d)); }

Matrix diag4(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) { return Matrix::diag({a, b, c, d}); }

// Symmetric matrix with rows given by successive left shifts of `first`.
Matrix left_circulant(const std::array<CycNum, 4>& first) {
  Matrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = first[(r + c) % 4];
  }
  return m;
}

// Columns [1, (1+4l)s15/15, (1+l+3l^2)s15/15, i(l^3-l^4) * last] for the
// eigenvalues l = eps^4, eps^2, eps, eps^3.
Matrix eigenvector_matrix(const CycNum& last) {
  const CycNum e = constant("eps");
  const CycNum i = constant("i");
  const CycNum r = constant("sqrt15") * q(1, 15);
  Matrix s(4, 4);
  const std::array<int, 4> exps{4, 2, 1, 3};
  for (std::size_t c = 0; c < 4; ++c) {
    const CycNum l = e.pow(exps[c]);
    s(0, c) = 1;
    s(1, c) = (CycNum(1) + CycNum(4) * l) * r;
    s(2, c) = (CycNum(1) + l + CycNum(3) * l * l) * r;
    s(3, c) = i * (l.pow(3) - l.pow(4)) * last;
  }
  return s;
}

Matrix golden_matrix(const CycNum& a) { return left_circulant({CycNum(1), a, a * a, -a}); }

}  // namespace

Matrix permutation_matrix(const std::array<int, 4>& sigma) {
  Matrix p(4, 4);
  for (std::size_t j = 0; j < 4; ++j) p(static_cast<std::size_t>(sigma[j]), j) = 1;
  return p;
}

Catalog::Catalog(bool printed) : printed_(printed) {
  const CycNum w = constant("omega");
  const CycNum w2 = w * w;
  const CycNum i = constant("i");
  const CycNum e = constant("eps");
  const CycNum s2 = constant("sqrt2");
  const CycNum s3 = constant("sqrt3");
  const CycNum s5 = constant("sqrt5");
  const CycNum s15 = constant("sqrt15");
  const CycNum alpha = constant("alpha");
  const CycNum nu1 = constant("nu1");
  const CycNum nu2 = constant("nu2");
  auto& m = matrices_;

  m["G27.A1"] = diag4(w, 1, 1, 1);
  m["G27.A2"] = diag4(1, w, 1, 1);
  m["G27.A3"] = diag4(1, 1, w, 1);
  for (int k = 0; k < 4; ++k) {
    std::array<CycNum, 4> d{1, 1, 1, 1};
    d[static_cast<std::size_t>(k)] = w;
    m["T_diag." + std::to_string(k + 1)] = Matrix::diag(d);
  }
  m["S_diag.1"] = diag4(1, 1, w, w2);
  m["S_diag.2"] = diag4(1, w, 1, w2);
  m["S_diag.3"] = diag4(1, w, w2, 1);
  m["S_diag.4"] = diag4(w, 1, 1, w2);
  m["S_diag.5"] = diag4(w, 1, w2, 1);
  m["S_diag.6"] = diag4(w, w2, 1, 1);
  m["S4hat.12"] = permutation_matrix({1, 0, 2, 3});
  m["S4hat.1234"] = permutation_matrix({1, 2, 3, 0});

  const Matrix swap34 = permutation_matrix({0, 1, 3, 2});
  m["G1.E1"] = diag4(1, 1, w, w2);
  m["G1.E2"] = Matrix{{1, 0, 0, 0}, {0, q(-1, 3), q(2, 3), q(2, 3)}, {0, q(2, 3), q(-1, 3), q(2, 3)}, {0, q(2, 3), q(2, 3), q(-1, 3)}};
  m["G1.E3"] = Matrix{{q(-1, 4), s15 * q(1, 4), 0, 0}, {s15 * q(1, 4), q(1, 4), 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  m["G1.E3@printed"] = Matrix{{q(1, 4), -s15 * q(1, 4), 0, 0}, {s15 * q(1, 4), q(1, 4), 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  m["G1.F"] = ((CycNum(1) + i) / s2) * swap34;
  m["F1"] = swap34;

  m["G2.E1"] = diag4(1, 1, w, w2);
  m["G2.E2"] = s3.inv() * Matrix{{1, 0, 0, s2}, {0, -1, s2, 0}, {0, s2, 1, 0}, {s2, 0, 0, -1}};
  m["G2.E3"] = Matrix{{s3 * q(1, 2), q(1, 2), 0, 0}, {q(1, 2), -s3 * q(1, 2), 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  m["G2.F"] = Matrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};

  m["G3.E1"] = diag4(w, w, w2, w2);
  m["G3.E2"] = s3.inv() * Matrix{{1, 0, 0, s2}, {0, 1, s2, 0}, {0, s2, -1, 0}, {s2, 0, 0, -1}};
  m["G3.E3"] = Matrix{{0, 0, 0, nu1}, {0, 0, nu2, 0}, {0, nu1, 0, 0}, {nu2, 0, 0, 0}};
  m["G3.F"] = Matrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  m["G3.F@printed"] = Matrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 1}, {-1, 0, 0, 0}};

  m["H"] = diag4(e.pow(4), e.pow(2), e, e.pow(3));
  m["I"] = golden_matrix(alpha);
  m["Iprime"] = golden_matrix((s5 + 1) * q(1, 2));
  m["J"] = permutation_matrix({1, 2, 3, 0});
  m["K"] = Matrix{{q(-1, 4), s15 * q(1, 4), 0, 0},
                  {-s15 * q(1, 12), q(-1, 12), q(2, 3), q(2, 3)},
                  {s15 * w * q(1, 6), w * q(1, 6), w * q(2, 3), -w * q(1, 3)},
                  {s15 * w2 * q(1, 6), w2 * q(1, 6), -w2 * q(1, 3), w2 * q(2, 3)}};
  m["Tmat"] = Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
  m["TKT"] = Matrix{{q(-1, 4), s15 * q(1, 4), 0, 0},
                    {-s15 * q(1, 12), q(-1, 12), q(4, 3), 0},
                    {-s15 * q(1, 12), q(-1, 12), q(-1, 6), -i * s3 * q(1, 2)},
                    {-i * s5 * q(1, 4), -i * s3 * q(1, 12), -i * s3 * q(1, 6), q(-1, 2)}};
  m["Smat"] = eigenvector_matrix(s5 * q(1, 5));
  m["Smat@printed"] = eigenvector_matrix(s3 * q(1, 5));
  m["Sprime"] = m["Tmat"] * m["Smat"] * diag4(1, e.pow(2), e.pow(3), e);
  const CycNum m1 = CycNum(2) * e.pow(3) + CycNum(4) * e.pow(2) + CycNum(3) * e + 1;
  const CycNum m2 = CycNum(2) * e.pow(4) + e.pow(3) + 2;
  const CycNum m3 = -e.pow(4) + e.pow(2);
  const CycNum m4 = e.pow(3) + CycNum(2) * e.pow(2) + CycNum(2) * e;
  m["CFS"] = left_circulant({m1, m2, m3, m4});
  m["L31sys"] = Matrix{{-65, 15 * s15, s15, -15},
                       {15 * s15, -63, 15, s15},
                       {3 * s15, 45, -93, 13 * s15},
                       {-45, 3 * s15, 13 * s15, -35}};
  const CycNum a3 = alpha.pow(3);
  const CycNum a4 = -alpha.pow(4);
  m["Bsys"] = left_circulant({CycNum(1), a3, a4, alpha});

  auto& g = groups_;
  g["G27"] = {"G27.A1", "G27.A2", "G27.A3"};
  g["D3"] = {"T_diag.1", "T_diag.2", "T_diag.3", "T_diag.4"};
  g["S4hat"] = {"S4hat.12", "S4hat.1234"};
  g["D3S4"] = {"T_diag.1", "T_diag.2", "T_diag.3", "T_diag.4", "S4hat.12", "S4hat.1234"};
  g["G27S4"] = {"G27.A1", "G27.A2", "G27.A3", "S4hat.12", "S4hat.1234"};
  g["S_diag"] = {"S_diag.1", "S_diag.2", "S_diag.3", "S_diag.4", "S_diag.5", "S_diag.6"};
  g["T_diag"] = {"T_diag.1", "T_diag.2", "T_diag.3", "T_diag.4"};
  g["G1"] = {"G1.E1", "G1.E2", "G1.E3", "G1.F"};
  g["G2"] = {"G2.E1", "G2.E2", "G2.E3", "G2.F"};
  g["G3"] = {"G3.E1", "G3.E2", "G3.E3", "G3.F"};
  g["G1prime"] = {"H", "I"};
}

std::string Catalog::resolve(std::string_view name) const {
  std::string key(name);
  constexpr std::string_view kCorrected = "@corrected";
  if (key.ends_with(kCorrected)) return key.substr(0, key.size() - kCorrected.size());
  if (printed_ && key.find('@') == std::string::npos && matrices_.contains(key + "@printed")) return key + "@printed";
  return key;
}

bool Catalog::has_matrix(std::string_view name) const { return matrices_.contains(resolve(name)); }

bool Catalog::has_group(std::string_view name) const { return groups_.contains(name); }

const Matrix& Catalog::matrix(std::string_view name) const {
  auto it = matrices_.find(resolve(name));
  if (it == matrices_.end()) throw DomainError("catalog: unknown matrix '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::string>& Catalog::generator_names(std::string_view group) const {
  auto it = groups_.find(group);
  if (it == groups_.end()) throw DomainError("catalog: unknown group '" + std::string(group) + "'");
  return it->second;
}

std::vector<Matrix> Catalog::generators(std::string_view group) const {
  std::vector<Matrix> out;
  for (const auto& n : generator_names(group)) out.push_back(matrix(n));
  return out;
}

std::vector<std::string> Catalog::matrix_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : matrices_) out.push_back(k);
  return out;
}

std::vector<std::string> Catalog::group_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : groups_) out.push_back(k);
  return out;
}

void Catalog::mutate(std::string_view name, std::size_t r, std::size_t c) {
  auto it = matrices_.find(resolve(name));
  if (it == matrices_.end()) throw DomainError("catalog: unknown matrix '" + std::string(name) + "'");
  if (r >= it->second.rows() || c >= it->second.cols()) throw DomainError("catalog: entry out of range");
  it->second(r, c) += 1;
}

}  // namespace cubsym
