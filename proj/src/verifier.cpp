#include "cubsym/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "cubsym/errors.hpp"
#include "cubsym/forms.hpp"
#include "cubsym/invariants.hpp"
#include "cubsym/jacobian.hpp"
#include "cubsym/projgroup.hpp"

namespace cubsym {
namespace {

struct StopCheck {};

class Recorder {
 public:
  explicit Recorder(bool fail_fast) : fail_fast_(fail_fast) {}

  void expect(std::string label, std::string claim, bool held, std::string expected, std::string computed) {
    out_.push_back({std::move(label), std::move(claim), std::move(expected), std::move(computed), held});
    if (!held && fail_fast_) throw StopCheck{};
  }
  void holds(std::string label, std::string claim, bool held) {
    expect(std::move(label), std::move(claim), held, "true", held ? "true" : "false");
  }
  void equal(std::string label, std::string claim, long expected, long computed) {
    expect(std::move(label), std::move(claim), expected == computed, std::to_string(expected), std::to_string(computed));
  }
  void equal(std::string label, std::string claim, const CycNum& expected, const CycNum& computed) {
    expect(std::move(label), std::move(claim), expected == computed, to_string(expected), to_string(computed));
  }
  void equal(std::string label, std::string claim, const Matrix& expected, const Matrix& computed) {
    expect(std::move(label), std::move(claim), expected == computed, to_string(expected), to_string(computed));
  }
  void equal(std::string label, std::string claim, const Form& expected, const Form& computed) {
    expect(std::move(label), std::move(claim), expected == computed, to_string(expected), to_string(computed));
  }

  std::vector<Assertion>& assertions() { return out_; }

 private:
  bool fail_fast_;
  std::vector<Assertion> out_;
};

struct Context {
  const Catalog& cat;
  const VerifyOptions& opt;
  Recorder& r;

  const Matrix& m(std::string_view name) const { return cat.matrix(name); }
  std::vector<Matrix> gens(std::string_view group) const { return cat.generators(group); }
  std::size_t order(std::span<const Matrix> g) const { return closure(g, opt.max_closure).size(); }
};

// Shared helpers -----------------------------------------------------------

Form form(std::string_view text) { return parse_form(text); }

std::vector<Form> forms(std::initializer_list<std::string_view> texts) {
  std::vector<Form> out;
  for (auto t : texts) out.push_back(parse_form(t));
  return out;
}

std::vector<Vector> coefficient_rows(std::span<const Form> fs, int d) {
  std::vector<Vector> out;
  for (const auto& f : fs) out.push_back(coefficients(f, d));
  return out;
}

bool same_span(std::span<const Vector> a, std::span<const Vector> b) { return echelon_rows(a) == echelon_rows(b); }

bool same_span(std::span<const Form> a, std::span<const Form> b, int d) {
  const auto ra = coefficient_rows(a, d);
  const auto rb = coefficient_rows(b, d);
  return same_span(ra, rb);
}

std::vector<Vector> eigenspace(const Matrix& rep, const CycNum& mu) {
  Matrix shifted = rep;
  for (std::size_t k = 0; k < rep.rows(); ++k) shifted(k, k) -= mu;
  return kernel_basis(shifted);
}

// Forms of degree d on which g -> act(A^-1, g) is multiplication by mu.
std::vector<Form> eigenforms(const Matrix& a, const CycNum& mu, int d) {
  std::vector<Form> out;
  for (const auto& v : eigenspace(rep_matrix_with_inverse(a, d), mu)) out.push_back(from_coefficients(v, d));
  return out;
}

// Part of span(fs) on which act(A^-1, .) is multiplication by mu.
std::vector<Form> restrict_forms(const Matrix& a, const CycNum& mu, std::span<const Form> fs, int d) {
  if (fs.empty()) return {};
  const Matrix rep = rep_matrix_with_inverse(a, d);
  std::vector<Vector> cols = coefficient_rows(fs, d);
  const Matrix span = Matrix::from_columns(cols);
  Matrix shifted = rep;
  for (std::size_t k = 0; k < rep.rows(); ++k) shifted(k, k) -= mu;
  std::vector<Form> out;
  for (const auto& c : kernel_basis(shifted * span)) out.push_back(from_coefficients(span * c, d));
  return out;
}

Matrix power(const Matrix& a, int k) {
  Matrix x = Matrix::identity(a.rows());
  for (int j = 0; j < k; ++j) x = x * a;
  return x;
}

bool is_scalar_matrix(const Matrix& a) { return proportional(a, Matrix::identity(a.rows())).has_value(); }

// Least k <= cap with A^k scalar, checked without the general order search.
bool has_projective_order(const Matrix& a, int order) {
  Matrix x = a;
  for (int k = 1; k < order; ++k) {
    if (is_scalar_matrix(x)) return false;
    x = x * a;
  }
  return is_scalar_matrix(x);
}

std::string span_text(std::span<const Form> fs) {
  std::string out = "span{";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) out += ", ";
    out += to_string(fs[k]);
  }
  return out + "}";
}

std::string vector_text(const Vector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(v[k]);
  }
  return out + "]";
}

// A variable dividing every monomial of every form.
std::optional<int> common_variable(std::span<const Form> fs) {
  for (int v = 0; v < kVars; ++v) {
    bool all = true;
    for (const auto& f : fs) {
      for (const auto& [mono, c] : f.terms()) all = all && mono.e[v] > 0;
    }
    if (all) return v;
  }
  return std::nullopt;
}

std::string point_text(const std::optional<ProjPoint>& p) { return p ? to_string(*p) : "none"; }

CycNum c(std::string_view name) { return constant(name); }
CycNum q(long p, long d = 1) { return CycNum(Rational(p, d)); }

const char* const kFermat = "x^3+y^3+z^3+t^3";
const char* const kClebsch = "x^2*y+y^2*z+z^2*t+t^2*x";
const char* const kG1Form = "3*s15*x^3 + 10*(y^3+z^3+t^3) - 3*s15*x*y^2 - 6*(s15*x+5*y)*z*t";

// C1 -----------------------------------------------------------------------

void check_group_orders(Context& ctx) {
  auto& r = ctx.r;
  r.equal("|G27|", "the diagonal group generated by diag[w,1,1,1], diag[1,w,1,1], diag[1,1,w,1] has order 27", 27,
          static_cast<long>(ctx.order(ctx.gens("G27"))));
  r.equal("|<G27, S4hat>|", "(Z3)^3 x S4 has order 27*24", 648, static_cast<long>(ctx.order(ctx.gens("G27S4"))));
  r.equal("|D(3) S4hat / scalars|", "D(3)S4/k* has order 648", 648, static_cast<long>(ctx.order(ctx.gens("D3S4"))));
  r.equal("|G(1)|", "G(1) is isomorphic to S5", 120, static_cast<long>(ctx.order(ctx.gens("G1"))));
  r.equal("|<(H),(I)>|", "(H) and (I) generate a copy of S5", 120, static_cast<long>(ctx.order(ctx.gens("G1prime"))));
  r.equal("|G(2)|", "G(2) is isomorphic to S5", 120, static_cast<long>(ctx.order(ctx.gens("G2"))));
  r.equal("proj_order(K)", "K is the image of the 5-cycle", 5, proj_order(ProjElem(ctx.m("K"))));
  r.equal("proj_order(F')", "F' is the image of a transposition", 2, proj_order(ProjElem(ctx.m("F1"))));
  r.equal("proj_order(F)", "F^2 = iE, so (F) has order 2", 2, proj_order(ProjElem(ctx.m("G1.F"))));
  const std::vector<Matrix> kf{ctx.m("K"), ctx.m("G1.F")};
  r.equal("|<(K),(F)>|", "the 5-cycle and a transposition generate S5", 120, static_cast<long>(ctx.order(kf)));
}

// C2 -----------------------------------------------------------------------

void check_fermat_automorphisms(Context& ctx) {
  auto& r = ctx.r;
  const Form fermat = form(kFermat);
  const auto elems = closure(ctx.gens("D3S4"), ctx.opt.max_closure);
  r.equal("|D(3) S4hat / scalars|", "the candidate automorphism group has 648 elements", 648, static_cast<long>(elems.size()));
  long count = 0;
  for (const auto& g : elems) count += is_automorphism(g.matrix(), fermat) ? 1 : 0;
  r.equal("automorphisms of the Fermat cubic", "every element of D(3)S4 preserves x^3+y^3+z^3+t^3 up to scalar",
          static_cast<long>(elems.size()), count);
  r.holds("diag[2,1,1,1] is not an automorphism", "a non-root-of-unity scaling breaks the Fermat form",
          !is_automorphism(Matrix::diag({2, 1, 1, 1}), fermat));
}

// C3 -----------------------------------------------------------------------

void check_diagonal_invariants(Context& ctx) {
  auto& r = ctx.r;
  const auto g27 = ctx.gens("G27");
  const CycNum one(1);

  const auto a1_fixed = eigenforms(g27[0], one, 3);
  const auto a1_expected = forms({"x^3", "y^3", "z^3", "t^3", "y^2*z", "y^2*t", "z^2*y", "z^2*t", "t^2*y", "t^2*z", "y*z*t"});
  r.holds("A1-fixed cubics", "f_{A1^-1} = f leaves a1..a4, b23, b24, b32, b34, b42, b43, c1",
          same_span(a1_fixed, a1_expected, 3));
  const auto a2_fixed = restrict_forms(g27[1], one, a1_fixed, 3);
  r.holds("A1,A2-fixed cubics", "adding f_{A2^-1} = f leaves a1..a4, b34, b43",
          same_span(a2_fixed, forms({"x^3", "y^3", "z^3", "t^3", "z^2*t", "t^2*z"}), 3));
  const auto a3_fixed = restrict_forms(g27[2], one, a2_fixed, 3);
  const auto diagonal = forms({"x^3", "y^3", "z^3", "t^3"});
  r.holds("A1,A2,A3-fixed cubics", "adding f_{A3^-1} = f leaves a1x^3 + a2y^3 + a3z^3 + a4t^3", same_span(a3_fixed, diagonal, 3));

  const auto spaces = relative_invariants(g27, 3);
  long trivial = 0;
  long total = 0;
  for (const auto& s : spaces) {
    total += static_cast<long>(s.dimension());
    if (s.character.is_trivial()) {
      ++trivial;
      r.expect("trivial-character space", "G27-invariant cubics are diagonal", s.basis == diagonal, span_text(diagonal),
               span_text(s.basis));
    } else {
      const auto v = common_variable(s.basis);
      r.expect("character " + to_string(s.character), "every member is divisible by a variable, hence singular", v.has_value(),
               "a common variable", span_text(s.basis));
    }
  }
  r.equal("trivial-character spaces", "exactly one trivial-character space", 1, trivial);
  r.equal("total dimension", "the relative-invariant spaces of a diagonal group exhaust all 20 cubic monomials", 20, total);
  r.holds("Fermat cubic nonsingular", "V(a1x^3+a2y^3+a3z^3+a4t^3) is nonsingular when a1a2a3a4 != 0",
          is_nonsingular(form(kFermat)));
  r.holds("x^3+y^3+z^3 singular", "a vanishing a4 gives a singular surface", !is_nonsingular(form("x^3+y^3+z^3")));
}

// C4 -----------------------------------------------------------------------

using ElemSet = std::unordered_set<ProjElem, ProjElemHash>;

ElemSet as_set(const std::vector<ProjElem>& v) { return ElemSet(v.begin(), v.end()); }

void check_diagonal_witnesses(Context& ctx) {
  auto& r = ctx.r;
  const Matrix a = ctx.m("S_diag.6");
  const std::vector<ProjElem> targets{ProjElem(ctx.m("T_diag.3")), ProjElem(ctx.m("T_diag.4"))};
  for (int k = 1; k <= 5; ++k) {
    const Matrix b = ctx.m("S_diag." + std::to_string(k));
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i) {
      for (int j = 0; j < 3 && !found; ++j) {
        const ProjElem p(power(a, i) * power(b, j));
        found = std::find(targets.begin(), targets.end(), p) != targets.end();
      }
    }
    const bool expected = k != 1;
    r.expect("A^i B^j witness, B = S_diag." + std::to_string(k),
             "unless B = diag[1,1,w,w^2], some (A^i B^j) equals (diag[1,1,w,1]) or (diag[1,1,1,w])", found == expected,
             expected ? "witness exists" : "no witness", found ? "witness exists" : "no witness");
  }

  const Matrix w1 = ctx.m("S_diag.6");
  const std::vector<std::pair<Matrix, Matrix>> cases{
      {w1, ctx.m("S_diag.1")}, {w1, ctx.m("T_diag.3")}, {ctx.m("T_diag.1"), ctx.m("T_diag.2")}};
  {
    const std::vector<Matrix> ab{cases[1].first, cases[1].second};
    const auto group = as_set(closure(ab, ctx.opt.max_closure));
    r.holds("case 2 members", "(diag[1,w,1,w^2]) and (diag[w,1,1,w^2]) lie in <(A),(B)>",
            group.contains(ProjElem(ctx.m("S_diag.2"))) && group.contains(ProjElem(ctx.m("S_diag.4"))));
  }

  const auto g27 = as_set(closure(ctx.gens("G27"), ctx.opt.max_closure));
  std::vector<Matrix> candidates = ctx.gens("S_diag");
  for (const auto& t : ctx.gens("T_diag")) candidates.push_back(t);
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const std::vector<Matrix> ab{cases[k].first, cases[k].second};
    const auto base = as_set(closure(ab, ctx.opt.max_closure));
    r.equal("|<(A),(B)>| in case " + std::to_string(k + 1), "each representative pair generates (Z3)^2", 9,
            static_cast<long>(base.size()));
    long extensions = 0;
    long equal_to_g27 = 0;
    for (const auto& cm : candidates) {
      if (base.contains(ProjElem(cm))) continue;
      const std::vector<Matrix> abc{cases[k].first, cases[k].second, cm};
      ++extensions;
      if (as_set(closure(abc, ctx.opt.max_closure)) == g27) ++equal_to_g27;
    }
    r.equal("extensions in case " + std::to_string(k + 1), "every (Z3)^3 extension by a diagonal C equals G27", extensions,
            equal_to_g27);
  }

  std::array<int, 4> sigma{0, 1, 2, 3};
  const std::array<CycNum, 4> d{2, 3, 5, 7};
  long ok = 0;
  long total = 0;
  do {
    const Matrix s = permutation_matrix(sigma);
    std::array<CycNum, 4> b;
    for (std::size_t i = 0; i < 4; ++i) b[static_cast<std::size_t>(sigma[i])] = d[i];
    ok += s * Matrix::diag(d) * mat_inv(s) == Matrix::diag(b) ? 1 : 0;
    ++total;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  r.equal("S4 conjugation formula", "sigma diag[a] sigma^-1 = diag[b] with b_i = a_{sigma^-1(i)}, all 24 permutations", total, ok);
}

// C5 -----------------------------------------------------------------------

void check_g1_invariant(Context& ctx) {
  auto& r = ctx.r;
  const auto g1 = ctx.gens("G1");
  const Matrix& e1 = g1[0];
  const Matrix& e2 = g1[1];
  const Matrix& e3 = g1[2];
  const Matrix& f = g1[3];
  const int d = 3;

  // Family a1x^3 + a2y^3 + a3(z^3+t^3) + b1x^2y + b2xy^2 + c1yzt + c2xzt.
  const auto family = forms({"x^3", "y^3", "x^2*y", "x*y^2", "z^3+t^3", "y*z*t", "x*z*t"});
  const Matrix rep3 = rep_matrix_with_inverse(e3, d);
  std::vector<Vector> cols;
  for (const auto& g : family) {
    Vector v = rep3 * coefficients(g, d);
    const Vector base = coefficients(g, d);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= base[k];
    cols.push_back(std::move(v));
  }
  const Matrix system = Matrix::from_columns(cols);  // 20 x 7
  const std::array<std::string_view, 4> rows{"x^3", "y^3", "x^2*y", "x*y^2"};
  Matrix block(4, 4);
  bool rest_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t row = monomial_index(form(rows[i]).leading_monomial());
    for (std::size_t j = 0; j < 7; ++j) {
      if (j < 4) {
        block(i, j) = CycNum(64) * system(row, j);
      } else {
        rest_zero = rest_zero && system(row, j).is_zero();
      }
    }
  }
  r.equal("4x4 system from E3", "the displayed 4x4 matrix is 64 times the x^3, y^3, x^2y, xy^2 equations of f_{E3^-1} = f",
          ctx.m("L31sys"), block);
  r.holds("4x4 system decoupled", "those equations do not involve a3, c1, c2", rest_zero);

  const Matrix& sys = ctx.m("L31sys");
  const Vector stated{3 * c("sqrt15"), 10, 0, -3 * c("sqrt15")};
  const Vector image = sys * stated;
  r.holds("stated line in the kernel", "[3 s15, 10, 0, -3 s15] solves the 4x4 system",
          std::all_of(image.begin(), image.end(), [](const CycNum& x) { return x.is_zero(); }));
  r.equal("rank of the 4x4 system", "the 4x4 system has rank two, so E3 alone leaves a plane of [a1, a2, b1, b2]", 2,
          static_cast<long>(rank(sys)));

  const auto e3_kernel = kernel_basis(system);
  r.equal("E3 solution space", "f_{E3^-1} = f on the family leaves that plane plus free a3, c1", 4,
          static_cast<long>(e3_kernel.size()));
  r.holds("c2 relation", "the E3 equations force c2 = s15 c1 / 5",
          std::all_of(e3_kernel.begin(), e3_kernel.end(),
                      [](const Vector& v) { return v[6] == c("sqrt15") * q(1, 5) * v[5]; }));
  std::vector<Form> e3_fixed;
  for (const auto& v : e3_kernel) {
    Form g(d);
    for (std::size_t k = 0; k < family.size(); ++k) g += v[k] * family[k];
    e3_fixed.push_back(std::move(g));
  }
  const auto e2_fixed = restrict_forms(e2, CycNum(1), e3_fixed, d);
  const std::vector<Form> stated_form{form(kG1Form)};
  r.expect("E2 cuts the E3 solutions to a line", "adding f_{E2^-1} = f leaves only the stated f",
           same_span(e2_fixed, stated_form, d), span_text(stated_form), span_text(e2_fixed));

  r.holds("E1 order 3", "E1^3 = E", has_projective_order(e1, 3));
  r.holds("E2 order 2", "(E2) has order 2", has_projective_order(e2, 2));
  r.holds("E3 order 2", "(E3) has order 2", has_projective_order(e3, 2));
  r.holds("F order 2", "(F) has order 2", has_projective_order(f, 2));
  r.equal("F' = (s2/(1+i)) F", "F' is the permutation part of F", ctx.m("F1"), (c("sqrt2") / (CycNum(1) + c("i"))) * f);

  const CycNum w = c("omega");
  const auto omega_space = eigenforms(e1, w, d);
  const auto omega_expected = forms({"x^2*z", "y^2*z", "z^2*t", "x*t^2", "y*t^2", "x*y*z"});
  r.holds("E1 character w", "f_{E1^-1} = w f gives b13x^2z + b23y^2z + b34z^2t + t^2(b41x + b42y) + c4xyz",
          same_span(omega_space, omega_expected, d));
  const auto branch = forms({"z^2*t", "x*t^2", "y*t^2", "x*y*z"});
  const auto branch_point = common_singular_coordinate_point(branch);
  r.expect("E1 character w branch", "with b13 = b23 = 0 the surface is singular at (1,0,0,0)",
           branch_point && *branch_point == ProjPoint::coordinate(0), "(1, 0, 0, 0)", point_text(branch_point));
  const auto fixed = eigenforms(e1, CycNum(1), d);
  r.holds("E1 character 1", "f_{E1^-1} = f gives a1..a4, b1x^2y, b2y^2x, c1yzt, c2xzt",
          same_span(fixed, forms({"x^3", "y^3", "z^3", "t^3", "x^2*y", "x*y^2", "y*z*t", "x*z*t"}), d));

  // The expansion of f_{A^-1} for f = base + a3(z^3+t^3) + c1(yzt + s15/5 xzt).
  const Form base = form("3*s15*x^3 + 10*y^3 - 3*s15*x*y^2");
  const Form part_a3 = form("z^3+t^3");
  const Form part_c1 = form("y*z*t + s15/5*x*z*t");
  const CycNum s15 = c("sqrt15");
  struct Row {
    const char* mono;
    CycNum k0, ka, kc;
  };
  const std::vector<Row> table{
      {"x^3", 3 * s15, 0, 0},
      {"y^3", q(-10, 27), q(16, 27), q(-4, 27)},
      {"z^3", q(80, 27), q(7, 27), q(-4, 27)},
      {"t^3", q(80, 27), q(7, 27), q(-4, 27)},
      {"x*y^2", -s15 * q(1, 3), 0, s15 * q(4, 45)},
      {"y^2*z", q(60, 27), q(12, 27), q(6, 27)},
      {"y^2*t", q(60, 27), q(12, 27), q(6, 27)},
      {"x*z^2", -s15 * q(4, 3), 0, -s15 * q(2, 45)},
      {"y*z^2", q(-120, 27), q(30, 27), q(6, 27)},
      {"z^2*t", q(240, 27), q(-6, 27), q(6, 27)},
      {"x*t^2", -s15 * q(4, 3), 0, -s15 * q(2, 45)},
      {"y*t^2", q(-120, 27), q(30, 27), q(6, 27)},
      {"z*t^2", q(240, 27), q(-6, 27), q(6, 27)},
      {"y*z*t", q(-240, 27), q(-48, 27), q(3, 27)},
      {"x*z*t", -s15 * q(8, 3), 0, s15 * q(1, 9)},
      {"x*y*t", s15 * q(4, 3), 0, s15 * q(2, 45)},
      {"x*y*z", s15 * q(4, 3), 0, s15 * q(2, 45)},
  };
  const Form img0 = act_with_inverse(e2, base);
  const Form img_a = act_with_inverse(e2, part_a3);
  const Form img_c = act_with_inverse(e2, part_c1);
  Form expected0(d), expected_a(d), expected_c(d);
  for (const auto& row : table) {
    const Monomial mono = form(row.mono).leading_monomial();
    expected0.add_term(mono, row.k0);
    expected_a.add_term(mono, row.ka);
    expected_c.add_term(mono, row.kc);
  }
  r.equal("displayed expansion, constant part", "the displayed f_{A^-1} expansion is the E2 image (constant terms)", expected0,
          img0);
  r.equal("displayed expansion, a3 part", "the displayed f_{A^-1} expansion is the E2 image (a3 terms)", expected_a, img_a);
  r.equal("displayed expansion, c1 part", "the displayed f_{A^-1} expansion is the E2 image (c1 terms)", expected_c, img_c);

  const Form f_g1 = form(kG1Form);
  r.equal("a3 = 10, c1 = -30", "the reconstructed coefficients give the stated form", f_g1,
          base + CycNum(10) * part_a3 + CycNum(-30) * part_c1);
  for (std::size_t k = 0; k < g1.size(); ++k) {
    r.holds("f invariant under generator " + ctx.cat.generator_names("G1")[k], "f_A ~ f for every generator of G(1)",
            is_automorphism(g1[k], f_g1));
  }

  const auto spaces = relative_invariants(g1, d);
  const bool unique = spaces.size() == 1 && spaces[0].dimension() == 1 &&
                      proportional_forms(spaces[0].basis[0], f_g1).has_value();
  std::string found;
  for (const auto& s : spaces) found += to_string(s.character) + " " + span_text(s.basis) + "; ";
  r.expect("unique G(1) relative invariant", "the only G(1)-invariant cubic up to scalar is the stated f", unique,
           span_text(std::vector<Form>{f_g1}), found.empty() ? "none" : found);
  r.holds("f nonsingular", "V(f) is nonsingular", is_nonsingular(f_g1));
}

// C6 -----------------------------------------------------------------------

Vector eigenvector_formula(const CycNum& l, const CycNum& last) {
  const CycNum r = c("sqrt15") * q(1, 15);
  return {CycNum(1), (CycNum(1) + CycNum(4) * l) * r, (CycNum(1) + l + CycNum(3) * l * l) * r,
          c("i") * (l.pow(3) - l.pow(4)) * last};
}

void check_clebsch_conjugation(Context& ctx) {
  auto& r = ctx.r;
  const CycNum e = c("eps");
  const CycNum i = c("i");
  const CycNum alpha = c("alpha");
  const Matrix& e1 = ctx.m("G1.E1");
  const Matrix& e2 = ctx.m("G1.E2");
  const Matrix& e3 = ctx.m("G1.E3");
  const Matrix& f = ctx.m("G1.F");
  const Matrix& fp = ctx.m("F1");
  const Matrix& k = ctx.m("K");
  const Matrix& t = ctx.m("Tmat");
  const Matrix& s = ctx.m("Smat");
  const Matrix& s_printed = ctx.m("Smat@printed");
  const Matrix& sp = ctx.m("Sprime");
  const Matrix& h = ctx.m("H");
  const Matrix& im = ctx.m("I");

  r.equal("K = E1 F' E2 F' E3", "the displayed K is the product of the generators", k, e1 * fp * e2 * fp * e3);
  r.equal("E1 F E2 F E3 = iK", "with the scalar factor of F the product is iK", i * k, e1 * f * e2 * f * e3);
  const Matrix t_inv = mat_inv(t);
  r.equal("T^-1 F' T", "T^-1 F' T = diag[1,1,1,-1]", Matrix::diag({1, 1, 1, -1}), t_inv * fp * t);
  r.equal("T^-1 F T", "T^-1 F T = ((1+i)/s2) diag[1,1,1,-1]", ((CycNum(1) + i) / c("sqrt2")) * Matrix::diag({1, 1, 1, -1}),
          t_inv * f * t);
  const Matrix tkt = t_inv * k * t;
  r.equal("T^-1 K T", "the displayed T^-1 K T", ctx.m("TKT"), tkt);
  const UniPoly cyclo({1, 1, 1, 1, 1});
  r.expect("char_poly(T^-1 K T)", "det(L E - T^-1 K T) = L^4 + L^3 + L^2 + L + 1", char_poly(tkt) == cyclo, to_string(cyclo),
           to_string(char_poly(tkt)));

  const std::array<int, 4> exps{4, 2, 1, 3};
  for (std::size_t col = 0; col < 4; ++col) {
    const CycNum l = e.pow(exps[col]);
    const Vector formula = eigenvector_formula(l, c("sqrt5") * q(1, 5));
    const auto ev = eigenvectors_for(tkt, l);
    const std::string name = "eps^" + std::to_string(exps[col]);
    r.expect("eigenvector for " + name, "each eigenspace is the line through [1, (1+4L)s15/15, (1+L+3L^2)s15/15, i(L^3-L^4)s5/5]",
             ev.size() == 1 && proportional(ev[0], formula).has_value(), vector_text(formula),
             ev.empty() ? "[]" : vector_text(ev[0]));
    r.expect("column " + std::to_string(col + 1) + " of S", "the columns of S are the eigenvectors for eps^4, eps^2, eps, eps^3",
             s.column(col) == formula, vector_text(formula), vector_text(s.column(col)));
    const Vector printed = eigenvector_formula(l, c("sqrt3") * q(1, 5));
    Vector scaled = printed;
    for (auto& x : scaled) x *= l;
    r.holds("printed eigenvector for " + name + " is not an eigenvector", "the last entry needs s5/5 rather than s3/5",
            !(tkt * printed == scaled));
  }
  r.equal("S^-1 T^-1 K T S", "S diagonalizes T^-1 K T to diag[eps^4, eps^2, eps, eps^3]",
          Matrix::diag({e.pow(4), e.pow(2), e, e.pow(3)}), mat_inv(s) * tkt * s);

  bool rows_agree = true;
  for (std::size_t row = 0; row < 3; ++row) rows_agree = rows_agree && s_printed.row(row) == s.row(row);
  r.holds("printed S, rows 1-3", "the printed S agrees with S outside its last row", rows_agree);
  const auto last_ratio = proportional(s_printed.row(3), s.row(3));
  r.expect("printed S, row 4", "the printed last row is (s15/5) times the eigenvector row",
           last_ratio && *last_ratio == c("sqrt15") * q(1, 5), to_string(c("sqrt15") * q(1, 5)),
           last_ratio ? to_string(*last_ratio) : "not proportional");
  const CycNum closed = -i * c("sqrt3") * q(8, 25) * e.pow(3) * (e - 1).pow(3) *
                        (CycNum(3) * e.pow(3) + CycNum(6) * e.pow(2) + CycNum(4) * e + 2);
  r.equal("det of printed S", "det S = -i(8 s3/25) eps^3 (eps-1)^3 (3eps^3+6eps^2+4eps+2)", closed, det(s_printed));
  r.equal("det S", "rescaling the last row multiplies the determinant by s15/3", c("sqrt15") * q(1, 3) * closed, det(s));

  const CycNum det_s = det(s);
  CycNum laplace;
  for (std::size_t j = 0; j < 4; ++j) laplace += s(3, j) * cofactor(s, 3, j);
  r.equal("Laplace expansion along row 4", "sum_j s4j s~4j = det S", det_s, laplace);
  const Matrix rank_one = mat_inv(s) * Matrix::diag({0, 0, 0, -2}) * s;
  bool rows_ok = true;
  for (std::size_t row = 0; row < 4; ++row) {
    const CycNum factor = CycNum(-2) * cofactor(s, 3, row) / det_s;
    Vector expected = s.row(3);
    for (auto& x : expected) x *= factor;
    rows_ok = rows_ok && rank_one.row(row) == expected;
  }
  r.holds("rows of S^-1 diag[0,0,0,-2] S", "row i equals -2 s~4i / det S times row 4 of S", rows_ok);

  r.equal("S'", "S' = T S diag[1, eps^2, eps^3, eps]", t * s * Matrix::diag({1, e.pow(2), e.pow(3), e}), sp);
  const Matrix sp_inv = mat_inv(sp);
  r.equal("S'^-1 K S' = H", "S' conjugates K to H", h, sp_inv * k * sp);
  const CycNum scale = CycNum(3) * e.pow(3) + CycNum(6) * e.pow(2) + CycNum(4) * e + 2;
  const Matrix& cfs = ctx.m("CFS");
  r.equal("(3eps^3+6eps^2+4eps+2) S'^-1 F' S'", "the displayed matrix of components", cfs, scale * (sp_inv * fp * sp));

  const CycNum m1 = CycNum(2) * e.pow(3) + CycNum(4) * e.pow(2) + CycNum(3) * e + 1;
  r.equal("(2eps^3+4eps^2+3eps+1)^-1", "(2eps^3+4eps^2+3eps+1)^-1 = (7eps^3+4eps^2+eps+8)/5",
          (CycNum(7) * e.pow(3) + CycNum(4) * e.pow(2) + e + 8) * q(1, 5), m1.inv());
  r.equal("eps^3+eps^2+1", "eps^3+eps^2+1 = alpha", alpha, e.pow(3) + e.pow(2) + 1);
  r.equal("eps^3+eps^2+2", "eps^3+eps^2+2 = alpha^2", alpha * alpha, e.pow(3) + e.pow(2) + 2);
  const CycNum lead = cfs(0, 0);
  r.equal("entry ratio 2", "(2eps^4+eps^3+2)/(2eps^3+4eps^2+3eps+1) = alpha", alpha, cfs(0, 1) / lead);
  r.equal("entry ratio 3", "(-eps^4+eps^2)/(2eps^3+4eps^2+3eps+1) = alpha^2", alpha * alpha, cfs(0, 2) / lead);
  r.equal("entry ratio 4", "(eps^3+2eps^2+2eps)/(2eps^3+4eps^2+3eps+1) = -alpha", -alpha, cfs(0, 3) / lead);
  r.equal("components / lead = I", "the component matrix is a multiple of I", im, lead.inv() * cfs);
  const auto fi = proportional(sp_inv * f * sp, im);
  r.expect("(S'^-1 F S') = (I)", "S' conjugates (F) to (I)", fi.has_value(), "a scalar", fi ? to_string(*fi) : "none");
  r.equal("alpha^2 = alpha + 1", "alpha^2 = alpha + 1", alpha + 1, alpha * alpha);
  r.equal("H^5", "H^5 = E", Matrix::identity(4), power(h, 5));
  r.equal("I^2", "I^2 = 5 alpha^2 E", CycNum(5) * alpha * alpha * Matrix::identity(4), im * im);

  const int d = 3;
  const auto h_one = eigenforms(h, e, d);
  const auto h_one_expected = forms({"y^3", "x^2*t", "x*z^2", "y*z*t"});
  r.holds("H character eps", "f_{H^-1} = eps f gives a2y^3 + b14x^2t + b31xz^2 + c1yzt", same_span(h_one, h_one_expected, d));
  const auto p1 = common_singular_coordinate_point(h_one);
  r.expect("H character eps singular point", "that family is singular at (0,0,0,1)",
           p1 && *p1 == ProjPoint::coordinate(3), "(0, 0, 0, 1)", point_text(p1));
  for (int j = 2; j <= 4; ++j) {
    const auto sp_j = eigenforms(h, e.pow(j), d);
    const auto pj = common_singular_coordinate_point(sp_j);
    r.expect("H character eps^" + std::to_string(j), "every nontrivial H-character family has a common singular point",
             pj.has_value(), "a coordinate point", point_text(pj));
  }
  const auto h_fixed = eigenforms(h, CycNum(1), d);
  const auto clebsch_terms = forms({"x^2*y", "y^2*z", "z^2*t", "t^2*x"});
  r.holds("H character 1", "f_{H^-1} = f gives b1x^2y + b2y^2z + b3z^2t + b4t^2x", same_span(h_fixed, clebsch_terms, d));

  const Matrix& bsys = ctx.m("Bsys");
  Matrix bprime(4, 4);
  const auto cubes = forms({"x^3", "y^3", "z^3", "t^3"});
  for (std::size_t col = 0; col < 4; ++col) {
    const Form img = act_with_inverse(im, clebsch_terms[col]);
    for (std::size_t row = 0; row < 4; ++row) bprime(row, col) = img.coeff(cubes[row].leading_monomial());
  }
  r.equal("b' = alpha M b", "the cube coefficients of f_{I^-1} are alpha times the displayed matrix applied to b", alpha * bsys,
          bprime);
  r.equal("rank of the b' system", "the b' system has rank three", 3, static_cast<long>(rank(bsys)));
  const auto bker = kernel_basis(bsys);
  r.expect("kernel of the b' system", "b1 = b2 = b3 = b4",
           bker.size() == 1 && proportional(bker[0], Vector{1, 1, 1, 1}).has_value(), "[1, 1, 1, 1]",
           bker.empty() ? "[]" : vector_text(bker[0]));

  const Form clebsch = form(kClebsch);
  r.equal("f_{I^-1} = 5(4alpha+3) f", "I rescales the Clebsch-type form by 5(4alpha+3)",
          CycNum(5) * (CycNum(4) * alpha + 3) * clebsch, act_with_inverse(im, clebsch));

  const std::vector<Matrix> hi{h, im};
  const auto spaces = relative_invariants(hi, d);
  const bool unique = spaces.size() == 1 && spaces[0].dimension() == 1 && spaces[0].basis[0] == clebsch;
  std::string found;
  for (const auto& sp_k : spaces) found += to_string(sp_k.character) + " " + span_text(sp_k.basis) + "; ";
  r.expect("invariant space of <H, I>", "the only <(H),(I)>-invariant cubic is x^2y+y^2z+z^2t+t^2x", unique,
           to_string(clebsch), found.empty() ? "none" : found);
  const auto strict = strict_invariants(hi, d);
  r.expect("strict invariants of <H, I>", "the trivial character gives span{x^2y+y^2z+z^2t+t^2x}",
           strict.basis == std::vector<Form>{clebsch}, to_string(clebsch), span_text(strict.basis));
  r.holds("Clebsch-type form nonsingular", "V(x^2y+y^2z+z^2t+t^2x) is nonsingular", is_nonsingular(clebsch));
}

// C7 -----------------------------------------------------------------------

void check_g2(Context& ctx) {
  auto& r = ctx.r;
  const auto g2 = ctx.gens("G2");
  const Matrix& e3 = g2[2];
  const Matrix& f = g2[3];
  const CycNum i = c("i");
  const int d = 3;
  r.equal("F^4", "F^4 = E", Matrix::identity(4), power(f, 4));
  r.equal("E3^2", "E3^2 = E", Matrix::identity(4), e3 * e3);

  // Parameters a1, a3, b12, b13, b14, b31, b32, b34, c1, c3.
  const auto family = forms({"x^3 - i*y^3", "z^3 - i*t^3", "x^2*y + i*x*y^2", "x^2*z - i*y^2*t", "x^2*t + i*y^2*z",
                             "x*z^2 - i*y*t^2", "y*z^2 + i*x*t^2", "z^2*t + i*z*t^2", "y*z*t - i*x*z*t",
                             "x*y*t - i*x*y*z"});
  const auto f_space = eigenforms(f, i, d);
  r.holds("F character i", "f_{F^-1} = i f is the displayed ten-parameter family", same_span(f_space, family, d));

  const CycNum s3h = c("sqrt3") * q(1, 2);
  const auto tmons = forms({"t^3", "z*t^2", "x*t^2", "y*t^2"});
  bool functionals = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    Vector params(10);
    params[k] = 1;
    const CycNum a3 = params[1], b31 = params[5], b32 = params[6], b34 = params[7];
    const Vector expected{a3, b34, s3h * b31 + q(1, 2) * b32, q(1, 2) * b31 - s3h * b32};
    const Form img = act_with_inverse(e3, family[k]);
    for (std::size_t m = 0; m < 4; ++m) functionals = functionals && img.coeff(tmons[m].leading_monomial()) == expected[m];
  }
  r.holds("E3 image coefficients", "t^3, t^2z, t^2x, t^2y of f_{E3^-1} are a3, b34, (s3/2)b31 + b32/2, b31/2 - (s3/2)b32",
          functionals);
  for (const int sign : {1, -1}) {
    const CycNum si = CycNum(sign) * i;
    const Matrix sys{{s3h - 0, q(1, 2) - si}, {q(1, 2) + si, -s3h}};
    r.equal("b31, b32 system, sign " + std::to_string(sign), "f_{E3^-1} = +-f forces b31 = b32 = 0", 2,
            static_cast<long>(rank(sys)));
  }
  const std::vector<Form> residual{family[0], family[2], family[3], family[4], family[8], family[9]};
  r.holds("residual family singular point", "with a3 = b34 = b31 = b32 = 0 the surface is singular at (0,0,0,1)",
          std::all_of(residual.begin(), residual.end(),
                      [](const Form& g) { return singular_at(g, ProjPoint::coordinate(3)); }));

  const auto spaces = relative_invariants(g2, d);
  const auto f_exp = [](const InvariantSpace& s) { return s.character.exponents[3]; };
  long singular = 0;
  long even_j = 0;
  for (const auto& s : spaces) {
    singular += std::all_of(s.basis.begin(), s.basis.end(),
                            [](const Form& g) { return singular_at(g, ProjPoint::coordinate(3)); })
                    ? 1
                    : 0;
    const int k = f_exp(s);
    even_j += (k == 0 || k == 60) ? 1 : 0;
  }
  r.equal("spaces singular at (0,0,0,1)", "every nonzero relative-invariant space of G(2) is singular at (0,0,0,1)",
          static_cast<long>(spaces.size()), singular);
  r.equal("spaces with F character 1 or -1", "if j = 0 or j = 2 then f = 0", 0, even_j);
  long nonsingular = 0;
  for (const auto& s : spaces) {
    for (const auto& g : s.basis) nonsingular += is_nonsingular(g) ? 1 : 0;
  }
  r.expect("no nonsingular invariant cubic", "there is no G(2)-invariant nonsingular cubic surface", nonsingular == 0,
           "0 nonsingular members", std::to_string(spaces.size()) + " spaces, " + std::to_string(nonsingular) + " nonsingular basis forms");
}

// C8 -----------------------------------------------------------------------

void check_g3(Context& ctx) {
  auto& r = ctx.r;
  const int d = 3;
  const Matrix& corrected = ctx.m("G3.F@corrected");
  const Matrix& printed = ctx.m("G3.F@printed");
  const bool printed_ok = power(printed, 4) == Matrix::identity(4);
  const bool corrected_ok = power(corrected, 4) == Matrix::identity(4);
  r.holds("printed F^4", "the printed F (third row [0,1,0,1]) does not satisfy F^4 = E", !printed_ok);
  r.holds("corrected F^4", "F with third row [0,1,0,0] satisfies F^4 = E", corrected_ok);
  r.equal("proj_order of corrected F", "F^2 = -E, so (F) has order 2", 2, proj_order(ProjElem(corrected)));
  const bool use_printed = printed_ok && !corrected_ok;
  const Matrix& f = use_printed ? printed : corrected;
  r.expect("F variant used", "the variant with F^4 = E is used", printed_ok || corrected_ok, "variant with F^4 = E",
           use_printed ? "printed" : "corrected");

  const CycNum nu1 = c("nu1");
  const CycNum nu2 = c("nu2");
  const Matrix& e1 = ctx.m("G3.E1");
  const Matrix& e3 = ctx.m("G3.E3");
  r.equal("nu1 nu2", "nu1 nu2 = 1", CycNum(1), nu1 * nu2);
  r.equal("E3^2", "E3^2 = E", Matrix::identity(4), e3 * e3);
  const std::vector<CycNum> i_pm{c("i"), -c("i")};
  const std::vector<CycNum> nus{nu1, nu2, nu1.pow(3), nu2.pow(3)};
  bool disjoint = true;
  for (const auto& a : i_pm) {
    for (const auto& b : nus) disjoint = disjoint && a != b;
  }
  r.holds("{i,-i} and {nu1, nu2, nu1^3, nu2^3}", "{i, -i} and {nu1, nu2, nu1^3, nu2^3} are disjoint", disjoint);

  // f_{E1'} is act(E1', f) = act_with_inverse(E1'^-1, f).
  const CycNum w = c("omega");
  const Matrix e1p = w.inv() * e1;
  const Matrix e1p_inv = mat_inv(e1p);
  const auto fixed = eigenforms(e1p_inv, CycNum(1), d);
  const auto fixed_expected = forms({"x^3", "y^3", "z^3", "t^3", "x^2*y", "x*y^2", "z^2*t", "z*t^2"});
  r.holds("E1' character 1", "f_{E1'} = f gives a1..a4, b1x^2y, b2y^2x, b3z^2t, b4t^2z", same_span(fixed, fixed_expected, d));
  const auto other = eigenforms(e1p_inv, w * w, d);
  r.holds("E1' character w^2", "the family x^2(b13z + b14t) + y^2(b23z + b24t) + c3xyt + c4xyz is an E1' eigenspace",
          same_span(other, forms({"x^2*z", "x^2*t", "y^2*z", "y^2*t", "x*y*t", "x*y*z"}), d));
  for (int j = 0; j < 4; ++j) {
    const auto part = restrict_forms(f, c("i").pow(j), fixed, d);
    if (j % 2 == 0) {
      r.equal("F character i^" + std::to_string(j) + " on the E1'-fixed family", "unless j = 1 or 3, f = 0", 0,
              static_cast<long>(part.size()));
    }
  }

  const std::vector<Matrix> g3{e1, ctx.m("G3.E2"), e3, f};
  const auto spaces = relative_invariants(g3, d);
  std::string found;
  for (const auto& s : spaces) found += to_string(s.character) + " " + span_text(s.basis) + "; ";
  r.expect("relative invariants of G(3)", "there are no G(3)-invariant cubic forms except zero", spaces.empty(), "none",
           found.empty() ? "none" : found);
}

// C9 -----------------------------------------------------------------------

void check_galois_transport(Context& ctx) {
  auto& r = ctx.r;
  const Matrix& j = ctx.m("J");
  const Matrix& h = ctx.m("H");
  const Matrix& im = ctx.m("I");
  const Matrix& ip = ctx.m("Iprime");
  r.equal("J", "J = [e2, e3, e4, e1]", permutation_matrix({1, 2, 3, 0}), j);
  r.holds("(J) preserves the Clebsch-type form", "(J) is an automorphism of V(x^2y+y^2z+z^2t+t^2x)",
          is_automorphism(j, form(kClebsch)));
  const Matrix j_inv = mat_inv(j);
  r.equal("J H J^-1", "J H J^-1 = H^2", h * h, j * h * j_inv);
  const auto beta = proportional(j * im * j_inv, ip);
  r.expect("J I J^-1", "J I J^-1 = beta I'", beta && *beta == c("beta"), to_string(c("beta")),
           beta ? to_string(*beta) : "not proportional");
  const CycNum alpha_p = (c("sqrt5") + 1) * q(1, 2);
  r.equal("I' entries", "I' is I with alpha' = (s5+1)/2", Matrix{{1, alpha_p, alpha_p * alpha_p, -alpha_p},
                                                               {alpha_p, alpha_p * alpha_p, -alpha_p, 1},
                                                               {alpha_p * alpha_p, -alpha_p, 1, alpha_p},
                                                               {-alpha_p, 1, alpha_p, alpha_p * alpha_p}},
          ip);
  auto transport = [](const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, k) = galois(7, a(i, k));
    }
    return out;
  };
  r.equal("galois(7, eps)", "eps^Sigma = eps^2", c("eps").pow(2), galois(7, c("eps")));
  r.equal("galois(7, s5)", "s5^Sigma = -s5", -c("sqrt5"), galois(7, c("sqrt5")));
  r.equal("H^Sigma", "H^Sigma = H^2", h * h, transport(h));
  r.equal("I^Sigma", "I^Sigma = I'", ip, transport(im));
  const auto g = as_set(closure(ctx.gens("G1prime"), ctx.opt.max_closure));
  r.holds("(J) in <(H),(I)>", "(J) lies in G(1)'", g.contains(ProjElem(j)));
  const std::vector<Matrix> psi{h * h, ip};
  r.equal("|<(H^2),(I')>|", "(H^2) and (I') generate a copy of S5", 120, static_cast<long>(ctx.order(psi)));
}

// C10 ----------------------------------------------------------------------

void check_singularity_suite(Context& ctx) {
  auto& r = ctx.r;
  struct Case {
    const char* label;
    const char* text;
    bool nonsingular;
    int point;  // coordinate index of a known singular point, or -1
  };
  const std::vector<Case> cases{
      {"Fermat cubic", kFermat, true, -1},
      {"Clebsch-type cubic", kClebsch, true, -1},
      {"G(1)-invariant cubic", kG1Form, true, -1},
      {"y^3+z^3+t^3", "y^3+z^3+t^3", false, 0},
      {"E1 character w branch", "z^2*t + x*t^2 + y*t^2 + x*y*z", false, 0},
      {"H character eps family", "y^3 + x^2*t + x*z^2 + y*z*t", false, 3},
      {"G(2) residual family", "x^3 - i*y^3 + x^2*y + i*x*y^2 + x^2*z - i*y^2*t + x^2*t + i*y^2*z + y*z*t - i*x*z*t + x*y*t - i*x*y*z",
       false, 3},
      {"divisible by x", "x*(x^2+y^2+z^2+t^2)", false, -1},
  };
  for (const auto& cs : cases) {
    const Form f = form(cs.text);
    const auto rep = singularity_report(f);
    r.expect(std::string(cs.label) + ": verdict", "Groebner pure-power criterion", rep.nonsingular == cs.nonsingular,
             cs.nonsingular ? "nonsingular" : "singular", rep.nonsingular ? "nonsingular" : "singular");
    r.holds(std::string(cs.label) + ": Buchberger certificate", "every S-polynomial of the basis reduces to zero",
            satisfies_buchberger_criterion(rep.basis.elements));
    const auto again = groebner(partials(f));
    r.holds(std::string(cs.label) + ": recomputation identical", "the reduced basis is unique", again.elements == rep.basis.elements);
    if (cs.point >= 0) {
      r.holds(std::string(cs.label) + ": singular at e" + std::to_string(cs.point + 1), "all partials vanish at the stated point",
              singular_at(f, ProjPoint::coordinate(cs.point)));
    }
  }
  const Form fermat = form(kFermat);
  r.holds("Fermat regular at e1", "f_x = 3 at (1,0,0,0)", !singular_at(fermat, ProjPoint::coordinate(0)));
}

using CheckFn = void (*)(Context&);

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"C1", "group-orders", "closure orders of the diagonal, Fermat, G(1), <(H),(I)> and G(2) groups"}, check_group_orders},
      {{"C2", "fermat-aut", "D(3)S4 acts by automorphisms of the Fermat cubic"}, check_fermat_automorphisms},
      {{"C3", "diagonal-invariants", "G27-invariant cubics are diagonal; other characters are singular"}, check_diagonal_invariants},
      {{"C4", "diagonal-witnesses", "witness identities for diagonal (Z3)^2 and (Z3)^3 subgroups; S4 conjugation"},
       check_diagonal_witnesses},
      {{"C5", "g1-invariant", "the unique G(1)-invariant cubic and its nonsingularity"}, check_g1_invariant},
      {{"C6", "clebsch-conjugation", "conjugation of G(1) to <(H),(I)> and the Clebsch-type invariant"}, check_clebsch_conjugation},
      {{"C7", "g2-singular", "every G(2) relative-invariant cubic is singular"}, check_g2},
      {{"C8", "g3-no-invariants", "G(3) has no relative-invariant cubic forms"}, check_g3},
      {{"C9", "galois-transport", "conjugation by J and the Galois map eps -> eps^2"}, check_galois_transport},
      {{"C10", "singularity-suite", "Groebner singularity verdicts with certificates"}, check_singularity_suite},
  };
  return table;
}

std::string summarize(const CheckReport& rep, const std::string& error) {
  const auto held = std::count_if(rep.assertions.begin(), rep.assertions.end(), [](const Assertion& a) { return a.held; });
  std::string out = std::to_string(held) + "/" + std::to_string(rep.assertions.size()) + " assertions held";
  for (const auto& a : rep.assertions) {
    if (!a.held) {
      out += "; first failure: " + a.label + " (" + a.claim + ")";
      break;
    }
  }
  if (!error.empty()) out += "; " + error;
  return out;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Verifier::Verifier(Catalog catalog, VerifyOptions options) : catalog_(std::move(catalog)), options_(options) {}

CheckReport Verifier::run(std::string_view check) const {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == check || e.info.name == check; });
  if (it == table.end()) throw DomainError("unknown check '" + std::string(check) + "'");

  CheckReport rep;
  rep.check_id = it->info.id;
  rep.name = it->info.name;
  Recorder recorder(options_.fail_fast);
  Context ctx{catalog_, options_, recorder};
  std::string error;
  Status status = Status::pass;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->fn(ctx);
  } catch (const StopCheck&) {
    status = Status::fail;
  } catch (const ResourceError& e) {
    status = Status::error;
    error = std::string("resource limit: ") + e.what();
  } catch (const std::exception& e) {
    status = Status::fail;
    error = std::string("exception: ") + e.what();
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  rep.assertions = std::move(recorder.assertions());
  const bool all = std::all_of(rep.assertions.begin(), rep.assertions.end(), [](const Assertion& a) { return a.held; });
  // A failed assertion outranks a later resource limit.
  if (!all) status = Status::fail;
  rep.status = status;
  rep.details = it->info.summary + ": " + summarize(rep, error);
  return rep;
}

std::vector<CheckReport> Verifier::run_all() const {
  std::vector<CheckReport> out;
  for (const auto& e : entries()) out.push_back(run(e.info.id));
  return out;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : r.assertions) {
    assertions.push_back({{"label", a.label}, {"claim", a.claim}, {"expected", a.expected}, {"computed", a.computed}, {"held", a.held}});
  }
  return {{"check_id", r.check_id}, {"name", r.name},         {"status", to_string(r.status)},
          {"details", r.details},   {"elapsed_ms", r.elapsed_ms}, {"assertions", std::move(assertions)}};
}

nlohmann::json to_json(const std::vector<CheckReport>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

}  // namespace cubsym
