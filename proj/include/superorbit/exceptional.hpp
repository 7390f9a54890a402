#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superorbit/superalg.hpp"

namespace superorbit {

enum class ExceptionalKind { D21, G3, F4 };
std::string kind_name(ExceptionalKind k);
std::optional<ExceptionalKind> parse_kind(std::string_view s);

// ---- dense matrix helpers used by the constructions

template <class S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b);
template <class S>
Matrix<S> mat_comm(const Matrix<S>& a, const Matrix<S>& b);
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b);
template <class S>
Matrix<S> block_diag(const Matrix<S>& a, const Matrix<S>& b);

struct NamedMatrices {
  std::vector<std::string> names;
  std::vector<Matrix<Rational>> mats;
};

// G2 inside gl(7): h1,h2,x1..x6,y1..y6
NamedMatrices g2_matrices();
// so(7) on V7 with basis order e3,e2,e1,e0,e-1,e-2,e-3
Matrix<Rational> so7_R(int a, int b);
// 3 Cartan elements, 12 root pairs, then R(ea,e0); 21 in all
NamedMatrices so7_matrices();
// Clifford generator e_a on spinors; a in -3..3
Matrix<Rational> clifford_op(int a);
// (e_a e_b - e_b e_a)/2 on spinors
Matrix<Rational> spin_R(int a, int b);
const std::vector<std::string>& spinor_names();
// "R(e1,e-2)" -> (1,-2)
std::optional<std::pair<int, int>> parse_R_name(std::string_view name);

// Lie algebra with basis given by matrices; throws AlgebraError if not closed
// or not linearly independent.
template <class S>
SuperAlgebra<S> lie_algebra_from_matrices(const std::string& name, const std::vector<std::string>& names,
                                          const std::vector<Matrix<S>>& mats);

// ---- odd bracket solver

template <class S>
struct Anchor {
  Vec<S> u, v;   // odd coordinates
  Vec<S> value;  // even coordinates
};

template <class S>
struct EquivariantBracketProblem {
  std::string name;
  std::vector<std::string> even_names, odd_names;
  std::vector<Matrix<S>> even_rep;  // faithful matrices for the even basis
  std::vector<Matrix<S>> action;    // action of each even basis element on the odd module
  std::vector<Anchor<S>> anchors;
};

struct SolveError : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct SolveStats {
  size_t unknowns = 0, rank_equivariance = 0, rank_jacobi = 0, rank_anchors = 0;
};

// Even basis first, then odd. Throws SolveError on inconsistency or leftover freedom.
template <class S>
SuperAlgebra<S> solve_odd_bracket(const EquivariantBracketProblem<S>& p, SolveStats* stats = nullptr);

template <class S>
EquivariantBracketProblem<S> problem_D21(const S& alpha);
EquivariantBracketProblem<Rational> problem_G3();
EquivariantBracketProblem<Rational> problem_F4();

// sigma = (1+a, -1, -a)
template <class S>
SuperAlgebra<S> build_D21(const S& alpha);
SuperAlgebra<Rational> build_G3();
SuperAlgebra<Rational> build_F4();

template <class S>
std::vector<S> d21_sigma(const S& alpha);

// ---- elements by name

// Basis lookup; R(ea,eb) also resolves as -R(eb,ea).
template <class S>
std::optional<std::pair<size_t, int>> resolve_basis(const SuperAlgebra<S>& a, std::string_view name);

// Linear combination such as "E+(R(e1,e0)+R(e2,e3))", "2*s1*E1-v1e3", "1/2*R(e2,e0)".
// Coefficient factors are field literals or entries of symbols. Grouping parentheses
// are dropped. Throws ParseError.
template <class S>
Vec<S> parse_element(const SuperAlgebra<S>& a, std::string_view text,
                     const std::map<std::string, S>& symbols = {});

template <class S>
struct OrbitRepresentative {
  std::string label;
  Vec<S> element;
  Vec<S> h;
};

std::vector<std::string> cartan_names(ExceptionalKind k);
std::vector<std::string> orbit_labels(ExceptionalKind k);

// h in the Cartan span with h in [e, g0] and [h,e] = 2e.
template <class S>
std::optional<Vec<S>> find_h(const SuperAlgebra<S>& a, const Vec<S>& e, const std::vector<size_t>& cartan);

template <class S>
std::vector<OrbitRepresentative<S>> orbit_reps(const SuperAlgebra<S>& a, ExceptionalKind k);

// ---- sample commutators

struct AnchorCase {
  ExceptionalKind kind;
  std::string x, y, printed;
  // value the constructed algebra gives when the printed one is inconsistent
  std::string forced;
};

const std::vector<AnchorCase>& anchor_cases();

}  // namespace superorbit
