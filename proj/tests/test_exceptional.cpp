#include "doctest.h"
#include "superorbit/exceptional.hpp"

using namespace superorbit;
using Q = Rational;
using RF = RationalFunction;

namespace {

const SuperAlgebra<Q>& G3() {
  static const auto a = build_G3();
  return a;
}
const SuperAlgebra<Q>& F4() {
  static const auto a = build_F4();
  return a;
}
const SuperAlgebra<RF>& D21() {
  static const auto a = build_D21(RF::alpha());
  return a;
}

template <class S>
std::map<std::string, S> sigma_symbols(const S& alpha) {
  auto s = d21_sigma(alpha);
  return {{"s1", s[0]}, {"s2", s[1]}, {"s3", s[2]}};
}

template <class S>
void check_anchors(const SuperAlgebra<S>& a, ExceptionalKind k, const std::map<std::string, S>& sym) {
  for (const auto& c : anchor_cases()) {
    if (c.kind != k) continue;
    CAPTURE(c.x);
    CAPTURE(c.y);
    auto got = a.bracket(parse_element(a, c.x, sym), parse_element(a, c.y, sym));
    auto printed = parse_element(a, c.printed, sym);
    if (c.forced.empty()) {
      CHECK(got == printed);
    } else {
      CHECK(got != printed);
      CHECK(got == parse_element(a, c.forced, sym));
    }
  }
}

}  // namespace

TEST_CASE("G2 matrices close and match the defining relations") {
  auto g = g2_matrices();
  auto a = lie_algebra_from_matrices<Q>("g2", g.names, g.mats);
  CHECK(a.dim() == 14);
  CHECK(check_super_jacobi(a).empty());
  CHECK(a.bracket(a.basis_vec(a.index("x1")), a.basis_vec(a.index("x2"))) == a.basis_vec(a.index("x3")));
  // x1 is an h1-eigenvector
  auto hx = a.bracket(a.basis_vec(a.index("h1")), a.basis_vec(a.index("x1")));
  CHECK(hx == scaled(a.basis_vec(a.index("x1")), hx[a.index("x1")]));
  CHECK(!is_zero(hx[a.index("x1")]));
}

TEST_CASE("non-closed matrix sets are rejected") {
  auto g = g2_matrices();
  std::vector<std::string> names = {"x1", "y1"};
  std::vector<Matrix<Q>> mats = {g.mats[2], g.mats[8]};
  CHECK_THROWS_AS(lie_algebra_from_matrices<Q>("bad", names, mats), AlgebraError);
  CHECK_THROWS_AS(lie_algebra_from_matrices<Q>("dep", {"a", "b"}, {g.mats[2], g.mats[2]}), AlgebraError);
}

TEST_CASE("so7 and its spin representation") {
  auto so = so7_matrices();
  REQUIRE(so.names.size() == 21);
  auto a = lie_algebra_from_matrices<Q>("so7", so.names, so.mats);
  CHECK(check_super_jacobi(a).empty());
  // spin is a homomorphism on all pairs
  for (size_t i = 0; i < 21; ++i)
    for (size_t j = 0; j < 21; ++j) {
      auto ai = parse_R_name(so.names[i]), aj = parse_R_name(so.names[j]);
      auto lhs = mat_comm(spin_R(ai->first, ai->second), spin_R(aj->first, aj->second));
      Matrix<Q> rhs(8, 8);
      for (const auto& t : a.structure(i, j)) {
        auto ak = parse_R_name(so.names[t.k]);
        auto m = spin_R(ak->first, ak->second);
        for (size_t r = 0; r < 8; ++r)
          for (size_t c = 0; c < 8; ++c) rhs(r, c) += t.c * m(r, c);
      }
      CHECK(lhs == rhs);
    }
  // e_{-i} kills s and e0 fixes s
  for (int i = 1; i <= 3; ++i) CHECK(is_zero_vec(clifford_op(-i).col(0)));
  CHECK(clifford_op(0)(0, 0) == Q(1));
  // R(e1,e-1) is diagonal with eigenvalues +-1/2
  auto h = spin_R(1, -1);
  for (size_t r = 0; r < 8; ++r) {
    CHECK((h(r, r) == Q(1, 2) || h(r, r) == Q(-1, 2)));
    for (size_t c = 0; c < 8; ++c)
      if (r != c) CHECK(is_zero(h(r, c)));
  }
  CHECK(parse_R_name("R(e2,e-3)") == std::make_pair(2, -3));
  CHECK(!parse_R_name("R(e4,e1)"));
}

TEST_CASE("dimensions and Jacobi") {
  CHECK(G3().dim() == 31);
  CHECK(G3().even_dim() == 17);
  CHECK(F4().dim() == 40);
  CHECK(F4().even_dim() == 24);
  CHECK(D21().dim() == 17);
  CHECK(D21().even_dim() == 9);
  CHECK(check_super_jacobi(G3()).empty());
  CHECK(check_super_jacobi(F4()).empty());
  CHECK(check_super_jacobi(D21()).empty());
  CHECK(check_structure(F4()).empty());
}

TEST_CASE("D21 at a rational sample") {
  for (long al : {2L, -3L, 5L}) {
    auto a = build_D21(Q(al));
    CHECK(check_super_jacobi(a).empty());
    check_anchors(a, ExceptionalKind::D21, sigma_symbols(Q(al)));
  }
  CHECK_THROWS(build_D21(Q(0)));
  CHECK_THROWS(build_D21(Q(-1)));
}

TEST_CASE("sample commutators") {
  check_anchors(G3(), ExceptionalKind::G3, {});
  check_anchors(F4(), ExceptionalKind::F4, {});
  check_anchors(D21(), ExceptionalKind::D21, sigma_symbols(RF::alpha()));
}

TEST_CASE("solver rejects the inconsistent printed values") {
  auto p = problem_D21(Q(2));
  auto& on = p.odd_names;
  auto odd = [&](const std::string& n) {
    Vec<Q> v(on.size());
    v[static_cast<size_t>(std::find(on.begin(), on.end(), n) - on.begin())] = Q(1);
    return v;
  };
  Vec<Q> val(9);
  val[0] = Q(2) * d21_sigma(Q(2))[0];
  p.anchors.push_back({odd("v1v1v-1"), odd("v1v-1v1"), val});
  CHECK_THROWS_AS(solve_odd_bracket(p), SolveError);

  auto f = problem_F4();
  auto& fo = f.odd_names;
  auto fodd = [&](std::initializer_list<std::pair<const char*, int>> ts) {
    Vec<Q> v(fo.size());
    for (auto [n, c] : ts) v[static_cast<size_t>(std::find(fo.begin(), fo.end(), n) - fo.begin())] += Q(c);
    return v;
  };
  Vec<Q> r10(f.even_names.size());
  r10[static_cast<size_t>(std::find(f.even_names.begin(), f.even_names.end(), "R(e1,e0)") - f.even_names.begin())] = Q(1);
  auto x = fodd({{"v1e1s", 1}, {"v-1e1e2e3s", -1}});
  f.anchors.push_back({x, x, r10});
  CHECK_THROWS_AS(solve_odd_bracket(f), SolveError);
}

TEST_CASE("solver reports leftover freedom") {
  auto p = problem_G3();
  p.anchors.clear();
  CHECK_THROWS_AS(solve_odd_bracket(p), SolveError);
}

TEST_CASE("solver statistics") {
  SolveStats st;
  solve_odd_bracket(problem_G3(), &st);
  CHECK(st.unknowns > 0);
  CHECK(st.rank_anchors == st.unknowns);
  // equivariance leaves one free scale
  CHECK(st.rank_jacobi + 1 == st.unknowns);
}

TEST_CASE("element parsing") {
  const auto& a = F4();
  auto v = parse_element(a, "E+(R(e1,e0)+R(e2,e3))");
  CHECK(v[a.index("E")] == Q(1));
  CHECK(v[a.index("R(e1,e0)")] == Q(1));
  auto w = parse_element(a, "R(e0,e1)");
  CHECK(w[a.index("R(e1,e0)")] == Q(-1));
  CHECK(parse_element(a, "1/2*R(e2,e0)")[a.index("R(e2,e0)")] == Q(1, 2));
  CHECK(is_zero_vec(parse_element(a, "0")));
  CHECK(parse_element(a, "v-1e1e2s-v1s")[a.index("v1s")] == Q(-1));
  CHECK_THROWS_AS(parse_element(a, "E+Q"), ParseError);
  CHECK_THROWS_AS(parse_element(a, "E+"), ParseError);
  CHECK_THROWS_AS(parse_element(a, "(E"), ParseError);
}

TEST_CASE("orbit representatives") {
  auto d = orbit_reps(D21(), ExceptionalKind::D21);
  CHECK(d.size() == 8);
  auto g = orbit_reps(G3(), ExceptionalKind::G3);
  CHECK(g.size() == 10);
  auto f = orbit_reps(F4(), ExceptionalKind::F4);
  CHECK(f.size() == 14);
  auto find = [](const auto& reps, const std::string& l) {
    for (const auto& r : reps)
      if (r.label == l) return r;
    throw std::logic_error("missing " + l);
  };
  CHECK(find(g, "x1").h == parse_element(G3(), "h1"));
  CHECK(find(g, "E+x2").h == parse_element(G3(), "H+h2"));
  // the printed h omits H; with it [h,e] = 2e
  CHECK(find(f, "E+R(e1,e2)").h == parse_element(F4(), "H+R(e1,e-1)+R(e2,e-2)"));
  CHECK(find(d, "E1+E2+E3").h == parse_element(D21(), "H1+H2+H3"));
  for (const auto& r : g) CHECK(is_ad_nilpotent(G3(), r.element));
  for (const auto& r : f) CHECK(is_ad_nilpotent(F4(), r.element));
  for (const auto& r : d) CHECK(is_ad_nilpotent(D21(), r.element));
}
