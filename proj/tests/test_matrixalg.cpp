#include "doctest.h"
#include "superorbit/matrixalg.hpp"

using namespace superorbit;
using Q = Rational;

namespace {

std::vector<size_t> coords_of_parity(const MatrixAlgebra<Q>& g, int p) {
  std::vector<size_t> out;
  for (size_t i = 0; i < g.N(); ++i)
    if (g.coord_parity(i) == p) out.push_back(i);
  return out;
}

std::vector<int> parts_of_parity(const SuperPartition& l, int p) {
  std::vector<int> out;
  for (size_t i = 0; i < l.size(); ++i)
    if (l.parity(i) == p) out.push_back(l[i]);
  return out;
}

std::vector<SuperPartition> osp_partitions(int m, int n2) {
  std::vector<SuperPartition> out;
  for (const auto& l : super_partitions(m, 2 * n2))
    if (l.osp_valid()) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("partition parsing and canonical order") {
  auto l = SuperPartition::parse("2,3|3,1");
  CHECK(l.str() == "3,2|3,1");
  CHECK(l[0] == 3);
  CHECK(l.parity(0) == 0);
  CHECK(l.parity(1) == 1);
  CHECK(l.m() == 5);
  CHECK(l.n() == 4);
  CHECK(SuperPartition::parse("|2").str() == "|2");
  CHECK(SuperPartition::parse("4").str() == "4|");
  CHECK_THROWS_AS(SuperPartition::parse("a|1"), ParseError);
  CHECK_THROWS_AS(SuperPartition::parse("1||1"), ParseError);
  CHECK_THROWS_AS(SuperPartition::parse("0|1"), ParseError);
  CHECK_THROWS_AS(SuperPartition::parse("|"), ParseError);
  CHECK(integer_partitions(4).size() == 5);
  CHECK(integer_partitions(0).size() == 1);
  CHECK(super_partitions(3, 2).size() == 6);
}

TEST_CASE("osp validity") {
  CHECK(SuperPartition::parse("3|2").osp_valid());
  CHECK(!SuperPartition::parse("2|2").osp_valid());
  CHECK(SuperPartition::parse("2,2|2").osp_valid());
  CHECK(!SuperPartition::parse("1|1").osp_valid());
  CHECK(SuperPartition::parse("1|1,1").osp_valid());
}

TEST_CASE("pyramid of (2|2)") {
  auto p = pyramid(SuperPartition::parse("2|2"));
  REQUIRE(p.boxes.size() == 4);
  std::vector<int> h, par;
  for (const auto& b : p.boxes) {
    h.push_back(-b.col);
    par.push_back(b.parity);
  }
  CHECK(h == std::vector<int>{1, 1, -1, -1});
  CHECK(par == std::vector<int>{1, 0, 1, 0});
  std::vector<int> labels;
  for (size_t b = 0; b + 1 < p.boxes.size(); ++b) labels.push_back(p.boxes[b + 1].col - p.boxes[b].col);
  CHECK(labels == std::vector<int>{0, 2, 0});
  CHECK(p.r(-1) == 1);
  CHECK(p.s(1) == 1);
  CHECK(p.ascii() == "1 1\n0 0\n");
}

TEST_CASE("pyramid of (3|2)") {
  auto p = pyramid(SuperPartition::parse("3|2"));
  std::vector<int> cols;
  for (const auto& b : p.boxes) cols.push_back(b.col);
  CHECK(cols == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK(p.ascii() == " 1 1\n0 0 0\n");
  // even boxes get the first coordinates
  CHECK(p.coordinate(0, 0) == 2);
  CHECK(p.coordinate(1, 0) == 4);
}

TEST_CASE("matrix algebra dimensions") {
  CHECK(build_gl<Q>(2, 1).alg.dim() == 9);
  CHECK(build_sl<Q>(2, 1).alg.dim() == 8);
  CHECK(build_sl<Q>(2, 1).alg.even_dim() == 4);
  auto p = build_psl<Q>(2);
  CHECK(p.alg.dim() == 14);
  CHECK(p.alg.even_dim() == 6);
  auto o = build_osp<Q>(3, 1);
  CHECK(o.alg.dim() == 12);
  CHECK(o.alg.even_dim() == 6);
  CHECK(build_osp<Q>(1, 1).alg.dim() == 5);
  CHECK(build_osp<Q>(2, 1).alg.dim() == 8);
  CHECK_THROWS(build_psl<Q>(1));
}

TEST_CASE("Jacobi and skew symmetry of the matrix algebras") {
  for (const auto& g : {build_gl<Q>(1, 1), build_sl<Q>(2, 1), build_psl<Q>(2), build_osp<Q>(1, 1), build_osp<Q>(3, 1)}) {
    CHECK(check_structure(g.alg).empty());
    CHECK(check_super_jacobi(g.alg).empty());
  }
}

TEST_CASE("matrix round trip and membership") {
  auto g = build_sl<Q>(2, 1);
  for (size_t k = 0; k < g.alg.dim(); ++k) CHECK(g.from_matrix(g.to_matrix(g.alg.basis_vec(k))) == g.alg.basis_vec(k));
  CHECK(!g.contains_matrix(Matrix<Q>::identity(3)));
  auto gl = build_gl<Q>(1, 1);
  CHECK(gl.contains_matrix(Matrix<Q>::identity(2)));
  // sl(1|1) contains the identity since the supertrace vanishes
  CHECK(build_sl<Q>(1, 1).contains_matrix(Matrix<Q>::identity(2)));
  auto p = build_psl<Q>(2);
  CHECK(p.from_matrix(Matrix<Q>::identity(4)) == p.alg.zero());
}

TEST_CASE("supercommutator agrees with the structure constants") {
  auto g = build_sl<Q>(2, 2);
  for (size_t a = 0; a < g.alg.dim(); a += 3)
    for (size_t b = 0; b < g.alg.dim(); b += 2) {
      auto m = g.supercommutator(g.to_matrix(g.alg.basis_vec(a)), g.to_matrix(g.alg.basis_vec(b)));
      CHECK(g.from_matrix(m) == g.alg.bracket_basis(a, b));
    }
}

TEST_CASE("pyramid nilpotent has the right Jordan type and a triple") {
  for (auto text : {"2|2", "3,1|2", "2,1|2,1", "1,1|3"}) {
    auto l = SuperPartition::parse(text);
    auto g = build_gl<Q>(l.m(), l.n());
    auto d = nilpotent_from_pyramid(g, pyramid(l));
    CHECK(jordan_type(d.e_mat, coords_of_parity(g, 0)) == parts_of_parity(l, 0));
    CHECK(jordan_type(d.e_mat, coords_of_parity(g, 1)) == parts_of_parity(l, 1));
    CHECK(g.alg.bracket(d.e, d.f) == d.h);
    CHECK(g.alg.bracket(d.h, d.e) == scaled(d.e, Q(2)));
  }
}

TEST_CASE("xi basis spans the gl centralizer") {
  for (auto text : {"2|2", "3,1|2", "2,1|2,1", "2,2|1", "1|1,1"}) {
    auto l = SuperPartition::parse(text);
    auto g = build_gl<Q>(l.m(), l.n());
    auto p = pyramid(l);
    auto d = nilpotent_from_pyramid(g, p);
    auto ge = centralizer(g.alg, d.e);
    auto xs = xi_basis(l);
    CHECK(xs.size() == ge.dim());
    std::vector<Vec<Q>> vs;
    for (const auto& x : xs) {
      auto v = g.from_matrix(xi_matrix<Q>(p, x.i, x.j, x.k));
      CHECK(ge.contains(v));
      CHECK(g.alg.parity_of(v) == x.parity);
      // xi has ad h eigenvalue equal to its grade
      CHECK(g.alg.bracket(d.h, v) == scaled(v, Q(x.grade(l))));
      vs.push_back(v);
    }
    CHECK(span(g.alg.dim(), vs) == ge);
  }
}

TEST_CASE("centralizer dimension formulas: gl, sl, psl") {
  CHECK(dim_formulas(SuperPartition::parse("2|2")).psl_e == 6);
  CHECK(dim_formulas(SuperPartition::parse("2,1|2,1")).psl_e == 18);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      if (m + n > 5) continue;
      auto gl = build_gl<Q>(m, n);
      auto sl = build_sl<Q>(m, n);
      for (const auto& l : super_partitions(m, n)) {
        CAPTURE(l.str());
        auto f = dim_formulas(l);
        auto p = pyramid(l);
        auto ge = centralizer(gl.alg, gl.from_matrix(pyramid_e<Q>(p)));
        CHECK(static_cast<long>(ge.dim()) == f.gl_e);
        long even = 0;
        for (const auto& v : ge.basis()) even += gl.alg.parity_of(v) == 0;
        CHECK(even == f.gl0_e);
        CHECK(static_cast<long>(ge.dim()) - even == f.gl1_e);
        if (m != n) CHECK(static_cast<long>(centralizer(sl.alg, sl.from_matrix(pyramid_e<Q>(p))).dim()) == f.sl_e);
      }
    }
  for (size_t n = 2; n <= 3; ++n) {
    auto g = build_psl<Q>(n);
    for (const auto& l : super_partitions(n, n)) {
      CAPTURE(l.str());
      auto e = g.from_matrix(pyramid_e<Q>(pyramid(l)));
      CHECK(static_cast<long>(centralizer(g.alg, e).dim()) == dim_formulas(l).psl_e.value());
    }
  }
}

TEST_CASE("osp involution and theta") {
  auto l = SuperPartition::parse("3,2,2|2,1,1");
  CHECK(osp_involution(l) == std::vector<size_t>{0, 2, 1, 3, 5, 4});
  auto th = osp_theta(l);
  // (2|) pair: theta_* = (+1)(-1)^1 = -1; (|1) pair: theta_* = (-1)(-1)^0 = -1
  CHECK(th == std::vector<int>{1, 1, -1, 1, 1, -1});
  CHECK_THROWS(osp_involution(SuperPartition::parse("2|2")));
}

TEST_CASE("osp model form contains the pyramid nilpotent") {
  for (int m = 1; m <= 4; ++m)
    for (int n2 = 1; m + 2 * n2 <= 6; ++n2)
      for (const auto& l : osp_partitions(m, n2)) {
        CAPTURE(l.str());
        auto g = build_osp_for<Q>(l);
        CHECK(g.alg.dim() == static_cast<size_t>((m * (m - 1)) / 2 + n2 * (2 * n2 + 1) + 2 * m * n2));
        CHECK(g.contains_matrix(pyramid_e<Q>(pyramid(l))));
        CHECK(g.contains_matrix(pyramid_h<Q>(pyramid(l))));
      }
}

TEST_CASE("epsilon pairs lie in osp, the opposite sign does not") {
  for (int m = 1; m <= 3; ++m)
    for (int n2 = 1; m + 2 * n2 <= 7; ++n2)
      for (const auto& l : osp_partitions(m, n2)) {
        CAPTURE(l.str());
        auto g = build_osp_for<Q>(l);
        auto p = pyramid(l);
        auto star = osp_involution(l);
        for (size_t i = 0; i < l.size(); ++i)
          for (size_t j = 0; j < l.size(); ++j)
            for (int k = 0; k < std::min(l[i], l[j]); ++k) {
              int eps = osp_epsilon(l, i, j, k);
              CHECK(g.contains_matrix(osp_pair_element<Q>(p, i, j, k, eps)));
              bool same = j == star[i] && l[j] - 1 - k == l[i] - 1 - k;
              if (!same) CHECK(!g.contains_matrix(osp_pair_element<Q>(p, i, j, k, -eps)));
            }
      }
}

TEST_CASE("osp decomposition of the centralizer") {
  for (int m = 1; m <= 4; ++m)
    for (int n2 = 1; m + 2 * n2 <= 7; ++n2)
      for (const auto& l : osp_partitions(m, n2)) {
        CAPTURE(l.str());
        auto g = build_osp_for<Q>(l);
        auto p = pyramid(l);
        auto ge = centralizer(g.alg, g.from_matrix(pyramid_e<Q>(p)));
        auto d = osp_decomposition(g, p);
        CHECK(d.nfrak.dim() + d.n1.dim() + d.n2.dim() == ge.dim());
        CHECK(sum(sum(d.nfrak, d.n1), d.n2) == ge);
        CHECK(sum(d.nfrak0, d.nfrak1) == d.nfrak);
        CHECK(d.n2_minus.dim() + d.n2_plus.dim() == d.n2.dim());
      }
}
