#include <random>

#include "doctest.h"
#include "superorbit/linalg.hpp"

using namespace superorbit;
using Q = Rational;
using RF = RationalFunction;

namespace {

Matrix<Q> random_matrix(std::mt19937& g, size_t r, size_t c, int density) {
  std::uniform_int_distribution<int> v(-3, 3), d(0, 9);
  Matrix<Q> m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (d(g) < density) m(i, j) = Q(v(g));
  return m;
}

Subspace<Q> random_subspace(std::mt19937& g, size_t n) {
  std::uniform_int_distribution<size_t> k(0, n);
  size_t cnt = k(g);
  auto m = random_matrix(g, cnt, n, 4);
  std::vector<Vec<Q>> vs;
  for (size_t i = 0; i < cnt; ++i) vs.push_back(m.row(i));
  return span(n, vs);
}

}  // namespace

TEST_CASE("kernel trivial cases") {
  CHECK(kernel(Matrix<Q>::identity(3)).dim() == 0);
  auto k = kernel(Matrix<Q>(2, 5));
  CHECK(k.dim() == 5);
  CHECK(k == Subspace<Q>::full(5));
}

TEST_CASE("rref is canonical") {
  Matrix<Q> m(3, 4);
  m(0, 0) = 2; m(0, 1) = 4; m(0, 3) = 2;
  m(1, 0) = 1; m(1, 1) = 2; m(1, 2) = 1;
  m(2, 2) = 3; m(2, 3) = -3;
  auto [r, piv] = rref_with_pivots(m);
  CHECK(piv == std::vector<size_t>{0, 2});
  CHECK(r(0, 0) == Q(1));
  CHECK(r(0, 1) == Q(2));
  CHECK(r(0, 3) == Q(1));
  CHECK(r(1, 2) == Q(1));
  CHECK(r(1, 3) == Q(-1));
  CHECK(is_zero_vec(r.row(2)));
}

TEST_CASE("fraction-free path agrees with the plain one") {
  std::mt19937 g(7);
  for (int it = 0; it < 40; ++it) {
    auto m = random_matrix(g, 5, 6, 6);
    Matrix<RF> mf(5, 6);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 6; ++j) mf(i, j) = RF(m(i, j));
    auto a = rref(m);
    auto b = rref(mf);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 6; ++j) CHECK(RF(a(i, j)) == b(i, j));
  }
}

TEST_CASE("symbolic kernel") {
  RF a = RF::alpha();
  Matrix<RF> m(2, 3);
  m(0, 0) = a; m(0, 1) = RF(1); m(0, 2) = a + RF(1);
  m(1, 0) = a * a; m(1, 1) = a; m(1, 2) = a * a + a;
  auto k = kernel(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero_vec(m.apply(v)));
}

TEST_CASE("rank plus nullity") {
  std::mt19937 g(11);
  for (int it = 0; it < 100; ++it) {
    std::uniform_int_distribution<size_t> sz(1, 8);
    size_t r = sz(g), c = sz(g);
    auto m = random_matrix(g, r, c, 5);
    auto k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("subspace lattice") {
  std::mt19937 g(5);
  for (int it = 0; it < 100; ++it) {
    size_t n = 6;
    auto s = random_subspace(g, n), t = random_subspace(g, n);
    auto su = sum(s, t), in = intersect(s, t);
    CHECK(su.dim() + in.dim() == s.dim() + t.dim());
    CHECK(equal(intersect(s, s), s));
    CHECK(is_subspace_of(in, s));
    CHECK(is_subspace_of(in, t));
    CHECK(is_subspace_of(s, su));
    bool mutual = is_subspace_of(s, t) && is_subspace_of(t, s);
    CHECK(mutual == (s == t));
    for (const auto& v : s.basis()) {
      CHECK(member(v, s));
      CHECK(s.combine(s.coordinates(v)) == v);
    }
  }
}

TEST_CASE("span membership and errors") {
  Vec<Q> v{Q(1), Q(2), Q(3)};
  auto s = span<Q>(3, {v});
  CHECK(member(v, s));
  CHECK(!member(Vec<Q>{Q(1), Q(0), Q(0)}, s));
  CHECK_THROWS_AS(sum(s, Subspace<Q>(4)), DimensionMismatch);
  CHECK_THROWS_AS(intersect(s, Subspace<Q>(2)), DimensionMismatch);
  CHECK_THROWS_AS(member(Vec<Q>{Q(1)}, s), DimensionMismatch);
  CHECK_THROWS(s.coordinates(Vec<Q>{Q(1), Q(0), Q(0)}));
}

TEST_CASE("solve") {
  Matrix<Q> m(2, 2);
  m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = -1;
  auto x = solve(m, Vec<Q>{Q(3), Q(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Q(2));
  CHECK((*x)[1] == Q(1));
  Matrix<Q> z(1, 1);
  CHECK(!solve(z, Vec<Q>{Q(1)}));
}
