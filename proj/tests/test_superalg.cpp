#include "doctest.h"
#include "superorbit/superalg.hpp"

using namespace superorbit;
using Q = Rational;

namespace {

SuperAlgebra<Q> sl2() {
  SuperAlgebra<Q> a("sl2", {"E", "H", "F"}, {0, 0, 0});
  a.set_bracket(0, 2, {Q(0), Q(1), Q(0)});
  a.set_bracket(1, 0, {Q(2), Q(0), Q(0)});
  a.set_bracket(1, 2, {Q(0), Q(0), Q(-2)});
  return a;
}

// one odd x with [x,x] = z central
SuperAlgebra<Q> odd_heisenberg() {
  SuperAlgebra<Q> a("oh", {"z", "x"}, {0, 1});
  a.set_bracket(1, 1, {Q(1), Q(0)});
  return a;
}

SuperAlgebra<Q> abelian(size_t n) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return SuperAlgebra<Q>("ab", names, std::vector<int>(n, 0));
}

}  // namespace

TEST_CASE("sl2 brackets and skew symmetry") {
  auto a = sl2();
  CHECK(a.bracket_basis(0, 2) == Vec<Q>{Q(0), Q(1), Q(0)});
  CHECK(a.bracket_basis(2, 0) == Vec<Q>{Q(0), Q(-1), Q(0)});
  CHECK(a.bracket_basis(0, 1) == Vec<Q>{Q(-2), Q(0), Q(0)});
  CHECK(check_structure(a).empty());
  CHECK(check_super_jacobi(a).empty());
  CHECK(a.index("H") == 1);
  CHECK_THROWS(a.index("Q"));
}

TEST_CASE("odd bracket is symmetric") {
  auto a = odd_heisenberg();
  CHECK(a.bracket_basis(1, 1) == Vec<Q>{Q(1), Q(0)});
  CHECK(check_super_jacobi(a).empty());
  CHECK(a.parity_of({Q(0), Q(3)}) == 1);
  CHECK(!a.parity_of({Q(1), Q(3)}).has_value());
  CHECK(a.even_dim() == 1);
}

TEST_CASE("corrupted entry breaks Jacobi") {
  auto a = sl2();
  // [E,F] = E + H
  a.set_structure_raw(0, 2, {Q(1), Q(1), Q(0)});
  a.set_structure_raw(2, 0, {Q(-1), Q(-1), Q(0)});
  CHECK(!check_super_jacobi(a).empty());
}

TEST_CASE("skew violation is reported") {
  auto a = sl2();
  a.set_structure_raw(2, 0, {Q(0), Q(1), Q(0)});
  CHECK(!check_structure(a).empty());
}

TEST_CASE("centralizers") {
  auto a = sl2();
  CHECK(centralizer(a, a.zero()).dim() == 3);
  auto ce = centralizer(a, a.basis_vec(0));
  CHECK(ce.dim() == 1);
  CHECK(ce.contains(a.basis_vec(0)));
  auto o = odd_heisenberg();
  // [x,x] = z so x does not centralize itself
  CHECK(centralizer(o, o.basis_vec(1)).dim() == 1);
}

TEST_CASE("derived and generated subalgebras") {
  auto ab = abelian(4);
  CHECK(derived_subspace(ab, Subspace<Q>::full(4)).dim() == 0);
  auto a = sl2();
  auto full = Subspace<Q>::full(3);
  CHECK(derived_subspace(a, full).dim() == 3);
  auto ef = span<Q>(3, {a.basis_vec(0), a.basis_vec(2)});
  CHECK(!is_closed(a, ef));
  CHECK(generated_subalgebra(a, ef) == full);
  auto eh = span<Q>(3, {a.basis_vec(0), a.basis_vec(1)});
  CHECK(is_closed(a, eh));
  CHECK(derived_subspace(a, eh).dim() == 1);
  CHECK(bracket_span(a, span<Q>(3, {a.basis_vec(1)}), full).dim() == 2);
  auto o = odd_heisenberg();
  CHECK(generated_subalgebra(o, span<Q>(2, {o.basis_vec(1)})).dim() == 2);
}

TEST_CASE("centers") {
  auto ab = abelian(3);
  CHECK(center_of(ab, Subspace<Q>::full(3)).dim() == 3);
  auto a = sl2();
  CHECK(center_of(a, Subspace<Q>::full(3)).dim() == 0);
  auto o = odd_heisenberg();
  auto z = center_of(o, Subspace<Q>::full(2));
  CHECK(z.dim() == 1);
  CHECK(z.contains(o.basis_vec(0)));
  CHECK_THROWS_AS(center_of(a, span<Q>(3, {a.basis_vec(0), a.basis_vec(2)})), AlgebraError);
}

TEST_CASE("grading by ad h") {
  auto a = sl2();
  auto g = grade_decompose(a, Subspace<Q>::full(3), a.basis_vec(1));
  REQUIRE(g.size() == 3);
  CHECK(g.at(2).contains(a.basis_vec(0)));
  CHECK(g.at(0).contains(a.basis_vec(1)));
  CHECK(g.at(-2).contains(a.basis_vec(2)));
  // span{E,F} is ad H-stable
  auto ef = span<Q>(3, {a.basis_vec(0), a.basis_vec(2)});
  CHECK(grade_decompose(a, ef, a.basis_vec(1)).size() == 2);
  // E does not preserve span{E,F}
  CHECK_THROWS_AS(grade_decompose(a, ef, a.basis_vec(0)), AlgebraError);
}

TEST_CASE("ad nilpotency") {
  auto a = sl2();
  CHECK(is_ad_nilpotent(a, a.basis_vec(0)));
  CHECK(!is_ad_nilpotent(a, a.basis_vec(1)));
}

TEST_CASE("quotients") {
  auto o = odd_heisenberg();
  auto q = quotient(o, span<Q>(2, {o.basis_vec(0)}), "oh/z");
  CHECK(q.algebra.dim() == 1);
  CHECK(q.algebra.parity(0) == 1);
  CHECK(q.algebra.bracket_basis(0, 0) == Vec<Q>{Q(0)});
  CHECK(q.project({Q(5), Q(2)}) == Vec<Q>{Q(2)});
  auto a = sl2();
  CHECK_THROWS_AS(quotient(a, span<Q>(3, {a.basis_vec(0)})), AlgebraError);
}

TEST_CASE("json round trip") {
  auto a = sl2();
  auto j = to_json(a);
  auto b = algebra_from_json<Q>(j);
  CHECK(b.dim() == 3);
  CHECK(b.names() == a.names());
  for (size_t i = 0; i < 3; ++i)
    for (size_t k = 0; k < 3; ++k) CHECK(b.bracket_basis(i, k) == a.bracket_basis(i, k));
  auto o = odd_heisenberg();
  auto ob = algebra_from_json<Q>(to_json(o));
  CHECK(ob.parities() == o.parities());
  CHECK(ob.bracket_basis(1, 1) == o.bracket_basis(1, 1));
}
