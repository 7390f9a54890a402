#include "doctest.h"
#include "superorbit/analysis.hpp"

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
TableRow row(const std::vector<TableRow>& rows, const std::string& l) {
  for (const auto& r : rows)
    if (r.label == l) return r;
  throw std::logic_error("missing " + l);
}

template <class S>
OrbitRepresentative<S> rep(const SuperAlgebra<S>& a, ExceptionalKind k, const std::string& l) {
  for (auto& r : orbit_reps(a, k))
    if (r.label == l) return r;
  throw std::logic_error("missing " + l);
}

using Graded = std::map<long, size_t>;

const std::vector<TableRow>& table(ExceptionalKind k) {
  static std::map<ExceptionalKind, std::vector<TableRow>> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<TableRow> rows;
  switch (k) {
    case ExceptionalKind::D21: rows = exceptional_table(D21(), k); break;
    case ExceptionalKind::G3: rows = exceptional_table(G3(), k); break;
    case ExceptionalKind::F4: rows = exceptional_table(F4(), k); break;
  }
  return cache.emplace(k, rows).first->second;
}

SweepRecord one(Family f, int m, int n, const std::string& lam, SweepOptions opt = {}) {
  return run_sweep({{f, m, n, SuperPartition::parse(lam)}}, opt).front();
}

}  // namespace

TEST_CASE("partition criterion") {
  CHECK(reachability_criterion(SuperPartition::parse("2,1|2")));
  CHECK(!reachability_criterion(SuperPartition::parse("3|1")));
  CHECK(!reachability_criterion(SuperPartition::parse("2|2")));
  CHECK(reachability_criterion(SuperPartition::parse("1,1|1")));
  CHECK(reachability_criterion(SuperPartition::parse("2|1")));
  CHECK(!reachability_criterion(SuperPartition::parse("3,1|")));
}

TEST_CASE("single orbit examples") {
  auto d = rep(D21(), ExceptionalKind::D21, "E1+E2");
  CHECK(!is_reachable(D21(), d.element));

  auto g = rep(G3(), ExceptionalKind::G3, "E+x1");
  CHECK(is_reachable(G3(), g.element));

  auto x1 = rep(G3(), ExceptionalKind::G3, "x1");
  CHECK(is_strongly_reachable(G3(), x1.element));
  auto p = satisfies_panyushev(G3(), x1.element, x1.h);
  CHECK(!p.generated);
  CHECK(!p.layerwise);

  auto d3 = rep(D21(), ExceptionalKind::D21, "E1+E2+E3");
  CHECK(!is_strongly_reachable(D21(), d3.element));
  CHECK(satisfies_panyushev(D21(), d3.element, d3.h).generated);

  auto f = rep(F4(), ExceptionalKind::F4, "E+R(e1,e2)");
  CHECK(is_strongly_reachable(F4(), f.element));
  auto f2 = rep(F4(), ExceptionalKind::F4, "E+(R(e1,e-3)+R(e2,e3))");
  auto pf = satisfies_panyushev(F4(), f2.element, f2.h);
  CHECK(pf.generated);
  CHECK(pf.layerwise);
}

TEST_CASE("graded dimensions of g^e") {
  CHECK(row<RF>(table(ExceptionalKind::D21), "E1").graded == Graded{{0, 6}, {1, 4}, {2, 1}});
  CHECK(row<Q>(table(ExceptionalKind::G3), "x1").graded == Graded{{0, 6}, {1, 4}, {2, 3}, {3, 2}});
  CHECK(row<Q>(table(ExceptionalKind::G3), "E+x2").graded == Graded{{0, 5}, {1, 7}, {2, 4}});
  CHECK(row<Q>(table(ExceptionalKind::F4), "E+R(e1,e2)").graded == Graded{{0, 8}, {1, 10}, {2, 4}});
  CHECK(row<Q>(table(ExceptionalKind::F4), "E+(R(e1,e-3)+R(e2,e3))").graded ==
        Graded{{0, 1}, {1, 4}, {2, 6}, {3, 2}, {4, 1}});
}

TEST_CASE("computed tables agree with the printed flags") {
  for (auto k : {ExceptionalKind::D21, ExceptionalKind::G3, ExceptionalKind::F4}) {
    const auto& rows = table(k);
    auto printed = printed_table(k);
    REQUIRE(rows.size() == printed.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(rows[i].label);
      CHECK(rows[i].label == printed[i].first);
      CHECK(rows[i].flags.reachable == printed[i].second[0]);
      CHECK(rows[i].flags.strongly_reachable == printed[i].second[1]);
      CHECK((rows[i].flags.panyushev_generated && rows[i].flags.panyushev_layerwise) == printed[i].second[2]);
    }
  }
}

TEST_CASE("implications hold on every exceptional orbit") {
  for (auto k : {ExceptionalKind::D21, ExceptionalKind::G3, ExceptionalKind::F4})
    for (const auto& r : table(k)) {
      CAPTURE(r.label);
      if (r.flags.strongly_reachable) CHECK(r.flags.reachable);
      if (r.flags.panyushev_generated) CHECK(r.flags.reachable);
      CHECK(r.graded.begin()->first >= 0);
      size_t total = 0;
      for (auto [j, d] : r.graded) total += d;
      CHECK(total == r.dim_ge);
    }
}

TEST_CASE("zero orbit is everything") {
  auto rows = table(ExceptionalKind::G3);
  auto z = row<Q>(rows, "0");
  CHECK(z.dim_ge == 31);
  CHECK(z.flags.reachable);
  CHECK(z.flags.panyushev_generated);
  CHECK(z.flags.panyushev_layerwise);
  CHECK(z.dim_center == 0);
}

TEST_CASE("sl(2|1) small cases") {
  auto r = one(Family::sl, 2, 1, "2|1");
  CHECK(r.criterion);
  CHECK(r.flags.reachable);
  CHECK(r.dim_g == 8);
  auto r2 = one(Family::sl, 3, 1, "3|1");
  CHECK(!r2.criterion);
  CHECK(!r2.flags.reachable);
}

TEST_CASE("type A labelled diagrams") {
  auto p = pyramid(SuperPartition::parse("2|2"));
  auto d = labelled_diagram_typeA(p);
  REQUIRE(d.nodes.size() == 3);
  // columns -1,-1,1,1
  CHECK(d.str() == "(0) (2) (0)");
  CHECK(n2(d) == 1);
  CHECK(label_sum(d) == 2);
  CHECK(!has_label_one(d));
  CHECK(two_free_core(d).nodes.size() == 2);
  auto st = pyramid_stats(p, d);
  CHECK(st.all_r_eq_s);
  CHECK(st.k == 2);
  CHECK(st.tau == 2);

  auto q = pyramid(SuperPartition::parse("3|2"));
  auto dq = labelled_diagram_typeA(q);
  CHECK(label_sum(dq) == 4);
  CHECK(has_label_one(dq));
}

TEST_CASE("half label sum is lambda1 - 1") {
  for (const auto& it : sweep_items(Family::sl, 6)) {
    auto d = labelled_diagram_typeA(pyramid(it.lambda));
    CHECK(label_sum(d) == 2 * (it.lambda[0] - 1));
  }
}

TEST_CASE("psl centers are powers of e") {
  SweepOptions opt;
  opt.centers = true;
  auto recs = run_sweep(sweep_items(Family::psl, 3), opt);
  for (const auto& r : recs) {
    CAPTURE(r.item.label());
    REQUIRE(r.dim_center);
    CHECK(*r.dim_center == static_cast<size_t>(r.item.lambda[0] - 1));
    CHECK(*r.center_is_e_powers);
  }
  CHECK(check_theorem("center", recs).empty());
}

TEST_CASE("center of g^e in sl(3|2) for (3|2)") {
  auto sl = build_sl<Q>(3, 2);
  auto nd = nilpotent_from_pyramid(sl, pyramid(SuperPartition::parse("3|2")));
  // e and e^2 span the center; the identity is not in sl(3|2)
  CHECK(center_of_centralizer(sl.alg, nd.e).dim() == 2);
}

namespace {

std::vector<std::string> instances(const std::vector<Counterexample>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.instance);
  return out;
}

}  // namespace

TEST_CASE("odd pair reaches e for (3|2)") {
  // rows of lengths 3 and 2 with opposite parity: [x,y] = e with x,y odd of grade 1
  auto g = build_sl<Q>(3, 2);
  auto p = pyramid(SuperPartition::parse("3|2"));
  auto x = xi_matrix<Q>(p, 0, 1, 0);
  auto y = xi_matrix<Q>(p, 1, 0, 1);
  auto e = pyramid_e<Q>(p);
  CHECK(g.supercommutator(x, y) == e);
  auto ex = g.from_matrix(e);
  CHECK(g.alg.bracket(g.from_matrix(x), g.from_matrix(y)) == ex);
  CHECK(g.alg.bracket(ex, g.from_matrix(x)) == g.alg.zero());
  CHECK(g.alg.bracket(ex, g.from_matrix(y)) == g.alg.zero());
  CHECK(is_reachable(g.alg, ex));
  CHECK(!reachability_criterion(p.lambda));
}

TEST_CASE("sweeps: theorem checks on small ranges") {
  SweepOptions opt;
  auto sl = run_sweep(sweep_items(Family::sl, 5), opt);
  CHECK(sl.size() > 20);
  // the partition criterion misses the opposite-parity pairs
  std::vector<std::string> bad = {"sl(3|2) 3|2", "sl(2|3) 2|3"};
  CHECK(instances(check_theorem("theorem1", sl)) == bad);
  CHECK(instances(check_theorem("panyushev", sl)) == bad);
  CHECK(check_theorem("dims", sl).empty());

  opt.flags = false;
  auto gl = run_sweep(sweep_items(Family::gl, 5), opt);
  CHECK(check_theorem("dims", gl).empty());

  SweepOptions oo;
  oo.osp_structure = true;
  auto osp = run_sweep(sweep_items(Family::osp, 6), oo);
  CHECK(!osp.empty());
  CHECK(instances(check_theorem("theorem1", osp)) == std::vector<std::string>{"osp(3|2) 3|2"});
  CHECK(check_theorem("osp-derived", osp).empty());
}

TEST_CASE("parallel sweep matches sequential") {
  auto items = sweep_items(Family::sl, 4);
  auto a = run_sweep(items, {}, 1);
  auto b = run_sweep(items, {}, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].dim_ge == b[i].dim_ge);
    CHECK(a[i].flags.reachable == b[i].flags.reachable);
    CHECK(a[i].graded == b[i].graded);
  }
}

TEST_CASE("unknown theorem names throw") {
  CHECK_THROWS_AS(check_theorem("nope", {}), std::invalid_argument);
  CHECK(theorem_names().size() == 6);
}

TEST_CASE("json reports") {
  auto r = one(Family::sl, 2, 1, "2|1");
  auto j = to_json(r);
  CHECK(j["algebra"] == "sl(2|1)");
  CHECK(j["partition"] == "2|1");
  CHECK(j["flags"]["criterion"] == true);
  CHECK(j["dims"]["g"] == 8);
  auto t = to_json(row<Q>(table(ExceptionalKind::G3), "E"));
  CHECK(t["orbit"] == "E");
  CHECK(t["flags"]["reachable"] == true);
}

TEST_CASE("markdown rendering") {
  auto md = render_table_md(ExceptionalKind::G3, table(ExceptionalKind::G3));
  CHECK(md.find("| E+x2 | ✓ | ✓ | ✓ |") != std::string::npos);
  CHECK(md.find("| x1+x2 |  |  |  |") != std::string::npos);
}
