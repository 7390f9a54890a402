// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "superorbit/analysis.hpp"

using namespace superorbit;
using Q = Rational;
using RF = RationalFunction;

namespace {

// time limits in seconds
constexpr double kLimitD21 = 60;
constexpr double kLimitG3 = 60;
constexpr double kLimitF4 = 120;
constexpr double kLimitSweep = 600;

// sweep ranges
constexpr int kMaxSl = 8;
constexpr int kMaxPsl = 4;
constexpr int kMaxOsp = 9;
constexpr int kMaxGl = 8;

// counterexample lines printed per criterion
constexpr size_t kShow = 40;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string summary;
  std::vector<std::string> details;
};

int failures = 0;

void report(int n, const Outcome& o) {
  std::cout << "criterion " << std::setw(2) << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << "\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
  std::cout.flush();
  if (!o.pass) ++failures;
}

std::string secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

template <class S>
Outcome table_criterion(ExceptionalKind k, const std::function<SuperAlgebra<S>()>& build, double limit) {
  auto t0 = Clock::now();
  auto a = build();
  auto rows = exceptional_table(a, k);
  double t = since(t0);
  auto printed = printed_table(k);
  Outcome o{true, "", {}};
  size_t mism = 0;
  if (rows.size() != printed.size()) {
    o.pass = false;
    o.details.push_back("orbit count " + std::to_string(rows.size()) + ", printed " + std::to_string(printed.size()));
  }
  for (size_t i = 0; i < std::min(rows.size(), printed.size()); ++i) {
    const auto& r = rows[i];
    std::array<bool, 3> got = {r.flags.reachable, r.flags.strongly_reachable,
                               r.flags.panyushev_generated && r.flags.panyushev_layerwise};
    if (r.label != printed[i].first || got != printed[i].second) {
      ++mism;
      o.details.push_back("row " + r.label + " differs from printed " + printed[i].first);
    }
  }
  if (mism) o.pass = false;
  if (t > limit) {
    o.pass = false;
    o.details.push_back("time limit " + secs(limit) + " exceeded");
  }
  o.summary = kind_name(k) + ": " + std::to_string(rows.size()) + " orbits, " + std::to_string(mism) +
              " mismatches, " + secs(t) + " (limit " + secs(limit) + ")";
  return o;
}

struct Sweeps {
  std::vector<SweepRecord> sl, psl, osp, gl;
  double seconds = 0;
};

Sweeps run_sweeps() {
  auto t0 = Clock::now();
  Sweeps s;
  SweepOptions base;
  s.sl = run_sweep(sweep_items(Family::sl, kMaxSl), base);
  SweepOptions p = base;
  p.centers = true;
  s.psl = run_sweep(sweep_items(Family::psl, kMaxPsl), p);
  SweepOptions o = base;
  o.osp_structure = true;
  s.osp = run_sweep(sweep_items(Family::osp, kMaxOsp), o);
  SweepOptions g;
  g.flags = false;
  s.gl = run_sweep(sweep_items(Family::gl, kMaxGl), g);
  s.seconds = since(t0);
  return s;
}

Outcome theorem_criterion(const std::string& thm, const std::vector<const std::vector<SweepRecord>*>& sets,
                          const std::string& scope) {
  Outcome o{true, "", {}};
  size_t n = 0, bad = 0;
  for (const auto* recs : sets) {
    n += recs->size();
    for (const auto& c : check_theorem(thm, *recs)) {
      ++bad;
      if (o.details.size() < kShow) o.details.push_back(c.instance + ": " + c.detail);
    }
  }
  if (bad > kShow) o.details.push_back("... " + std::to_string(bad - kShow) + " more");
  o.pass = bad == 0;
  o.summary = scope + ": " + std::to_string(n) + " instances, " + std::to_string(bad) + " counterexamples";
  return o;
}

template <class S>
void anchors_for(const SuperAlgebra<S>& a, ExceptionalKind k, const std::map<std::string, S>& sym, size_t& ok,
                 size_t& total, std::vector<std::string>& details) {
  for (const auto& c : anchor_cases()) {
    if (c.kind != k) continue;
    ++total;
    auto got = a.bracket(parse_element(a, c.x, sym), parse_element(a, c.y, sym));
    bool same = got == parse_element(a, c.printed, sym);
    if (same) ++ok;
    details.push_back(kind_name(k) + " [" + c.x + ", " + c.y + "] printed " + c.printed + ": " +
                      (same ? "reproduced" : "NOT reproduced, computed " + a.show(got)));
  }
}

}  // namespace

int main() {
  auto t_all = Clock::now();
  const auto d21 = build_D21(RF::alpha());
  const auto g3 = build_G3();
  const auto f4 = build_F4();

  report(1, table_criterion<RF>(ExceptionalKind::D21, [] { return build_D21(RF::alpha()); }, kLimitD21));
  report(2, table_criterion<Q>(ExceptionalKind::G3, [] { return build_G3(); }, kLimitG3));
  report(3, table_criterion<Q>(ExceptionalKind::F4, [] { return build_F4(); }, kLimitF4));

  auto sw = run_sweeps();
  std::string range = "sl m+n<=" + std::to_string(kMaxSl) + ", psl n<=" + std::to_string(kMaxPsl) +
                      ", osp m+2n<=" + std::to_string(kMaxOsp);
  {
    auto o = theorem_criterion("theorem1", {&sw.sl, &sw.psl, &sw.osp}, range);
    o.summary += ", sweep " + secs(sw.seconds) + " (limit " + secs(kLimitSweep) + ")";
    if (sw.seconds > kLimitSweep) o.pass = false;
    report(4, o);
  }
  report(5, theorem_criterion("panyushev", {&sw.sl, &sw.psl, &sw.osp}, range));
  report(6, theorem_criterion("dims", {&sw.gl, &sw.sl, &sw.psl}, "gl/sl m+n<=8, psl n<=4"));
  report(7, theorem_criterion("center", {&sw.psl}, "psl n<=4"));
  report(8, theorem_criterion("psl-diagram", {&sw.psl}, "psl n<=4"));
  report(9, theorem_criterion("osp-derived", {&sw.osp}, "osp m+2n<=9"));

  {
    Outcome o{true, "", {}};
    size_t algs = 0, bad_algs = 0;
    auto note = [&](const std::string& name, size_t st, size_t jac) {
      ++algs;
      if (st || jac) {
        ++bad_algs;
        o.details.push_back(name + ": " + std::to_string(st) + " structure problems, " + std::to_string(jac) +
                            " Jacobi violations");
      }
    };
    for (auto [f, max] : {std::pair{Family::gl, kMaxGl}, {Family::sl, kMaxSl}, {Family::psl, kMaxPsl},
                          {Family::osp, kMaxOsp}})
      for (const auto& r : jacobi_sweep(f, max)) note(r.algebra, r.structure_problems, r.jacobi_violations);
    note("D21(symbolic)", check_structure(d21).size(), check_super_jacobi(d21).size());
    note("G3", check_structure(g3).size(), check_super_jacobi(g3).size());
    note("F4", check_structure(f4).size(), check_super_jacobi(f4).size());

    size_t ok = 0, total = 0;
    auto s = d21_sigma(RF::alpha());
    anchors_for(d21, ExceptionalKind::D21, {{"s1", s[0]}, {"s2", s[1]}, {"s3", s[2]}}, ok, total, o.details);
    anchors_for(g3, ExceptionalKind::G3, {}, ok, total, o.details);
    anchors_for(f4, ExceptionalKind::F4, {}, ok, total, o.details);
    o.pass = bad_algs == 0 && ok == total;
    o.summary = "Jacobi clean on " + std::to_string(algs - bad_algs) + "/" + std::to_string(algs) +
                " algebras; anchors reproduced " + std::to_string(ok) + "/" + std::to_string(total);
    report(10, o);
  }

  std::cout << "total " << secs(since(t_all)) << ", " << failures << " criteria failed\n";
  return failures ? 1 : 0;
}
