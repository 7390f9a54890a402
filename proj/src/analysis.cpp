#include "superorbit/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace superorbit {

template <class S>
bool is_reachable(const SuperAlgebra<S>& a, const Vec<S>& e) {
  auto ge = centralizer(a, e);
  return derived_subspace(a, ge, &ge).contains(e);
}

template <class S>
bool is_strongly_reachable(const SuperAlgebra<S>& a, const Vec<S>& e) {
  auto ge = centralizer(a, e);
  return derived_subspace(a, ge, &ge).dim() == ge.dim();
}

namespace {

template <class S>
Subspace<S> grade_or_zero(const GradedDecomposition<S>& g, long j, size_t n) {
  auto it = g.find(j);
  return it == g.end() ? Subspace<S>(n) : it->second;
}

template <class S>
PanyushevResult panyushev_from(const SuperAlgebra<S>& a, const GradedDecomposition<S>& g) {
  size_t n = a.dim();
  Subspace<S> pos(n);
  long top = 0;
  for (const auto& [j, s] : g)
    if (j >= 1 && s.dim() > 0) {
      pos = sum(pos, s);
      top = std::max(top, j);
    }
  auto g1 = grade_or_zero(g, 1, n);
  PanyushevResult r{};
  r.generated = generated_subalgebra(a, g1, &pos) == pos;
  r.layerwise = true;
  for (long j = 1; j < top && r.layerwise; ++j) {
    auto target = grade_or_zero(g, j + 1, n);
    if (target.dim() == 0) continue;
    auto gj = grade_or_zero(g, j, n);
    r.layerwise = bracket_span(a, g1, gj, &target).dim() == target.dim();
  }
  return r;
}

}  // namespace

template <class S>
PanyushevResult satisfies_panyushev(const SuperAlgebra<S>& a, const Vec<S>& e, const Vec<S>& h) {
  auto ge = centralizer(a, e);
  return panyushev_from(a, grade_decompose(a, ge, h));
}

template <class S>
OrbitAnalysis<S> analyze_orbit(const SuperAlgebra<S>& a, const Vec<S>& e, const Vec<S>& h, bool with_center) {
  OrbitAnalysis<S> r;
  r.ge = centralizer(a, e);
  r.derived = derived_subspace(a, r.ge, &r.ge);
  r.grades = grade_decompose(a, r.ge, h);
  r.flags.reachable = r.derived.contains(e);
  r.flags.strongly_reachable = r.derived.dim() == r.ge.dim();
  auto p = panyushev_from(a, r.grades);
  r.flags.panyushev_generated = p.generated;
  r.flags.panyushev_layerwise = p.layerwise;
  auto g1 = grade_or_zero(r.grades, 1, a.dim());
  r.flags.e_in_g1_g1 = bracket_span(a, g1, g1).contains(e);
  if (with_center) r.center = center_of(a, r.ge);
  return r;
}

bool reachability_criterion(const SuperPartition& l) {
  if (l.size() == 0) return true;
  for (size_t i = 0; i + 1 < l.size(); ++i) {
    int d = l[i] - l[i + 1];
    if (d != 0 && d != 1) return false;
  }
  return l[l.size() - 1] == 1;
}

template <class S>
Subspace<S> center_of_centralizer(const SuperAlgebra<S>& a, const Vec<S>& e) {
  return center_of(a, centralizer(a, e));
}

// ---- diagrams

std::string LabelledDiagram::str() const {
  std::string out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ' ';
    auto l = std::to_string(nodes[i].label);
    out += nodes[i].grey ? "(" + l + ")" : l;
  }
  return out;
}

LabelledDiagram labelled_diagram_typeA(const DynkinPyramid& p) {
  LabelledDiagram d;
  for (size_t b = 0; b + 1 < p.boxes.size(); ++b)
    d.nodes.push_back({p.boxes[b + 1].col - p.boxes[b].col, p.boxes[b].parity != p.boxes[b + 1].parity});
  return d;
}

int n2(const LabelledDiagram& d) {
  return static_cast<int>(std::count_if(d.nodes.begin(), d.nodes.end(), [](auto& x) { return x.label == 2; }));
}

LabelledDiagram two_free_core(const LabelledDiagram& d) {
  LabelledDiagram c;
  for (const auto& x : d.nodes)
    if (x.label != 2) c.nodes.push_back(x);
  return c;
}

int label_sum(const LabelledDiagram& d) {
  int s = 0;
  for (const auto& x : d.nodes) s += x.label;
  return s;
}

bool has_label_one(const LabelledDiagram& d) {
  return std::any_of(d.nodes.begin(), d.nodes.end(), [](auto& x) { return x.label == 1; });
}

PyramidStats pyramid_stats(const DynkinPyramid& p, const LabelledDiagram& d) {
  PyramidStats st;
  int mc = p.max_col();
  for (int c = -mc - 1; c <= mc + 1; ++c) {
    st.r[c] = p.r(c);
    st.s[c] = p.s(c);
    st.c[c] = p.c(c);
    if (st.r[c] != st.s[c]) st.all_r_eq_s = false;
  }
  st.k = 1;
  while (p.c(st.k) != 0) ++st.k;
  bool one = has_label_one(d);
  int rs = 0, ss = 0;
  for (int c = -mc; c <= mc; ++c) {
    if (st.r[c] == st.s[c] && st.r[c] != 0 && (!one || std::abs(c) > st.k)) ++st.tau;
    if (std::abs(c) < st.k) {
      rs += st.r[c];
      ss += st.s[c];
    }
  }
  st.sigma = rs == ss ? 1 : 0;
  return st;
}

// ---- sweeps

std::string SweepItem::algebra() const {
  std::string f = family_name(family);
  if (family == Family::psl) return f + "(" + std::to_string(n) + "|" + std::to_string(n) + ")";
  return f + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

std::vector<SweepItem> sweep_items(Family f, int max) {
  std::vector<SweepItem> out;
  auto add = [&](int m, int n, const std::function<bool(const SuperPartition&)>& keep) {
    for (auto& l : super_partitions(m, n))
      if (keep(l)) out.push_back({f, m, n, l});
  };
  auto all = [](const SuperPartition&) { return true; };
  switch (f) {
    case Family::gl:
    case Family::sl:
      for (int t = 2; t <= max; ++t)
        for (int m = t - 1; m >= 1; --m) {
          int n = t - m;
          if (f == Family::sl && m == n) continue;
          add(m, n, all);
        }
      break;
    case Family::psl:
      for (int n = 2; n <= max; ++n) add(n, n, all);
      break;
    case Family::osp:
      for (int t = 3; t <= max; ++t)
        for (int m = t - 2; m >= 1; --m) {
          int n = t - m;
          if (n % 2) continue;
          add(m, n, [](const SuperPartition& l) { return l.osp_valid(); });
        }
      break;
  }
  return out;
}

namespace {

using Q = Rational;

Matrix<Q> mat_power(const Matrix<Q>& x, int k) {
  Matrix<Q> r = Matrix<Q>::identity(x.rows());
  for (int i = 0; i < k; ++i) r = mat_mul(r, x);
  return r;
}

void psl_center_data(const MatrixAlgebra<Q>& g, const NilpotentData<Q>& nd, const OrbitAnalysis<Q>& an,
                     SweepRecord& rec) {
  const auto& a = g.alg;
  const auto& p = nd.pyr;
  const auto& z = *an.center;
  rec.dim_center = z.dim();

  std::vector<Vec<Q>> pw;
  int l1 = p.lambda[0];
  for (int k = 1; k < l1; ++k) pw.push_back(g.from_matrix(mat_power(nd.e_mat, k)));
  rec.center_is_e_powers = span<Q>(a.dim(), pw) == z;

  rec.dim_center_h = center_of_centralizer(a, nd.h).dim();

  auto d = labelled_diagram_typeA(p);
  rec.diagram = d;
  rec.stats = pyramid_stats(p, d);

  // g0: generated by the root vectors of the core nodes
  size_t N = g.N();
  std::vector<Vec<Q>> gens;
  std::vector<int> block(p.boxes.size(), 0);
  for (size_t b = 0; b + 1 < p.boxes.size(); ++b) {
    block[b + 1] = block[b] + (d.nodes[b].label == 2 ? 1 : 0);
    if (d.nodes[b].label == 2) continue;
    size_t i = p.coord[b], j = p.coord[b + 1];
    Matrix<Q> x(N, N), y(N, N);
    x(i, j) = Q(1);
    y(j, i) = Q(1);
    gens.push_back(g.from_matrix(x));
    gens.push_back(g.from_matrix(y));
  }
  auto g0 = generated_subalgebra(a, span<Q>(a.dim(), gens));

  // e0: the part of e inside the core blocks
  Matrix<Q> e0m(N, N);
  for (size_t i = 0; i < p.lambda.size(); ++i)
    for (int k = 0; k + 1 < p.lambda[i]; ++k) {
      size_t from = p.by_row[i][k], to = p.by_row[i][k + 1];
      if (block[from] == block[to]) e0m(p.coord[to], p.coord[from]) = Q(1);
    }
  auto e0 = g.from_matrix(e0m);
  auto g0e0 = intersect(g0, centralizer(a, e0));
  rec.dim_g0_e0 = g0e0.dim();
  rec.dim_center_g0_e0 = center_of(a, g0e0).dim();
}

void osp_structure(const MatrixAlgebra<Q>& g, const DynkinPyramid& p, const OrbitAnalysis<Q>& an,
                   SweepRecord& rec) {
  const auto& a = g.alg;
  auto d = osp_decomposition(g, p);
  auto n2n2 = bracket_span(a, d.n2, d.n2);
  auto part = intersect(d.nfrak0, n2n2);
  auto rhs = sum(sum(d.n1, d.n2_plus), sum(d.nfrak1, part));
  rec.osp_derived_matches = rhs == an.derived;
  rec.osp_direct = d.n1.dim() + d.n2_plus.dim() + d.nfrak1.dim() + part.dim() == rhs.dim();
  rec.osp_nfrak_abelian = bracket_span(a, d.nfrak, d.nfrak).dim() == 0;
  rec.osp_n1_n1_in_nfrak = is_subspace_of(bracket_span(a, d.n1, d.n1), d.nfrak);
}

SweepRecord run_item(const MatrixAlgebra<Q>& g, const SweepItem& it, const SweepOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.item = it;
  rec.criterion = reachability_criterion(it.lambda);
  const auto& a = g.alg;
  rec.dim_g = a.dim();
  auto p = pyramid(it.lambda);
  NilpotentData<Q> nd;
  nd.lambda = it.lambda;
  nd.pyr = p;
  nd.e_mat = pyramid_e<Q>(p);
  nd.h_mat = pyramid_h<Q>(p);
  nd.e = g.from_matrix(nd.e_mat);
  nd.h = g.from_matrix(nd.h_mat);

  bool centers = opt.centers && it.family == Family::psl;
  OrbitAnalysis<Q> an;
  if (opt.flags || centers || opt.osp_structure) {
    an = analyze_orbit(a, nd.e, nd.h, centers);
    rec.flags = an.flags;
    rec.flags.criterion = rec.criterion;
    rec.dim_derived = an.derived.dim();
  } else {
    an.ge = centralizer(a, nd.e);
    an.grades = grade_decompose(a, an.ge, nd.h);
  }
  rec.dim_ge = an.ge.dim();
  for (const auto& v : an.ge.basis())
    if (a.parity_of(v) == 0) ++rec.dim_ge0;
  for (const auto& [j, s] : an.grades) rec.graded[j] = s.dim();

  auto f = dim_formulas(it.lambda);
  switch (it.family) {
    case Family::gl:
      rec.formula_ge = f.gl_e;
      rec.formula_ge0 = f.gl0_e;
      rec.formula_ge1 = f.gl1_e;
      break;
    case Family::sl:
      rec.formula_ge = f.sl_e;
      rec.formula_ge0 = f.gl0_e - 1;
      rec.formula_ge1 = f.gl1_e;
      break;
    case Family::psl:
      rec.formula_ge = f.psl_e;
      break;
    case Family::osp:
      break;
  }
  if (centers) psl_center_data(g, nd, an, rec);
  if (opt.osp_structure && it.family == Family::osp) osp_structure(g, p, an, rec);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

MatrixAlgebra<Q> build_for(const SweepItem& it) {
  switch (it.family) {
    case Family::gl: return build_gl<Q>(it.m, it.n);
    case Family::sl: return build_sl<Q>(it.m, it.n);
    case Family::psl: return build_psl<Q>(it.n);
    case Family::osp: return build_osp_for<Q>(it.lambda);
  }
  throw std::logic_error("family");
}

}  // namespace

std::vector<SweepRecord> run_sweep(const std::vector<SweepItem>& items, const SweepOptions& opt, int jobs) {
  // shared algebras for the families whose model does not depend on the partition
  std::map<std::string, MatrixAlgebra<Q>> shared;
  for (const auto& it : items)
    if (it.family != Family::osp && !shared.count(it.algebra())) shared.emplace(it.algebra(), build_for(it));

  std::vector<SweepRecord> out(items.size());
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto work = [&] {
    for (size_t i; (i = next++) < items.size();) {
      try {
        const auto& it = items[i];
        if (it.family == Family::osp) {
          out[i] = run_item(build_for(it), it, opt);
        } else {
          out[i] = run_item(shared.at(it.algebra()), it, opt);
        }
      } catch (...) {
        std::lock_guard lk(mu);
        if (!err) err = std::current_exception();
        next = items.size();
      }
    }
  };
  size_t nj = static_cast<size_t>(std::max(1, jobs));
  if (nj == 1) {
    work();
  } else {
    std::vector<std::thread> ts;
    for (size_t t = 0; t < nj; ++t) ts.emplace_back(work);
    for (auto& t : ts) t.join();
  }
  if (err) std::rethrow_exception(err);
  return out;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {"theorem1", "panyushev", "dims",
                                                 "center", "psl-diagram", "osp-derived"};
  return names;
}

namespace {

std::string yn(bool b) { return b ? "true" : "false"; }

void check_record(const std::string& name, const SweepRecord& r, std::vector<std::string>& bad) {
  const auto& f = r.flags;
  bool has_flags = f.criterion.has_value();
  if (name == "theorem1") {
    if (has_flags && f.reachable != r.criterion)
      bad.push_back("reachable=" + yn(f.reachable) + " criterion=" + yn(r.criterion));
  } else if (name == "panyushev") {
    if (!has_flags) return;
    if (f.panyushev_generated != f.reachable) bad.push_back("generated=" + yn(f.panyushev_generated));
    if (f.panyushev_layerwise != f.reachable) bad.push_back("layerwise=" + yn(f.panyushev_layerwise));
    if (f.e_in_g1_g1 != f.reachable) bad.push_back("e in [g1,g1]=" + yn(f.e_in_g1_g1));
    if (f.strongly_reachable && !f.reachable) bad.push_back("strongly reachable but not reachable");
  } else if (name == "dims") {
    auto cmp = [&](const char* what, std::optional<long> want, size_t got) {
      if (want && *want != static_cast<long>(got))
        bad.push_back(std::string(what) + " formula " + std::to_string(*want) + " kernel " + std::to_string(got));
    };
    cmp("g^e", r.formula_ge, r.dim_ge);
    cmp("g^e_0", r.formula_ge0, r.dim_ge0);
    cmp("g^e_1", r.formula_ge1, r.dim_ge - r.dim_ge0);
    if (!r.graded.empty() && r.graded.begin()->first < 0) bad.push_back("negative ad h grade in g^e");
  } else if (name == "center") {
    if (!r.dim_center) return;
    long want = r.item.lambda[0] - 1;
    if (static_cast<long>(*r.dim_center) != want)
      bad.push_back("dim z(g^e)=" + std::to_string(*r.dim_center) + " expected " + std::to_string(want));
    if (!*r.center_is_e_powers) bad.push_back("z(g^e) is not spanned by powers of e");
  } else if (name == "psl-diagram") {
    if (!r.diagram) return;
    const auto& d = *r.diagram;
    const auto& st = *r.stats;
    long z = static_cast<long>(*r.dim_center), N2 = n2(d), l1 = r.item.lambda[0];
    int sum = label_sum(d);
    bool one = has_label_one(d);
    auto fail = [&](const std::string& what, long want, long got) {
      bad.push_back(what + " expected " + std::to_string(want) + " got " + std::to_string(got));
    };
    if (sum % 2 || z != sum / 2) fail("dim z(g^e) vs half label sum " + std::to_string(sum), sum / 2, z);
    if (!one) {
      if (z != N2) fail("dim z(g^e) vs n2", N2, z);
      if (N2 != l1 - 1) fail("n2 vs lambda1-1", l1 - 1, N2);
      long zh = st.all_r_eq_s ? l1 - 1 : l1 - 2;
      if (static_cast<long>(*r.dim_center_h) != zh) fail("dim z(g^h)", zh, static_cast<long>(*r.dim_center_h));
    }
    long dd = static_cast<long>(r.dim_ge) - static_cast<long>(*r.dim_g0_e0);
    if (dd != N2) fail("dim g^e - dim g0^e0", N2, dd);
    long zd = z - static_cast<long>(*r.dim_center_g0_e0), want;
    if (!one)
      want = st.all_r_eq_s ? N2 - st.tau + 1 : N2 - st.tau;
    else
      want = st.all_r_eq_s && st.sigma == 1 ? N2 - st.tau : N2 - st.sigma - st.tau;
    if (zd != want)
      fail("dim z(g^e) - dim z(g0^e0) (tau=" + std::to_string(st.tau) + " sigma=" + std::to_string(st.sigma) + ")",
           want, zd);
  } else if (name == "osp-derived") {
    if (!r.osp_derived_matches) return;
    if (!*r.osp_derived_matches) bad.push_back("[g^e,g^e] differs from the decomposition");
    if (!*r.osp_direct) bad.push_back("sum is not direct");
    if (!*r.osp_nfrak_abelian) bad.push_back("[N,N] != 0");
    if (!*r.osp_n1_n1_in_nfrak) bad.push_back("[N1,N1] not inside N");
  } else {
    throw std::invalid_argument("unknown theorem " + name);
  }
}

}  // namespace

std::vector<Counterexample> check_theorem(const std::string& name, const std::vector<SweepRecord>& records) {
  if (std::find(theorem_names().begin(), theorem_names().end(), name) == theorem_names().end())
    throw std::invalid_argument("unknown theorem " + name);
  std::vector<Counterexample> out;
  for (const auto& r : records) {
    std::vector<std::string> bad;
    check_record(name, r, bad);
    if (bad.empty()) continue;
    std::string det;
    for (size_t i = 0; i < bad.size(); ++i) det += (i ? "; " : "") + bad[i];
    out.push_back({r.item.label(), det});
  }
  return out;
}

std::vector<JacobiResult> jacobi_sweep(Family f, int max) {
  std::vector<JacobiResult> out;
  std::map<std::string, bool> seen;
  for (const auto& it : sweep_items(f, max)) {
    std::string key = it.algebra();
    if (f == Family::osp) key += " " + it.lambda.str();
    if (seen[key]) continue;
    seen[key] = true;
    auto g = build_for(it);
    out.push_back({key, check_structure(g.alg).size(), check_super_jacobi(g.alg).size()});
  }
  return out;
}

// ---- exceptional tables

template <class S>
std::vector<TableRow> exceptional_table(const SuperAlgebra<S>& a, ExceptionalKind k) {
  std::vector<TableRow> rows;
  for (const auto& rep : orbit_reps(a, k)) {
    auto an = analyze_orbit(a, rep.element, rep.h, true);
    TableRow r;
    r.algebra = kind_name(k);
    r.label = rep.label;
    r.flags = an.flags;
    for (const auto& [j, s] : an.grades) r.graded[j] = s.dim();
    r.dim_g = a.dim();
    r.dim_ge = an.ge.dim();
    r.dim_derived = an.derived.dim();
    r.dim_center = an.center->dim();
    r.h = a.show(rep.h);
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::pair<std::string, std::array<bool, 3>>> printed_table(ExceptionalKind k) {
  constexpr bool T = true, F = false;
  switch (k) {
    case ExceptionalKind::D21:
      return {{"0", {T, T, T}},      {"E1", {T, T, T}},       {"E2", {T, T, T}},       {"E3", {T, T, T}},
              {"E1+E2", {F, F, F}},  {"E1+E3", {F, F, F}},    {"E2+E3", {F, F, F}},    {"E1+E2+E3", {T, F, T}}};
    case ExceptionalKind::G3:
      return {{"E+(x1+x2)", {F, F, F}}, {"E+x2", {T, T, T}},     {"E+x1", {T, F, F}}, {"E+(x2+x5)", {T, F, T}},
              {"E", {T, T, T}},         {"x1+x2", {F, F, F}},    {"x2", {T, T, T}},   {"x1", {T, T, F}},
              {"x2+x5", {F, F, F}},     {"0", {T, T, T}}};
    case ExceptionalKind::F4:
      return {{"E+(R(e1,e-2)+R(e2,e-3)+R(e3,e0))", {F, F, F}},
              {"E+(R(e1,e-2)+R(e2,e0))", {F, F, F}},
              {"E+(R(e1,e-3)+R(e2,e3))", {T, F, T}},
              {"E+(R(e1,e0)+R(e2,e3))", {T, F, T}},
              {"E+R(e1,e0)", {F, F, F}},
              {"E+R(e1,e2)", {T, T, T}},
              {"E", {T, T, T}},
              {"R(e1,e-2)+R(e2,e-3)+R(e3,e0)", {F, F, F}},
              {"R(e1,e-2)+R(e2,e0)", {F, F, F}},
              {"R(e1,e-3)+R(e2,e3)", {F, F, F}},
              {"R(e1,e0)+R(e2,e3)", {T, T, T}},
              {"R(e1,e0)", {T, T, T}},
              {"R(e1,e2)", {T, T, T}},
              {"0", {T, T, T}}};
  }
  return {};
}

std::string render_table_md(ExceptionalKind k, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "# " << kind_name(k) << ": reachable, strongly reachable and Panyushev orbits\n\n";
  os << "| orbit | reachable | strongly reachable | Panyushev |\n";
  os << "|---|:-:|:-:|:-:|\n";
  auto mark = [](bool b) { return b ? "✓" : ""; };
  for (const auto& r : rows)
    os << "| " << r.label << " | " << mark(r.flags.reachable) << " | " << mark(r.flags.strongly_reachable) << " | "
       << mark(r.flags.panyushev_generated && r.flags.panyushev_layerwise) << " |\n";
  return os.str();
}

nlohmann::json to_json(const OrbitFlags& f) {
  nlohmann::json j = {{"reachable", f.reachable},
                      {"strongly_reachable", f.strongly_reachable},
                      {"panyushev_generated", f.panyushev_generated},
                      {"panyushev_layerwise", f.panyushev_layerwise},
                      {"e_in_g1_g1", f.e_in_g1_g1}};
  j["criterion"] = f.criterion ? nlohmann::json(*f.criterion) : nlohmann::json(nullptr);
  return j;
}

namespace {

nlohmann::json graded_json(const std::map<long, size_t>& g) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : g) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

nlohmann::json to_json(const SweepRecord& r) {
  nlohmann::json j;
  j["algebra"] = r.item.algebra();
  j["partition"] = r.item.lambda.str();
  j["dims"] = {{"g", r.dim_g}, {"ge", r.dim_ge}, {"ge_even", r.dim_ge0}, {"ge_odd", r.dim_ge - r.dim_ge0}};
  if (r.flags.criterion) j["dims"]["derived"] = r.dim_derived;
  if (r.dim_center) j["dims"]["center"] = *r.dim_center;
  j["graded_dims"] = graded_json(r.graded);
  if (r.flags.criterion) j["flags"] = to_json(r.flags);
  j["criterion"] = r.criterion;
  nlohmann::json fm = nlohmann::json::object();
  if (r.formula_ge) fm["ge"] = *r.formula_ge;
  if (r.formula_ge0) fm["ge_even"] = *r.formula_ge0;
  if (r.formula_ge1) fm["ge_odd"] = *r.formula_ge1;
  j["formulas"] = fm;
  if (r.diagram) {
    nlohmann::json d;
    d["labels"] = r.diagram->str();
    d["n2"] = n2(*r.diagram);
    d["label_sum"] = label_sum(*r.diagram);
    d["core"] = two_free_core(*r.diagram).str();
    d["k"] = r.stats->k;
    d["tau"] = r.stats->tau;
    d["sigma"] = r.stats->sigma;
    d["all_r_eq_s"] = r.stats->all_r_eq_s;
    d["center_is_e_powers"] = *r.center_is_e_powers;
    d["dim_center_h"] = *r.dim_center_h;
    d["dim_g0_e0"] = *r.dim_g0_e0;
    d["dim_center_g0_e0"] = *r.dim_center_g0_e0;
    j["diagram"] = d;
  }
  if (r.osp_derived_matches)
    j["osp"] = {{"derived_matches", *r.osp_derived_matches},
                {"direct", *r.osp_direct},
                {"nfrak_abelian", *r.osp_nfrak_abelian},
                {"n1_n1_in_nfrak", *r.osp_n1_n1_in_nfrak}};
  return j;
}

nlohmann::json to_json(const TableRow& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["orbit"] = r.label;
  j["dims"] = {{"g", r.dim_g}, {"ge", r.dim_ge}, {"derived", r.dim_derived}, {"center", r.dim_center}};
  j["graded_dims"] = graded_json(r.graded);
  j["flags"] = to_json(r.flags);
  j["h"] = r.h;
  return j;
}

#define SUPERORBIT_ANALYSIS(S)                                                                             \
  template bool is_reachable(const SuperAlgebra<S>&, const Vec<S>&);                                       \
  template bool is_strongly_reachable(const SuperAlgebra<S>&, const Vec<S>&);                              \
  template PanyushevResult satisfies_panyushev(const SuperAlgebra<S>&, const Vec<S>&, const Vec<S>&);      \
  template OrbitAnalysis<S> analyze_orbit(const SuperAlgebra<S>&, const Vec<S>&, const Vec<S>&, bool);     \
  template Subspace<S> center_of_centralizer(const SuperAlgebra<S>&, const Vec<S>&);                       \
  template std::vector<TableRow> exceptional_table(const SuperAlgebra<S>&, ExceptionalKind);

SUPERORBIT_ANALYSIS(Rational)
SUPERORBIT_ANALYSIS(RationalFunction)

}  // namespace superorbit
