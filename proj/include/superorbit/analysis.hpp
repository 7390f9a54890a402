#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "superorbit/exceptional.hpp"
#include "superorbit/matrixalg.hpp"

namespace superorbit {

struct OrbitFlags {
  bool reachable = false;
  bool strongly_reachable = false;
  bool panyushev_generated = false;
  bool panyushev_layerwise = false;
  bool e_in_g1_g1 = false;  // e in [g^e(1), g^e(1)]
  std::optional<bool> criterion;  // partition criterion, classical families only
};

template <class S>
struct OrbitAnalysis {
  Subspace<S> ge, derived;
  GradedDecomposition<S> grades;
  std::optional<Subspace<S>> center;
  OrbitFlags flags;
};

template <class S>
bool is_reachable(const SuperAlgebra<S>& a, const Vec<S>& e);
template <class S>
bool is_strongly_reachable(const SuperAlgebra<S>& a, const Vec<S>& e);

struct PanyushevResult {
  bool generated, layerwise;
};
// throws AlgebraError if h does not grade g^e integrally
template <class S>
PanyushevResult satisfies_panyushev(const SuperAlgebra<S>& a, const Vec<S>& e, const Vec<S>& h);

// All flags at once, sharing g^e, its derived algebra and the grading.
template <class S>
OrbitAnalysis<S> analyze_orbit(const SuperAlgebra<S>& a, const Vec<S>& e, const Vec<S>& h, bool with_center);

// lambda_i - lambda_{i+1} in {0,1} and last part 1; parities ignored
bool reachability_criterion(const SuperPartition& lambda);

template <class S>
Subspace<S> center_of_centralizer(const SuperAlgebra<S>& a, const Vec<S>& e);

// ---- type A diagrams

struct DiagramNode {
  int label;
  bool grey;
};

struct LabelledDiagram {
  std::vector<DiagramNode> nodes;  // node i joins boxes i and i+1 in pyramid order
  std::string str() const;         // e.g. "0 (2) 0" with grey labels in parentheses
};

LabelledDiagram labelled_diagram_typeA(const DynkinPyramid& p);
int n2(const LabelledDiagram& d);
LabelledDiagram two_free_core(const LabelledDiagram& d);
int label_sum(const LabelledDiagram& d);
bool has_label_one(const LabelledDiagram& d);

struct PyramidStats {
  std::map<int, int> r, s, c;  // by column
  int k = 0;
  int tau = 0;
  int sigma = 0;
  bool all_r_eq_s = true;
};
PyramidStats pyramid_stats(const DynkinPyramid& p, const LabelledDiagram& d);

// ---- sweeps and verification

struct SweepItem {
  Family family;
  int m, n;  // osp: n is the full odd dimension
  SuperPartition lambda;
  std::string algebra() const;
  std::string label() const { return algebra() + " " + lambda.str(); }
};

// gl: m,n>=1, m+n<=max. sl: m,n>=1, m!=n, m+n<=max. psl: 2<=n<=max.
// osp: m>=1, n=2*n2 with n2>=1, m+n<=max.
std::vector<SweepItem> sweep_items(Family f, int max);

// Brute-force data for one partition; fields not relevant to the family stay empty.
struct SweepRecord {
  SweepItem item;
  size_t dim_g = 0, dim_ge = 0, dim_ge0 = 0, dim_derived = 0;
  std::map<long, size_t> graded;
  OrbitFlags flags;
  bool criterion = false;
  // dimension formulas
  std::optional<long> formula_ge, formula_ge0, formula_ge1;
  // psl centers and diagrams
  std::optional<size_t> dim_center;
  std::optional<bool> center_is_e_powers;
  std::optional<size_t> dim_center_h;
  std::optional<LabelledDiagram> diagram;
  std::optional<PyramidStats> stats;
  std::optional<size_t> dim_g0_e0, dim_center_g0_e0;
  // osp structure
  std::optional<bool> osp_derived_matches, osp_nfrak_abelian, osp_n1_n1_in_nfrak, osp_direct;
  double seconds = 0;
};

struct SweepOptions {
  bool flags = true;     // reachability and Panyushev flags
  bool centers = false;  // psl centers and diagram data
  bool osp_structure = false;
};

// One algebra per (family, m, n); items must share it. Uses jobs worker threads.
std::vector<SweepRecord> run_sweep(const std::vector<SweepItem>& items, const SweepOptions& opt, int jobs = 1);

struct Counterexample {
  std::string instance;
  std::string detail;
};

// Names: theorem1, panyushev, dims, center, psl-diagram, osp-derived.
const std::vector<std::string>& theorem_names();
std::vector<Counterexample> check_theorem(const std::string& name, const std::vector<SweepRecord>& records);

struct JacobiResult {
  std::string algebra;
  size_t structure_problems = 0, jacobi_violations = 0;
};
// Every matrix algebra met by sweep_items(f, max); osp once per partition since the form varies.
std::vector<JacobiResult> jacobi_sweep(Family f, int max);

// ---- exceptional tables

struct TableRow {
  std::string algebra, label;
  OrbitFlags flags;
  std::map<long, size_t> graded;
  size_t dim_g = 0, dim_ge = 0, dim_derived = 0, dim_center = 0;
  std::string h;
};

template <class S>
std::vector<TableRow> exceptional_table(const SuperAlgebra<S>& a, ExceptionalKind k);

// Printed table flags (reachable, strongly reachable, Panyushev) per label.
std::vector<std::pair<std::string, std::array<bool, 3>>> printed_table(ExceptionalKind k);

std::string render_table_md(ExceptionalKind k, const std::vector<TableRow>& rows);

nlohmann::json to_json(const OrbitFlags& f);
nlohmann::json to_json(const SweepRecord& r);
nlohmann::json to_json(const TableRow& r);

}  // namespace superorbit
