#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "superorbit/linalg.hpp"

namespace superorbit {

template <class S>
struct Term {
  uint32_t k;
  S c;
};
template <class S>
using SparseVec = std::vector<Term<S>>;

template <class S>
SparseVec<S> to_sparse(const Vec<S>& v) {
  SparseVec<S> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.push_back({static_cast<uint32_t>(i), v[i]});
  return out;
}

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JacobiViolation {
  size_t i, j, k;
};

// Finite-dimensional Lie superalgebra given by a parity-tagged basis and
// structure constants c[i][j] = coordinates of [b_i, b_j].
template <class S>
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  SuperAlgebra(std::string name, std::vector<std::string> names, std::vector<int> parity);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  size_t dim() const { return names_.size(); }
  int parity(size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> find(const std::string& basis_name) const;
  size_t index(const std::string& basis_name) const;  // throws if unknown
  size_t even_dim() const;

  // Sets [b_i,b_j] = v and [b_j,b_i] = -(-1)^{p_i p_j} v.
  void set_bracket(size_t i, size_t j, const Vec<S>& v);
  const SparseVec<S>& structure(size_t i, size_t j) const { return table_[i * dim() + j]; }
  // Direct write used by tests to corrupt a single entry.
  void set_structure_raw(size_t i, size_t j, const Vec<S>& v) { table_[i * dim() + j] = to_sparse(v); }

  Vec<S> basis_vec(size_t i) const { return unit_vec<S>(dim(), i); }
  Vec<S> zero() const { return Vec<S>(dim()); }
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const;
  Vec<S> bracket_basis(size_t i, size_t j) const;
  // Matrix of ad x: column j is [x, b_j].
  Matrix<S> ad(const Vec<S>& x) const;
  // 0 or 1 for a homogeneous nonzero vector, nullopt otherwise.
  std::optional<int> parity_of(const Vec<S>& x) const;

  std::string show(const Vec<S>& x) const;

 private:
  void check(const Vec<S>& x) const;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<int> parity_;
  std::vector<SparseVec<S>> table_;
};

// Empty iff super skew-symmetry and parity compatibility hold.
template <class S>
std::vector<std::string> check_structure(const SuperAlgebra<S>& a);

template <class S>
std::vector<JacobiViolation> check_super_jacobi(const SuperAlgebra<S>& a, size_t max_report = 50);

template <class S>
Subspace<S> centralizer(const SuperAlgebra<S>& a, const Vec<S>& e);

// span{[u,v] : u,v in basis of s}. If ceiling is given the caller promises the
// result lies inside it, and the scan stops once that dimension is reached.
template <class S>
Subspace<S> derived_subspace(const SuperAlgebra<S>& a, const Subspace<S>& s, const Subspace<S>* ceiling = nullptr);

// span{[u,v] : u in s, v in t}
template <class S>
Subspace<S> bracket_span(const SuperAlgebra<S>& a, const Subspace<S>& s, const Subspace<S>& t,
                         const Subspace<S>* ceiling = nullptr);

template <class S>
bool is_closed(const SuperAlgebra<S>& a, const Subspace<S>& s);

template <class S>
Subspace<S> generated_subalgebra(const SuperAlgebra<S>& a, const Subspace<S>& s, const Subspace<S>* ceiling = nullptr);

template <class S>
Subspace<S> center_of(const SuperAlgebra<S>& a, const Subspace<S>& s);

template <class S>
using GradedDecomposition = std::map<long, Subspace<S>>;

template <class S>
GradedDecomposition<S> grade_decompose(const SuperAlgebra<S>& a, const Subspace<S>& s, const Vec<S>& h);

template <class S>
bool is_ad_nilpotent(const SuperAlgebra<S>& a, const Vec<S>& x);

template <class S>
struct Quotient {
  SuperAlgebra<S> algebra;
  Subspace<S> ideal;
  std::vector<size_t> kept;  // ambient indices forming the complement basis
  Vec<S> project(const Vec<S>& v) const;
};

template <class S>
Quotient<S> quotient(const SuperAlgebra<S>& a, const Subspace<S>& ideal, const std::string& name = "");

template <class S>
nlohmann::json to_json(const SuperAlgebra<S>& a);
template <class S>
SuperAlgebra<S> algebra_from_json(const nlohmann::json& j);

}  // namespace superorbit
