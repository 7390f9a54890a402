#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superorbit/superalg.hpp"

namespace superorbit {

struct Part {
  int size;
  int parity;  // 0 or 1
  friend bool operator==(const Part& a, const Part& b) { return a.size == b.size && a.parity == b.parity; }
};

// Parts sorted by size descending, equal sizes with parity 0 first.
class SuperPartition {
 public:
  SuperPartition() = default;
  explicit SuperPartition(std::vector<Part> parts);
  static SuperPartition from(const std::vector<int>& even, const std::vector<int>& odd);
  // "p1,p2,...|q1,q2,..."; either side may be empty.
  static SuperPartition parse(std::string_view text);

  const std::vector<Part>& parts() const { return parts_; }
  size_t size() const { return parts_.size(); }
  int operator[](size_t i) const { return parts_[i].size; }
  int parity(size_t i) const { return parts_[i].parity; }
  int m() const;
  int n() const;
  int total() const { return m() + n(); }
  std::string str() const;
  // even parts: even sizes have even multiplicity; odd parts: odd sizes have even multiplicity
  bool osp_valid() const;
  bool all_same_size_parity() const;

  friend bool operator==(const SuperPartition& a, const SuperPartition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Part> parts_;
};

std::vector<std::vector<int>> integer_partitions(int n);
// All super-partitions of (m|n), in a fixed deterministic order.
std::vector<SuperPartition> super_partitions(int m, int n);

struct Box {
  size_t row;  // 0-based part index; row 0 is the bottom row
  int col;     // x coordinate of the box centre
  int parity;
  int power;   // the box holds e^power v_row
};

struct DynkinPyramid {
  SuperPartition lambda;
  std::vector<Box> boxes;                    // in pyramid numbering order
  std::vector<size_t> coord;                 // box number -> matrix coordinate
  std::vector<std::vector<size_t>> by_row;   // by_row[i][a] = box number holding e^a v_i
  int r(int col) const;
  int s(int col) const;
  int c(int col) const { return r(col) + s(col); }
  int max_col() const;
  size_t coordinate(size_t row, int power) const { return coord[by_row[row][power]]; }
  std::string ascii() const;
};

DynkinPyramid pyramid(const SuperPartition& lambda);

enum class Family { gl, sl, psl, osp };
std::string family_name(Family f);

template <class S>
struct MEntry {
  uint32_t r, c;
  S v;
};
template <class S>
using SparseMat = std::vector<MEntry<S>>;

// Matrix realization. For psl the matrices and coordinates belong to sl(n|n)
// and the algebra is the quotient by the identity.
template <class S>
class MatrixAlgebra {
 public:
  Family family;
  size_t m = 0, n = 0;  // coordinates 0..m-1 even, m..m+n-1 odd
  SuperAlgebra<S> alg;
  std::vector<SparseMat<S>> mats;
  std::vector<size_t> pos;  // flattened position read off for each basis coordinate
  std::optional<Quotient<S>> quot;
  std::optional<Matrix<S>> form;  // osp only: B(e_a, e_b)

  size_t N() const { return m + n; }
  int coord_parity(size_t i) const { return i >= m ? 1 : 0; }
  // Coordinates in the matrix-level algebra (sl for psl); throws if X is not a member.
  Vec<S> lift_coords(const Matrix<S>& X) const;
  bool contains_matrix(const Matrix<S>& X) const;
  Vec<S> from_matrix(const Matrix<S>& X) const;
  Matrix<S> to_matrix(const Vec<S>& v) const;  // for psl a representative in sl
  Matrix<S> supercommutator(const Matrix<S>& a, const Matrix<S>& b) const;
};

template <class S>
MatrixAlgebra<S> build_gl(size_t m, size_t n);
template <class S>
MatrixAlgebra<S> build_sl(size_t m, size_t n);
template <class S>
MatrixAlgebra<S> build_psl(size_t n);
// osp(m|2*n2) preserving the standard model form of the zero orbit
template <class S>
MatrixAlgebra<S> build_osp(size_t m, size_t n2);
// osp preserving the model form attached to lambda, so the pyramid e lies in it
template <class S>
MatrixAlgebra<S> build_osp_for(const SuperPartition& lambda);

template <class S>
struct NilpotentData {
  SuperPartition lambda;
  DynkinPyramid pyr;
  Vec<S> e, h, f;
  Matrix<S> e_mat, h_mat;
};

template <class S>
Matrix<S> pyramid_e(const DynkinPyramid& p);
template <class S>
Matrix<S> pyramid_h(const DynkinPyramid& p);
template <class S>
NilpotentData<S> nilpotent_from_pyramid(const MatrixAlgebra<S>& g, const DynkinPyramid& p);
// Solves [e,f] = h, [h,f] = -2f.
template <class S>
std::optional<Vec<S>> complete_triple(const SuperAlgebra<S>& a, const Vec<S>& e, const Vec<S>& h);

// Jordan block sizes of a nilpotent matrix on the coordinates of one parity.
template <class S>
std::vector<int> jordan_type(const Matrix<S>& x, const std::vector<size_t>& coords);

struct XiElement {
  size_t i, j;  // 0-based part indices
  int k;
  int parity;
  int grade(const SuperPartition& l) const { return l[i] - l[j] + 2 * k; }
  std::string str() const;
};

std::vector<XiElement> xi_basis(const SuperPartition& lambda);
// xi_i^{j,k}: e^a v_i -> e^{a+k} v_j
template <class S>
Matrix<S> xi_matrix(const DynkinPyramid& p, size_t i, size_t j, int k);

struct DimFormulas {
  long gl_e, gl0_e, gl1_e, sl_e;
  std::optional<long> psl_e;  // column-count formula, only for m == n
};
DimFormulas dim_formulas(const SuperPartition& lambda);

// osp sign machinery
std::vector<size_t> osp_involution(const SuperPartition& lambda);
std::vector<int> osp_theta(const SuperPartition& lambda);
int osp_epsilon(const SuperPartition& lambda, size_t i, size_t j, int k);
// xi_i^{j,l_j-1-k} + eps * xi_{j*}^{i*,l_i-1-k}, with eps given explicitly
template <class S>
Matrix<S> osp_pair_element(const DynkinPyramid& p, size_t i, size_t j, int k, int eps);

template <class S>
struct OspDecomposition {
  Subspace<S> nfrak, nfrak0, nfrak1, n1, n2, n2_minus, n2_plus;
};
template <class S>
OspDecomposition<S> osp_decomposition(const MatrixAlgebra<S>& g, const DynkinPyramid& p);

}  // namespace superorbit
