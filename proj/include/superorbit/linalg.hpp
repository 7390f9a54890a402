#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superorbit/field.hpp"

namespace superorbit {

template <class S>
using Vec = std::vector<S>;

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch(size_t a, size_t b)
      : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
Vec<S> unit_vec(size_t n, size_t i) {
  Vec<S> v(n);
  v[i] = S(1);
  return v;
}

// y += a*x
template <class S>
void axpy(Vec<S>& y, const S& a, const Vec<S>& x) {
  if (is_zero(a)) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

template <class S>
Vec<S> scaled(const Vec<S>& x, const S& a) {
  Vec<S> r(x.size());
  if (is_zero(a)) return r;
  for (size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) r[i] = a * x[i];
  return r;
}

template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  axpy(a, S(1), b);
  return a;
}

template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  axpy(a, S(-1), b);
  return a;
}

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix from_columns(size_t nrows, const std::vector<Vec<S>>& cols) {
    Matrix m(nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != nrows) throw DimensionMismatch(cols[j].size(), nrows);
      for (size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(size_t ncols, const std::vector<Vec<S>>& rows) {
    Matrix m(rows.size(), ncols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != ncols) throw DimensionMismatch(rows[i].size(), ncols);
      for (size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  S& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec<S> row(size_t i) const { return Vec<S>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<S> col(size_t j) const {
    Vec<S> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != cols_) throw DimensionMismatch(v.size(), cols_);
    Vec<S> r(rows_);
    for (size_t j = 0; j < cols_; ++j) {
      if (is_zero(v[j])) continue;
      for (size_t i = 0; i < rows_; ++i)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    }
    return r;
  }
  void swap_rows(size_t i, size_t k) {
    if (i == k) return;
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

template <class S>
struct EliminationPolicy {
  static constexpr bool fraction_free = false;
};
template <>
struct EliminationPolicy<RationalFunction> {
  static constexpr bool fraction_free = true;
};

template <class S>
struct RrefResult {
  Matrix<S> r;
  std::vector<size_t> pivots;
};

namespace detail {

template <class S>
void back_normalize(Matrix<S>& m, const std::vector<size_t>& piv) {
  for (size_t r = piv.size(); r-- > 0;) {
    size_t c = piv[r];
    S inv = S(1) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (size_t i = 0; i < r; ++i) {
      if (is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
  }
}

}  // namespace detail

// Unique reduced row echelon form. For Q(a) the forward pass is fraction-free
// (Bareiss), normalization happens once at the end.
template <class S>
RrefResult<S> rref_with_pivots(Matrix<S> m) {
  std::vector<size_t> piv;
  size_t r = 0;
  if constexpr (EliminationPolicy<S>::fraction_free) {
    S prev(1);
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      size_t p = r;
      while (p < m.rows() && is_zero(m(p, c))) ++p;
      if (p == m.rows()) continue;
      m.swap_rows(p, r);
      for (size_t i = r + 1; i < m.rows(); ++i) {
        for (size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
        m(i, c) = S(0);
      }
      prev = m(r, c);
      piv.push_back(c);
      ++r;
    }
    detail::back_normalize(m, piv);
  } else {
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      size_t p = r;
      while (p < m.rows() && is_zero(m(p, c))) ++p;
      if (p == m.rows()) continue;
      m.swap_rows(p, r);
      S inv = S(1) / m(r, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(r, j) *= inv;
      for (size_t i = 0; i < m.rows(); ++i) {
        if (i == r || is_zero(m(i, c))) continue;
        S f = m(i, c);
        for (size_t j = c; j < m.cols(); ++j)
          if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
      piv.push_back(c);
      ++r;
    }
  }
  return {std::move(m), std::move(piv)};
}

template <class S>
Matrix<S> rref(const Matrix<S>& m) {
  return rref_with_pivots(m).r;
}

template <class S>
size_t rank(const Matrix<S>& m) {
  return rref_with_pivots(m).pivots.size();
}

template <class S>
class SpanBuilder;

// Subspace of S^n stored by its canonical RREF basis.
template <class S>
class Subspace {
 public:
  explicit Subspace(size_t ambient = 0) : n_(ambient) {}

  static Subspace full(size_t n) {
    Subspace s(n);
    for (size_t i = 0; i < n; ++i) {
      s.basis_.push_back(unit_vec<S>(n, i));
      s.piv_.push_back(i);
    }
    return s;
  }

  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec<S>>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return piv_; }

  Vec<S> reduce(Vec<S> v) const {
    check(v);
    for (size_t r = 0; r < basis_.size(); ++r) {
      size_t p = piv_[r];
      if (is_zero(v[p])) continue;
      S f = v[p];
      axpy(v, -f, basis_[r]);
    }
    return v;
  }
  bool contains(const Vec<S>& v) const { return is_zero_vec(reduce(v)); }

  // Coefficients with respect to basis(); throws if v is not a member.
  Vec<S> coordinates(const Vec<S>& v) const {
    check(v);
    Vec<S> c(basis_.size());
    for (size_t r = 0; r < basis_.size(); ++r) c[r] = v[piv_[r]];
    if (!is_zero_vec(reduce(v))) throw std::invalid_argument("vector not in subspace");
    return c;
  }
  Vec<S> combine(const Vec<S>& coeffs) const {
    if (coeffs.size() != basis_.size()) throw DimensionMismatch(coeffs.size(), basis_.size());
    Vec<S> v(n_);
    for (size_t r = 0; r < basis_.size(); ++r) axpy(v, coeffs[r], basis_[r]);
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.piv_ == b.piv_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend class SpanBuilder<S>;
  void check(const Vec<S>& v) const {
    if (v.size() != n_) throw DimensionMismatch(v.size(), n_);
  }
  size_t n_;
  std::vector<Vec<S>> basis_;
  std::vector<size_t> piv_;
};

// Incremental reduced echelon basis; add() reports whether the span grew.
template <class S>
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t n) : n_(n), row_of_col_(n, -1) {}
  explicit SpanBuilder(const Subspace<S>& s) : SpanBuilder(s.ambient()) {
    for (size_t r = 0; r < s.dim(); ++r) {
      row_of_col_[s.piv_[r]] = static_cast<int>(rows_.size());
      rows_.push_back(s.basis_[r]);
      piv_.push_back(s.piv_[r]);
    }
  }

  size_t ambient() const { return n_; }
  size_t rank() const { return rows_.size(); }

  void reduce(Vec<S>& v) const {
    if (v.size() != n_) throw DimensionMismatch(v.size(), n_);
    for (size_t r = 0; r < rows_.size(); ++r) {
      size_t p = piv_[r];
      if (is_zero(v[p])) continue;
      S f = v[p];
      axpy(v, -f, rows_[r]);
    }
  }
  bool contains(Vec<S> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  bool add(Vec<S> v) {
    reduce(v);
    size_t p = 0;
    while (p < n_ && is_zero(v[p])) ++p;
    if (p == n_) return false;
    S inv = S(1) / v[p];
    for (size_t j = p; j < n_; ++j)
      if (!is_zero(v[j])) v[j] *= inv;
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      S f = row[p];
      axpy(row, -f, v);
    }
    row_of_col_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

  Subspace<S> subspace() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return piv_[a] < piv_[b]; });
    Subspace<S> s(n_);
    for (size_t i : order) {
      s.basis_.push_back(rows_[i]);
      s.piv_.push_back(piv_[i]);
    }
    return s;
  }

 private:
  size_t n_;
  std::vector<Vec<S>> rows_;
  std::vector<size_t> piv_;
  std::vector<int> row_of_col_;
};

template <class S>
Subspace<S> span(size_t ambient, const std::vector<Vec<S>>& vs) {
  SpanBuilder<S> b(ambient);
  for (const auto& v : vs) b.add(v);
  return b.subspace();
}

template <class S>
Subspace<S> kernel(const Matrix<S>& m) {
  auto [r, piv] = rref_with_pivots(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec<S>> vs;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<S> v(m.cols());
    v[f] = S(1);
    for (size_t k = 0; k < piv.size(); ++k)
      if (!is_zero(r(k, f))) v[piv[k]] = -r(k, f);
    vs.push_back(std::move(v));
  }
  return span(m.cols(), vs);
}

template <class S>
bool member(const Vec<S>& v, const Subspace<S>& s) {
  return s.contains(v);
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch(a.ambient(), b.ambient());
  SpanBuilder<S> sb(a);
  for (const auto& v : b.basis()) sb.add(v);
  return sb.subspace();
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch(a.ambient(), b.ambient());
  size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace<S>(n);
  // x = sum c_i a_i = sum d_j b_j  <=>  [A | -B](c,d) = 0
  std::vector<Vec<S>> cols;
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) cols.push_back(scaled(v, S(-1)));
  Subspace<S> k = kernel(Matrix<S>::from_columns(n, cols));
  std::vector<Vec<S>> out;
  for (const auto& cd : k.basis()) {
    Vec<S> x(n);
    for (size_t i = 0; i < a.dim(); ++i) axpy(x, cd[i], a.basis()[i]);
    out.push_back(std::move(x));
  }
  return span(n, out);
}

template <class S>
bool equal(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch(a.ambient(), b.ambient());
  return a == b;
}

template <class S>
bool is_subspace_of(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch(a.ambient(), b.ambient());
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  return true;
}

template <class S>
size_t dim(const Subspace<S>& s) {
  return s.dim();
}

// Solve m x = rhs; returns the particular solution with free variables set to zero.
template <class S>
std::optional<Vec<S>> solve(const Matrix<S>& m, const Vec<S>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch(rhs.size(), m.rows());
  Matrix<S> aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto [r, piv] = rref_with_pivots(std::move(aug));
  Vec<S> x(m.cols());
  for (size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == m.cols()) return std::nullopt;
    x[piv[k]] = r(k, m.cols());
  }
  return x;
}

}  // namespace superorbit
