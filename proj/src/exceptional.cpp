#include "superorbit/exceptional.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace superorbit {

std::string kind_name(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::D21: return "D21";
    case ExceptionalKind::G3: return "G3";
    case ExceptionalKind::F4: return "F4";
  }
  return "?";
}

std::optional<ExceptionalKind> parse_kind(std::string_view s) {
  if (s == "D21") return ExceptionalKind::D21;
  if (s == "G3") return ExceptionalKind::G3;
  if (s == "F4") return ExceptionalKind::F4;
  return std::nullopt;
}

// ---- matrices

template <class S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch(a.cols(), b.rows());
  Matrix<S> c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t l = 0; l < a.cols(); ++l) {
      if (is_zero(a(i, l))) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(l, j))) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

template <class S>
Matrix<S> mat_comm(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> x = mat_mul(a, b), y = mat_mul(b, a);
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j)
      if (!is_zero(y(i, j))) x(i, j) -= y(i, j);
  return x;
}

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

template <class S>
Matrix<S> block_diag(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

namespace {

using Q = Rational;

template <class S>
std::vector<Matrix<S>> sl2_triple() {
  Matrix<S> e(2, 2), h(2, 2), f(2, 2);
  e(0, 1) = S(1);
  h(0, 0) = S(1);
  h(1, 1) = S(-1);
  f(1, 0) = S(1);
  return {e, h, f};
}

Matrix<Q> entries7(std::initializer_list<std::tuple<int, int, int>> es) {
  Matrix<Q> m(7, 7);
  for (auto [r, c, v] : es) m(r - 1, c - 1) = Q(v);
  return m;
}

size_t v7_index(int a) { return static_cast<size_t>(3 - a); }

Matrix<Q> unit7(int a, int b) {
  Matrix<Q> m(7, 7);
  m(v7_index(a), v7_index(b)) = Q(1);
  return m;
}

Matrix<Q> lin(const Matrix<Q>& a, const Q& ca, const Matrix<Q>& b, const Q& cb) {
  Matrix<Q> r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = ca * a(i, j) + cb * b(i, j);
  return r;
}

std::string R_name(int a, int b) { return "R(e" + std::to_string(a) + ",e" + std::to_string(b) + ")"; }

// spinor basis as subsets of {1,2,3}
const std::vector<unsigned> kSpinorMasks = {0, 1, 2, 4, 3, 5, 6, 7};

size_t spinor_index(unsigned mask) {
  return static_cast<size_t>(std::find(kSpinorMasks.begin(), kSpinorMasks.end(), mask) - kSpinorMasks.begin());
}

}  // namespace

NamedMatrices g2_matrices() {
  Matrix<Q> x1 = entries7({{1, 2, -1}, {3, 4, 1}, {4, 5, -2}, {6, 7, 1}});
  Matrix<Q> x2 = entries7({{2, 3, 1}, {5, 6, -1}});
  Matrix<Q> y1 = entries7({{2, 1, -1}, {4, 3, 2}, {5, 4, -1}, {7, 6, 1}});
  Matrix<Q> y2 = entries7({{3, 2, 1}, {6, 5, -1}});
  Matrix<Q> h1 = entries7({{1, 1, 1}, {2, 2, -1}, {3, 3, 2}, {5, 5, -2}, {6, 6, 1}, {7, 7, -1}});
  Matrix<Q> h2 = entries7({{2, 2, 1}, {3, 3, -1}, {5, 5, 1}, {6, 6, -1}});
  Matrix<Q> x3 = mat_comm(x1, x2), x4 = mat_comm(x1, x3), x5 = mat_comm(x1, x4), x6 = mat_comm(x5, x2);
  Matrix<Q> y3 = mat_comm(y1, y2), y4 = mat_comm(y1, y3), y5 = mat_comm(y1, y4), y6 = mat_comm(y5, y2);
  return {{"h1", "h2", "x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y3", "y4", "y5", "y6"},
          {h1, h2, x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6}};
}

Matrix<Rational> so7_R(int a, int b) {
  if (a < -3 || a > 3 || b < -3 || b > 3) throw std::out_of_range("so(7) index out of range");
  if (a == b) return Matrix<Q>(7, 7);
  if (b == 0) return lin(unit7(a, 0), Q(2), unit7(0, -a), Q(-1));
  if (a == 0) return lin(so7_R(b, 0), Q(-1), Matrix<Q>(7, 7), Q(0));
  return lin(unit7(a, -b), Q(1), unit7(b, -a), Q(-1));
}

NamedMatrices so7_matrices() {
  NamedMatrices out;
  for (int i = 1; i <= 3; ++i) {
    out.names.push_back(R_name(i, -i));
    out.mats.push_back(so7_R(i, -i));
  }
  const int vs[] = {1, 2, 3, -1, -2, -3};
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) {
      if (vs[x] == -vs[y]) continue;
      out.names.push_back(R_name(vs[x], vs[y]));
      out.mats.push_back(so7_R(vs[x], vs[y]));
    }
  for (int a : vs) {
    out.names.push_back(R_name(a, 0));
    out.mats.push_back(so7_R(a, 0));
  }
  return out;
}

Matrix<Rational> clifford_op(int a) {
  if (a < -3 || a > 3) throw std::out_of_range("Clifford index out of range");
  Matrix<Q> m(8, 8);
  for (size_t c = 0; c < 8; ++c) {
    unsigned J = kSpinorMasks[c];
    if (a == 0) {
      m(c, c) = Q(std::popcount(J) % 2 ? -1 : 1);
      continue;
    }
    unsigned bit = 1u << (std::abs(a) - 1);
    // sign from moving past the generators below |a|
    int below = std::popcount(J & (bit - 1));
    Q sign(below % 2 ? -1 : 1);
    if (a > 0 && !(J & bit)) m(spinor_index(J | bit), c) += sign;
    if (a < 0 && (J & bit)) m(spinor_index(J & ~bit), c) += sign;
  }
  return m;
}

Matrix<Rational> spin_R(int a, int b) {
  Matrix<Q> c = mat_comm(clifford_op(a), clifford_op(b));
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) c(i, j) *= Q(1, 2);
  return c;
}

const std::vector<std::string>& spinor_names() {
  static const std::vector<std::string> names = {"s", "e1s", "e2s", "e3s", "e1e2s", "e1e3s", "e2e3s", "e1e2e3s"};
  return names;
}

std::optional<std::pair<int, int>> parse_R_name(std::string_view name) {
  if (name.size() < 8 || name.substr(0, 3) != "R(e" || name.back() != ')') return std::nullopt;
  auto comma = name.find(",e");
  if (comma == std::string_view::npos) return std::nullopt;
  auto num = [](std::string_view s) -> std::optional<int> {
    if (s == "0" || s == "1" || s == "2" || s == "3") return s[0] - '0';
    if (s == "-1" || s == "-2" || s == "-3") return -(s[1] - '0');
    return std::nullopt;
  };
  auto a = num(name.substr(3, comma - 3));
  auto b = num(name.substr(comma + 2, name.size() - comma - 3));
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

template <class S>
SuperAlgebra<S> lie_algebra_from_matrices(const std::string& name, const std::vector<std::string>& names,
                                          const std::vector<Matrix<S>>& mats) {
  size_t ne = mats.size();
  if (names.size() != ne) throw DimensionMismatch(names.size(), ne);
  SuperAlgebra<S> a(name, names, std::vector<int>(ne, 0));
  if (ne == 0) return a;
  size_t d = mats[0].rows(), dd = d * d;
  std::vector<Vec<S>> flats;
  for (const auto& m : mats) {
    Vec<S> f(dd);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) f[i * d + j] = m(i, j);
    flats.push_back(std::move(f));
  }
  Matrix<S> M = Matrix<S>::from_columns(dd, flats);
  // pick ne independent rows, invert that square block
  Matrix<S> MT = Matrix<S>::from_rows(dd, flats);
  auto sel = rref_with_pivots(MT).pivots;
  if (sel.size() != ne) throw AlgebraError(name + ": basis matrices are linearly dependent");
  Matrix<S> aug(ne, 2 * ne);
  for (size_t r = 0; r < ne; ++r) {
    for (size_t k = 0; k < ne; ++k) aug(r, k) = M(sel[r], k);
    aug(r, ne + r) = S(1);
  }
  auto inv = rref_with_pivots(aug).r;
  auto coords = [&](const Matrix<S>& x) {
    Vec<S> c(ne);
    for (size_t k = 0; k < ne; ++k)
      for (size_t r = 0; r < ne; ++r) {
        const S& t = x(sel[r] / d, sel[r] % d);
        if (!is_zero(t) && !is_zero(inv(k, ne + r))) c[k] += inv(k, ne + r) * t;
      }
    Matrix<S> back(d, d);
    for (size_t k = 0; k < ne; ++k)
      if (!is_zero(c[k]))
        for (size_t t = 0; t < dd; ++t)
          if (!is_zero(flats[k][t])) back(t / d, t % d) += c[k] * flats[k][t];
    if (!(back == x)) throw AlgebraError(name + ": commutator leaves the span of the basis");
    return c;
  };
  for (size_t i = 0; i < ne; ++i)
    for (size_t j = i + 1; j < ne; ++j) a.set_bracket(i, j, coords(mat_comm(mats[i], mats[j])));
  return a;
}

// ---- solver

namespace {

template <class S>
std::optional<long> twice(const S& x) {
  return as_integer(x + x);
}

}  // namespace

template <class S>
SuperAlgebra<S> solve_odd_bracket(const EquivariantBracketProblem<S>& p, SolveStats* stats) {
  size_t ne = p.even_names.size(), no = p.odd_names.size(), dim = ne + no;
  if (p.action.size() != ne) throw DimensionMismatch(p.action.size(), ne);
  SuperAlgebra<S> ev = lie_algebra_from_matrices(p.name + "_0", p.even_names, p.even_rep);

  std::vector<std::string> names = p.even_names;
  names.insert(names.end(), p.odd_names.begin(), p.odd_names.end());
  std::vector<int> par(ne, 0);
  par.resize(dim, 1);
  SuperAlgebra<S> a(p.name, names, par);
  for (size_t i = 0; i < ne; ++i)
    for (size_t j = i + 1; j < ne; ++j) {
      Vec<S> v = ev.bracket_basis(i, j);
      v.resize(dim);
      a.set_bracket(i, j, v);
    }
  for (size_t i = 0; i < ne; ++i)
    for (size_t u = 0; u < no; ++u) {
      Vec<S> v(dim);
      for (size_t r = 0; r < no; ++r) v[ne + r] = p.action[i](r, u);
      a.set_bracket(i, ne + u, v);
    }
  // the action must be a representation
  for (size_t i = 0; i < ne; ++i)
    for (size_t j = i + 1; j < ne; ++j) {
      Matrix<S> lhs = mat_comm(p.action[i], p.action[j]), rhs(no, no);
      for (const auto& t : ev.structure(i, j))
        for (size_t r = 0; r < no; ++r)
          for (size_t c = 0; c < no; ++c)
            if (!is_zero(p.action[t.k](r, c))) rhs(r, c) += t.c * p.action[t.k](r, c);
      if (!(lhs == rhs))
        throw SolveError(p.name + ": odd action is not a representation at [" + p.even_names[i] + "," + p.even_names[j] + "]");
    }

  // Cartan: even elements acting diagonally on both parts
  std::vector<size_t> cart;
  for (size_t i = 0; i < ne; ++i) {
    bool diag = true;
    for (size_t j = 0; j < ne && diag; ++j)
      for (const auto& t : ev.structure(i, j))
        if (t.k != j) diag = false;
    for (size_t r = 0; r < no && diag; ++r)
      for (size_t c = 0; c < no && diag; ++c)
        if (r != c && !is_zero(p.action[i](r, c))) diag = false;
    if (diag) cart.push_back(i);
  }
  // doubled integer weights; filtering is off if some weight is not half-integral
  bool filter = true;
  std::vector<std::vector<long>> we(ne), wo(no);
  for (size_t h : cart) {
    for (size_t j = 0; j < ne; ++j) {
      S w(0);
      for (const auto& t : ev.structure(h, j)) w = t.c;
      auto x = twice(w);
      if (!x) filter = false;
      we[j].push_back(x.value_or(0));
    }
    for (size_t u = 0; u < no; ++u) {
      auto x = twice(p.action[h](u, u));
      if (!x) filter = false;
      wo[u].push_back(x.value_or(0));
    }
  }
  auto wsum = [](std::vector<long> a, const std::vector<long>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };

  std::vector<int> uid(no * no * ne, -1);
  size_t N = 0;
  auto slot = [&](size_t u, size_t v, size_t k) -> int& {
    if (u > v) std::swap(u, v);
    return uid[(u * no + v) * ne + k];
  };
  for (size_t u = 0; u < no; ++u)
    for (size_t v = u; v < no; ++v) {
      auto w = wsum(wo[u], wo[v]);
      for (size_t k = 0; k < ne; ++k)
        if (!filter || we[k] == w) slot(u, v, k) = static_cast<int>(N++);
    }

  SpanBuilder<S> sb(N + 1);
  auto push = [&](const std::map<size_t, S>& row) {
    Vec<S> v(N + 1);
    bool any = false;
    for (const auto& [c, x] : row)
      if (!is_zero(x)) {
        v[c] = x;
        any = true;
      }
    if (any) sb.add(std::move(v));
  };

  // inverse structure: into[x][k] = {(l, c) : [x, b_l] has b_k-coefficient c}
  std::vector<std::vector<std::vector<std::pair<size_t, S>>>> into(ne, std::vector<std::vector<std::pair<size_t, S>>>(ne));
  for (size_t x = 0; x < ne; ++x)
    for (size_t l = 0; l < ne; ++l)
      for (const auto& t : ev.structure(x, l)) into[x][t.k].push_back({l, t.c});
  // nonzero entries per column of each action matrix
  std::vector<std::vector<std::vector<std::pair<size_t, S>>>> col(ne, std::vector<std::vector<std::pair<size_t, S>>>(no));
  for (size_t x = 0; x < ne; ++x)
    for (size_t r = 0; r < no; ++r)
      for (size_t c = 0; c < no; ++c)
        if (!is_zero(p.action[x](r, c))) col[x][c].push_back({r, p.action[x](r, c)});

  // equivariance: [x, T(u,v)] = T([x,u], v) + T(u, [x,v])
  for (size_t x = 0; x < ne; ++x)
    for (size_t u = 0; u < no; ++u)
      for (size_t v = u; v < no; ++v) {
        auto w = filter ? wsum(wsum(we[x], wo[u]), wo[v]) : std::vector<long>{};
        for (size_t k = 0; k < ne; ++k) {
          if (filter && we[k] != w) continue;
          std::map<size_t, S> row;
          for (const auto& [l, c] : into[x][k]) {
            int t = slot(u, v, l);
            if (t >= 0) row[t] += c;
          }
          for (const auto& [u2, c] : col[x][u]) {
            int t = slot(u2, v, k);
            if (t >= 0) row[t] -= c;
          }
          for (const auto& [v2, c] : col[x][v]) {
            int t = slot(u, v2, k);
            if (t >= 0) row[t] -= c;
          }
          push(row);
        }
      }
  size_t r_equiv = sb.rank();

  // odd Jacobi: [T(u,v),w] + [T(v,w),u] + [T(w,u),v] = 0
  std::vector<std::vector<std::vector<std::pair<size_t, S>>>> acts(no, std::vector<std::vector<std::pair<size_t, S>>>(no));
  for (size_t k = 0; k < ne; ++k)
    for (size_t r = 0; r < no; ++r)
      for (size_t c = 0; c < no; ++c)
        if (!is_zero(p.action[k](r, c))) acts[r][c].push_back({k, p.action[k](r, c)});
  for (size_t u = 0; u < no; ++u)
    for (size_t v = u; v < no; ++v)
      for (size_t w = v; w < no; ++w) {
        auto wt = filter ? wsum(wsum(wo[u], wo[v]), wo[w]) : std::vector<long>{};
        for (size_t r = 0; r < no; ++r) {
          if (filter && wo[r] != wt) continue;
          std::map<size_t, S> row;
          const size_t cyc[3][3] = {{u, v, w}, {v, w, u}, {w, u, v}};
          for (const auto& [x, y, z] : cyc)
            for (const auto& [k, c] : acts[r][z]) {
              int t = slot(x, y, k);
              if (t >= 0) row[t] += c;
            }
          push(row);
        }
      }
  size_t r_jac = sb.rank();

  for (const auto& an : p.anchors) {
    if (an.u.size() != no || an.v.size() != no) throw DimensionMismatch(an.u.size(), no);
    if (an.value.size() != ne) throw DimensionMismatch(an.value.size(), ne);
    for (size_t k = 0; k < ne; ++k) {
      std::map<size_t, S> row;
      for (size_t x = 0; x < no; ++x) {
        if (is_zero(an.u[x])) continue;
        for (size_t y = 0; y < no; ++y) {
          if (is_zero(an.v[y])) continue;
          int t = slot(x, y, k);
          if (t >= 0) row[t] += an.u[x] * an.v[y];
        }
      }
      row[N] = an.value[k];
      push(row);
    }
  }
  if (stats) *stats = {N, r_equiv, r_jac, sb.rank()};

  Subspace<S> sol = sb.subspace();
  if (std::find(sol.pivots().begin(), sol.pivots().end(), N) != sol.pivots().end())
    throw SolveError(p.name + ": anchors are inconsistent with equivariance and Jacobi");
  if (sol.dim() < N)
    throw SolveError(p.name + ": " + std::to_string(N - sol.dim()) + " free parameters remain after the anchors");
  Vec<S> val(N);
  for (size_t r = 0; r < sol.dim(); ++r) val[sol.pivots()[r]] = sol.basis()[r][N];

  for (size_t u = 0; u < no; ++u)
    for (size_t v = u; v < no; ++v) {
      Vec<S> out(dim);
      for (size_t k = 0; k < ne; ++k) {
        int t = slot(u, v, k);
        if (t >= 0) out[k] = val[t];
      }
      a.set_bracket(ne + u, ne + v, out);
    }
  auto bad = check_super_jacobi(a, 1);
  if (!bad.empty())
    throw SolveError(p.name + ": solved bracket violates Jacobi at (" + names[bad[0].i] + "," + names[bad[0].j] + "," +
                     names[bad[0].k] + ")");
  return a;
}

// ---- the three algebras

template <class S>
std::vector<S> d21_sigma(const S& alpha) {
  return {S(1) + alpha, S(-1), S(0) - alpha};
}

namespace {

template <class S>
Vec<S> odd_vec(const std::vector<std::string>& names, std::initializer_list<std::pair<const char*, int>> terms) {
  Vec<S> v(names.size());
  for (auto [n, c] : terms) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::logic_error(std::string("unknown odd basis name ") + n);
    v[static_cast<size_t>(it - names.begin())] += S(c);
  }
  return v;
}

}  // namespace

template <class S>
EquivariantBracketProblem<S> problem_D21(const S& alpha) {
  if (is_zero(alpha) || is_zero(alpha + S(1))) throw std::invalid_argument("D(2,1;a) needs a != 0, -1");
  EquivariantBracketProblem<S> p;
  p.name = "D21";
  auto tr = sl2_triple<S>();
  Matrix<S> z2(2, 2), id2 = Matrix<S>::identity(2);
  const char* en[] = {"E", "H", "F"};
  for (int i = 0; i < 3; ++i)
    for (int t = 0; t < 3; ++t) {
      p.even_names.push_back(std::string(en[t]) + std::to_string(i + 1));
      const Matrix<S>& M = tr[t];
      p.even_rep.push_back(block_diag(block_diag(i == 0 ? M : z2, i == 1 ? M : z2), i == 2 ? M : z2));
      p.action.push_back(kron(kron(i == 0 ? M : id2, i == 1 ? M : id2), i == 2 ? M : id2));
    }
  const char* vn[] = {"v1", "v-1"};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) p.odd_names.push_back(std::string(vn[x]) + vn[y] + vn[z]);
  auto sg = d21_sigma(alpha);
  Vec<S> v1(9), v2(9);
  v1[0] = S(2) * sg[0];
  v2[3] = S(4) * sg[1];
  Vec<S> x = odd_vec<S>(p.odd_names, {{"v1v1v-1", 1}, {"v-1v1v1", -1}});
  p.anchors.push_back({odd_vec<S>(p.odd_names, {{"v1v1v1", 1}}), odd_vec<S>(p.odd_names, {{"v1v-1v-1", 1}}), v1});
  p.anchors.push_back({x, x, v2});
  return p;
}

EquivariantBracketProblem<Rational> problem_G3() {
  EquivariantBracketProblem<Q> p;
  p.name = "G3";
  auto tr = sl2_triple<Q>();
  auto g2 = g2_matrices();
  Matrix<Q> z2(2, 2), z7(7, 7), id2 = Matrix<Q>::identity(2), id7 = Matrix<Q>::identity(7);
  const char* en[] = {"E", "H", "F"};
  for (int t = 0; t < 3; ++t) {
    p.even_names.push_back(en[t]);
    p.even_rep.push_back(block_diag(tr[t], z7));
    p.action.push_back(kron(tr[t], id7));
  }
  for (size_t i = 0; i < g2.names.size(); ++i) {
    p.even_names.push_back(g2.names[i]);
    p.even_rep.push_back(block_diag(z2, g2.mats[i]));
    p.action.push_back(kron(id2, g2.mats[i]));
  }
  for (const char* v : {"v1", "v-1"})
    for (int j = 3; j >= -3; --j) p.odd_names.push_back(std::string(v) + "e" + std::to_string(j));
  Vec<Q> val(p.even_names.size());
  val[0] = Q(16);
  p.anchors.push_back({odd_vec<Q>(p.odd_names, {{"v1e3", 1}}), odd_vec<Q>(p.odd_names, {{"v1e-3", 1}}), val});
  return p;
}

EquivariantBracketProblem<Rational> problem_F4() {
  EquivariantBracketProblem<Q> p;
  p.name = "F4";
  auto tr = sl2_triple<Q>();
  auto so7 = so7_matrices();
  Matrix<Q> z2(2, 2), z7(7, 7), id2 = Matrix<Q>::identity(2), id8 = Matrix<Q>::identity(8);
  const char* en[] = {"E", "H", "F"};
  for (int t = 0; t < 3; ++t) {
    p.even_names.push_back(en[t]);
    p.even_rep.push_back(block_diag(tr[t], z7));
    p.action.push_back(kron(tr[t], id8));
  }
  for (size_t i = 0; i < so7.names.size(); ++i) {
    auto ab = parse_R_name(so7.names[i]);
    p.even_names.push_back(so7.names[i]);
    p.even_rep.push_back(block_diag(z2, so7.mats[i]));
    p.action.push_back(kron(id2, spin_R(ab->first, ab->second)));
  }
  for (const char* v : {"v1", "v-1"})
    for (const auto& s : spinor_names()) p.odd_names.push_back(std::string(v) + s);
  Vec<Q> val(p.even_names.size());
  val[0] = Q(-6);
  p.anchors.push_back({odd_vec<Q>(p.odd_names, {{"v1e1s", 1}}), odd_vec<Q>(p.odd_names, {{"v1e2e3s", 1}}), val});
  return p;
}

template <class S>
SuperAlgebra<S> build_D21(const S& alpha) {
  return solve_odd_bracket(problem_D21(alpha));
}

SuperAlgebra<Rational> build_G3() { return solve_odd_bracket(problem_G3()); }
SuperAlgebra<Rational> build_F4() { return solve_odd_bracket(problem_F4()); }

// ---- names and elements

template <class S>
std::optional<std::pair<size_t, int>> resolve_basis(const SuperAlgebra<S>& a, std::string_view name) {
  if (auto i = a.find(std::string(name))) return std::make_pair(*i, 1);
  if (auto ab = parse_R_name(name))
    if (auto i = a.find(R_name(ab->second, ab->first))) return std::make_pair(*i, -1);
  return std::nullopt;
}

template <class S>
Vec<S> parse_element(const SuperAlgebra<S>& a, std::string_view text, const std::map<std::string, S>& symbols) {
  std::string s;
  std::vector<bool> keep;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '(') {
      bool named = !s.empty() && s.back() == 'R';
      keep.push_back(named);
      if (named) s.push_back(ch);
    } else if (ch == ')') {
      if (keep.empty()) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
      if (keep.back()) s.push_back(ch);
      keep.pop_back();
    } else {
      s.push_back(ch);
    }
  }
  if (!keep.empty()) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  Vec<S> out = a.zero();
  if (s == "0") return out;
  if (s.empty()) throw ParseError("empty element");
  // split at top-level signs; '-' right after 'e' or 'v' belongs to a name
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0, sign = 1;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    bool sep = depth == 0 && (ch == '+' || ch == '-') && (i == 0 || (s[i - 1] != 'e' && s[i - 1] != 'v' && s[i - 1] != '*'));
    if (sep) {
      if (!cur.empty()) terms.push_back({sign, cur});
      else if (i != 0) throw ParseError("empty term in '" + std::string(text) + "'");
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur.push_back(ch);
    }
  }
  if (cur.empty()) throw ParseError("trailing sign in '" + std::string(text) + "'");
  terms.push_back({sign, cur});
  for (const auto& [sg, term] : terms) {
    std::vector<std::string> factors;
    size_t start = 0;
    for (size_t i = 0; i <= term.size(); ++i)
      if (i == term.size() || term[i] == '*') {
        factors.push_back(term.substr(start, i - start));
        start = i + 1;
      }
    S c(sg);
    for (size_t f = 0; f + 1 < factors.size(); ++f) {
      auto it = symbols.find(factors[f]);
      c = c * (it != symbols.end() ? it->second : FieldInfo<S>::parse(factors[f]));
    }
    auto b = resolve_basis(a, factors.back());
    if (!b) throw ParseError("unknown basis element '" + factors.back() + "' in " + a.name());
    out[b->first] += c * S(b->second);
  }
  return out;
}

std::vector<std::string> cartan_names(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::D21: return {"H1", "H2", "H3"};
    case ExceptionalKind::G3: return {"H", "h1", "h2"};
    case ExceptionalKind::F4: return {"H", "R(e1,e-1)", "R(e2,e-2)", "R(e3,e-3)"};
  }
  return {};
}

std::vector<std::string> orbit_labels(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::D21: return {"0", "E1", "E2", "E3", "E1+E2", "E1+E3", "E2+E3", "E1+E2+E3"};
    case ExceptionalKind::G3:
      return {"E+(x1+x2)", "E+x2", "E+x1", "E+(x2+x5)", "E", "x1+x2", "x2", "x1", "x2+x5", "0"};
    case ExceptionalKind::F4:
      return {"E+(R(e1,e-2)+R(e2,e-3)+R(e3,e0))",
              "E+(R(e1,e-2)+R(e2,e0))",
              "E+(R(e1,e-3)+R(e2,e3))",
              "E+(R(e1,e0)+R(e2,e3))",
              "E+R(e1,e0)",
              "E+R(e1,e2)",
              "E",
              "R(e1,e-2)+R(e2,e-3)+R(e3,e0)",
              "R(e1,e-2)+R(e2,e0)",
              "R(e1,e-3)+R(e2,e3)",
              "R(e1,e0)+R(e2,e3)",
              "R(e1,e0)",
              "R(e1,e2)",
              "0"};
  }
  return {};
}

template <class S>
std::optional<Vec<S>> find_h(const SuperAlgebra<S>& a, const Vec<S>& e, const std::vector<size_t>& cartan) {
  size_t n = a.dim(), nc = cartan.size();
  std::vector<size_t> even;
  for (size_t i = 0; i < n; ++i)
    if (a.parity(i) == 0) even.push_back(i);
  // unknowns (c, z): [e, z] = sum c_k H_k and sum c_k [H_k, e] = 2e
  Matrix<S> m(2 * n, nc + even.size());
  Vec<S> rhs(2 * n);
  for (size_t k = 0; k < nc; ++k) {
    m(cartan[k], k) = S(-1);
    Vec<S> he = a.bracket(a.basis_vec(cartan[k]), e);
    for (size_t i = 0; i < n; ++i) m(n + i, k) = he[i];
  }
  for (size_t j = 0; j < even.size(); ++j) {
    Vec<S> ez = a.bracket(e, a.basis_vec(even[j]));
    for (size_t i = 0; i < n; ++i) m(i, nc + j) = ez[i];
  }
  for (size_t i = 0; i < n; ++i) rhs[n + i] = S(2) * e[i];
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  Vec<S> h(n);
  for (size_t k = 0; k < nc; ++k) h[cartan[k]] = (*sol)[k];
  return h;
}

template <class S>
std::vector<OrbitRepresentative<S>> orbit_reps(const SuperAlgebra<S>& a, ExceptionalKind k) {
  std::vector<size_t> cart;
  for (const auto& n : cartan_names(k)) cart.push_back(a.index(n));
  std::vector<OrbitRepresentative<S>> out;
  for (const auto& label : orbit_labels(k)) {
    Vec<S> e = parse_element(a, label);
    Vec<S> h = a.zero();
    if (!is_zero_vec(e)) {
      auto hh = find_h(a, e, cart);
      if (!hh) throw AlgebraError("no neutral element for " + label + " in " + a.name());
      h = *hh;
    }
    if (a.bracket(h, e) != scaled(e, S(2))) throw AlgebraError("[h,e] != 2e for " + label);
    out.push_back({label, e, h});
  }
  return out;
}

const std::vector<AnchorCase>& anchor_cases() {
  using K = ExceptionalKind;
  static const std::string X = "(v1e1s-v-1e1e2e3s)", Y = "(v-1e1e2s+v1e2e3s)";
  static const std::string dx = "(v1v1v-1-v-1v1v1)", dy = "(v1v-1v1-v-1v1v1)";
  static const std::vector<AnchorCase> cases = {
      {K::D21, "v1v1v1", "v1v-1v-1", "2*s1*E1", ""},
      {K::D21, "v1v1v-1", "v1v-1v1", "2*s1*E1", "-2*s1*E1"},
      {K::D21, dx, dx, "4*s2*E2", ""},
      {K::D21, dy, dy, "4*s3*E3", ""},
      {K::D21, dx, dy, "-2*s1*E1+2*s2*E2+2*s3*E3", ""},
      {K::D21, "E2", dy, "v1v1v1", ""},
      {K::D21, "v1v1v-1", "v1v-1v1-v-1v1v1", "-2*s1*E1+2*s2*E2", ""},
      {K::D21, "v1v1v1", "v1v-1v-1-v-1v1v-1", "2*s1*E1-2*s2*E2", ""},
      {K::D21, "H2", "v1v-1v1", "-v1v-1v1", ""},
      {K::G3, "y1", "v1e3", "-v1e2", ""},
      {K::G3, "y1", "v1e0", "-v1e-1", ""},
      {K::G3, "y1", "x3", "3*x2", ""},
      {K::G3, "v1e3", "v1e-3", "16*E", ""},
      {K::G3, "2*h1+3*h2", "v1e1-v-1e2", "v1e1-v-1e2", ""},
      {K::G3, "2*h1+3*h2", "v1e-2+v-1e-1", "-v1e-2-v-1e-1", ""},
      {K::G3, "v1e1-v-1e2", "v1e-3", "-4*y1", ""},
      {K::G3, "v1e1-v-1e2", "v1e0", "-4*x3", ""},
      {K::G3, "v1e1-v-1e2", "v1e3", "2*x6", ""},
      {K::G3, "v1e-2+v-1e-1", "v1e-3", "2*y5", ""},
      {K::G3, "x4", "v1e0", "2*v1e3", ""},
      {K::G3, "x4", "v1e-3", "-4*v1e0", ""},
      {K::G3, "y4", "v1e0", "-2*v1e-3", ""},
      {K::G3, "v1e3", "v-1e-2", "-4*x1", ""},
      {K::G3, "v-1e3", "v1e-2", "4*x1", ""},
      {K::G3, "v1e3", "v-1e1", "2*x5", ""},
      {K::G3, "v1e-2", "v-1e1", "-12*y2", ""},
      {K::F4, "R(e1,e0)", "v1e2s", "-v1e1e2s", ""},
      {K::F4, "R(e2,e0)", "v1e1s", "v1e1e2s", ""},
      {K::F4, "R(e1,e0)", "v1e2e3s", "v1e1e2e3s", ""},
      {K::F4, "v1e1s", "v1e2e3s", "-6*E", ""},
      {K::F4, X, X, "R(e1,e0)", "-4*R(e1,e0)"},
      {K::F4, X, "v1e2s", "1/2*R(e2,e0)", "-2*R(e2,e0)"},
      {K::F4, X, "v1e1e3s", "R(e1,e3)", "-4*R(e1,e3)"},
      {K::F4, X, Y, "R(e1,e-3)+R(e2,e3)-6*E", "-4*R(e1,e-3)-4*R(e2,e3)-6*E"},
      {K::F4, "v1e2s", Y, "R(e2,e-3)", "-4*R(e2,e-3)"},
      {K::F4, "v1e2s", "v1e1e3s", "6*E", ""},
      {K::F4, "R(e1,e0)", Y, "v1e1e2e3s", ""},
      {K::F4, "v1e1e2e3s", Y, "R(e1,e2)", "-4*R(e1,e2)"},
      {K::F4, "R(e1,e3)", "R(e2,e-3)", "-R(e1,e2)", ""},
      {K::F4, "R(e-3,e0)", "R(e3,e0)", "R(e3,e-3)", "2*R(e3,e-3)"},
      {K::F4, "R(e1,e-2)", "R(e2,e-1)", "R(e1,e-1)-R(e2,e-2)", ""},
  };
  return cases;
}

#define SUPERORBIT_EXC(S)                                                                                         \
  template Matrix<S> mat_mul(const Matrix<S>&, const Matrix<S>&);                                                 \
  template Matrix<S> mat_comm(const Matrix<S>&, const Matrix<S>&);                                                \
  template Matrix<S> kron(const Matrix<S>&, const Matrix<S>&);                                                    \
  template Matrix<S> block_diag(const Matrix<S>&, const Matrix<S>&);                                              \
  template SuperAlgebra<S> lie_algebra_from_matrices(const std::string&, const std::vector<std::string>&,         \
                                                     const std::vector<Matrix<S>>&);                              \
  template SuperAlgebra<S> solve_odd_bracket(const EquivariantBracketProblem<S>&, SolveStats*);                   \
  template EquivariantBracketProblem<S> problem_D21(const S&);                                                    \
  template SuperAlgebra<S> build_D21(const S&);                                                                   \
  template std::vector<S> d21_sigma(const S&);                                                                    \
  template std::optional<std::pair<size_t, int>> resolve_basis(const SuperAlgebra<S>&, std::string_view);         \
  template Vec<S> parse_element(const SuperAlgebra<S>&, std::string_view, const std::map<std::string, S>&);       \
  template std::optional<Vec<S>> find_h(const SuperAlgebra<S>&, const Vec<S>&, const std::vector<size_t>&);      \
  template std::vector<OrbitRepresentative<S>> orbit_reps(const SuperAlgebra<S>&, ExceptionalKind);

SUPERORBIT_EXC(Rational)
SUPERORBIT_EXC(RationalFunction)

}  // namespace superorbit
