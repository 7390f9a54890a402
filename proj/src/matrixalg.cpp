#include "superorbit/matrixalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace superorbit {

// ---- partitions

SuperPartition::SuperPartition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.size <= 0) throw std::invalid_argument("partition parts must be positive");
    if (p.parity != 0 && p.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  }
  std::stable_sort(parts_.begin(), parts_.end(), [](const Part& a, const Part& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.parity < b.parity;
  });
}

SuperPartition SuperPartition::from(const std::vector<int>& even, const std::vector<int>& odd) {
  std::vector<Part> parts;
  for (int x : even) parts.push_back({x, 0});
  for (int x : odd) parts.push_back({x, 1});
  return SuperPartition(std::move(parts));
}

SuperPartition SuperPartition::parse(std::string_view text) {
  auto side = [&](std::string_view s) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&] {
      std::string t;
      for (char ch : tok)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
      tok.clear();
      if (t.empty()) return false;
      for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad partition '" + std::string(text) + "'");
      int v = std::stoi(t);
      if (v <= 0) throw ParseError("partition parts must be positive in '" + std::string(text) + "'");
      out.push_back(v);
      return true;
    };
    for (char ch : s) {
      if (ch == ',') {
        if (!flush()) throw ParseError("empty part in '" + std::string(text) + "'");
      } else {
        tok.push_back(ch);
      }
    }
    bool had = !s.empty();
    if (!flush() && had && s.find(',') != std::string_view::npos) throw ParseError("empty part in '" + std::string(text) + "'");
    return out;
  };
  auto bar = text.find('|');
  if (bar != std::string_view::npos && text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("more than one '|' in '" + std::string(text) + "'");
  std::vector<int> even = side(text.substr(0, bar));
  std::vector<int> odd = bar == std::string_view::npos ? std::vector<int>{} : side(text.substr(bar + 1));
  if (even.empty() && odd.empty()) throw ParseError("empty partition");
  return from(even, odd);
}

int SuperPartition::m() const {
  int s = 0;
  for (const auto& p : parts_) s += p.parity == 0 ? p.size : 0;
  return s;
}

int SuperPartition::n() const {
  int s = 0;
  for (const auto& p : parts_) s += p.parity == 1 ? p.size : 0;
  return s;
}

std::string SuperPartition::str() const {
  std::string ev, od;
  for (const auto& p : parts_) {
    std::string& t = p.parity == 0 ? ev : od;
    if (!t.empty()) t += ",";
    t += std::to_string(p.size);
  }
  return ev + "|" + od;
}

bool SuperPartition::osp_valid() const {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& p : parts_) ++mult[{p.size, p.parity}];
  for (const auto& [key, c] : mult) {
    auto [size, par] = key;
    bool needs_pair = (par == 0 && size % 2 == 0) || (par == 1 && size % 2 == 1);
    if (needs_pair && c % 2 != 0) return false;
  }
  return true;
}

bool SuperPartition::all_same_size_parity() const {
  for (const auto& p : parts_)
    if (p.size % 2 != parts_[0].size % 2) return false;
  return true;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxp) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<SuperPartition> super_partitions(int m, int n) {
  std::vector<SuperPartition> out;
  for (const auto& p : integer_partitions(m))
    for (const auto& q : integer_partitions(n)) out.push_back(SuperPartition::from(p, q));
  return out;
}

// ---- pyramid

int DynkinPyramid::r(int col) const {
  int c = 0;
  for (const auto& b : boxes) c += b.col == col && b.parity == 0;
  return c;
}

int DynkinPyramid::s(int col) const {
  int c = 0;
  for (const auto& b : boxes) c += b.col == col && b.parity == 1;
  return c;
}

int DynkinPyramid::max_col() const {
  int mx = 0;
  for (const auto& b : boxes) mx = std::max(mx, b.col);
  return mx;
}

std::string DynkinPyramid::ascii() const {
  int mc = max_col();
  std::string out;
  for (size_t row = lambda.size(); row-- > 0;) {
    std::string line(2 * mc + 1, ' ');
    for (const auto& b : boxes)
      if (b.row == row) line[b.col + mc] = static_cast<char>('0' + b.parity);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

DynkinPyramid pyramid(const SuperPartition& lambda) {
  DynkinPyramid p;
  p.lambda = lambda;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int a = 0; a < lambda[i]; ++a) p.boxes.push_back({i, lambda[i] - 1 - 2 * a, lambda.parity(i), a});
  // columns left to right, top to bottom inside a column
  std::stable_sort(p.boxes.begin(), p.boxes.end(), [](const Box& a, const Box& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row > b.row;
  });
  p.coord.resize(p.boxes.size());
  size_t even = 0, m = static_cast<size_t>(lambda.m()), odd = 0;
  for (size_t b = 0; b < p.boxes.size(); ++b) p.coord[b] = p.boxes[b].parity == 0 ? even++ : m + odd++;
  p.by_row.resize(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) p.by_row[i].resize(lambda[i]);
  for (size_t b = 0; b < p.boxes.size(); ++b) p.by_row[p.boxes[b].row][p.boxes[b].power] = b;
  return p;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::psl: return "psl";
    case Family::osp: return "osp";
  }
  return "?";
}

// ---- matrix algebras

template <class S>
Vec<S> MatrixAlgebra<S>::lift_coords(const Matrix<S>& X) const {
  size_t NN = N();
  if (X.rows() != NN || X.cols() != NN) throw DimensionMismatch(X.rows(), NN);
  Vec<S> v(mats.size());
  Matrix<S> rest = X;
  for (size_t k = 0; k < mats.size(); ++k) {
    v[k] = X(pos[k] / NN, pos[k] % NN);
    if (is_zero(v[k])) continue;
    for (const auto& e : mats[k]) rest(e.r, e.c) -= v[k] * e.v;
  }
  for (size_t i = 0; i < NN; ++i)
    for (size_t j = 0; j < NN; ++j)
      if (!is_zero(rest(i, j))) throw AlgebraError("matrix is not in " + alg.name());
  return v;
}

template <class S>
bool MatrixAlgebra<S>::contains_matrix(const Matrix<S>& X) const {
  try {
    lift_coords(X);
    return true;
  } catch (const AlgebraError&) {
    return false;
  }
}

template <class S>
Vec<S> MatrixAlgebra<S>::from_matrix(const Matrix<S>& X) const {
  Vec<S> v = lift_coords(X);
  return quot ? quot->project(v) : v;
}

template <class S>
Matrix<S> MatrixAlgebra<S>::to_matrix(const Vec<S>& v) const {
  Matrix<S> X(N(), N());
  auto add = [&](size_t k, const S& c) {
    if (is_zero(c)) return;
    for (const auto& e : mats[k]) X(e.r, e.c) += c * e.v;
  };
  if (quot) {
    if (v.size() != quot->kept.size()) throw DimensionMismatch(v.size(), quot->kept.size());
    for (size_t i = 0; i < v.size(); ++i) add(quot->kept[i], v[i]);
  } else {
    if (v.size() != mats.size()) throw DimensionMismatch(v.size(), mats.size());
    for (size_t i = 0; i < v.size(); ++i) add(i, v[i]);
  }
  return X;
}

template <class S>
Matrix<S> MatrixAlgebra<S>::supercommutator(const Matrix<S>& a, const Matrix<S>& b) const {
  size_t NN = N();
  Matrix<S> out(NN, NN);
  // bilinear over the homogeneous components
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb) {
      S sign = (pa & pb) ? S(-1) : S(1);
      for (size_t i = 0; i < NN; ++i)
        for (size_t l = 0; l < NN; ++l) {
          if (((coord_parity(i) + coord_parity(l)) & 1) != pa || is_zero(a(i, l))) continue;
          for (size_t j = 0; j < NN; ++j)
            if (((coord_parity(l) + coord_parity(j)) & 1) == pb && !is_zero(b(l, j))) out(i, j) += a(i, l) * b(l, j);
        }
      for (size_t i = 0; i < NN; ++i)
        for (size_t l = 0; l < NN; ++l) {
          if (((coord_parity(i) + coord_parity(l)) & 1) != pb || is_zero(b(i, l))) continue;
          for (size_t j = 0; j < NN; ++j)
            if (((coord_parity(l) + coord_parity(j)) & 1) == pa && !is_zero(a(l, j)))
              out(i, j) -= sign * b(i, l) * a(l, j);
        }
    }
  return out;
}

namespace {

template <class S>
MatrixAlgebra<S> from_subspace(Family fam, size_t m, size_t n, const Subspace<S>& sub, const std::string& name) {
  MatrixAlgebra<S> g;
  g.family = fam;
  g.m = m;
  g.n = n;
  size_t NN = m + n;
  std::vector<std::string> names;
  std::vector<int> par;
  for (size_t k = 0; k < sub.dim(); ++k) {
    SparseMat<S> sm;
    for (size_t t = 0; t < NN * NN; ++t)
      if (!is_zero(sub.basis()[k][t]))
        sm.push_back({static_cast<uint32_t>(t / NN), static_cast<uint32_t>(t % NN), sub.basis()[k][t]});
    size_t p = sub.pivots()[k];
    size_t pr = p / NN + 1, pc = p % NN + 1;
    std::string nm;
    if (sm.size() == 1) nm = "E(" + std::to_string(pr) + "," + std::to_string(pc) + ")";
    else if (pr == pc) nm = "D(" + std::to_string(pr) + ")";
    else nm = "X(" + std::to_string(pr) + "," + std::to_string(pc) + ")";
    names.push_back(nm);
    par.push_back(static_cast<int>(((pr - 1 >= m) + (pc - 1 >= m)) % 2));
    g.mats.push_back(std::move(sm));
    g.pos.push_back(p);
  }
  g.alg = SuperAlgebra<S>(name, names, par);
  // structure constants from sparse supercommutators
  for (size_t a = 0; a < g.mats.size(); ++a)
    for (size_t b = a; b < g.mats.size(); ++b) {
      Matrix<S> c(NN, NN);
      bool any = false;
      S sign = (par[a] & par[b]) ? S(-1) : S(1);
      for (const auto& x : g.mats[a])
        for (const auto& y : g.mats[b]) {
          if (x.c == y.r) {
            c(x.r, y.c) += x.v * y.v;
            any = true;
          }
          if (y.c == x.r) {
            c(y.r, x.c) -= sign * y.v * x.v;
            any = true;
          }
        }
      if (any) g.alg.set_bracket(a, b, g.lift_coords(c));
    }
  return g;
}

std::string superdim(size_t m, size_t n) { return "(" + std::to_string(m) + "|" + std::to_string(n) + ")"; }

}  // namespace

template <class S>
MatrixAlgebra<S> build_gl(size_t m, size_t n) {
  return from_subspace(Family::gl, m, n, Subspace<S>::full((m + n) * (m + n)), "gl" + superdim(m, n));
}

template <class S>
MatrixAlgebra<S> build_sl(size_t m, size_t n) {
  size_t NN = m + n;
  if (NN == 0) throw std::invalid_argument("sl(0|0) is empty");
  Matrix<S> str(1, NN * NN);
  for (size_t i = 0; i < NN; ++i) str(0, i * NN + i) = i < m ? S(1) : S(-1);
  return from_subspace(Family::sl, m, n, kernel(str), "sl" + superdim(m, n));
}

template <class S>
MatrixAlgebra<S> build_psl(size_t n) {
  if (n < 2) throw std::invalid_argument("psl(n|n) needs n >= 2: sl(1|1)/CI is not simple");
  MatrixAlgebra<S> g = build_sl<S>(n, n);
  Vec<S> id = g.lift_coords(Matrix<S>::identity(2 * n));
  Quotient<S> q = quotient(g.alg, span<S>(g.alg.dim(), {id}), "psl" + superdim(n, n));
  g.family = Family::psl;
  g.alg = q.algebra;
  g.quot = std::move(q);
  return g;
}

namespace {

template <class S>
Matrix<S> model_form(const DynkinPyramid& p) {
  const auto& l = p.lambda;
  auto star = osp_involution(l);
  auto theta = osp_theta(l);
  size_t NN = p.boxes.size();
  Matrix<S> B(NN, NN);
  for (size_t i = 0; i < l.size(); ++i)
    for (int a = 0; a < l[i]; ++a) {
      size_t x = p.coordinate(i, a), y = p.coordinate(star[i], l[i] - 1 - a);
      B(x, y) = S((a % 2 ? -1 : 1) * theta[i]);
    }
  return B;
}

template <class S>
MatrixAlgebra<S> osp_from_form(size_t m, size_t n2, const Matrix<S>& B) {
  size_t NN = m + 2 * n2;
  auto par = [&](size_t i) { return i >= m ? 1 : 0; };
  Matrix<S> eq(NN * NN, NN * NN);
  // B(Xu,v) + (-1)^{|X||u|} B(u,Xv) = 0 on basis vectors u=e_c, v=e_d
  for (size_t c = 0; c < NN; ++c)
    for (size_t d = 0; d < NN; ++d) {
      size_t row = c * NN + d;
      S sign = (((par(c) + par(d)) & 1) & par(c)) ? S(-1) : S(1);
      for (size_t a = 0; a < NN; ++a)
        if (!is_zero(B(a, d))) eq(row, a * NN + c) += B(a, d);
      for (size_t b = 0; b < NN; ++b)
        if (!is_zero(B(c, b))) eq(row, b * NN + d) += sign * B(c, b);
    }
  MatrixAlgebra<S> g = from_subspace(Family::osp, m, 2 * n2, kernel(eq), "osp" + superdim(m, 2 * n2));
  g.form = B;
  return g;
}

}  // namespace

template <class S>
MatrixAlgebra<S> build_osp_for(const SuperPartition& lambda) {
  if (!lambda.osp_valid()) throw std::invalid_argument("partition " + lambda.str() + " is not valid for osp");
  if (lambda.n() % 2) throw std::invalid_argument("osp needs an even odd part");
  return osp_from_form<S>(lambda.m(), lambda.n() / 2, model_form<S>(pyramid(lambda)));
}

template <class S>
MatrixAlgebra<S> build_osp(size_t m, size_t n2) {
  std::vector<int> ev(m, 1), od(2 * n2, 1);
  return build_osp_for<S>(SuperPartition::from(ev, od));
}

// ---- nilpotent elements

template <class S>
Matrix<S> pyramid_e(const DynkinPyramid& p) {
  size_t NN = p.boxes.size();
  Matrix<S> e(NN, NN);
  for (size_t i = 0; i < p.lambda.size(); ++i)
    for (int a = 0; a + 1 < p.lambda[i]; ++a) e(p.coordinate(i, a + 1), p.coordinate(i, a)) = S(1);
  return e;
}

template <class S>
Matrix<S> pyramid_h(const DynkinPyramid& p) {
  size_t NN = p.boxes.size();
  Matrix<S> h(NN, NN);
  for (size_t b = 0; b < NN; ++b) h(p.coord[b], p.coord[b]) = S(-p.boxes[b].col);
  return h;
}

template <class S>
std::optional<Vec<S>> complete_triple(const SuperAlgebra<S>& a, const Vec<S>& e, const Vec<S>& h) {
  size_t n = a.dim();
  Matrix<S> ade = a.ad(e), adh = a.ad(h);
  Matrix<S> m(2 * n, n);
  Vec<S> rhs(2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      m(i, j) = ade(i, j);
      m(n + i, j) = adh(i, j);
    }
    m(n + i, i) += S(2);
    rhs[i] = h[i];
  }
  return solve(m, rhs);
}

template <class S>
NilpotentData<S> nilpotent_from_pyramid(const MatrixAlgebra<S>& g, const DynkinPyramid& p) {
  if (static_cast<size_t>(p.lambda.m()) != g.m || static_cast<size_t>(p.lambda.n()) != g.n)
    throw std::invalid_argument("partition " + p.lambda.str() + " does not match " + g.alg.name());
  NilpotentData<S> d;
  d.lambda = p.lambda;
  d.pyr = p;
  d.e_mat = pyramid_e<S>(p);
  d.h_mat = pyramid_h<S>(p);
  d.e = g.from_matrix(d.e_mat);
  d.h = g.from_matrix(d.h_mat);
  auto f = complete_triple(g.alg, d.e, d.h);
  if (!f) throw AlgebraError("no sl(2)-triple completion for " + p.lambda.str());
  d.f = *f;
  return d;
}

template <class S>
std::vector<int> jordan_type(const Matrix<S>& x, const std::vector<size_t>& coords) {
  size_t k = coords.size();
  Matrix<S> sub(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) sub(i, j) = x(coords[i], coords[j]);
  std::vector<size_t> ranks{k};
  Matrix<S> pw = sub;
  while (ranks.back() > 0) {
    size_t rk = rank(pw);
    if (rk == ranks.back()) throw AlgebraError("jordan_type: matrix is not nilpotent");
    ranks.push_back(rk);
    Matrix<S> nx(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t l = 0; l < k; ++l)
        if (!is_zero(pw(i, l)))
          for (size_t j = 0; j < k; ++j)
            if (!is_zero(sub(l, j))) nx(i, j) += pw(i, l) * sub(l, j);
    pw = std::move(nx);
  }
  // blocks of size >= t: ranks[t-1] - ranks[t]
  std::vector<int> out;
  for (size_t t = ranks.size() - 1; t >= 1; --t) {
    size_t at_least = ranks[t - 1] - ranks[t];
    size_t bigger = t + 1 < ranks.size() ? ranks[t] - ranks[t + 1] : 0;
    for (size_t c = 0; c < at_least - bigger; ++c) out.push_back(static_cast<int>(t));
  }
  return out;
}

// ---- xi basis

std::string XiElement::str() const {
  return "xi_" + std::to_string(i + 1) + "^{" + std::to_string(j + 1) + "," + std::to_string(k) + "}";
}

std::vector<XiElement> xi_basis(const SuperPartition& l) {
  std::vector<XiElement> out;
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = 0; j < l.size(); ++j)
      for (int k = std::max(l[j] - l[i], 0); k <= l[j] - 1; ++k) out.push_back({i, j, k, (l.parity(i) + l.parity(j)) % 2});
  return out;
}

template <class S>
Matrix<S> xi_matrix(const DynkinPyramid& p, size_t i, size_t j, int k) {
  const auto& l = p.lambda;
  if (i >= l.size() || j >= l.size() || k < 0 || k > l[j] - 1) throw std::out_of_range("xi index out of range");
  size_t NN = p.boxes.size();
  Matrix<S> x(NN, NN);
  for (int a = 0; a < l[i] && a + k < l[j]; ++a) x(p.coordinate(j, a + k), p.coordinate(i, a)) = S(1);
  return x;
}

DimFormulas dim_formulas(const SuperPartition& l) {
  DimFormulas d{0, 0, 0, 0, std::nullopt};
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = 0; j < l.size(); ++j) {
      long v = std::min(l[i], l[j]);
      d.gl_e += v;
      (l.parity(i) == l.parity(j) ? d.gl0_e : d.gl1_e) += v;
    }
  d.sl_e = d.gl_e - 1;
  if (l.m() == l.n()) {
    DynkinPyramid p = pyramid(l);
    int mc = p.max_col();
    long sq = 0, adj = 0;
    for (int c = -mc; c <= mc; ++c) {
      sq += static_cast<long>(p.c(c)) * p.c(c);
      adj += static_cast<long>(p.c(c)) * p.c(c + 1);
    }
    d.psl_e = sq + adj - 2;
  }
  return d;
}

// ---- osp signs

std::vector<size_t> osp_involution(const SuperPartition& l) {
  if (!l.osp_valid()) throw std::invalid_argument("partition " + l.str() + " is not valid for osp");
  std::vector<size_t> star(l.size());
  size_t i = 0;
  while (i < l.size()) {
    size_t j = i;
    while (j < l.size() && l[j] == l[i] && l.parity(j) == l.parity(i)) ++j;
    bool self = (l.parity(i) == 0 && l[i] % 2 == 1) || (l.parity(i) == 1 && l[i] % 2 == 0);
    for (size_t t = i; t < j; ++t) star[t] = self ? t : ((t - i) % 2 == 0 ? t + 1 : t - 1);
    i = j;
  }
  return star;
}

std::vector<int> osp_theta(const SuperPartition& l) {
  auto star = osp_involution(l);
  std::vector<int> theta(l.size(), 1);
  for (size_t i = 0; i < l.size(); ++i)
    if (star[i] < i) {
      int s = l.parity(i) == 0 ? 1 : -1;
      theta[i] = s * ((l[i] - 1) % 2 ? -1 : 1) * theta[star[i]];
    }
  return theta;
}

int osp_epsilon(const SuperPartition& l, size_t i, size_t j, int k) {
  if (i >= l.size() || j >= l.size() || k < 0 || k >= std::min(l[i], l[j])) throw std::out_of_range("epsilon index out of range");
  auto theta = osp_theta(l);
  int x = (l.parity(i) + l.parity(j)) % 2;
  int ex = l[j] - k - x * l.parity(i);
  return ((ex % 2 + 2) % 2 ? -1 : 1) * theta[j] * theta[i];
}

template <class S>
Matrix<S> osp_pair_element(const DynkinPyramid& p, size_t i, size_t j, int k, int eps) {
  const auto& l = p.lambda;
  auto star = osp_involution(l);
  Matrix<S> a = xi_matrix<S>(p, i, j, l[j] - 1 - k);
  Matrix<S> b = xi_matrix<S>(p, star[j], star[i], l[i] - 1 - k);
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(b(r, c))) a(r, c) += S(eps) * b(r, c);
  return a;
}

template <class S>
OspDecomposition<S> osp_decomposition(const MatrixAlgebra<S>& g, const DynkinPyramid& p) {
  const auto& l = p.lambda;
  auto star = osp_involution(l);
  size_t n = g.alg.dim();
  std::vector<Vec<S>> h, h0, h1, n1, n2m, n2p;
  auto vec = [&](const Matrix<S>& x) { return g.from_matrix(x); };
  auto diag_pair = [&](size_t i, int k, int sign) {
    Matrix<S> a = xi_matrix<S>(p, i, i, l[i] - 1 - k), b = xi_matrix<S>(p, star[i], star[i], l[i] - 1 - k);
    for (size_t r = 0; r < a.rows(); ++r)
      for (size_t c = 0; c < a.cols(); ++c)
        if (!is_zero(b(r, c))) a(r, c) += S(sign) * b(r, c);
    return a;
  };
  for (size_t i = 0; i < l.size(); ++i) {
    for (int k = 0; k < l[i]; ++k) {
      bool even = (l[i] - k) % 2 == 0;
      if (star[i] == i) {
        if (even) {
          Vec<S> v = vec(xi_matrix<S>(p, i, i, l[i] - 1 - k));
          h.push_back(v);
          h0.push_back(v);
        }
      } else {
        if (i < star[i]) {
          h.push_back(vec(osp_pair_element<S>(p, i, i, k, osp_epsilon(l, i, i, k))));
          (even ? h0 : h1).push_back(vec(diag_pair(i, k, even ? 1 : -1)));
        }
        if (!even) n1.push_back(vec(xi_matrix<S>(p, i, star[i], l[i] - 1 - k)));
      }
    }
  }
  auto size_at = [&](long idx) -> long {
    if (idx < 0) return 1L << 30;
    if (idx >= static_cast<long>(l.size())) return 0;
    return l[static_cast<size_t>(idx)];
  };
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = i + 1; j < l.size(); ++j) {
      if (j == star[i]) continue;
      for (int k = 0; k < std::min(l[i], l[j]); ++k) {
        Vec<S> v = vec(osp_pair_element<S>(p, i, j, k, osp_epsilon(l, i, j, k)));
        long ii = static_cast<long>(i);
        bool minus = j == i + 1 && star[i] == i && star[j] == j && k == l[j] - 1 && size_at(ii - 1) > l[i] &&
                     l[i] >= l[j] && l[j] > size_at(ii + 2);
        (minus ? n2m : n2p).push_back(v);
      }
    }
  OspDecomposition<S> d;
  d.nfrak = span(n, h);
  d.nfrak0 = span(n, h0);
  d.nfrak1 = span(n, h1);
  d.n1 = span(n, n1);
  d.n2_minus = span(n, n2m);
  d.n2_plus = span(n, n2p);
  d.n2 = sum(d.n2_minus, d.n2_plus);
  return d;
}

#define SUPERORBIT_MATRIXALG(S)                                                                      \
  template class MatrixAlgebra<S>;                                                                   \
  template MatrixAlgebra<S> build_gl<S>(size_t, size_t);                                             \
  template MatrixAlgebra<S> build_sl<S>(size_t, size_t);                                             \
  template MatrixAlgebra<S> build_psl<S>(size_t);                                                    \
  template MatrixAlgebra<S> build_osp<S>(size_t, size_t);                                            \
  template MatrixAlgebra<S> build_osp_for<S>(const SuperPartition&);                                 \
  template Matrix<S> pyramid_e<S>(const DynkinPyramid&);                                             \
  template Matrix<S> pyramid_h<S>(const DynkinPyramid&);                                             \
  template NilpotentData<S> nilpotent_from_pyramid(const MatrixAlgebra<S>&, const DynkinPyramid&);   \
  template std::optional<Vec<S>> complete_triple(const SuperAlgebra<S>&, const Vec<S>&, const Vec<S>&); \
  template std::vector<int> jordan_type(const Matrix<S>&, const std::vector<size_t>&);               \
  template Matrix<S> xi_matrix<S>(const DynkinPyramid&, size_t, size_t, int);                        \
  template Matrix<S> osp_pair_element<S>(const DynkinPyramid&, size_t, size_t, int, int);            \
  template OspDecomposition<S> osp_decomposition(const MatrixAlgebra<S>&, const DynkinPyramid&);

SUPERORBIT_MATRIXALG(Rational)
SUPERORBIT_MATRIXALG(RationalFunction)

}  // namespace superorbit
