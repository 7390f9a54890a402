#include "superorbit/superalg.hpp"

#include <set>

namespace superorbit {

namespace {

std::optional<Rational> abs_bound(const Rational& x) { return x.sign() < 0 ? -x : x; }
std::optional<Rational> abs_bound(const RationalFunction& x) {
  auto r = x.as_rational();
  if (!r) return std::nullopt;
  return r->sign() < 0 ? -*r : *r;
}

template <class S>
std::string coeff_prefix(const S& c, bool first) {
  std::string s = to_string(c);
  bool neg = !s.empty() && s[0] == '-' && s.find_first_of("+-", 1) == std::string::npos && s.find('(') == std::string::npos;
  std::string mag = neg ? s.substr(1) : s;
  if (mag.find_first_of("+- ") != std::string::npos) mag = "(" + mag + ")";
  std::string out;
  if (first) out = neg ? "-" : "";
  else out = neg ? " - " : " + ";
  if (mag != "1") out += mag + "*";
  return out;
}

}  // namespace

template <class S>
SuperAlgebra<S>::SuperAlgebra(std::string name, std::vector<std::string> names, std::vector<int> parity)
    : name_(std::move(name)), names_(std::move(names)), parity_(std::move(parity)) {
  if (names_.size() != parity_.size()) throw DimensionMismatch(names_.size(), parity_.size());
  table_.resize(names_.size() * names_.size());
}

template <class S>
std::optional<size_t> SuperAlgebra<S>::find(const std::string& n) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return i;
  return std::nullopt;
}

template <class S>
size_t SuperAlgebra<S>::index(const std::string& n) const {
  auto i = find(n);
  if (!i) throw std::invalid_argument("unknown basis element '" + n + "' in " + name_);
  return *i;
}

template <class S>
size_t SuperAlgebra<S>::even_dim() const {
  size_t c = 0;
  for (int p : parity_) c += p == 0;
  return c;
}

template <class S>
void SuperAlgebra<S>::check(const Vec<S>& x) const {
  if (x.size() != dim()) throw DimensionMismatch(x.size(), dim());
}

template <class S>
void SuperAlgebra<S>::set_bracket(size_t i, size_t j, const Vec<S>& v) {
  check(v);
  table_[i * dim() + j] = to_sparse(v);
  if (i == j) return;
  S sign = (parity_[i] & parity_[j]) ? S(1) : S(-1);
  table_[j * dim() + i] = to_sparse(scaled(v, sign));
}

template <class S>
Vec<S> SuperAlgebra<S>::bracket(const Vec<S>& x, const Vec<S>& y) const {
  check(x);
  check(y);
  std::vector<size_t> nx, ny;
  for (size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) nx.push_back(i);
  for (size_t i = 0; i < y.size(); ++i)
    if (!is_zero(y[i])) ny.push_back(i);
  Vec<S> out(dim());
  for (size_t i : nx)
    for (size_t j : ny) {
      const auto& t = table_[i * dim() + j];
      if (t.empty()) continue;
      S c = x[i] * y[j];
      for (const auto& term : t) out[term.k] += c * term.c;
    }
  return out;
}

template <class S>
Vec<S> SuperAlgebra<S>::bracket_basis(size_t i, size_t j) const {
  Vec<S> out(dim());
  for (const auto& t : structure(i, j)) out[t.k] = t.c;
  return out;
}

template <class S>
Matrix<S> SuperAlgebra<S>::ad(const Vec<S>& x) const {
  check(x);
  Matrix<S> m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (size_t j = 0; j < dim(); ++j)
      for (const auto& t : table_[i * dim() + j]) m(t.k, j) += x[i] * t.c;
  }
  return m;
}

template <class S>
std::optional<int> SuperAlgebra<S>::parity_of(const Vec<S>& x) const {
  check(x);
  std::optional<int> p;
  for (size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    if (p && *p != parity_[i]) return std::nullopt;
    p = parity_[i];
  }
  return p;
}

template <class S>
std::string SuperAlgebra<S>::show(const Vec<S>& x) const {
  check(x);
  std::string out;
  for (size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    out += coeff_prefix(x[i], out.empty()) + names_[i];
  }
  return out.empty() ? "0" : out;
}

template <class S>
std::vector<std::string> check_structure(const SuperAlgebra<S>& a) {
  std::vector<std::string> bad;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Vec<S> v = a.bracket_basis(i, j), w = a.bracket_basis(j, i);
      S sign = (a.parity(i) & a.parity(j)) ? S(1) : S(-1);
      if (v != scaled(w, sign)) bad.push_back("skew-symmetry fails for (" + a.names()[i] + "," + a.names()[j] + ")");
      int p = a.parity(i) ^ a.parity(j);
      for (const auto& t : a.structure(i, j))
        if (a.parity(t.k) != p) {
          bad.push_back("parity fails for (" + a.names()[i] + "," + a.names()[j] + ")");
          break;
        }
    }
  return bad;
}

template <class S>
std::vector<JacobiViolation> check_super_jacobi(const SuperAlgebra<S>& a, size_t max_report) {
  // With super skew-symmetry the Jacobiator is super-alternating, so i<=j<=k suffices.
  size_t n = a.dim();
  std::vector<JacobiViolation> out;
  auto nested = [&](size_t x, size_t y, size_t z, const S& sign, Vec<S>& acc) {
    for (const auto& t : a.structure(y, z)) {
      S c = sign * t.c;
      for (const auto& u : a.structure(x, t.k)) acc[u.k] += c * u.c;
    }
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t k = j; k < n; ++k) {
        Vec<S> acc(n);
        int pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
        nested(i, j, k, (pi & pk) ? S(-1) : S(1), acc);
        nested(j, k, i, (pj & pi) ? S(-1) : S(1), acc);
        nested(k, i, j, (pk & pj) ? S(-1) : S(1), acc);
        if (!is_zero_vec(acc)) {
          out.push_back({i, j, k});
          if (out.size() >= max_report) return out;
        }
      }
  return out;
}

template <class S>
Subspace<S> centralizer(const SuperAlgebra<S>& a, const Vec<S>& e) {
  return kernel(a.ad(e));
}

template <class S>
Subspace<S> derived_subspace(const SuperAlgebra<S>& a, const Subspace<S>& s, const Subspace<S>* ceiling) {
  SpanBuilder<S> sb(a.dim());
  size_t cap = ceiling ? ceiling->dim() : a.dim();
  const auto& b = s.basis();
  for (size_t i = 0; i < b.size() && sb.rank() < cap; ++i)
    for (size_t j = i; j < b.size() && sb.rank() < cap; ++j) sb.add(a.bracket(b[i], b[j]));
  return sb.subspace();
}

template <class S>
Subspace<S> bracket_span(const SuperAlgebra<S>& a, const Subspace<S>& s, const Subspace<S>& t,
                         const Subspace<S>* ceiling) {
  SpanBuilder<S> sb(a.dim());
  size_t cap = ceiling ? ceiling->dim() : a.dim();
  for (const auto& u : s.basis()) {
    if (sb.rank() >= cap) break;
    for (const auto& v : t.basis()) {
      if (sb.rank() >= cap) break;
      sb.add(a.bracket(u, v));
    }
  }
  return sb.subspace();
}

template <class S>
bool is_closed(const SuperAlgebra<S>& a, const Subspace<S>& s) {
  const auto& b = s.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i; j < b.size(); ++j)
      if (!s.contains(a.bracket(b[i], b[j]))) return false;
  return true;
}

template <class S>
Subspace<S> generated_subalgebra(const SuperAlgebra<S>& a, const Subspace<S>& s, const Subspace<S>* ceiling) {
  SpanBuilder<S> sb(s);
  std::vector<Vec<S>> list = s.basis();
  size_t cap = ceiling ? ceiling->dim() : a.dim();
  // Every element is bracketed with all earlier ones once, so new elements
  // are paired with everything exactly when their turn comes.
  for (size_t i = 0; i < list.size() && sb.rank() < cap; ++i)
    for (size_t j = 0; j <= i && sb.rank() < cap; ++j) {
      Vec<S> w = a.bracket(list[i], list[j]);
      if (sb.add(w)) list.push_back(std::move(w));
    }
  return sb.subspace();
}

template <class S>
Subspace<S> center_of(const SuperAlgebra<S>& a, const Subspace<S>& s) {
  if (!is_closed(a, s)) throw AlgebraError("center_of: subspace is not closed under the bracket");
  const auto& b = s.basis();
  size_t d = b.size(), n = a.dim();
  if (d == 0) return s;
  // unknowns c_i with sum_i c_i [s_i, s_j] = 0 for every j
  std::vector<std::vector<Vec<S>>> br(d, std::vector<Vec<S>>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      br[i][j] = a.bracket(b[i], b[j]);
      if (i != j) {
        auto pi = a.parity_of(b[i]), pj = a.parity_of(b[j]);
        if (pi && pj) br[j][i] = scaled(br[i][j], (*pi & *pj) ? S(1) : S(-1));
        else br[j][i] = a.bracket(b[j], b[i]);
      }
    }
  SpanBuilder<S> eqs(d);
  for (size_t j = 0; j < d && eqs.rank() < d; ++j)
    for (size_t r = 0; r < n && eqs.rank() < d; ++r) {
      Vec<S> row(d);
      bool any = false;
      for (size_t i = 0; i < d; ++i)
        if (!is_zero(br[i][j][r])) {
          row[i] = br[i][j][r];
          any = true;
        }
      if (any) eqs.add(std::move(row));
    }
  Subspace<S> eq = eqs.subspace();
  Subspace<S> k = kernel(Matrix<S>::from_rows(d, eq.basis()));
  std::vector<Vec<S>> out;
  for (const auto& c : k.basis()) out.push_back(s.combine(c));
  return span(n, out);
}

template <class S>
GradedDecomposition<S> grade_decompose(const SuperAlgebra<S>& a, const Subspace<S>& s, const Vec<S>& h) {
  size_t n = a.dim(), d = s.dim();
  Matrix<S> adh = a.ad(h);
  GradedDecomposition<S> out;
  if (d == 0) return out;
  bool diagonal = true;
  for (size_t i = 0; i < n && diagonal; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && !is_zero(adh(i, j))) {
        diagonal = false;
        break;
      }
  std::set<long> cand;
  if (diagonal) {
    for (size_t i = 0; i < n; ++i)
      if (auto v = as_integer(adh(i, i))) cand.insert(*v);
  } else {
    Rational bound(0);
    for (size_t j = 0; j < n; ++j) {
      Rational colsum(0);
      for (size_t i = 0; i < n; ++i) {
        auto b = abs_bound(adh(i, j));
        if (!b) throw AlgebraError("grade_decompose: ad h has non-constant entries");
        colsum += *b;
      }
      if (bound < colsum) bound = colsum;
    }
    mpz_class hi = bound.value().get_num() / bound.value().get_den();
    long lim = hi.get_si();
    for (long j = -lim; j <= lim; ++j) cand.insert(j);
  }
  // ad h restricted to s, in s-coordinates
  Matrix<S> r(d, d);
  for (size_t k = 0; k < d; ++k) {
    Vec<S> img = adh.apply(s.basis()[k]);
    if (!s.contains(img)) throw AlgebraError("grade_decompose: subspace not ad-h stable, witness " + a.show(s.basis()[k]));
    Vec<S> c = s.coordinates(img);
    for (size_t i = 0; i < d; ++i) r(i, k) = c[i];
  }
  size_t total = 0;
  for (long j : cand) {
    Matrix<S> m = r;
    for (size_t i = 0; i < d; ++i) m(i, i) -= S(j);
    Subspace<S> k = kernel(m);
    if (k.dim() == 0) continue;
    std::vector<Vec<S>> vs;
    for (const auto& c : k.basis()) vs.push_back(s.combine(c));
    out.emplace(j, span(n, vs));
    total += k.dim();
    if (total == d) break;
  }
  if (total != d) throw AlgebraError("grade_decompose: ad h is not semisimple with integer spectrum on the subspace");
  return out;
}

template <class S>
bool is_ad_nilpotent(const SuperAlgebra<S>& a, const Vec<S>& x) {
  Matrix<S> m = a.ad(x);
  Subspace<S> v = Subspace<S>::full(a.dim());
  while (v.dim() > 0) {
    std::vector<Vec<S>> img;
    for (const auto& b : v.basis()) img.push_back(m.apply(b));
    Subspace<S> w = span(a.dim(), img);
    if (w.dim() == v.dim()) return false;
    v = std::move(w);
  }
  return true;
}

template <class S>
Vec<S> Quotient<S>::project(const Vec<S>& v) const {
  Vec<S> r = ideal.reduce(v);
  Vec<S> out(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) out[i] = r[kept[i]];
  return out;
}

template <class S>
Quotient<S> quotient(const SuperAlgebra<S>& a, const Subspace<S>& ideal, const std::string& name) {
  if (ideal.ambient() != a.dim()) throw DimensionMismatch(ideal.ambient(), a.dim());
  for (size_t k = 0; k < a.dim(); ++k)
    for (const auto& v : ideal.basis())
      if (!ideal.contains(a.bracket(a.basis_vec(k), v)))
        throw AlgebraError("quotient: not an ideal, [" + a.names()[k] + ", " + a.show(v) + "] escapes");
  Quotient<S> q;
  q.ideal = ideal;
  std::vector<bool> piv(a.dim(), false);
  for (size_t p : ideal.pivots()) piv[p] = true;
  std::vector<std::string> names;
  std::vector<int> par;
  for (size_t i = 0; i < a.dim(); ++i)
    if (!piv[i]) {
      q.kept.push_back(i);
      names.push_back(a.names()[i]);
      par.push_back(a.parity(i));
    }
  q.algebra = SuperAlgebra<S>(name.empty() ? a.name() + "/I" : name, names, par);
  for (size_t x = 0; x < q.kept.size(); ++x)
    for (size_t y = x; y < q.kept.size(); ++y)
      q.algebra.set_bracket(x, y, q.project(a.bracket_basis(q.kept[x], q.kept[y])));
  return q;
}

template <class S>
nlohmann::json to_json(const SuperAlgebra<S>& a) {
  nlohmann::json j;
  j["name"] = a.name();
  j["field"] = FieldInfo<S>::name;
  j["basis"] = nlohmann::json::array();
  for (size_t i = 0; i < a.dim(); ++i) j["basis"].push_back({{"name", a.names()[i]}, {"parity", a.parity(i)}});
  j["brackets"] = nlohmann::json::array();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t k = i; k < a.dim(); ++k) {
      const auto& t = a.structure(i, k);
      if (t.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& term : t) terms.push_back({term.k, to_string(term.c)});
      j["brackets"].push_back({{"i", i}, {"j", k}, {"value", terms}});
    }
  return j;
}

template <class S>
SuperAlgebra<S> algebra_from_json(const nlohmann::json& j) {
  if (j.at("field").get<std::string>() != FieldInfo<S>::name)
    throw std::invalid_argument("algebra JSON is over " + j.at("field").get<std::string>());
  std::vector<std::string> names;
  std::vector<int> par;
  for (const auto& b : j.at("basis")) {
    names.push_back(b.at("name").get<std::string>());
    par.push_back(b.at("parity").get<int>());
  }
  SuperAlgebra<S> a(j.at("name").get<std::string>(), names, par);
  for (const auto& br : j.at("brackets")) {
    Vec<S> v(a.dim());
    for (const auto& t : br.at("value")) v.at(t.at(0).get<size_t>()) = FieldInfo<S>::parse(t.at(1).get<std::string>());
    a.set_bracket(br.at("i").get<size_t>(), br.at("j").get<size_t>(), v);
  }
  return a;
}

#define SUPERORBIT_INSTANTIATE(S)                                                                                 \
  template class SuperAlgebra<S>;                                                                                 \
  template struct Quotient<S>;                                                                                    \
  template std::vector<std::string> check_structure(const SuperAlgebra<S>&);                                      \
  template std::vector<JacobiViolation> check_super_jacobi(const SuperAlgebra<S>&, size_t);                       \
  template Subspace<S> centralizer(const SuperAlgebra<S>&, const Vec<S>&);                                        \
  template Subspace<S> derived_subspace(const SuperAlgebra<S>&, const Subspace<S>&, const Subspace<S>*);          \
  template Subspace<S> bracket_span(const SuperAlgebra<S>&, const Subspace<S>&, const Subspace<S>&,               \
                                    const Subspace<S>*);                                                          \
  template bool is_closed(const SuperAlgebra<S>&, const Subspace<S>&);                                            \
  template Subspace<S> generated_subalgebra(const SuperAlgebra<S>&, const Subspace<S>&, const Subspace<S>*);      \
  template Subspace<S> center_of(const SuperAlgebra<S>&, const Subspace<S>&);                                     \
  template GradedDecomposition<S> grade_decompose(const SuperAlgebra<S>&, const Subspace<S>&, const Vec<S>&);     \
  template bool is_ad_nilpotent(const SuperAlgebra<S>&, const Vec<S>&);                                           \
  template Quotient<S> quotient(const SuperAlgebra<S>&, const Subspace<S>&, const std::string&);                  \
  template nlohmann::json to_json(const SuperAlgebra<S>&);                                                        \
  template SuperAlgebra<S> algebra_from_json(const nlohmann::json&);

SUPERORBIT_INSTANTIATE(Rational)
SUPERORBIT_INSTANTIATE(RationalFunction)

}  // namespace superorbit
