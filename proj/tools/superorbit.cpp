#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "superorbit/analysis.hpp"

using namespace superorbit;
using json = nlohmann::json;
using Q = Rational;
using RF = RationalFunction;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string algebra;
  std::string partition, orbit;
  std::string format = "json";
  std::string alpha;
  int max = 0, max_n = 0, jobs = 1;
  std::string family;
  std::string name;
  std::string out, check;
};

// ---- rendering

std::string md_escape(const std::string& v) {
  std::string out;
  for (char ch : v) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render(const json& report, const std::string& format, const std::string& extra = "") {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(report, "", kv);
  std::ostringstream os;
  if (format == "md") {
    os << "| field | value |\n|---|---|\n";
    for (auto& [k, v] : kv) {
      os << "| " << k << " | " << md_escape(v) << " |\n";
    }
    if (!extra.empty()) os << "\n```\n" << extra << "```\n";
  } else {
    size_t w = 0;
    for (auto& [k, v] : kv) w = std::max(w, k.size());
    for (auto& [k, v] : kv) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    if (!extra.empty()) os << "\n" << extra;
  }
  return os.str();
}

// ---- algebra construction with an optional on-disk cache

template <class S>
SuperAlgebra<S> cached(const std::string& key, const std::function<SuperAlgebra<S>()>& build) {
  const char* dir = std::getenv("SUPERORBIT_CACHE");
  if (!dir || !*dir) return build();
  fs::path p = fs::path(dir) / (key + ".json");
  if (fs::exists(p)) {
    std::ifstream in(p);
    try {
      return algebra_from_json<S>(json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring unreadable cache entry " << p << ": " << e.what() << "\n";
    }
  }
  auto a = build();
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream o(p);
  if (o) o << to_json(a).dump() << "\n";
  return a;
}

std::string alpha_key(const Q& a) {
  std::string s = a.str();
  for (auto& c : s)
    if (c == '/') c = '_';
  return s;
}

Q parse_alpha(const std::string& text) {
  try {
    return Q::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--alpha expects 'symbolic' or a rational number, got '" + text + "'");
  }
}

const SuperAlgebra<RF>& d21_symbolic() {
  static const auto a = cached<RF>("D21_symbolic", [] { return build_D21(RF::alpha()); });
  return a;
}
SuperAlgebra<Q> d21_rational(const Q& al) {
  if (al == Q(0) || al == Q(-1)) throw UsageError("alpha must not be 0 or -1");
  return cached<Q>("D21_alpha_" + alpha_key(al), [&] { return build_D21(al); });
}
const SuperAlgebra<Q>& g3() {
  static const auto a = cached<Q>("G3", [] { return build_G3(); });
  return a;
}
const SuperAlgebra<Q>& f4() {
  static const auto a = cached<Q>("F4", [] { return build_F4(); });
  return a;
}

std::optional<Family> parse_family(const std::string& s) {
  if (s == "gl") return Family::gl;
  if (s == "sl") return Family::sl;
  if (s == "psl") return Family::psl;
  if (s == "osp") return Family::osp;
  return std::nullopt;
}

// ---- analyze

template <class S>
json analyze_exceptional(const SuperAlgebra<S>& a, ExceptionalKind k, const std::string& label) {
  auto reps = orbit_reps(a, k);
  for (const auto& rep : reps) {
    if (rep.label != label) continue;
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
    return to_json(r);
  }
  std::string hint;
  for (const auto& rep : reps) hint += "\n  " + rep.label;
  throw UsageError("unknown orbit '" + label + "' for " + kind_name(k) + "; known orbits:" + hint);
}

int cmd_analyze(const Config& c) {
  if (auto k = parse_kind(c.algebra)) {
    if (c.orbit.empty()) throw UsageError("--orbit is required for " + c.algebra);
    json rep;
    switch (*k) {
      case ExceptionalKind::D21:
        if (c.alpha == "symbolic") {
          rep = analyze_exceptional(d21_symbolic(), *k, c.orbit);
          rep["alpha"] = "symbolic";
        } else {
          Q al = c.alpha.empty() ? Q(2) : parse_alpha(c.alpha);
          rep = analyze_exceptional(d21_rational(al), *k, c.orbit);
          rep["alpha"] = al.str();
        }
        break;
      case ExceptionalKind::G3: rep = analyze_exceptional(g3(), *k, c.orbit); break;
      case ExceptionalKind::F4: rep = analyze_exceptional(f4(), *k, c.orbit); break;
    }
    std::cout << render(rep, c.format);
    return 0;
  }
  auto f = parse_family(c.algebra);
  if (!f) throw UsageError("unknown algebra '" + c.algebra + "'");
  if (c.partition.empty()) throw UsageError("--partition is required for " + c.algebra);
  SuperPartition l;
  try {
    l = SuperPartition::parse(c.partition);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  int m = l.m(), n = l.n();
  if (*f == Family::sl && m + n < 2) throw UsageError("sl needs m+n >= 2");
  if (*f == Family::psl && (m != n || n < 2)) throw UsageError("psl needs a partition of (n|n) with n >= 2");
  if (*f == Family::osp) {
    if (n % 2) throw UsageError("osp needs an even odd part, got " + l.str());
    if (!l.osp_valid()) throw UsageError("partition " + l.str() + " is not valid for osp");
  }
  SweepOptions opt;
  opt.centers = *f == Family::psl;
  opt.osp_structure = *f == Family::osp;
  auto rec = run_sweep({{*f, m, n, l}}, opt).front();
  std::cout << render(to_json(rec), c.format, pyramid(l).ascii());
  return 0;
}

// ---- enumerate

int default_max(Family f) {
  switch (f) {
    case Family::gl:
    case Family::sl: return 8;
    case Family::psl: return 4;
    case Family::osp: return 9;
  }
  return 0;
}

int cmd_enumerate(const Config& c) {
  auto f = parse_family(c.algebra);
  if (!f) throw UsageError("enumerate needs --algebra gl|sl|psl|osp");
  int max = c.max ? c.max : default_max(*f);
  SweepOptions opt;
  opt.centers = *f == Family::psl;
  opt.osp_structure = *f == Family::osp;
  auto recs = run_sweep(sweep_items(*f, max), opt, c.jobs);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : recs) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  auto mark = [&](bool b) { return c.format == "md" ? (b ? "✓" : "") : (b ? "y" : "n"); };
  if (c.format == "md") std::cout << "| algebra | partition | dim g^e | dim [g^e,g^e] | reachable | strongly | Panyushev | criterion |\n|---|---|---|---|:-:|:-:|:-:|:-:|\n";
  for (const auto& r : recs) {
    bool pan = r.flags.panyushev_generated && r.flags.panyushev_layerwise;
    if (c.format == "md")
      std::cout << "| " << md_escape(r.item.algebra()) << " | " << md_escape(r.item.lambda.str()) << " | " << r.dim_ge << " | "
                << r.dim_derived << " | " << mark(r.flags.reachable) << " | " << mark(r.flags.strongly_reachable)
                << " | " << mark(pan) << " | " << mark(r.criterion) << " |\n";
    else
      std::cout << r.item.label() << "  ge=" << r.dim_ge << " derived=" << r.dim_derived << " R=" << mark(r.flags.reachable)
                << " S=" << mark(r.flags.strongly_reachable) << " P=" << mark(pan) << " crit=" << mark(r.criterion)
                << "\n";
  }
  return 0;
}

// ---- tables

std::vector<ExceptionalKind> kinds_for(const std::string& algebra) {
  if (algebra.empty()) return {ExceptionalKind::D21, ExceptionalKind::G3, ExceptionalKind::F4};
  auto k = parse_kind(algebra);
  if (!k) throw UsageError("tables needs --algebra D21|G3|F4");
  return {*k};
}

std::vector<TableRow> table_rows(ExceptionalKind k, const std::string& alpha) {
  switch (k) {
    case ExceptionalKind::D21:
      if (alpha.empty() || alpha == "symbolic") return exceptional_table(d21_symbolic(), k);
      return exceptional_table(d21_rational(parse_alpha(alpha)), k);
    case ExceptionalKind::G3: return exceptional_table(g3(), k);
    case ExceptionalKind::F4: return exceptional_table(f4(), k);
  }
  return {};
}

std::string table_file(ExceptionalKind k) { return "table_" + kind_name(k) + ".md"; }

int cmd_tables(const Config& c) {
  int rc = 0;
  json all = json::object();
  for (auto k : kinds_for(c.algebra)) {
    auto rows = table_rows(k, c.alpha);
    auto md = render_table_md(k, rows);
    if (!c.out.empty()) {
      fs::create_directories(c.out);
      std::ofstream(fs::path(c.out) / table_file(k)) << md;
    }
    if (!c.check.empty()) {
      std::ifstream in(fs::path(c.check) / table_file(k));
      std::stringstream ss;
      ss << in.rdbuf();
      bool same = in && ss.str() == md;
      std::cout << table_file(k) << ": " << (same ? "matches golden" : "DIFFERS from golden") << "\n";
      if (!same) rc = 1;
    } else if (c.out.empty()) {
      if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        all[kind_name(k)] = arr;
      } else {
        std::cout << md << "\n";
      }
    }
  }
  if (c.format == "json" && c.out.empty() && c.check.empty()) std::cout << all.dump(2) << "\n";
  return rc;
}

// ---- verify

template <class S>
std::vector<std::string> jacobi_problems(const SuperAlgebra<S>& a) {
  auto out = check_structure(a);
  for (const auto& v : check_super_jacobi(a))
    out.push_back("Jacobi fails on (" + a.names()[v.i] + ", " + a.names()[v.j] + ", " + a.names()[v.k] + ")");
  return out;
}

int cmd_verify_jacobi(const Config& c, json& report) {
  std::vector<std::pair<std::string, std::vector<std::string>>> results;
  auto add = [&](const std::string& n, std::vector<std::string> p) { results.emplace_back(n, std::move(p)); };
  std::vector<std::string> algs;
  if (c.algebra.empty())
    algs = {"gl", "sl", "psl", "osp", "D21", "G3", "F4"};
  else
    algs = {c.algebra};
  for (const auto& name : algs) {
    if (auto k = parse_kind(name)) {
      switch (*k) {
        case ExceptionalKind::D21:
          if (c.alpha.empty() || c.alpha == "symbolic")
            add("D21(symbolic)", jacobi_problems(d21_symbolic()));
          else
            add("D21(" + c.alpha + ")", jacobi_problems(d21_rational(parse_alpha(c.alpha))));
          break;
        case ExceptionalKind::G3: add("G3", jacobi_problems(g3())); break;
        case ExceptionalKind::F4: add("F4", jacobi_problems(f4())); break;
      }
      continue;
    }
    auto f = parse_family(name);
    if (!f) throw UsageError("unknown algebra '" + name + "'");
    int max = c.max ? c.max : default_max(*f);
    if (*f == Family::psl && c.max_n) max = c.max_n;
    for (const auto& r : jacobi_sweep(*f, max)) {
      std::vector<std::string> p;
      if (r.structure_problems) p.push_back(std::to_string(r.structure_problems) + " skew-symmetry problems");
      if (r.jacobi_violations) p.push_back(std::to_string(r.jacobi_violations) + " Jacobi violations");
      add(r.algebra, p);
    }
  }
  size_t bad = 0;
  json runs = json::array();
  for (const auto& [n, p] : results) {
    if (!p.empty()) ++bad;
    runs.push_back({{"algebra", n}, {"violations", p.size()}});
    if (c.format != "json") {
      if (!p.empty()) {
        std::cout << n << ": " << p.size() << " violations\n";
        for (size_t i = 0; i < std::min<size_t>(p.size(), 10); ++i) std::cout << "  " << p[i] << "\n";
      }
    }
  }
  report["runs"] = runs;
  report["instances"] = results.size();
  report["failures"] = bad;
  if (c.format != "json") std::cout << "jacobi: " << results.size() << " algebras, " << bad << " with violations\n";
  return bad ? 1 : 0;
}

int cmd_verify(const Config& c) {
  json report;
  report["theorem"] = c.name;
  int rc;
  if (c.name == "jacobi") {
    rc = cmd_verify_jacobi(c, report);
  } else {
    std::string thm = c.name == "dim-psl" ? "dims" : c.name;
    const auto& names = theorem_names();
    if (std::find(names.begin(), names.end(), thm) == names.end()) {
      std::string list = "jacobi, dim-psl";
      for (const auto& n : names) list += ", " + n;
      throw UsageError("unknown theorem '" + c.name + "'; choose one of: " + list);
    }
    std::vector<Family> fams;
    if (!c.family.empty()) {
      auto f = parse_family(c.family);
      if (!f) throw UsageError("unknown family '" + c.family + "'");
      fams = {*f};
    } else if (c.name == "dim-psl" || thm == "center" || thm == "psl-diagram") {
      fams = {Family::psl};
    } else if (thm == "dims") {
      fams = {Family::gl, Family::sl, Family::psl};
    } else if (thm == "osp-derived") {
      fams = {Family::osp};
    } else {
      fams = {Family::sl, Family::psl, Family::osp};
    }
    size_t total_bad = 0;
    json runs = json::array();
    for (auto f : fams) {
      int max = c.max ? c.max : default_max(f);
      if (f == Family::psl && c.max_n) max = c.max_n;
      SweepOptions opt;
      opt.flags = !(thm == "dims" && f == Family::gl);
      opt.centers = f == Family::psl && (thm == "center" || thm == "psl-diagram");
      opt.osp_structure = f == Family::osp && thm == "osp-derived";
      auto t0 = std::chrono::steady_clock::now();
      auto recs = run_sweep(sweep_items(f, max), opt, c.jobs);
      auto bad = check_theorem(thm, recs);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      total_bad += bad.size();
      json ce = json::array();
      for (const auto& b : bad) ce.push_back({{"instance", b.instance}, {"detail", b.detail}});
      runs.push_back({{"family", family_name(f)}, {"max", max}, {"instances", recs.size()}, {"counterexamples", ce}});
      if (c.format != "json") {
        std::cout << c.name << " " << family_name(f) << " (max " << max << "): " << recs.size() << " instances, "
                  << bad.size() << " counterexamples, " << std::fixed << std::setprecision(2) << secs << " s\n";
        for (const auto& b : bad) std::cout << "  " << b.instance << ": " << b.detail << "\n";
      }
    }
    report["runs"] = runs;
    report["failures"] = total_bad;
    rc = total_bad ? 1 : 0;
  }
  if (c.format == "json") std::cout << report.dump(2) << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability and the Panyushev property for nilpotent orbits in Lie superalgebras"};
  app.require_subcommand(1);
  Config c;
  const std::vector<std::string> formats = {"json", "md", "ascii"};
  const std::vector<std::string> algebras = {"gl", "sl", "psl", "osp", "D21", "G3", "F4"};

  auto* an = app.add_subcommand("analyze", "analyze one nilpotent orbit");
  an->add_option("algebra_pos", c.algebra, "algebra (same as --algebra)");
  an->add_option("partition_pos", c.partition, "partition or orbit label");
  an->add_option("--algebra", c.algebra, "algebra")->check(CLI::IsMember(algebras));
  an->add_option("--partition", c.partition, "partition \"p1,p2|q1,q2\"");
  an->add_option("--orbit", c.orbit, "orbit label for D21, G3, F4");
  an->add_option("--format", c.format)->check(CLI::IsMember(formats));
  an->add_option("--alpha", c.alpha, "D21 parameter: symbolic or a rational (default 2)");

  auto* en = app.add_subcommand("enumerate", "sweep all partitions of a family");
  en->add_option("--algebra", c.algebra)->required()->check(CLI::IsMember({"gl", "sl", "psl", "osp"}));
  en->add_option("--max", c.max, "bound on m+n (psl: on n)");
  en->add_option("--format", c.format)->check(CLI::IsMember(formats));
  en->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);

  auto* tb = app.add_subcommand("tables", "regenerate the exceptional tables");
  tb->add_option("--algebra", c.algebra)->check(CLI::IsMember({"D21", "G3", "F4"}));
  tb->add_option("--alpha", c.alpha, "D21 parameter (default symbolic)");
  tb->add_option("--out", c.out, "write table_<algebra>.md files here");
  tb->add_option("--check", c.check, "compare against table_<algebra>.md files here");
  tb->add_option("--format", c.format)->check(CLI::IsMember({"json", "md"}));

  auto* vf = app.add_subcommand("verify", "run a verification sweep");
  vf->add_option("name", c.name, "jacobi, dim-psl, theorem1, panyushev, dims, center, psl-diagram, osp-derived")
      ->required();
  vf->add_option("--family", c.family)->check(CLI::IsMember({"gl", "sl", "psl", "osp"}));
  vf->add_option("--algebra", c.algebra)->check(CLI::IsMember(algebras));
  vf->add_option("--max", c.max, "bound on m+n (psl: on n)");
  vf->add_option("--max-n", c.max_n, "bound on n for psl");
  vf->add_option("--alpha", c.alpha);
  vf->add_option("--format", c.format)->check(CLI::IsMember({"json", "ascii"}));
  vf->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (tb->parsed() && !tb->count("--format")) c.format = "md";
  if (vf->parsed() && !vf->count("--format")) c.format = "ascii";
  if (en->parsed() && !en->count("--format")) c.format = "md";

  try {
    if (an->parsed()) {
      if (parse_kind(c.algebra) && c.orbit.empty()) c.orbit = c.partition;
      return cmd_analyze(c);
    }
    if (en->parsed()) return cmd_enumerate(c);
    if (tb->parsed()) return cmd_tables(c);
    if (vf->parsed()) return cmd_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
