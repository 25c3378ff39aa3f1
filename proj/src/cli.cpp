#include "ternary/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>

#include "CLI11.hpp"
#include "json.hpp"
#include "ternary/checker.hpp"
#include "ternary/codes.hpp"
#include "ternary/constructions.hpp"
#include "ternary/cosets.hpp"
#include "ternary/reproduce.hpp"

namespace ternary {

CliEnv CliEnv::from_process() {
  CliEnv env;
  env.stdout_is_tty = isatty(STDOUT_FILENO) != 0;
  env.stderr_is_tty = isatty(STDERR_FILENO) != 0;
  if (const char* dir = std::getenv("TERNARY_CODES_OUT_DIR"); dir && *dir) env.out_dir = dir;
  return env;
}

namespace {

using json = nlohmann::json;

constexpr const char* kGrammar = R"(Polynomial expressions over GF(3):
  expr   := ['+'|'-'] term (('+'|'-') term)*
  term   := factor (['*'] factor)*
  factor := primary ('^' integer)*
  primary:= integer | var | '(' expr ')'
Integers are reduced mod 3, so 2 and -1 are the same coefficient.
Example: "(x+1)^122 + x^122 + 1".)";

enum class Format { table, json, csv };

// A large-e root count with multiplicity means factoring a polynomial of
// degree e; skip it beyond this size.
constexpr u64 kMultiplicityLimit = 4096;

struct Options {
  std::string format;
  std::uint64_t seed = 0;
  unsigned m = 0;
  u64 e = 0;
  u64 e_min = 0, e_max = ~u64{0};
  unsigned workers = 1;
  std::string out_path;
  bool solutions = false;
  std::string expr;
  char var = 'x';
  std::string target = "all";
  u64 n = 0, k = 0;
  std::string case_id;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format pick_format(const Options& o, const CliEnv& env) {
  if (o.format.empty()) return env.stdout_is_tty ? Format::table : Format::json;
  if (o.format == "table") return Format::table;
  if (o.format == "json") return Format::json;
  return Format::csv;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_codeword(const Codeword& c) {
  std::string s;
  for (auto [pos, a] : c.terms) {
    s += s.empty() ? (a == 2 ? "-" : "") : (a == 2 ? " - " : " + ");
    s += "x^" + std::to_string(pos);
  }
  return s;
}

// Roots of the Q2/Q3 polynomials counted with multiplicity, when cheap.
std::optional<std::pair<u64, u64>> multiplicities(const FieldCtx& ctx, u64 e) {
  if (e > kMultiplicityLimit || e == 0) return std::nullopt;
  const TritPoly x = TritPoly::x(), one = TritPoly::constant(1);
  const TritPoly a = pow(x + one, e), b = pow(x, e) + one;
  return std::pair{distinct_roots_in_ext(a + b, ctx.m()).with_multiplicity,
                   distinct_roots_in_ext(a - b, ctx.m()).with_multiplicity};
}

int cmd_check(const Options& o, Format fmt, std::ostream& out) {
  if (o.m < 1 || o.m > kMaxTableDegree) throw InputError("check needs 1 <= m <= 13");
  const FieldCtx ctx = build_field(o.m);
  if (o.e > ctx.q() - 2) throw InputError("e out of range [0, 3^m-2] = [0, " + std::to_string(ctx.q() - 2) + "]");
  const Verdict v = classify(ctx, o.e);
  std::optional<CertifyReport> cert;
  if (!in_c1(o.e, o.m)) cert = certify_optimal(ctx, o.e);
  const auto mult = multiplicities(ctx, o.e);

  if (fmt == Format::csv) {
    out << verdict_csv_header() << '\n' << verdict_csv_row(v) << '\n';
  } else if (fmt == Format::json) {
    json j{{"verdict", verdict_json(v, o.solutions)}, {"seed", o.seed}};
    j["code"] = cert ? certify_json(*cert) : json(nullptr);
    if (mult) j["with_multiplicity"] = {{"q2", mult->first}, {"q3", mult->second}};
    if (cert) j["routes_agree"] = cert->routes_agree;
    out << j.dump(2) << '\n';
  } else {
    out << "m = " << v.m << ", e = " << v.e << ", n = " << ctx.order() << '\n';
    out << "applicable (e not in C_1, |C_e| = m): " << yes_no(v.applicable) << '\n';
    out << "Q1 e even:                 " << yes_no(v.q1) << '\n';
    out << "Q2 (x+1)^e+x^e+1 = 0:      " << v.q2.size() << " distinct solution(s)";
    if (mult) out << ", " << mult->first << " with multiplicity";
    out << (v.q2.only_one() ? "  [only x = 1]" : "  [fails]") << '\n';
    out << "Q3 (x+1)^e-x^e-1 = 0:      " << v.q3.size() << " distinct solution(s)";
    if (mult) out << ", " << mult->second << " with multiplicity";
    out << (v.q3.only_zero() ? "  [only x = 0]" : "  [fails]") << '\n';
    if (cert) {
      const CodeSpec& s = cert->spec;
      out << "code: [" << s.n << ", " << s.k << "], generator " << render_poly(s.g) << '\n';
      out << "minimum distance: " << (cert->witness ? "= " : ">= ") << s.d_lower
          << ", sphere-packing ceiling " << s.d_upper_bound << '\n';
      if (cert->witness) out << "low-weight codeword: " << render_codeword(*cert->witness) << '\n';
      if (s.warning) out << "warning: " << *s.warning << '\n';
      if (!cert->routes_agree) out << "warning: criterion and codeword search disagree\n";
    } else {
      out << "code: e lies in C_1, so m_1 m_e degenerates\n";
    }
    out << "optimal: " << yes_no(v.optimal) << (v.optimal ? " [" + std::to_string(ctx.order()) + ", " +
                                                                 std::to_string(ctx.order() - 2 * o.m) + ", 4]"
                                                           : "")
        << '\n';
    out << "seed: " << o.seed << '\n';
  }
  return v.optimal ? 0 : 1;
}

int cmd_sweep(const Options& o, Format fmt, std::ostream& out, std::ostream& err, const CliEnv& env) {
  if (o.m < 1 || o.m > kMaxTableDegree) throw InputError("exhaustive sweep needs 1 <= m <= 13");
  if (o.workers < 1) throw InputError("workers must be positive");
  const bool as_json = fmt == Format::json && !o.format.empty();
  std::filesystem::path path = o.out_path;
  if (path.empty()) {
    path = std::filesystem::path(env.out_dir.value_or(".")) /
           ("sweep-m" + std::to_string(o.m) + (as_json ? ".json" : ".csv"));
  }
  SweepOptions so;
  so.e_min = o.e_min;
  so.e_max = o.e_max;
  so.workers = o.workers;
  std::mutex mu;
  std::size_t last_pct = 0;
  if (env.stderr_is_tty) {
    so.progress = [&](std::size_t done, std::size_t total) {
      std::lock_guard lock(mu);
      const std::size_t pct = 100 * done / total;
      if (pct != last_pct) {
        last_pct = pct;
        err << "\rsweep m=" << o.m << ": " << pct << "%" << std::flush;
      }
    };
  }
  const std::vector<Verdict> rows = sweep(o.m, so);
  if (env.stderr_is_tty) err << '\n';

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  if (as_json) {
    json arr = json::array();
    for (const Verdict& v : rows) arr.push_back(verdict_json(v, o.solutions));
    std::ofstream(path) << json{{"m", o.m}, {"seed", o.seed}, {"verdicts", arr}}.dump(2) << '\n';
  } else {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream f(path, std::ios::app);
    if (fresh) f << verdict_csv_header() << '\n';
    for (const Verdict& v : rows) f << verdict_csv_row(v) << '\n';
  }

  std::vector<u64> optimal;
  for (const Verdict& v : rows) {
    if (v.optimal) optimal.push_back(v.e);
  }
  if (fmt == Format::json) {
    out << json{{"m", o.m}, {"rows", rows.size()}, {"optimal_e", optimal}, {"file", path.string()}, {"seed", o.seed}}
               .dump(2)
        << '\n';
  } else {
    out << "m = " << o.m << ": " << rows.size() << " even e checked, " << optimal.size() << " optimal\n";
    out << "optimal e:";
    for (u64 e : optimal) out << ' ' << e;
    out << "\nwritten to " << path.string() << "\nseed: " << o.seed << '\n';
  }
  return 0;
}

int cmd_factor(const Options& o, Format fmt, std::ostream& out) {
  if (o.expr.empty()) throw InputError("factor needs a polynomial (positional or --expr)");
  TritPoly p;
  try {
    p = parse_poly(o.expr, o.var);
  } catch (const ParseError& ex) {
    throw InputError(std::string("parse error: ") + ex.what() + "\n  " + o.expr + "\n  " +
                     std::string(ex.position(), ' ') + "^");
  }
  if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
  const Factorization f = factor(p, o.seed);
  if (fmt == Format::json) {
    json factors = json::array();
    for (const auto& [q, k] : f.factors) {
      factors.push_back({{"factor", render_poly(q, o.var)}, {"trits", to_trit_string(q)}, {"multiplicity", k}});
    }
    json degrees = json::object();
    for (auto [d, k] : f.degree_multiset()) degrees[std::to_string(d)] = k;
    out << json{{"input", render_poly(p, o.var)},
                {"unit", f.unit == 2 ? -1 : 1},
                {"factors", factors},
                {"degree_multiset", degrees},
                {"seed", f.seed}}
               .dump(2)
        << '\n';
  } else if (fmt == Format::csv) {
    out << "factor,multiplicity,degree\n";
    for (const auto& [q, k] : f.factors) out << render_poly(q, o.var) << ',' << k << ',' << q.degree() << '\n';
  } else {
    out << render_factorization(f, o.var) << '\n';
    out << "seed: " << f.seed << '\n';
  }
  return 0;
}

int cmd_reproduce(const Options& o, Format fmt, std::ostream& out) {
  const auto& targets = reproduce_targets();
  if (std::find(targets.begin(), targets.end(), o.target) == targets.end()) {
    throw InputError("unknown target '" + o.target + "'");
  }
  const std::vector<FixtureResult> res = reproduce(o.target, o.seed);
  bool all = true;
  json arr = json::array();
  for (const auto& r : res) {
    all = all && r.pass;
    if (fmt == Format::json) {
      arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << '\n';
    }
  }
  if (fmt == Format::json) {
    out << json{{"target", o.target}, {"pass", all}, {"fixtures", arr}, {"seed", o.seed}}.dump(2) << '\n';
  } else {
    out << (all ? "all " : "some ") << res.size() << " fixtures " << (all ? "passed" : "failed") << ", seed "
        << o.seed << '\n';
  }
  return all ? 0 : 1;
}

int cmd_bound(const Options& o, Format fmt, std::ostream& out) {
  if (o.n == 0 || o.k > o.n) throw InputError("bound needs n > 0 and 0 <= k <= n");
  const BoundResult b = sphere_packing_max_d(o.n, o.k);
  if (fmt == Format::json) {
    out << json{{"n", o.n}, {"k", o.k}, {"d", b.d}, {"degenerate", b.degenerate}, {"seed", o.seed}}.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    out << "n,k,d,degenerate\n" << o.n << ',' << o.k << ',' << b.d << ',' << (b.degenerate ? "true" : "false") << '\n';
  } else {
    out << "largest d allowed by sphere packing for [" << o.n << ", " << o.k << "]: " << b.d
        << (b.degenerate ? " (degenerate: k = n)" : "") << '\n';
  }
  return 0;
}

int cmd_case(const Options& o, Format fmt, std::ostream& out) {
  const auto& ids = case_ids();
  if (std::find(ids.begin(), ids.end(), o.case_id) == ids.end()) throw InputError("unknown case '" + o.case_id + "'");
  const CaseReport r = verify_case(o.case_id, o.seed);
  if (fmt == Format::json) {
    out << case_json(r).dump(2) << '\n';
  } else {
    out << "case " << r.case_id << '\n';
    if (r.f) out << "base map: (" << render_poly(*r.f, 't') << ")/(" << render_poly(*r.g, 't') << ")\n";
    for (std::size_t i = 0; i < r.chain.size(); ++i) {
      out << "  iterate " << i + 1 << ": degrees " << r.chain[i].num.degree() << "/" << r.chain[i].den.degree()
          << '\n';
    }
    out << "equation: " << render_poly(r.final_poly, r.var) << " = 0\n";
    out << "factors: " << render_factorization(r.factorization, r.var) << '\n';
    out << "degree multiset:";
    for (auto [d, k] : r.degree_multiset) out << ' ' << d << ':' << k;
    out << "\nroots in GF(3):";
    for (Trit a : r.base_field_roots) out << ' ' << (a == 2 ? -1 : a);
    out << "\ncertificate (" << r.certificate.admissible << "): " << (r.certificate.holds() ? "holds" : "FAILS")
        << "\nseed: " << o.seed << '\n';
  }
  return r.certificate.holds() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliEnv& env) {
  CLI::App app{"Ternary cyclic codes C(1,e): optimality checks, sweeps, factoring and reproduction suites"};
  app.name("ternary-codes");
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table, json or csv (default: table on a terminal, json otherwise)")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--seed", o.seed, "seed for randomized factor splitting")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "decide optimality of C(1,e) for one (m, e)");
  check->add_option("--m", o.m, "extension degree, 1..13")->required();
  check->add_option("--e", o.e, "exponent, 0..3^m-2")->required();
  check->add_flag("--solutions", o.solutions, "include solution logs in json output");
  common(check);

  auto* sw = app.add_subcommand("sweep", "classify every even e for one m");
  sw->add_option("--m", o.m, "extension degree, 1..13")->required();
  sw->add_option("--e-min", o.e_min, "smallest e");
  sw->add_option("--e-max", o.e_max, "largest e");
  sw->add_option("--workers", o.workers, "worker threads")->capture_default_str();
  sw->add_option("--out", o.out_path,
                 "result file (default: $TERNARY_CODES_OUT_DIR or the current directory, sweep-m<m>.csv)");
  sw->add_flag("--solutions", o.solutions, "include solution logs in json output");
  common(sw);

  auto* fac = app.add_subcommand("factor", "factor a polynomial over GF(3)");
  fac->footer(kGrammar);
  fac->add_option("poly", o.expr, "polynomial expression");
  fac->add_option("--expr", o.expr, "polynomial expression (same as the positional form)");
  fac->add_option("--var", o.var, "variable name")->capture_default_str();
  common(fac);

  auto* rep = app.add_subcommand("reproduce", "run a named regression suite");
  rep->add_option("--target", o.target, "suite name")
      ->check(CLI::IsMember(reproduce_targets()))
      ->capture_default_str();
  common(rep);

  auto* bnd = app.add_subcommand("bound", "sphere-packing ceiling on d for [n, k]");
  bnd->add_option("--n", o.n, "length")->required();
  bnd->add_option("--k", o.k, "dimension")->required();
  common(bnd);

  auto* cs = app.add_subcommand("case", "rebuild and certify one symbolic proof case");
  cs->add_option("--id", o.case_id, "case id")->required()->check(CLI::IsMember(case_ids()));
  common(cs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  const Format fmt = pick_format(o, env);
  try {
    if (*check) return cmd_check(o, fmt, out);
    if (*sw) return cmd_sweep(o, fmt, out, err, env);
    if (*fac) return cmd_factor(o, fmt, out);
    if (*rep) return cmd_reproduce(o, fmt, out);
    if (*bnd) return cmd_bound(o, fmt, out);
    if (*cs) return cmd_case(o, fmt, out);
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ternary
