#include "ydkit/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "ydkit/errors.hpp"
#include "ydkit/shellio.hpp"

namespace ydkit {

namespace {

struct InputArgs {
  std::string builtin_name;
  std::string path;
  unsigned field = 0;
  bool no_verify = false;
};

struct RunArgs {
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::int64_t max_den = kDefaultMaxDen;
  std::string json_out;
};

void add_input(CLI::App* sub, InputArgs& in) {
  sub->add_option("--builtin", in.builtin_name, "Builtin example: " + [] {
    std::string s;
    for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  sub->add_option("input", in.path, "HopfFileV1 JSON file");
  sub->add_option("--field", in.field, "Cyclotomic order of the working field");
  sub->add_flag("--no-verify", in.no_verify, "Skip axiom verification at load");
}

void add_run(CLI::App* sub, RunArgs& r) {
  r.seed_opt = sub->add_option("--seed", r.seed, "Seed for randomized splitting (overrides YDKIT_SEED)");
  sub->add_option("--max-den", r.max_den, "Denominator bound for root reconstruction")->check(CLI::PositiveNumber);
}

CatalogEntry load_input(const InputArgs& in, bool verify) {
  if (in.builtin_name.empty() == in.path.empty()) throw ParseError("give exactly one of --builtin <name> or an input file");
  if (!in.builtin_name.empty()) return builtin(in.builtin_name, in.field);
  return load_hopf_file(in.path, {verify, in.field});
}

std::uint64_t resolve_seed(const RunArgs& r) {
  if (r.seed_opt && r.seed_opt->count() > 0) return r.seed;
  if (const char* env = std::getenv("YDKIT_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("YDKIT_SEED is not an unsigned integer: " + std::string(s));
    return v;
  }
  return 0;
}

std::string witness_str(const std::vector<std::size_t>& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return "(" + s + ")";
}

void print_report(std::ostream& out, const std::string& title, const Report& r) {
  out << title << "\n";
  for (const auto& e : r.entries) {
    if (e.skipped)
      out << "  skip  " << e.id << "  " << e.detail << "\n";
    else if (e.informational)
      out << "  info  " << e.id << " = " << (e.passed ? "true" : "false") << "\n";
    else if (e.passed)
      out << "  pass  " << e.id << "\n";
    else
      out << "  FAIL  " << e.id << "  witness " << witness_str(e.witness) << (e.detail.empty() ? "" : "  " + e.detail)
          << "\n";
  }
}

QTPtr make_qt_ptr(const CatalogEntry& e, bool verify) {
  return std::make_shared<const QTHopf>(verify ? make_qt(e.hopf, e.R) : QTHopf(e.hopf, e.R));
}

SplitOptions split_options(const QTHopf& q, std::uint64_t seed, std::int64_t max_den) {
  SplitOptions o;
  o.seed = seed;
  o.max_den = max_den;
  o.field = q.hopf().field();
  return o;
}

int cmd_verify(const InputArgs& in, std::ostream& out) {
  const CatalogEntry e = load_input(in, false);
  const HopfAlgebra& h = e.hopf;
  out << e.name << ": dim " << h.dim() << ", field Q(zeta_" << h.field() << ")\n";
  SplitOptions o;
  o.field = h.field();
  const Report rh = verify_hopf(h, o);
  print_report(out, "Hopf axioms", rh);
  bool ok = rh.ok();
  if (!ok) return kExitVerify;
  QTHopf q;
  try {
    q = QTHopf(h, e.R);
  } catch (const VerifyError& err) {
    out << "R-matrix\n  FAIL  " << err.axiom << "  " << err.what() << "\n";
    return kExitVerify;
  }
  const Report rq = verify_qt(q);
  print_report(out, "R-matrix and transmutation", rq);
  const Report re = check_separable_idempotent(q);
  print_report(out, "separable idempotent e_R", re);
  const Report ri = check_integral_cocommutative(q);
  print_report(out, "integral cocommutativity", ri);
  ok = rq.ok() && re.ok() && ri.ok();
  out << (ok ? "all checks pass" : "checks failed") << "\n";
  return ok ? kExitOk : kExitVerify;
}

int cmd_classify(const InputArgs& in, const RunArgs& r, bool table_only, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(r);
  const CatalogEntry e = load_input(in, !in.no_verify);
  const QTPtr q = make_qt_ptr(e, !in.no_verify);
  const SplitOptions o = split_options(*q, seed, r.max_den);
  const Classification c = classify_all(q, o, e.name);
  out << format_table(c, e.hopf.names());
  if (table_only) return kExitOk;
  const RecordChecks checks = run_record_checks(*q, c, o);
  out << "checks: qybe " << to_string(checks.qybe) << ", e_R " << to_string(checks.e_R) << ", integral_cocomm "
      << to_string(checks.integral_cocomm) << ", h_simple " << to_string(checks.h_simple) << ", divisibility "
      << to_string(checks.divisibility) << ", dim_identity " << to_string(checks.dim_identity) << "\n";
  if (!r.json_out.empty()) {
    std::ofstream f(r.json_out);
    if (!f) throw Error("cannot write " + r.json_out);
    f << classification_record(c, e, checks, r.max_den).dump(2) << "\n";
  }
  return checks.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_crosscheck(const std::string& name, unsigned field, const RunArgs& r, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(r);
  const CatalogEntry e = builtin(name, field);
  if (!e.group) throw ParseError("'" + name + "' is not a group algebra");
  const QTPtr q = make_qt_ptr(e, true);
  const SplitOptions o = split_options(*q, seed, r.max_den);
  const Classification c = classify_all(q, o, e.name);
  const CrosscheckResult res = crosscheck_group(q, *e.group, c, o);
  out << e.name << ": pipeline vs centralizer construction, multisets "
      << (res.multisets_equal ? "equal" : "differ") << "\n";
  out << res.matched << "/" << res.total << " matched\n";
  return res.multisets_equal && res.matched == res.total ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of irreducible Yetter-Drinfeld modules", "ydkit"};
  app.require_subcommand(1);

  InputArgs vin, cin, tin;
  RunArgs crun, trun, xrun;
  auto* verify = app.add_subcommand("verify", "Check Hopf, R-matrix and transmutation identities");
  add_input(verify, vin);
  auto* classify = app.add_subcommand("classify", "Classify irreducible YD modules and run the checks");
  add_input(classify, cin);
  add_run(classify, crun);
  classify->add_option("--json", crun.json_out, "Write a ClassificationRecordV1 file");
  auto* table = app.add_subcommand("table", "Print the classification table only");
  add_input(table, tin);
  add_run(table, trun);
  std::string xname;
  unsigned xfield = 0;
  auto* cross = app.add_subcommand("crosscheck-group", "Compare with the centralizer construction for a group algebra");
  cross->add_option("builtin", xname, "Builtin group algebra")->required();
  cross->add_option("--field", xfield, "Cyclotomic order of the working field");
  add_run(cross, xrun);
  std::string ename, epath;
  unsigned efield = 0;
  auto* exp = app.add_subcommand("export", "Write a builtin as HopfFileV1");
  exp->add_option("builtin", ename, "Builtin name")->required();
  exp->add_option("path", epath, "Output file")->required();
  exp->add_option("--field", efield, "Cyclotomic order of the working field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*verify) return cmd_verify(vin, out);
    if (*classify) return cmd_classify(cin, crun, false, out);
    if (*table) return cmd_classify(tin, trun, true, out);
    if (*cross) return cmd_crosscheck(xname, xfield, xrun, out);
    if (*exp) {
      export_hopf_file(builtin(ename, efield), epath);
      out << "wrote " << epath << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VerifyError& e) {
    err << "verification failed: " << e.axiom << " witness " << witness_str(e.witness) << ": " << e.what() << "\n";
    return kExitVerify;
  } catch (const FieldNotSplitting& e) {
    err << "field does not split: " << e.what() << "\n";
    return kExitFieldNotSplitting;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.axiom << " witness " << witness_str(e.witness) << ": " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitParse;
}

}  // namespace ydkit
