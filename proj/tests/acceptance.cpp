// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "ydkit/cli.hpp"
#include "ydkit/errors.hpp"
#include "ydkit/shellio.hpp"

using namespace ydkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

QTPtr qt_of(const std::string& name, unsigned field = 0) {
  const CatalogEntry e = builtin(name, field);
  return std::make_shared<const QTHopf>(make_qt(e.hopf, e.R));
}

SplitOptions opts_for(const QTHopf& t, std::uint64_t seed = 0) {
  SplitOptions o;
  o.seed = seed;
  o.field = t.hopf().field();
  return o;
}

Cyc q(long a, long b = 1) { return Cyc(mpq_class(a, b)); }

Vec h8(std::initializer_list<std::pair<std::size_t, Cyc>> terms) {
  Vec v(8);
  for (const auto& [k, c] : terms) v[k] = c;
  return v;
}

Subspace span8(const std::vector<Vec>& vs) { return Subspace::span(8, vs); }

std::vector<std::size_t> dims_of(const BlockRecord& b) {
  std::vector<std::size_t> d;
  for (const auto& m : b.modules) d.push_back(m.dim_V);
  std::sort(d.begin(), d.end());
  return d;
}

std::multiset<std::pair<std::size_t, std::size_t>> block_dims(const Classification& c) {
  std::multiset<std::pair<std::size_t, std::size_t>> s;
  for (const auto& b : c.blocks)
    for (const auto& m : b.modules) s.insert({b.D.dim(), m.dim_V});
  return s;
}

bool same_modules(const Classification& a, const Classification& b) {
  std::vector<const YDModule*> rest;
  for (const auto& blk : b.blocks)
    for (const auto& m : blk.modules) rest.push_back(&m.module);
  if (rest.size() != a.count()) return false;
  for (const auto& blk : a.blocks)
    for (const auto& m : blk.modules) {
      auto it = std::find_if(rest.begin(), rest.end(), [&](const YDModule* w) {
        return w->dim == m.module.dim && yd_hom_dim(m.module, *w) != 0;
      });
      if (it == rest.end()) return false;
      rest.erase(it);
    }
  return true;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

Outcome criterion1() {
  Outcome o;
  const char* argv[] = {"ydkit", "classify", "--builtin", "h8"};
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = run_cli(4, argv, out, err);
  const double dt = seconds_since(t0);
  o.require(code == kExitOk, "classify exit code " + std::to_string(code));
  o.require(out.str().find("h8: 22 irreducible") != std::string::npos, "CLI did not report 22 modules");
  o.require(dt < 60.0, "CLI took " + std::to_string(dt) + " s");

  const QTPtr t = qt_of("h8");
  const Classification c = classify_all(t, opts_for(*t), "h8");
  std::multiset<std::vector<std::size_t>> rows;
  std::multiset<std::size_t> nd;
  for (const auto& b : c.blocks) {
    rows.insert(dims_of(b));
    nd.insert(b.dim_N);
  }
  o.require(c.count() == 22, "count " + std::to_string(c.count()));
  o.require(rows == std::multiset<std::vector<std::size_t>>{{1, 1, 1, 1, 2}, {1, 1, 1, 1, 2}, {2, 2, 2, 2}, {2, 2, 2, 2},
                                                            {2, 2, 2, 2}},
            "per-block dimension lists differ");
  o.require(nd == std::multiset<std::size_t>{8, 8, 4, 4, 4}, "N_W dims differ");
  if (o.ok) {
    std::string rs;
    for (const auto& b : c.blocks) rs += (rs.empty() ? "" : " ") + std::string("(") + join(dims_of(b)) + ")";
    o.detail = "22 modules " + rs + ", CLI " + std::to_string(dt).substr(0, 5) + " s";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const CatalogEntry e = builtin("h8");
  const QTPtr t = qt_of("h8");
  const SplitOptions so = opts_for(*t);
  const Cyc I = Cyc::zeta(4), half = q(1, 2);
  const Vec g1 = h8({{4, half * (q(1) + I)}, {6, half * (q(1) - I)}});
  const Vec g2 = h8({{5, half * (q(1) - I)}, {7, half * (q(1) + I)}});

  const auto gr = grouplikes(t->coalgebra_R(), &e.hopf.algebra(), so);
  o.require(gr.size() == 8, "|G(H_R)| = " + std::to_string(gr.size()));
  o.require(std::any_of(gr.begin(), gr.end(), [&](const Grouplike& g) { return g.g == g1; }), "g1 not in G(H_R)");

  std::vector<Vec> zg;
  for (const auto& g : grouplikes(e.hopf.coalgebra(), &e.hopf.algebra(), so))
    if (g.central) zg.push_back(g.g);
  o.require(zg == std::vector<Vec>{unit_vec(8, 0), unit_vec(8, 3)}, "ZG is not {1, xy}");

  const Subspace dx = span8({unit_vec(8, 1), unit_vec(8, 2)});
  const Subspace dg = span8({g1, g2});
  bool seen_x = false, seen_g = false;
  for (const auto& b : decompose_H(*t, so)) {
    if (b.space != dx && b.space != dg) continue;
    const auto ws = simple_coideals(*t, b, so);
    const StableAlgebra N = build_NW(*t, b, ws.front());
    if (b.space == dx) {
      seen_x = true;
      o.require(ws.front().space == span8({unit_vec(8, 1)}), "first coideal of {x,y} is not kx");
      o.require(N.carrier == span8({unit_vec(8, 0), unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 3)}),
                "N_kx != span{1,x,y,xy}");
    } else {
      seen_g = true;
      o.require(ws.front().space == span8({g1}), "first coideal of {g1,g2} is not kg1");
      o.require(N.carrier == span8({unit_vec(8, 0), unit_vec(8, 3), h8({{4, q(1)}, {5, I}}), h8({{6, I}, {7, q(1)}})}),
                "N_kg1 != span{1, xy, z+ixz, iyz+xyz}");
    }
  }
  o.require(seen_x && seen_g, "blocks k{x,y} or k{g1,g2} missing");

  const auto one = one_dim_yd(t, so);
  o.require(one.size() == 8, "one-dim YD count " + std::to_string(one.size()));
  const Classification c = classify_all(t, so);
  std::size_t ones = 0;
  for (const auto& b : c.blocks)
    for (const auto& m : b.modules) ones += m.dim_V == 1;
  o.require(ones == 8, "classification has " + std::to_string(ones) + " one-dim modules");
  if (o.ok) o.detail = "|G(H_R)| = 8 with g1, ZG = {1, xy}, N_kx and N_kg1 exact, 8 one-dim modules";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const QTPtr t = qt_of("h8");
  const Classification c = classify_all(t, opts_for(*t));
  std::size_t s = 0;
  for (const auto& b : c.blocks)
    for (const auto& m : b.modules) s += m.module.dim * m.module.dim;
  o.require(s == 64, "sum = " + std::to_string(s));
  o.require(c.dim_square_sum() == s, "dim_square_sum disagrees");
  if (o.ok) o.detail = "sum of (dim V)^2 = 64 from module matrices";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::string det;
  for (const char* name : {"z2", "z3", "z4", "z5", "z6", "s3", "d4", "q8"}) {
    const auto t0 = Clock::now();
    const CatalogEntry e = builtin(name);
    const QTPtr t = qt_of(name);
    const Classification c = classify_all(t, opts_for(*t), name);
    const CrosscheckResult r = crosscheck_group(t, *e.group, c, opts_for(*t));
    const double dt = seconds_since(t0);
    o.require(r.multisets_equal && r.matched == r.total,
              std::string(name) + ": " + std::to_string(r.matched) + "/" + std::to_string(r.total));
    if (std::string(name) == "s3") {
      std::multiset<std::size_t> dims;
      for (const auto& b : c.blocks)
        for (const auto& m : b.modules) dims.insert(m.dim_V);
      o.require(dims == std::multiset<std::size_t>{1, 1, 2, 2, 2, 2, 3, 3}, "S3 dims differ");
    }
    if (std::string(name) == "q8") o.require(dt < 300.0, "Q8 took " + std::to_string(dt) + " s");
    det += std::string(det.empty() ? "" : ", ") + name + " " + std::to_string(r.matched) + "/" +
           std::to_string(r.total);
  }
  if (o.ok) o.detail = det;
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t triples = 0;
  for (const auto& name : builtin_names()) {
    const QTPtr t = qt_of(name);
    const SplitOptions so = opts_for(*t);
    for (const auto& d : decompose_H(*t, so)) {
      const auto ws = simple_coideals(*t, d, so);
      for (const auto& w : ws)
        for (const auto& w2 : ws) {
          const StableAlgebra N = build_NW(*t, d, w, w2);
          ++triples;
          o.require(N.dim() * d.dim() == t->dim() * w.dim() * w2.dim(), name + ": dimension identity fails");
        }
    }
  }
  if (o.ok) o.detail = std::to_string(triples) + " (D, W, W') triples over " + std::to_string(builtin_names().size()) +
                       " catalog entries";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : builtin_names()) {
    const QTPtr t = qt_of(name);
    const Classification c = classify_all(t, opts_for(*t), name);
    o.require(check_divisibility(c, t->dim()).ok(), name + ": divisibility report fails");
    for (const auto& b : c.blocks)
      for (const auto& m : b.modules) {
        ++checked;
        o.require(b.dim_N % (m.dim_U * b.W.dim()) == 0, name + ": dim U dim W does not divide dim N_W");
        o.require(t->dim() % m.dim_V == 0, name + ": dim V does not divide dim H");
      }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (U, W, V) triples";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<std::string> ids = {"QYBE",           "S_S",           "S_id",     "deltaR_coassoc",
                                        "deltaR_counit",  "eqc",           "eR_part1", "eR_part2",
                                        "integral_cocomm"};
  for (const auto& name : builtin_names()) {
    const QTPtr t = qt_of(name);
    std::vector<Report> reps = {verify_qt(*t), check_separable_idempotent(*t), check_integral_cocommutative(*t)};
    for (const auto& r : reps) o.require(r.ok(), name + ": " + (r.first_failure() ? r.first_failure()->id : ""));
    for (const auto& id : ids) {
      const CheckEntry* e = nullptr;
      for (const auto& r : reps)
        if (!e) e = r.find(id);
      o.require(e && e->passed && !e->skipped, name + ": " + id + " missing, skipped or failed");
    }
  }
  if (o.ok) o.detail = std::to_string(ids.size()) + " identities on " + std::to_string(builtin_names().size()) + " entries";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& name : builtin_names()) {
    const QTPtr t = qt_of(name);
    const SplitOptions so = opts_for(*t);
    for (const auto& d : decompose_H(*t, so))
      for (const auto& w : simple_coideals(*t, d, so)) {
        ++count;
        o.require(check_H_simple(build_NW(*t, d, w), so).ok(), name + ": N_W not H-simple");
      }
  }
  if (o.ok) o.detail = std::to_string(count) + " algebras N_W";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const char* name : {"h8", "s3", "d4"}) {
    const QTPtr t = qt_of(name);
    const Classification a = classify_all(t, opts_for(*t));
    const Classification b = classify_all(t, opts_for(*t), {}, std::vector<std::size_t>(16, 1));
    const Classification s = classify_all(t, opts_for(*t, 7));
    o.require(block_dims(a) == block_dims(b) && same_modules(a, b), std::string(name) + ": coideal choice changes output");
    o.require(block_dims(a) == block_dims(s) && same_modules(a, s), std::string(name) + ": seed changes output");
  }
  for (const auto& name : builtin_names()) {
    const CatalogEntry e = builtin(name);
    const CatalogEntry back = load_hopf_text(export_hopf(e));
    o.require(back.hopf == e.hopf && back.R == e.R && input_digest(back) == input_digest(e), name + ": round trip");
  }

  std::size_t controls = 0;
  {
    // kZ3 with Delta(g) = g (x) g + (1 - g) (x) (1 - g^2).
    Json j = hopf_to_json(builtin("z3"));
    for (const auto& [a, b, c] : {std::tuple{0, 0, "1"}, {0, 2, "-1"}, {1, 0, "-1"}, {1, 2, "1"}})
      j["comult"].push_back({1, a, b, c});
    try {
      hopf_from_json(j);
      o.require(false, "broken coassociativity accepted");
    } catch (const VerifyError& err) {
      o.require(err.axiom == "coassoc" && !err.witness.empty(), "coassoc control: " + err.axiom);
      ++controls;
    }
  }
  {
    const CatalogEntry e = builtin("s3");
    const QTPtr t = qt_of("s3");
    std::vector<Mat> left;
    for (std::size_t i = 0; i < 6; ++i) left.push_back(e.hopf.algebra().left_basis(i));
    const Report r = verify_yd(YDModule::from_coaction(t, left, YDModule::regular(t).coaction));
    const CheckEntry* yd = r.find("yd_compat");
    o.require(yd && !yd->passed && yd->witness.size() == 2, "yd_compat control did not fire");
    ++controls;
  }
  {
    const QTPtr t = qt_of("h8");
    const SplitOptions so = opts_for(*t);
    for (const auto& d : decompose_H(*t, so)) {
      if (d.dim() != 2 || d.space != span8({unit_vec(8, 1), unit_vec(8, 2)})) continue;
      StableAlgebra N = build_NW(*t, d, simple_coideals(*t, d, so).front());
      for (std::size_t a = 0; a < 8; ++a) N.coaction[a] = t->hopf().unit()[a] * Mat::identity(N.dim());
      const Report r = check_H_simple(N, so);
      const CheckEntry* h = r.find("H_simple");
      o.require(h && !h->passed && h->witness.size() == 1, "H_simple control did not fire");
      ++controls;
    }
    Classification c = classify_all(t, so);
    c.blocks[0].modules[0].dim_V = 3;
    const CheckEntry* dv = check_divisibility(c, 8).find("dimV_divides_dimH");
    o.require(dv && !dv->passed && dv->witness.size() == 2, "divisibility control did not fire");
    ++controls;
  }
  if (o.ok) o.detail = "coideal choice and seeds agree, " + std::to_string(builtin_names().size()) + " round trips, " +
                       std::to_string(controls) + " negative controls fired with witnesses";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"H8 classification", criterion1},
      {"H8 structural facts", criterion2},
      {"completeness sum", criterion3},
      {"group algebra oracle", criterion4},
      {"dimension identity", criterion5},
      {"divisibility", criterion6},
      {"braided identity suite", criterion7},
      {"H-simplicity of N_W", criterion8},
      {"property suites", criterion9},
  };
  const auto start = Clock::now();
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << k + 1 << "  " << criteria[k].first << "  [" << secs << "]  "
              << o.detail << std::endl;
    failed += !o.ok;
  }
  const double total = seconds_since(start);
  const bool in_time = total < 900.0;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", total);
  std::cout << (failed == 0 && in_time ? "PASS" : "FAIL") << "  all  " << criteria.size() - failed << "/"
            << criteria.size() << " criteria  [" << secs << "]" << std::endl;
  return failed == 0 && in_time ? 0 : 1;
}
