#include "ydkit/shellio.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ydkit/errors.hpp"

namespace ydkit {

namespace {

constexpr int kSchemaVersion = 1;

Json coeff_array(const Vec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

std::string where(const std::string& section, std::size_t idx, const Json& entry) {
  return section + "[" + std::to_string(idx) + "] = " + entry.dump();
}

Cyc parse_coeff(const Json& v, const std::string& ctx) {
  if (!v.is_string()) throw ParseError(ctx + ": coefficient must be a string");
  try {
    return Cyc::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

std::size_t parse_index(const Json& v, std::size_t dim, const std::string& ctx) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ParseError(ctx + ": index must be a non-negative integer");
  const auto i = v.get<std::uint64_t>();
  if (i >= dim) throw ParseError(ctx + ": index " + std::to_string(i) + " out of range for dim " + std::to_string(dim));
  return static_cast<std::size_t>(i);
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("HopfFileV1: missing field '") + key + "'");
  return j.at(key);
}

Vec parse_vector(const Json& j, const char* key, std::size_t dim) {
  const Json& a = field_of(j, key);
  if (!a.is_array() || a.size() != dim)
    throw ParseError(std::string("HopfFileV1: '") + key + "' must be an array of " + std::to_string(dim) + " coefficients");
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = parse_coeff(a[k], std::string(key) + "[" + std::to_string(k) + "]");
  return v;
}

CheckStatus status_of(const Report& r) {
  bool any = false;
  for (const auto& e : r.entries) {
    if (e.informational || e.skipped) continue;
    any = true;
    if (!e.passed) return CheckStatus::Fail;
  }
  return any ? CheckStatus::Pass : CheckStatus::Skipped;
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

Json hopf_to_json(const CatalogEntry& e) {
  const HopfAlgebra& h = e.hopf;
  const std::size_t n = h.dim();
  Json j;
  j["format"] = "HopfFileV1";
  j["schema_version"] = kSchemaVersion;
  j["name"] = e.name;
  j["field"] = {{"cyclotomic_order", h.field()}};
  j["dim"] = n;
  j["basis"] = h.names();
  Json mult = Json::array(), comult = Json::array(), r = Json::array(), s = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, c] : h.product_terms(a, b)) mult.push_back({a, b, k, c.str()});
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ab, c] : h.coproduct_terms(k)) comult.push_back({k, ab / n, ab % n, c.str()});
  for (const auto& [ab, c] : nonzeros(e.R)) r.push_back({ab / n, ab % n, c.str()});
  for (std::size_t row = 0; row < n; ++row) s.push_back(coeff_array(h.antipode().row(row)));
  j["mult"] = std::move(mult);
  j["comult"] = std::move(comult);
  j["unit"] = coeff_array(h.unit());
  j["counit"] = coeff_array(h.counit());
  j["antipode"] = std::move(s);
  j["R"] = std::move(r);
  return j;
}

std::string export_hopf(const CatalogEntry& e) { return hopf_to_json(e).dump(2) + "\n"; }

void export_hopf_file(const CatalogEntry& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << export_hopf(e);
  if (!out) throw Error("failed writing " + path);
}

CatalogEntry hopf_from_json(const Json& j, const LoadOptions& opts) {
  if (!j.is_object()) throw ParseError("HopfFileV1: top level must be an object");
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion)
    throw ParseError("HopfFileV1: unsupported schema_version " + j.at("schema_version").dump());
  const Json& dj = field_of(j, "dim");
  if (!dj.is_number_unsigned() || dj.get<std::uint64_t>() == 0) throw ParseError("HopfFileV1: 'dim' must be a positive integer");
  const std::size_t n = dj.get<std::size_t>();
  const Json& fj = field_of(j, "field");
  unsigned field = 1;
  if (fj.is_object() && fj.contains("cyclotomic_order") && fj.at("cyclotomic_order").is_number_unsigned())
    field = fj.at("cyclotomic_order").get<unsigned>();
  else
    throw ParseError("HopfFileV1: 'field' must be {\"cyclotomic_order\": n}");
  if (field == 0) throw ParseError("HopfFileV1: cyclotomic_order must be positive");
  if (opts.field) field = opts.field;

  std::vector<std::string> names;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != n) throw ParseError("HopfFileV1: 'basis' must list " + std::to_string(n) + " names");
    for (const auto& x : b) {
      if (!x.is_string()) throw ParseError("HopfFileV1: basis names must be strings");
      names.push_back(x.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) names.push_back("b" + std::to_string(k));
  }

  auto tensor_entries = [&](const char* key, std::size_t idx_count, std::vector<Vec>& out, std::size_t width) {
    const Json& a = field_of(j, key);
    if (!a.is_array()) throw ParseError(std::string("HopfFileV1: '") + key + "' must be an array");
    for (std::size_t t = 0; t < a.size(); ++t) {
      const Json& e = a[t];
      const std::string ctx = where(key, t, e);
      if (!e.is_array() || e.size() != idx_count + 1)
        throw ParseError(ctx + ": expected " + std::to_string(idx_count) + " indices and a coefficient");
      std::vector<std::size_t> ix;
      for (std::size_t k = 0; k < idx_count; ++k) ix.push_back(parse_index(e[k], n, ctx));
      const Cyc c = parse_coeff(e[idx_count], ctx);
      std::size_t slot = ix[1];
      for (std::size_t k = 2; k < idx_count; ++k) slot = slot * n + ix[k];
      auto& dst = out[ix[0]];
      if (dst.empty()) dst.assign(width, Cyc());
      dst[slot] += c;
    }
  };

  std::vector<Vec> mult3(n), comult(n);
  tensor_entries("mult", 3, mult3, n * n);
  tensor_entries("comult", 3, comult, n * n);
  std::vector<Vec> mult(n * n, Vec(n));
  for (std::size_t a = 0; a < n; ++a)
    if (!mult3[a].empty())
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k) mult[a * n + b][k] = mult3[a][b * n + k];
  for (auto& c : comult)
    if (c.empty()) c.assign(n * n, Cyc());

  const Vec unit = parse_vector(j, "unit", n);
  const Vec counit = parse_vector(j, "counit", n);
  const Json& sj = field_of(j, "antipode");
  if (!sj.is_array() || sj.size() != n) throw ParseError("HopfFileV1: 'antipode' must have " + std::to_string(n) + " rows");
  Mat s(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!sj[r].is_array() || sj[r].size() != n)
      throw ParseError("HopfFileV1: antipode row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      s(r, c) = parse_coeff(sj[r][c], "antipode[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  Vec R(n * n);
  const Json& rj = field_of(j, "R");
  if (!rj.is_array()) throw ParseError("HopfFileV1: 'R' must be an array");
  for (std::size_t t = 0; t < rj.size(); ++t) {
    const Json& e = rj[t];
    const std::string ctx = where("R", t, e);
    if (!e.is_array() || e.size() != 3) throw ParseError(ctx + ": expected [i, j, coefficient]");
    const std::size_t a = parse_index(e[0], n, ctx), b = parse_index(e[1], n, ctx);
    R[a * n + b] += parse_coeff(e[2], ctx);
  }

  CatalogEntry out;
  out.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : std::string("input");
  out.hopf = HopfAlgebra(std::move(names), field, std::move(mult), std::move(comult), unit, counit, s);
  out.R = std::move(R);
  if (opts.verify) {
    SplitOptions so;
    so.field = field;
    const Report r = verify_hopf(out.hopf, so);
    if (const CheckEntry* e = r.first_failure())
      throw VerifyError(e->id, e->witness, "Hopf axiom '" + e->id + "' fails");
    make_qt(out.hopf, out.R);
  }
  return out;
}

CatalogEntry load_hopf_text(const std::string& text, const LoadOptions& opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("HopfFileV1: ") + e.what());
  }
  return hopf_from_json(j, opts);
}

CatalogEntry load_hopf_file(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  CatalogEntry e = load_hopf_text(ss.str(), opts);
  if (e.name == "input") e.name = std::filesystem::path(path).stem().string();
  return e;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string input_digest(const CatalogEntry& e) { return sha256_hex(hopf_to_json(e).dump()); }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

bool RecordChecks::ok() const {
  for (CheckStatus s : {qybe, e_R, integral_cocomm, h_simple, divisibility, dim_identity})
    if (s == CheckStatus::Fail) return false;
  return true;
}

RecordChecks run_record_checks(const QTHopf& q, const Classification& c, const SplitOptions& opts) {
  RecordChecks rc;
  const Report qt = verify_qt(q);
  const CheckEntry* y = qt.find("QYBE");
  rc.qybe = y ? status_of(y->passed) : CheckStatus::Skipped;
  rc.e_R = status_of(check_separable_idempotent(q));
  rc.integral_cocomm = status_of(check_integral_cocommutative(q));

  bool simple = true, dims = true;
  for (const auto& b : c.blocks) {
    SplitOptions o = opts;
    o.field = b.split_field;
    const StableAlgebra N = build_NW(q, b.D, b.W);
    simple = simple && check_H_simple(N, o).ok();
    const auto ws = simple_coideals(q, b.D, o);
    for (const auto& w : ws)
      for (const auto& w2 : ws) {
        try {
          const StableAlgebra nww = build_NW(q, b.D, w, w2);
          dims = dims && nww.dim() * b.D.dim() == q.dim() * w.dim() * w2.dim();
        } catch (const DimensionMismatch&) {
          dims = false;
        }
      }
  }
  rc.h_simple = status_of(simple);
  rc.dim_identity = status_of(dims);
  rc.divisibility = status_of(check_divisibility(c, q.dim()));
  return rc;
}

Json classification_record(const Classification& c, const CatalogEntry& input, const RecordChecks& checks,
                           std::int64_t max_den) {
  Json j;
  j["format"] = "ClassificationRecordV1";
  j["schema_version"] = kSchemaVersion;
  j["name"] = c.name;
  j["input_digest"] = "sha256:" + input_digest(input);
  j["seed"] = c.seed;
  j["max_den"] = max_den;
  j["field"] = {{"cyclotomic_order", c.field}};
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    std::vector<std::size_t> dims;
    for (const auto& m : b.modules) dims.push_back(m.dim_V);
    std::sort(dims.begin(), dims.end());
    Json basis = Json::array();
    for (const auto& v : b.D.space.basis_vectors()) basis.push_back(coeff_array(v));
    blocks.push_back({{"block_dim", b.D.dim()},
                      {"block_basis", std::move(basis)},
                      {"coideal_dim", b.W.dim()},
                      {"coideal_basis", coeff_array(b.W.space.basis_vector(0))},
                      {"nw_dim", b.dim_N},
                      {"split_field", b.split_field},
                      {"irreducible_dims", dims},
                      {"count", b.modules.size()}});
  }
  j["blocks"] = std::move(blocks);
  j["totals"] = {{"count", c.count()}, {"sum_dim_sq", c.dim_square_sum()}};
  j["checks"] = {{"qybe", to_string(checks.qybe)},
                 {"e_R", to_string(checks.e_R)},
                 {"integral_cocomm", to_string(checks.integral_cocomm)},
                 {"h_simple", to_string(checks.h_simple)},
                 {"divisibility", to_string(checks.divisibility)},
                 {"dim_identity", to_string(checks.dim_identity)}};
  return j;
}

std::string pretty(const Cyc& c) {
  if (c.is_rational()) return rational_str(c.coords()[0]);
  const auto& co = c.coords();
  if (c.order() == 4) {
    std::string s;
    if (co[0] != 0) s = rational_str(co[0]);
    const mpq_class& b = co[1];
    if (!s.empty()) s += b < 0 ? "-" : "+";
    else if (b < 0) s += "-";
    const mpq_class ab = abs(b);
    if (ab != 1) s += rational_str(ab);
    return s + "i";
  }
  std::string s;
  for (std::size_t k = 0; k < co.size(); ++k) {
    if (co[k] == 0) continue;
    if (!s.empty()) s += co[k] < 0 ? "-" : "+";
    else if (co[k] < 0) s += "-";
    const mpq_class a = abs(co[k]);
    const std::string e = k == 0 ? "" : "E(" + std::to_string(c.order()) + ")" + (k == 1 ? "" : "^" + std::to_string(k));
    if (e.empty())
      s += rational_str(a);
    else
      s += (a == 1 ? "" : rational_str(a) + "*") + e;
  }
  return s;
}

std::string pretty_vector(const Vec& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = pretty(v[k]);
    const bool simple = v[k].is_rational() || c.find_first_of("+-", 1) == std::string::npos;
    bool neg = false;
    if (simple && c.front() == '-') {
      neg = true;
      c.erase(0, 1);
    }
    if (!simple) c = "(" + c + ")";
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    s += (c == "1" ? "" : c) + names[k];
  }
  return s.empty() ? "0" : s;
}

std::string format_table(const Classification& c, const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> rows{{"block", "dim D", "W", "dim N_W", "count", "dims"}};
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    const auto& b = c.blocks[i];
    std::vector<std::size_t> dims;
    for (const auto& m : b.modules) dims.push_back(m.dim_V);
    std::sort(dims.begin(), dims.end());
    std::string dl;
    for (std::size_t k = 0; k < dims.size(); ++k) dl += (k ? "," : "") + std::to_string(dims[k]);
    std::string w = "k(" + pretty_vector(b.W.space.basis_vector(0), names) + ")";
    if (b.W.dim() > 1) w = "dim " + std::to_string(b.W.dim()) + " coideal";
    rows.push_back({"D" + std::to_string(i + 1), std::to_string(b.D.dim()), w, std::to_string(b.dim_N),
                    std::to_string(b.modules.size()), dl});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  std::ostringstream os;
  os << c.name << ": " << c.count() << " irreducible Yetter-Drinfeld modules, seed " << c.seed << "\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) line += pad(r[k], width[k] + (k + 1 < r.size() ? 2 : 0));
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  os << "total " << c.count() << ", sum of (dim V)^2 = " << c.dim_square_sum() << "\n";
  return os.str();
}

}  // namespace ydkit
