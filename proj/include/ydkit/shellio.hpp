#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ydkit/catalog.hpp"
#include "ydkit/ydclass.hpp"

namespace ydkit {

using Json = nlohmann::json;

/// HopfFileV1: sparse structure constants with exact coefficient strings.
Json hopf_to_json(const CatalogEntry& e);
std::string export_hopf(const CatalogEntry& e);
void export_hopf_file(const CatalogEntry& e, const std::string& path);

struct LoadOptions {
  bool verify = true;
  /// Nonzero overrides the cyclotomic order stored in the file.
  unsigned field = 0;
};

/// Throws ParseError naming the offending entry, or VerifyError with the first failed axiom.
CatalogEntry hopf_from_json(const Json& j, const LoadOptions& opts = {});
CatalogEntry load_hopf_text(const std::string& text, const LoadOptions& opts = {});
CatalogEntry load_hopf_file(const std::string& path, const LoadOptions& opts = {});

/// Lowercase hex SHA-256 of the canonical HopfFileV1 dump.
std::string input_digest(const CatalogEntry& e);
std::string sha256_hex(const std::string& bytes);

/// Outcome of one record-level check.
enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct RecordChecks {
  CheckStatus qybe = CheckStatus::Skipped;
  CheckStatus e_R = CheckStatus::Skipped;
  CheckStatus integral_cocomm = CheckStatus::Skipped;
  CheckStatus h_simple = CheckStatus::Skipped;
  CheckStatus divisibility = CheckStatus::Skipped;
  CheckStatus dim_identity = CheckStatus::Skipped;

  bool ok() const;
};

/// QYBE, e_R, integral cocommutativity, H-simplicity of every N_W, divisibility
/// and the dimension identity over all coideal pairs of every block.
RecordChecks run_record_checks(const QTHopf& q, const Classification& c, const SplitOptions& opts);

/// ClassificationRecordV1.
Json classification_record(const Classification& c, const CatalogEntry& input, const RecordChecks& checks,
                           std::int64_t max_den);

/// Human-readable coefficient: rationals as a/b, Q(i) as a+bi, otherwise sum c*E(n)^k.
std::string pretty(const Cyc& c);
/// Linear combination of named basis vectors.
std::string pretty_vector(const Vec& v, const std::vector<std::string>& names);
/// Aligned table: block | dim D | W | dim N_W | count | dims.
std::string format_table(const Classification& c, const std::vector<std::string>& names);

}  // namespace ydkit
