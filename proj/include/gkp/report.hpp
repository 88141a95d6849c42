#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gkp {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view s);
/// 16 hex digits of the FNV-1a hash of a canonical form.
std::string hash_hex(std::string_view s);

struct CaseResult {
  Json params;
  std::string status;  // pass | fail | skip
  std::string lhs_hash;
  std::string rhs_hash;
  std::optional<long> time_ms;
  std::optional<Json> diagnostic;  // {lhs, rhs} canonical forms on failure
};

struct Report {
  std::string suite;
  std::string version;
  Json config;
  std::vector<CaseResult> cases;

  int count(std::string_view status) const;
};

/// JSON schema:
/// {suite, version, config, cases:[{params, status, lhs_hash, rhs_hash,
///  time_ms?, diagnostic?}], summary:{pass, fail, skip}}.
/// Byte-deterministic for a fixed Report.
std::string emit_report_json(const Report& r);
std::string emit_report_markdown(const Report& r);

}  // namespace gkp
