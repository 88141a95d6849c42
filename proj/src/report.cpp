#include "gkp/report.hpp"

namespace gkp {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

int Report::count(std::string_view status) const {
  int n = 0;
  for (const auto& c : cases)
    if (c.status == status) ++n;
  return n;
}

std::string emit_report_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  j["config"] = r.config;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["params"] = c.params;
    cj["status"] = c.status;
    cj["lhs_hash"] = c.lhs_hash;
    cj["rhs_hash"] = c.rhs_hash;
    if (c.time_ms) cj["time_ms"] = *c.time_ms;
    if (c.diagnostic) cj["diagnostic"] = *c.diagnostic;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["summary"] = Json{{"pass", r.count("pass")},
                      {"fail", r.count("fail")},
                      {"skip", r.count("skip")}};
  return j.dump(2) + "\n";
}

std::string emit_report_markdown(const Report& r) {
  std::string out;
  out += "# Suite: " + r.suite + "\n\n";
  out += "Config: `" + r.config.dump() + "`\n\n";
  out += "| params | status | lhs_hash | rhs_hash |\n";
  out += "|---|---|---|---|\n";
  for (const auto& c : r.cases) {
    out += "| `" + c.params.dump() + "` | " + c.status + " | " + c.lhs_hash +
           " | " + c.rhs_hash + " |\n";
  }
  out += "\nSummary: pass=" + std::to_string(r.count("pass")) +
         " fail=" + std::to_string(r.count("fail")) +
         " skip=" + std::to_string(r.count("skip")) + "\n";
  return out;
}

}  // namespace gkp
