#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gauss/totient.hpp"

namespace gauss {

/// One assertion of a verification suite. Boolean checks are encoded as 0/1.
struct SuiteCase {
  std::string id;
  std::string check;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool pass = false;
};

struct Skipped {
  std::string id;
  std::string reason;
};

struct SuiteResult {
  std::string suite_id;
  std::vector<SuiteCase> cases;
  std::vector<std::string> discrepancy_notes;
  std::vector<Skipped> skipped;

  void add(std::string id, std::string check, std::int64_t expected, std::int64_t actual) {
    cases.push_back({std::move(id), std::move(check), expected, actual, expected == actual});
  }

  bool all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
  }
};

/// One CSV row of a scan.
struct ScanRow {
  std::string id;
  std::uint64_t order = 0;
  std::uint64_t phi = 0;
  std::uint64_t s_value = 0;
  std::uint64_t subgroup_count = 0;
  bool nilpotent = false;
  bool cyclic = false;
  bool in_class_c = false;
};

struct ScanResult {
  std::uint64_t scanned = 0;
  std::vector<std::string> class_c_members;
  std::vector<std::string> conjecture6_violations;
  std::vector<std::string> inequality_failures;
  std::vector<Skipped> skipped;
  std::vector<ScanRow> rows;
};

inline nlohmann::json to_json(const GaussSummary& s) {
  nlohmann::json j;
  j["group_order"] = s.group_order;
  j["phi"] = s.phi;
  j["s_value"] = s.s_value;
  j["cyclic_sum"] = s.cyclic_sum;
  j["in_class_c"] = s.in_class_c;
  j["subgroup_count"] = s.subgroup_count;
  return j;
}

inline nlohmann::json to_json(const std::vector<Skipped>& skipped) {
  auto arr = nlohmann::json::array();
  for (const auto& s : skipped) arr.push_back({{"id", s.id}, {"reason", s.reason}});
  return arr;
}

inline nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j;
  j["suite_id"] = r.suite_id;
  j["all_pass"] = r.all_pass();
  auto cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"id", c.id}, {"check", c.check}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  j["cases"] = std::move(cases);
  j["discrepancy_notes"] = r.discrepancy_notes;
  j["skipped"] = to_json(r.skipped);
  return j;
}

inline nlohmann::json to_json(const ScanRow& row) {
  return {{"id", row.id},
          {"order", row.order},
          {"phi", row.phi},
          {"s_value", row.s_value},
          {"subgroup_count", row.subgroup_count},
          {"nilpotent", row.nilpotent},
          {"cyclic", row.cyclic},
          {"in_class_c", row.in_class_c}};
}

inline nlohmann::json to_json(const ScanResult& r) {
  nlohmann::json j;
  j["scanned"] = r.scanned;
  j["class_c_members"] = r.class_c_members;
  j["conjecture6_violations"] = r.conjecture6_violations;
  j["inequality_failures"] = r.inequality_failures;
  j["skipped"] = to_json(r.skipped);
  auto rows = nlohmann::json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  j["rows"] = std::move(rows);
  return j;
}

/// Compact JSON with sorted keys and a trailing newline.
template <typename T>
std::string render_json(const T& value) {
  return to_json(value).dump() + "\n";
}

inline constexpr const char* kCsvHeader = "id,order,phi,s_value,subgroup_count,nilpotent,cyclic,in_class_c";

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const ScanRow& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << csv_field(r.id) << ',' << r.order << ',' << r.phi << ',' << r.s_value << ',' << r.subgroup_count << ','
     << b(r.nilpotent) << ',' << b(r.cyclic) << ',' << b(r.in_class_c);
  return os.str();
}

inline std::string render_csv(const ScanResult& r) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : r.rows) out += csv_row(row) + "\n";
  return out;
}

}  // namespace gauss
