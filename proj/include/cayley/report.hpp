#pragma once

// Verification report and its two serializations:
//   lines:  check_id TAB parameters TAB PASS|FAIL TAB witness   (parameters "1,2" or "-")
//   record: {"checks":[{"check_id":..,"parameters":[..],"status":"pass"|"fail","witness":..}],
//            "failed":N,"passed":bool,"total":N}

#include "cayley/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

enum class Status { kPass, kFail };

struct CheckResult {
  std::string check_id;
  std::vector<int> parameters;
  Status status = Status::kPass;
  /// Empty on Pass. On Fail: canonical text of the nonzero difference, or the offending value.
  std::string witness;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(CheckResult result) { checks.push_back(std::move(result)); }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::kFail; }));
  }

  bool passed() const { return failures() == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

namespace detail {

inline std::string join_parameters(const std::vector<int>& params) {
  if (params.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(params[k]);
  }
  return out;
}

inline std::vector<int> split_parameters(std::string_view text) {
  std::vector<int> params;
  if (text == "-") return params;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw Error(ErrorCode::kParseError, "bad parameter list '" + std::string(text) + "'");
    }
    params.push_back(value);
    start = end + 1;
  }
  return params;
}

}  // namespace detail

inline std::string to_lines(const VerificationReport& report) {
  std::string out;
  for (const CheckResult& c : report.checks) {
    out += c.check_id;
    out += '\t';
    out += detail::join_parameters(c.parameters);
    out += '\t';
    out += c.status == Status::kPass ? "PASS" : "FAIL";
    out += '\t';
    out += c.witness;
    out += '\n';
  }
  return out;
}

inline VerificationReport report_from_lines(std::string_view text) {
  VerificationReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) throw Error(ErrorCode::kParseError, "report line needs 4 fields: " + line);
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    fields.push_back(line.substr(start));
    CheckResult c;
    c.check_id = fields[0];
    c.parameters = detail::split_parameters(fields[1]);
    if (fields[2] == "PASS") {
      c.status = Status::kPass;
    } else if (fields[2] == "FAIL") {
      c.status = Status::kFail;
    } else {
      throw Error(ErrorCode::kParseError, "bad status '" + fields[2] + "'");
    }
    c.witness = fields[3];
    report.add(std::move(c));
  }
  return report;
}

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"check_id", c.check_id},
                      {"parameters", c.parameters},
                      {"status", c.status == Status::kPass ? "pass" : "fail"},
                      {"witness", c.witness}});
  }
  return {{"checks", checks},
          {"total", report.checks.size()},
          {"failed", report.failures()},
          {"passed", report.passed()}};
}

inline VerificationReport report_from_json(const nlohmann::json& doc) {
  VerificationReport report;
  try {
    for (const auto& item : doc.at("checks")) {
      CheckResult c;
      c.check_id = item.at("check_id").get<std::string>();
      c.parameters = item.at("parameters").get<std::vector<int>>();
      const auto status = item.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw Error(ErrorCode::kParseError, "bad status '" + status + "'");
      c.status = status == "pass" ? Status::kPass : Status::kFail;
      c.witness = item.at("witness").get<std::string>();
      report.add(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return report;
}

}  // namespace cayley
