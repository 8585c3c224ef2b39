#pragma once

// Reports: the command echo, verdicts, structured data and text lines,
// written as text or as versioned JSON.

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverforge/report.hpp"

namespace coverforge::cli {

inline constexpr const char* report_schema = "coverforge-report/1";

enum class Format { text, json };

struct Report {
  std::string command;
  std::vector<Verdict> verdicts;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> lines;
  double seconds = 0;

  void line(std::string s) { lines.push_back(std::move(s)); }

  /// A failing verdict must name its witness, an inconclusive one its bound.
  void add(Verdict v) {
    if (v.status == Status::fail && v.witness.empty())
      throw std::logic_error("verdict '" + v.id + "' fails without a witness");
    if (v.status == Status::inconclusive && !v.bound)
      throw std::logic_error("verdict '" + v.id + "' is inconclusive without a bound");
    verdicts.push_back(std::move(v));
  }
  void pass(std::string id, std::string detail) { add({std::move(id), Status::pass, std::move(detail), {}, {}}); }
  void fail(std::string id, std::string detail, std::string witness) {
    add({std::move(id), Status::fail, std::move(detail), std::move(witness), {}});
  }
  void inconclusive(std::string id, std::string detail, long bound) {
    add({std::move(id), Status::inconclusive, std::move(detail), {}, bound});
  }
  /// pass when ok, otherwise fail with `witness`.
  void check(std::string id, bool ok, std::string detail, std::string witness) {
    if (ok) pass(std::move(id), std::move(detail));
    else fail(std::move(id), std::move(detail), std::move(witness));
  }

  Status status() const { return overall(verdicts); }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = report_schema;
  j["command"] = r.command;
  j["status"] = to_string(r.status());
  auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::ordered_json e;
    e["id"] = v.id;
    e["status"] = to_string(v.status);
    e["detail"] = v.detail;
    if (!v.witness.empty()) e["witness"] = v.witness;
    if (v.bound) e["bound"] = *v.bound;
    vs.push_back(std::move(e));
  }
  j["data"] = r.data;
  j["timing"] = {{"seconds", r.seconds}};
  return j;
}

inline void write_report(const Report& r, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << "$ " << r.command << '\n';
  for (const auto& l : r.lines) out << l << '\n';
  if (!r.verdicts.empty()) out << '\n';
  for (const auto& v : r.verdicts) {
    out << to_string(v.status) << "  " << v.id;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << '\n';
    if (!v.witness.empty()) out << "    witness: " << v.witness << '\n';
    if (v.bound) out << "    bound: " << *v.bound << '\n';
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
  out << "status: " << to_string(r.status()) << " (" << buf << " s)\n";
}

/// 0 unless a check failed; inconclusive counts as failing under --strict.
inline int exit_code(const Report& r, bool strict) {
  Status s = r.status();
  if (s == Status::fail) return 1;
  if (s == Status::inconclusive && strict) return 1;
  return 0;
}

}  // namespace coverforge::cli
