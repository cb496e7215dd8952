#pragma once

// Verification reports: one record per check, two output formats.
//
// The structured format is the key/value tree read by parse_tree, with a
// fixed field order and every number printed as %.17e:
//
//   report:
//     suite: all
//     version: 0.1.0
//     seed: 42
//     ...
//     checks:
//       check:
//         name: core.completeness
//         anchor: completeness
//         status: pass
//         expected_fail: false
//         tolerance: 1.00000000000000006e-09
//         values:
//           max_deviation: 2.22044604925031308e-16

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gpt::cli {

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  /// Concept label the check verifies ("D2", "no-signaling", ...).
  std::string anchor;
  Status status = Status::error;
  std::vector<std::pair<std::string, double>> values;
  double tolerance = 0.0;
  bool expected_fail = false;
  std::string message;
  double wall_ms = -1.0;  // negative when timing is off

  /// Passes the gate: a pass, or a non-pass that was expected.
  bool ok() const { return expected_fail ? status != Status::pass : status == Status::pass; }
};

struct Report {
  std::string suite;
  std::string backend;
  int d = 0;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<CheckResult> checks;

  bool ok() const;
  int count(Status s) const;
  /// 0 iff every check passes the gate.
  int exit_code() const { return ok() ? 0 : 1; }
  /// Marks the named checks (exact names, or "prefix.*") as expected failures.
  void expect_fail(const std::set<std::string>& names);
};

enum class Format { text, structured };
Format parse_format(const std::string& s);

void emit_report(const Report& report, Format format, std::ostream& out);
std::string format_number(double x);

}  // namespace gpt::cli
