#include "gpt/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gpt::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

void Report::expect_fail(const std::set<std::string>& names) {
  for (auto& c : checks)
    for (const auto& n : names) {
      const bool wildcard = n.size() >= 2 && n.ends_with(".*");
      if (n == c.name || (wildcard && c.name.starts_with(n.substr(0, n.size() - 1)))) c.expected_fail = true;
    }
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "structured") return Format::structured;
  throw std::invalid_argument("unknown format '" + s + "' (expected text or structured)");
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

namespace {

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void emit_structured(const Report& r, std::ostream& out) {
  out << "report:\n"
      << "  suite: " << r.suite << "\n"
      << "  version: " << r.version << "\n"
      << "  seed: " << r.seed << "\n"
      << "  backend: " << r.backend << "\n"
      << "  d: " << r.d << "\n"
      << "  summary:\n"
      << "    total: " << r.checks.size() << "\n"
      << "    passed: " << r.count(Status::pass) << "\n"
      << "    failed: " << r.count(Status::fail) << "\n"
      << "    errors: " << r.count(Status::error) << "\n"
      << "    ok: " << (r.ok() ? "true" : "false") << "\n"
      << "  checks:\n";
  for (const auto& c : r.checks) {
    out << "    check:\n"
        << "      name: " << c.name << "\n"
        << "      anchor: " << c.anchor << "\n"
        << "      status: " << to_string(c.status) << "\n"
        << "      expected_fail: " << (c.expected_fail ? "true" : "false") << "\n"
        << "      tolerance: " << format_number(c.tolerance) << "\n";
    if (!c.message.empty()) out << "      message: " << c.message << "\n";
    if (c.wall_ms >= 0) out << "      wall_ms: " << format_number(c.wall_ms) << "\n";
    if (!c.values.empty()) {
      out << "      values:\n";
      for (const auto& [k, v] : c.values) out << "        " << k << ": " << format_number(v) << "\n";
    }
  }
}

void emit_text(const Report& r, std::ostream& out) {
  out << "suite " << r.suite << "  backend " << r.backend << "  d " << r.d << "  seed " << r.seed << "  version "
      << r.version << "\n";
  std::size_t wname = 5, wanchor = 6;
  for (const auto& c : r.checks) {
    wname = std::max(wname, c.name.size());
    wanchor = std::max(wanchor, c.anchor.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  out << pad("status", 8) << "  " << pad("check", wname) << "  " << pad("anchor", wanchor) << "  " << pad("tol", 8)
      << "  values\n";
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    if (c.expected_fail) status += c.ok() ? "(x)" : "(!)";
    std::string vals;
    for (const auto& [k, v] : c.values) vals += (vals.empty() ? "" : " ") + k + "=" + short_number(v);
    if (!c.message.empty()) vals += (vals.empty() ? "" : "  ") + std::string("# ") + c.message;
    if (c.wall_ms >= 0) vals += "  [" + short_number(c.wall_ms) + " ms]";
    out << pad(status, 8) << "  " << pad(c.name, wname) << "  " << pad(c.anchor, wanchor) << "  "
        << pad(short_number(c.tolerance), 8) << "  " << vals << "\n";
  }
  out << r.checks.size() << " checks: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
      << r.count(Status::error) << " error; " << (r.ok() ? "OK" : "NOT OK") << "\n";
}

}  // namespace

void emit_report(const Report& report, Format format, std::ostream& out) {
  if (format == Format::structured)
    emit_structured(report, out);
  else
    emit_text(report, out);
}

}  // namespace gpt::cli
