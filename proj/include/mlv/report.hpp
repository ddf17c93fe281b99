#pragma once

// Uniform result reporting for the CLI and the test drivers.
//
// A report is a command echo, a flat ordered config map, and a list of
// entries (one per identity/parameter point, or one per enumeration
// listing).  Rendering is deterministic: entries appear in evaluation
// order, parameters in insertion order, floats with 17 significant digits,
// exact values as canonical "p/q" strings, and no timestamps or other
// run-varying fields are ever emitted.

#include <string>
#include <utility>
#include <vector>

#include "mlv/exact.hpp"
#include "mlv/series.hpp"

namespace mlv {

enum class ReportFormat { text, json, csv };

// Accepts "text", "json", "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_format(const std::string& name);

struct ReportEntry {
  std::string name;
  std::string mode;  // "exact", "numeric", or "enum"
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  double residual = 0.0;
  double tail = 0.0;
  bool pass = true;
  std::vector<std::string> items;  // enumeration listings only

  static ReportEntry from(const IdentityCheckResult& r);
  static ReportEntry from(const NumericCheckResult& r);
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<ReportEntry> entries;

  int total() const { return static_cast<int>(entries.size()); }
  int passed() const;
  int failed() const { return total() - passed(); }

  // 0 when every entry passes, 1 otherwise; derived from pass flags only.
  int exit_code() const { return failed() == 0 ? 0 : 1; }

  std::string render(ReportFormat format) const;
};

}  // namespace mlv
