#include "mlv/report.hpp"

#include <sstream>

#include "json.hpp"
#include "mlv/format.hpp"
#include "mlv/version.hpp"

namespace mlv {

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected text|json|csv)");
}

ReportEntry ReportEntry::from(const IdentityCheckResult& r) {
  ReportEntry e;
  e.name = r.identity;
  e.mode = "exact";
  e.params = r.params;
  e.lhs = r.lhs.str();
  e.rhs = r.rhs.str();
  e.residual = (r.lhs - r.rhs).abs().to_double();
  e.tail = 0.0;
  e.pass = r.pass;
  return e;
}

ReportEntry ReportEntry::from(const NumericCheckResult& r) {
  ReportEntry e;
  e.name = r.identity;
  e.mode = "numeric";
  e.params = r.params;
  e.lhs = format_complex(r.lhs);
  e.rhs = format_complex(r.rhs);
  e.residual = r.residual;
  e.tail = r.tail_allowance;
  e.pass = r.pass;
  return e;
}

int Report::passed() const {
  int count = 0;
  for (const ReportEntry& e : entries) count += e.pass ? 1 : 0;
  return count;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params,
                        const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += sep;
    out += params[i].first + "=" + params[i].second;
  }
  return out;
}

std::string render_text(const Report& rep) {
  std::ostringstream os;
  os << "mlv " << kVersion << " | " << rep.command << "\n";
  if (!rep.config.empty()) os << "config: " << join_params(rep.config, " ") << "\n";
  for (const ReportEntry& e : rep.entries) {
    os << (e.pass ? "[PASS] " : "[FAIL] ") << e.name;
    const std::string p = join_params(e.params, " ");
    if (!p.empty()) os << " " << p;
    if (e.mode != "enum") {
      os << " lhs=" << e.lhs << " rhs=" << e.rhs;
      if (e.mode == "numeric")
        os << " residual=" << format_double(e.residual)
           << " tail_est=" << format_double(e.tail);
    } else {
      os << " count=" << e.lhs << " expected=" << e.rhs;
    }
    os << "\n";
    for (const std::string& item : e.items) os << "  " << item << "\n";
  }
  os << "summary: total=" << rep.total() << " passed=" << rep.passed()
     << " failed=" << rep.failed() << "\n";
  return os.str();
}

std::string render_json(const Report& rep) {
  nlohmann::ordered_json root;
  root["version"] = std::string(kVersion);
  root["command"] = rep.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.config) config[k] = v;
  root["config"] = std::move(config);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const ReportEntry& e : rep.entries) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["mode"] = e.mode;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    je["params"] = std::move(params);
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    je["residual"] = format_double(e.residual);
    // Heuristic truncation-tail estimate; not a rigorous bound.
    je["tail_est"] = format_double(e.tail);
    je["pass"] = e.pass;
    if (!e.items.empty()) je["items"] = e.items;
    entries.push_back(std::move(je));
  }
  root["entries"] = std::move(entries);
  root["summary"] = {{"total", rep.total()},
                     {"passed", rep.passed()},
                     {"failed", rep.failed()}};
  return root.dump(2) + "\n";
}

std::string render_csv(const Report& rep) {
  std::ostringstream os;
  os << "name,mode,params,lhs,rhs,residual,tail_est,pass,items\n";
  for (const ReportEntry& e : rep.entries) {
    std::string items;
    for (std::size_t i = 0; i < e.items.size(); ++i) {
      if (i) items += ";";
      items += e.items[i];
    }
    os << csv_escape(e.name) << "," << csv_escape(e.mode) << ","
       << csv_escape(join_params(e.params, ";")) << "," << csv_escape(e.lhs) << ","
       << csv_escape(e.rhs) << "," << format_double(e.residual) << ","
       << format_double(e.tail) << "," << (e.pass ? "true" : "false") << ","
       << csv_escape(items) << "\n";
  }
  return os.str();
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  switch (format) {
    case ReportFormat::text:
      return render_text(*this);
    case ReportFormat::json:
      return render_json(*this);
    case ReportFormat::csv:
      return render_csv(*this);
  }
  return {};
}

}  // namespace mlv
