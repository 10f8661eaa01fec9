#include "hardylab/report.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace hardylab {

using nlohmann::ordered_json;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "true";
    case Outcome::fail:
      return "false";
    case Outcome::not_applicable:
      return "na";
  }
  return "na";
}

bool Report::passed() const { return failures().empty(); }

std::vector<size_t> Report::failures() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].pass == Outcome::fail) out.push_back(i);
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return {};
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_header() { return "experiment,p,q,kernel_id,lhs,rhs,ratio,tolerance,pass,grid_M,grid_R,seed\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

ordered_json row_json(const ReportRow& r) {
  ordered_json j;
  j["experiment"] = r.experiment;
  j["p"] = number(r.p);
  j["q"] = number(r.q);
  j["kernel_id"] = r.kernel_id;
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["ratio"] = number(r.ratio);
  j["tolerance"] = number(r.tolerance);
  j["pass"] = to_string(r.pass);
  j["grid_M"] = r.grid_m;
  j["grid_R"] = r.grid_r;
  j["seed"] = r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.diagnostics.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : r.diagnostics) d[k] = number(v);
    j["diagnostics"] = d;
  }
  if (!r.series.empty()) {
    ordered_json s = ordered_json::object();
    for (const auto& [k, v] : r.series) {
      ordered_json arr = ordered_json::array();
      for (double x : v) arr.push_back(number(x));
      s[k] = arr;
    }
    j["series"] = s;
  }
  return j;
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out = csv_header();
  for (const auto& r : report.rows) {
    out += csv_field(r.experiment) + ',' + format_number(r.p) + ',' + format_number(r.q) + ',' +
           csv_field(r.kernel_id) + ',' + format_number(r.lhs) + ',' + format_number(r.rhs) + ',' +
           format_number(r.ratio) + ',' + format_number(r.tolerance) + ',' + to_string(r.pass) + ',' +
           std::to_string(r.grid_m) + ',' + std::to_string(r.grid_r) + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::string to_json(const Report& report, int indent) {
  ordered_json j;
  j["experiment"] = report.config.experiment;
  j["passed"] = report.passed();
  j["seed"] = report.config.seed;
  j["grid"] = {{"m", report.config.grid.m},
               {"radial", report.config.grid.radial},
               {"theta", report.config.grid.theta},
               {"r_min", report.config.grid.r_min}};
  j["ledger_conditional"] = report.ledger_conditional;
  j["config"] = ordered_json::parse(config_to_json(report.config));
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : report.metadata) meta[k] = v;
  j["metadata"] = meta;
  j["rows"] = ordered_json::array();
  for (const auto& r : report.rows) j["rows"].push_back(row_json(r));
  j["ledger"] = report.ledger ? ordered_json::parse(report.ledger->to_json()) : ordered_json(nullptr);
  return j.dump(indent);
}

std::string failure_record(const Report& report, const std::string& error) {
  ordered_json j;
  j["experiment"] = report.config.experiment;
  j["seed"] = report.config.seed;
  j["status"] = "failed";
  if (!error.empty()) j["error"] = error;
  j["failed_rows"] = ordered_json::array();
  for (size_t i : report.failures()) {
    auto row = row_json(report.rows[i]);
    row["row_index"] = i;
    j["failed_rows"].push_back(row);
  }
  return j.dump(2);
}

}  // namespace hardylab
