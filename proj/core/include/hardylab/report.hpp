#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/config.hpp"
#include "hardylab/ledger.hpp"

namespace hardylab {

enum class Outcome { pass, fail, not_applicable };
std::string to_string(Outcome o);

inline constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

/// One CSV row. NaN fields are written empty.
struct ReportRow {
  std::string experiment;
  double p = kNoValue;
  double q = kNoValue;
  std::string kernel_id;
  double lhs = kNoValue;
  double rhs = kNoValue;
  double ratio = kNoValue;
  double tolerance = kNoValue;
  Outcome pass = Outcome::pass;
  std::uint64_t grid_m = 0;
  int grid_r = 0;
  std::uint64_t seed = 0;
  /// JSON-only extras.
  std::map<std::string, double> diagnostics;
  std::map<std::string, std::vector<double>> series;
  std::string note;
};

struct Report {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::optional<ConstantsLedger> ledger;
  std::map<std::string, std::string> metadata;
  bool ledger_conditional = false;

  bool passed() const;
  std::vector<size_t> failures() const;
};

/// Shortest round-trip decimal form; empty for NaN.
std::string format_number(double x);

std::string csv_header();
std::string to_csv(const Report& report);
std::string to_json(const Report& report, int indent = 2);
/// Machine-readable record of the failed rows, or of an error message.
std::string failure_record(const Report& report, const std::string& error = {});

}  // namespace hardylab
