#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hardylab/config.hpp"
#include "hardylab/experiments.hpp"
#include "hardylab/report.hpp"

using namespace hardylab;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

fs::path g_out = "acceptance_out";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Timed {
  RunResult result;
  double seconds = 0.0;
};

Timed run(ExperimentConfig cfg, const std::string& subdir = "") {
  cfg.output_dir = (g_out / subdir).string();
  const auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.result = run_experiment(cfg);
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

bool has(const ReportRow& r, const std::string& s) { return r.kernel_id.find(s) != std::string::npos; }

double worst(const Report& rep, const std::function<bool(const ReportRow&)>& pick,
             const std::function<double(const ReportRow&)>& value) {
  double w = 0.0;
  for (const auto& r : rep.rows)
    if (pick(r)) w = std::max(w, value(r));
  return w;
}

size_t count(const Report& rep, const std::function<bool(const ReportRow&)>& pick) {
  return static_cast<size_t>(std::count_if(rep.rows.begin(), rep.rows.end(), pick));
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Verdict base_verdict(const Timed& t) {
  if (!t.result.error.empty()) return {false, "error: " + t.result.error};
  if (t.result.exit_code != 0) return {false, std::to_string(t.result.report.failures().size()) + " failing rows"};
  return {true, ""};
}

auto any = [](const ReportRow&) { return true; };
auto lhs_of = [](const ReportRow& r) { return r.lhs; };
auto drift = [](const ReportRow& r) { return std::abs(r.ratio - 1.0); };

Verdict monomial_projection() {
  auto cfg = default_config("monomial-projection");
  cfg.max_exponent = 10;
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const double err = worst(rep, any, lhs_of);
  v.ok = v.ok && rep.rows.size() == 121 && err < 1e-8 && t.seconds < 10.0;
  v.detail += fmt("121 monomials, max error %.2e, %.1f s", err, t.seconds);
  return v;
}

Verdict cone_geometry() {
  auto cfg = default_config("cone-geometry");
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const auto is_const = [](const ReportRow& r) { return has(r, "constant-field"); };
  const double e1 = worst(rep, is_const, [](const ReportRow& r) { return std::abs(r.lhs - r.rhs); });
  const double e2 = worst(rep, [](const ReportRow& r) { return has(r, "F=z^2"); },
                          [](const ReportRow& r) { return std::abs(r.lhs - r.rhs); });
  v.ok = v.ok && count(rep, is_const) == 64 && e1 < 1e-8 && e2 < 1e-6;
  v.detail += fmt("64 angles, constant-field error %.2e, z^2 error %.2e", e1, e2);
  return v;
}

Verdict calderon_sweep() {
  const auto t = run(default_config("calderon-sweep"));
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const auto up = [](const ReportRow& r) { return has(r, "/upper"); };
  const auto lo = [](const ReportRow& r) { return has(r, "/lower"); };
  const double du = worst(rep, up, drift), dl = worst(rep, lo, drift);
  v.ok = v.ok && count(rep, up) == 50 * 3 * 3 && count(rep, lo) > 0 && du < 0.02 && dl < 0.02 && t.seconds < 300.0;
  v.detail += fmt("max drift upper %.2f%%, lower %.2f%%, %.0f s", 100 * du, 100 * dl, t.seconds);
  return v;
}

Verdict hilbert() {
  auto cfg = default_config("hilbert");
  cfg.kernel.count = 20;
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const auto co = [](const ReportRow& r) { return has(r, "/coefficients"); };
  const auto re = [](const ReportRow& r) { return has(r, "/residual"); };
  const double ec = worst(rep, co, lhs_of), er = worst(rep, re, lhs_of);
  v.ok = v.ok && count(rep, co) == 40 && ec < 1e-6 && er < 1e-8;
  v.detail += fmt("20 kernels x 2 spaces, coefficient error %.2e, residual %.2e", ec, er);
  return v;
}

Verdict optimality() {
  auto cfg = default_config("optimality");
  cfg.kernel.count = 10;
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const auto re = [](const ReportRow& r) { return has(r, "/residual"); };
  const double er = worst(rep, re, lhs_of);
  v.ok = v.ok && count(rep, re) == 40 && er < 1e-3;
  v.detail += fmt("p in {4/3, 4}, 10 kernels x 2 spaces, max residual %.2e", er);
  return v;
}

Verdict duality() {
  auto cfg = default_config("duality");
  cfg.kernel.count = 10;
  cfg.p = {4.0};
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const double gap = worst(rep, [](const ReportRow& r) { return has(r, "/gap"); },
                           [](const ReportRow& r) { return r.diagnostics.at("relative_gap"); });
  const double kr = worst(rep, [](const ReportRow& r) { return has(r, "/kernel-residual"); }, lhs_of);
  const double hs = worst(rep, [](const ReportRow& r) { return has(r, "/holder-proportionality"); }, lhs_of);
  v.ok = v.ok && count(rep, [](const ReportRow& r) { return has(r, "/gap"); }) == 10 && gap < 1e-4 && kr < 1e-3 &&
         hs < 1e-4;
  v.detail += fmt("max gap %.2e, kernel residual %.2e, Holder spread %.2e", gap, kr, hs);
  return v;
}

Verdict green_identity() {
  const auto t = run(default_config("green-identity"));
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const double e = worst(rep, any, [](const ReportRow& r) { return r.diagnostics.at("relative_error"); });
  v.ok = v.ok && rep.rows.size() == 20 && e < 1e-6;
  v.detail += fmt("10 pairs x p in {3, 4}, max relative error %.2e", e);
  return v;
}

Verdict bpinhardy() {
  const auto t = run(default_config("bpinhardy"));
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const auto mx = [](const ReportRow& r) { return r.kernel_id == "corpus-max"; };
  const auto anti = [](const ReportRow& r) { return r.kernel_id.rfind("zbar", 0) == 0 || has(r, "*zbar"); };
  const double d = worst(rep, mx, drift);
  const double zl = worst(rep, anti, lhs_of);
  v.ok = v.ok && count(rep, mx) == 3 && count(rep, anti) > 0 && d < 0.02 && zl == 0.0;
  v.detail += fmt("corpus max drift %.3f%%, zbar-only lhs %.1g", 100 * d, zl);
  return v;
}

Verdict p2_bound() {
  auto cfg = default_config("p2-bound");
  cfg.kernel.count = 10;
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const double e = worst(rep, any, drift);
  const double ct = worst(rep, any, [](const ReportRow& r) { return std::abs(r.diagnostics.at("ctilde")); });
  v.ok = v.ok && rep.rows.size() == 30 && e < 1e-6 && ct == 0.0;
  v.detail += fmt("10 kernels x 3 q, max relative defect %.2e, ctilde %.1g", e, ct);
  return v;
}

Verdict best_approx() {
  auto cfg = default_config("best-approx");
  cfg.samples = 20;
  const auto t = run(cfg);
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const auto sm = [](const ReportRow& r) { return has(r, "/szego-match"); };
  const auto di = [](const ReportRow& r) { return has(r, "/distance"); };
  const double e2 = worst(rep, sm, lhs_of);
  const double e4 = worst(rep, di, [](const ReportRow& r) { return std::abs(r.lhs - r.rhs); });
  v.ok = v.ok && count(rep, sm) == 20 && count(rep, di) == 20 && e2 < 1e-8 && e4 < 1e-4;
  v.detail += fmt("p=2 Szego match %.2e, p=4 distance agreement %.2e", e2, e4);
  return v;
}

Verdict szego_norm() {
  const auto t = run(default_config("szego-norm"));
  auto v = base_verdict(t);
  const auto& rep = t.result.report;
  const double ex = worst(rep, any, [](const ReportRow& r) { return r.lhs - r.rhs; });
  v.ok = v.ok && rep.rows.size() == 3 && ex <= 1e-8;
  v.detail += fmt("max (ratio - csc(pi/p)) %.3f", ex);
  return v;
}

Verdict determinism() {
  std::vector<std::string> names{"monomial-projection", "cone-geometry", "hilbert", "duality", "green-identity",
                                 "szego-norm", "p2-bound", "calderon-sweep"};
  std::string bad;
  for (const auto& n : names) {
    const auto a = run(default_config(n), "rerun-a");
    const auto b = run(default_config(n), "rerun-b");
    if (!a.result.error.empty() || !b.result.error.empty() || slurp(a.result.csv_path) != slurp(b.result.csv_path) ||
        slurp(a.result.csv_path).empty())
      bad += " " + n;
  }
  return {bad.empty(), bad.empty() ? std::to_string(names.size()) + " experiments byte-identical" : "differs:" + bad};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--out") g_out = argv[i + 1];
  fs::create_directories(g_out);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"monomial projection oracle", monomial_projection},
      {"cone geometry", cone_geometry},
      {"Calderon sweep", calderon_sweep},
      {"Hilbert closed forms", hilbert},
      {"optimality certificates", optimality},
      {"duality", duality},
      {"Green identity", green_identity},
      {"projection bound corpus", bpinhardy},
      {"p=2 end-to-end bound", p2_bound},
      {"best approximation", best_approx},
      {"Szego norm", szego_norm},
      {"determinism", determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.ok) ++failed;
    std::printf("criterion %2zu %-28s %s  %s\n", i + 1, criteria[i].first.c_str(), v.ok ? "PASS" : "FAIL",
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
