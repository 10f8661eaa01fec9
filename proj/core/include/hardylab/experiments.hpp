#pragma once

#include <string>

#include "hardylab/config.hpp"
#include "hardylab/extremal.hpp"
#include "hardylab/ledger.hpp"
#include "hardylab/mixed_poly.hpp"
#include "hardylab/polar_grid.hpp"
#include "hardylab/report.hpp"

namespace hardylab {

/// ||P f||_{H^p} against ||S_z f||_p + ||f||_{L^{2p/(p+1)}(D)}.
struct BpinhardyRatio {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double sz_norm = 0.0;
  double disc_norm = 0.0;
};
BpinhardyRatio bpinhardy_ratio(const MixedPoly& f, double p, const PolarGrid& grid);

struct BoundCheck {
  Outcome outcome = Outcome::not_applicable;  // not_applicable when ctilde >= 1
  double ctilde = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// ||F||_{(p-1)q}^{p-1} <= ||k||_q / ((1 - ctilde) ||k||_{(H^p)*}) for the
/// Hardy extremal function F of k. At p = 2 no ledger is needed.
BoundCheck hardy_extremal_bound_check(const TaylorPoly& k, double p, double q, const ConstantsLedger* ledger,
                                      const ExtremalOptions& opt = {}, double rel_tol = 1e-8);

/// ||P_S f||_q >= (1 - ctilde) ||f||_q for f = |F|^{p-2} F on the circle.
BoundCheck szego_lower_bound_check(const TaylorPoly& F, double p, double q, const ConstantsLedger* ledger,
                                   size_t m = 0, double rel_tol = 1e-8);

/// Max over test points of |quadrature of f(w) / (1 - z conj(w))^2 dA/pi -
/// closed-form projection| for f = z^a conj(z)^b.
double monomial_kernel_error(int a, int b, const PolarGrid& grid);

/// Builds the report of one experiment without touching the filesystem.
Report build_report(const ExperimentConfig& config);

struct RunResult {
  Report report;
  std::string csv_path;
  std::string json_path;
  std::string failure_path;  // empty on success
  std::string error;
  int exit_code = 0;
};

/// build_report plus the CSV/JSON files in config.output_dir. On failure the
/// exit code is nonzero and a failure record is written next to them.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace hardylab
