#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/squarefn.hpp"

namespace hardylab {

class MissingLedgerEntry : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Empirical Calderon constants for one (p, delta) cell: suprema of the
/// ratios over a corpus, hence lower bounds for the true constants.
struct CalderonEstimate {
  double p = 0.0;
  double delta = 0.0;
  double upper = 0.0;            // sup ||S(G)||_p / ||G||_p
  std::optional<double> lower;   // sup ||G||_p / ||S(G)||_p over F(0) = 0
  int samples = 0;
};

struct ScalarEstimate {
  double q = 0.0;
  double value = 0.0;
  int samples = 0;
};

class ConstantsLedger {
 public:
  static std::string key(double x);
  static std::string key(double p, double delta);

  void set_calderon(const CalderonEstimate& e);
  bool has_calderon(double p, double delta) const;
  const CalderonEstimate& calderon(double p, double delta) const;
  double calderon_upper(double p, double delta) const { return calderon(p, delta).upper; }
  double calderon_lower(double p, double delta) const;

  void set_ntmax(const ScalarEstimate& e);
  double ntmax(double q) const;
  void set_kappa(const ScalarEstimate& e);
  double kappa(double q) const;

  /// Norm of the Szego projection on L^p, csc(pi/p); exactly 1 at p = 2.
  static double szego(double p);

  const std::map<std::string, CalderonEstimate>& calderon_cells() const { return calderon_; }
  const std::map<std::string, ScalarEstimate>& ntmax_cells() const { return ntmax_; }
  const std::map<std::string, ScalarEstimate>& kappa_cells() const { return kappa_; }

  std::uint64_t seed = 0;
  int samples = 0;
  int max_degree = 0;
  CalderonGrid grid;
  std::vector<double> kappa_exponents;  // the p values the kappa estimate ranges over

  std::string to_json(int indent = 2) const;
  static ConstantsLedger from_json(const std::string& text);

  friend bool operator==(const ConstantsLedger& a, const ConstantsLedger& b);

 private:
  std::map<std::string, CalderonEstimate> calderon_;
  std::map<std::string, ScalarEstimate> ntmax_;
  std::map<std::string, ScalarEstimate> kappa_;
};

bool operator==(const CalderonEstimate& a, const CalderonEstimate& b);
bool operator==(const ScalarEstimate& a, const ScalarEstimate& b);

/// Calderon cells (exponent, delta) that assemble_ctilde(q, p) reads:
/// (q, p - 1), (q', 1) and (2q, (p - 1) / 2). Empty when p == 2.
std::vector<std::pair<double, double>> required_calderon_cells(double q, double p);

struct LedgerSpec {
  std::uint64_t seed = 20240611;
  int samples = 200;
  int max_degree = 16;
  CalderonGrid grid{32, 256, 0.1};
  /// (q, p) pairs whose assembled constant the ledger must support.
  std::vector<std::pair<double, double>> targets{{2.0, 1.9}, {2.0, 1.95}, {2.0, 2.05}, {2.0, 2.1}, {2.0, 4.0}};
  std::vector<double> kappa_exponents{3.0, 4.0};
  ConeSampling ntmax_sampling{32, 9};
  int ntmax_theta = 128;
  unsigned threads = 0;
};

/// Corpus estimates for every constant the targets need. Item i of each
/// corpus depends only on (seed, i), so enlarging `samples` never lowers an
/// estimate.
ConstantsLedger build_ledger(const LedgerSpec& spec);

/// s_{q'} [ p|p-2|/(p-1) k_q + |p-2|/(4(p-1)) C_{q,p-1} C_{q',1}
///          + m_{q'} p|p-2|/(2(p-1)) C_{2q,(p-1)/2}^2 ], and exactly 0 at p = 2.
double assemble_ctilde(double q, double p, const ConstantsLedger& ledger);

}  // namespace hardylab
