#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardylab/mixed_poly.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

inline constexpr int kSchemaVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FourierTerm {
  int n = 0;
  cplx c{0.0};
  friend bool operator==(const FourierTerm&, const FourierTerm&) = default;
};

/// Inputs of an experiment. `family` selects how they are produced:
///   seeded        corpus drawn from the experiment seed (count, max_degree)
///   coefficients  one analytic polynomial
///   terms         one z, zbar polynomial
///   fourier       one trigonometric polynomial
///   one, z, one_plus_half_z, zbar, two_cos   named single inputs
struct KernelSpec {
  std::string family = "seeded";
  std::vector<cplx> coefficients;
  std::vector<MixedTerm> terms;
  std::vector<FourierTerm> fourier;
  int count = 10;
  int max_degree = 3;
  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

/// Zero fields mean "experiment default".
struct GridSpec {
  std::uint64_t m = 0;  // boundary nodes
  int radial = 0;
  int theta = 0;
  double r_min = -1.0;  // cone truncation; negative: default
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  std::string experiment;
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> delta;
  std::string space = "both";  // bergman, hardy or both
  KernelSpec kernel;
  GridSpec grid;
  int degree_cap = -1;
  double tol = 0.0;        // solver tolerance; 0: solver default
  double tolerance = 0.0;  // acceptance tolerance; 0: experiment default
  int samples = 0;         // corpus size; 0: experiment default
  int max_exponent = 10;
  std::uint64_t seed = 7;
  std::string output_dir = ".";
  std::string basename;    // empty: experiment name
  std::string ledger_path; // empty: build a ledger in-process
  int ledger_samples = 200;
  unsigned threads = 0;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Defaults for a named experiment (exponents, corpus sizes, tolerances).
ExperimentConfig default_config(const std::string& experiment);

/// Parses a config. Fields absent from the document keep the defaults of the
/// named experiment; unknown fields and a wrong schema_version are rejected.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config, int indent = 2);
ExperimentConfig load_config(const std::string& path);

struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> grid_m;
  std::optional<int> grid_r;
  std::optional<int> degree_cap;
  std::optional<double> tol;
  std::optional<std::string> output_dir;
};
void apply_overrides(ExperimentConfig& config, const ConfigOverrides& o);

std::vector<std::string> experiment_names();

}  // namespace hardylab
