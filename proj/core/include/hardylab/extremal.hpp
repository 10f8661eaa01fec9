#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardylab/polar_grid.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

enum class Space { bergman, hardy };
std::string to_string(Space s);
Space space_from_string(const std::string& s);

struct ExtremalOptions {
  int degree_cap = -1;       // -1: deg(k) + 32
  double tol = 1e-9;         // on the optimality residual
  int max_iterations = 200;
  int grid_r = 0;            // Bergman radial nodes; 0 picks 2N + 8
  int grid_theta = 0;        // Bergman angular nodes; 0 picks default_grid_size(N)
  size_t grid_m = 0;         // Hardy boundary nodes; 0 picks 2 * default_grid_size(N)
  std::optional<TaylorPoly> initial;  // defaults to k / ||k||_p
};

/// Output of the extremal-problem solvers.
struct ExtremalSolution {
  TaylorPoly F;              // unit norm in the problem's space
  double lambda = 0.0;       // Re <F, k>, which equals ||k|| in the dual space
  double residual = 0.0;     // optimality defect, see optimality_residual_*
  int iterations = 0;
  bool converged = false;
  int degree_cap = 0;
  int grid_r = 0;            // radial nodes (Bergman) or 0
  int grid_theta = 0;        // angular nodes (Bergman) or boundary nodes (Hardy)
  std::vector<double> residual_history;   // per accepted iterate, starting with the initial one
  std::vector<double> objective_history;  // Re <F, k> per accepted iterate
};

/// Maximizes Re (1/pi) int_D f conj(k) dA over polynomials f of degree <= N
/// with ||f||_{A^p} = 1.
ExtremalSolution solve_bergman_extremal(const TaylorPoly& k, double p, const ExtremalOptions& opt = {});

/// Maximizes Re (1/2pi) int f conj(k) dtheta over polynomials f of degree <= N
/// with ||f||_{H^p} = 1.
ExtremalSolution solve_hardy_extremal(const TaylorPoly& k, double p, const ExtremalOptions& opt = {});

ExtremalSolution solve_extremal(Space space, const TaylorPoly& k, double p, const ExtremalOptions& opt = {});

/// ||k - lambda P(|F|^{p-2} F)||_{A^{p'}} / ||k||_{A^{p'}}, with the Bergman
/// projection truncated at max_degree (-1: the grid's limit).
double optimality_residual_bergman(const TaylorPoly& F, const TaylorPoly& k, double lambda, double p,
                                   const PolarGrid& grid, int max_degree = -1);

/// ||k - lambda P_S(|F|^{p-2} F)||_{H^{p'}} / ||k||_{H^{p'}} on m boundary
/// nodes, with P_S truncated at max_degree (-1: keep all of 0..m/2-1).
double optimality_residual_hardy(const TaylorPoly& F, const TaylorPoly& k, double lambda, double p,
                                 size_t m = 0, int max_degree = -1);

/// Integral means of the extremal function at exponent (p-1) q.
struct RyabykhProfile {
  Space space = Space::bergman;
  double p = 0.0;
  double q = 0.0;
  double exponent = 0.0;  // (p - 1) q
  std::vector<double> radii;
  std::vector<double> means;
  ExtremalSolution solution;
};
RyabykhProfile ryabykh_profile(const TaylorPoly& k, double p, double q, Space space,
                               const ExtremalOptions& opt = {},
                               std::vector<double> radii = {0.5, 0.9, 0.99, 0.999});

}  // namespace hardylab
