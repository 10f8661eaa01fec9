#pragma once

// Newton-type ascent on the unit sphere of a discretized L^p norm over
// polynomials of bounded degree. Shared by the Bergman and Hardy solvers.

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "hardylab/taylor_poly.hpp"

namespace hardylab::detail {

struct DiscreteMeasure {
  std::vector<cplx> nodes;
  std::vector<double> weights;
  /// Nodes are e^{2 pi i j / m} with equal weights, which enables FFT assembly.
  bool uniform_circle = false;
};

/// Real Hessian [Re; Im] of sum_j alpha_j |d_j|^2 + Re(beta_j d_j^2), where
/// d_j = sum_{c < n} x_c z_j^{c + shift} on the uniform circle grid.
Eigen::MatrixXd circle_quadratic_form(std::span<const double> alpha, std::span<const cplx> beta, int n, int shift);

struct SphereAscentResult {
  Eigen::VectorXcd coeffs;  // unit norm
  double value = 0.0;       // Re sum a_n conj(c_n)
  int iterations = 0;
  bool converged = false;
  std::vector<double> residual_history;
  std::vector<double> objective_history;
};

/// Maximizes Re sum_n a_n conj(functional_n) subject to
/// (sum_j w_j |f(z_j)|^p)^{1/p} = 1, f = sum_n a_n z^n.
///
/// Iterates x with Re<x, c> = 1 and minimizes Phi(x) = (1/p) ||f_x||_p^p, which
/// is the same problem scaled by 1 / lambda. Each step solves the KKT system
/// of the quadratic model, backtracks until Armijo decrease holds, and
/// renormalizes to the sphere. `residual` evaluates the optimality defect of a
/// normalized iterate; iteration stops once it drops below tol.
SphereAscentResult sphere_ascent(const DiscreteMeasure& mu, const Eigen::VectorXcd& functional, double p,
                                 const Eigen::VectorXcd& initial, double tol, int max_iterations,
                                 const std::function<double(const Eigen::VectorXcd&, double)>& residual);

}  // namespace hardylab::detail
