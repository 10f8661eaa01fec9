#pragma once

#include <optional>

#include "hardylab/extremal.hpp"
#include "hardylab/fourier.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

// Pairing conventions. The extremal solvers pair F against conj(k) for an
// analytic kernel k. The dual minimal-norm problem pairs F against a boundary
// function without conjugation:
//
//   max_{||F||_p = 1} Re (1/2pi) int F kd dtheta = min_{g in H_0^{p'}} ||kd - g||_{p'}.
//
// Only the nonpositive frequencies of kd reach the left side, and the two
// forms are related by kernel_n = conj(kd^_{-n}). conjugate_coefficients and
// extremal_form convert between them; nothing else in the library mixes the
// two conventions.

/// Dual-form boundary function conj(kernel(e^{i theta})) on m nodes.
BoundarySamples conjugate_coefficients(const TaylorPoly& kernel, size_t m);

/// Analytic kernel with coefficients conj(kd^_{-n}), n >= 0.
TaylorPoly extremal_form(const BoundarySamples& kd);

struct DualOptions {
  int degree_cap = -1;        // -1: 4 * bandwidth(k) + 32
  double tol = 1e-14;         // relative objective decrease that ends the iteration
  int max_iterations = 2000;
  double weight_floor = 1e-10;
};

/// Minimizer of ||k - g||_{p'} over polynomials g with g(0) = 0.
struct DualSolution {
  TaylorPoly g;
  double min_norm = 0.0;
  double gap = 0.0;              // filled by duality_gap
  double kernel_residual = 0.0;  // filled by duality_gap
  int iterations = 0;
  bool converged = false;
  int degree_cap = 0;
  double weight_floor = 0.0;
};

/// Damped iteratively reweighted least squares. The constant coefficient is
/// not a variable, so g(0) == 0 holds exactly.
DualSolution solve_dual_min(const BoundarySamples& k, double p_prime, const DualOptions& opt = {});

struct DualityReport {
  double primal = 0.0;  // extremal value from the Hardy solver
  double dual = 0.0;    // min ||kd - g||_{p'}
  double gap = 0.0;     // |primal - dual| / primal
  double kernel_residual = 0.0;
  double holder_spread = 0.0;
  ExtremalSolution primal_solution;
  DualSolution dual_solution;
};

/// Runs the Hardy extremal solver on extremal_form(kd) at exponent p and the
/// dual solver on kd at p', and compares their values.
DualityReport duality_gap(const BoundarySamples& kd, double p, const ExtremalOptions& primal_opt = {},
                          const DualOptions& dual_opt = {});
/// Same, for an analytic kernel given in the extremal (conjugate) convention.
/// Without an explicit primal degree cap, N starts at deg(k) + 32 and doubles
/// (up to 512) until the trailing coefficients of F fall below 1e-9 of the
/// largest; the dual cap follows N.
DualityReport duality_gap(const TaylorPoly& kernel, double p, const ExtremalOptions& primal_opt = {},
                          const DualOptions& dual_opt = {});

/// ||conj(kd - g) - lambda |F|^{p-2} F||_{p'} / ||kd - g||_{p'} on kd's grid.
double extremal_kernel_residual(const BoundarySamples& kd, const TaylorPoly& g, const TaylorPoly& F, double lambda,
                                double p);

/// Largest relative deviation of |kd - g|^{p'} / |F|^p from its mean, over
/// nodes where both |kd - g| and |F| exceed `threshold`.
double holder_spread(const BoundarySamples& kd, const TaylorPoly& g, const TaylorPoly& F, double p,
                     double threshold = 1e-8);

struct BestApproximation {
  TaylorPoly f;
  double distance = 0.0;  // ||f - k||_p
  DualSolution dual;
};

/// Nearest analytic polynomial to k in L^p: reduces to the dual problem for
/// z P_S^perp(k) and recovers f = g / z + P_S(k).
BestApproximation best_analytic_approx(const BoundarySamples& k, double p, const DualOptions& opt = {});

struct CrossNormReport {
  bool applicable = false;    // false when ctilde >= 1
  double f_norm_q = 0.0;
  double bound = 0.0;         // (2 + 1/(1 - ctilde)) s_q ||k||_q
  double tight_bound = 0.0;   // (1 + 1/(1 - ctilde)) s_q ||k||_q
  bool ok = false;
};
CrossNormReport cross_norm_report(const TaylorPoly& f, const BoundarySamples& k, double q, double ctilde);

}  // namespace hardylab
