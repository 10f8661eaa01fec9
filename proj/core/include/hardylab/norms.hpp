#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hardylab/fourier.hpp"
#include "hardylab/polar_grid.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

/// Radial profile of integral means M_p(r, f) and their supremum.
struct NormReport {
  double p = 0.0;
  std::vector<double> radii;
  std::vector<double> means;
  double norm_estimate = 0.0;
};

/// Conjugate exponent p / (p - 1).
double conjugate_exponent(double p);

/// (mean_j |v_j|^p)^{1/p} over uniformly weighted samples.
double mean_norm(std::span<const cplx> values, double p);
double mean_norm(std::span<const double> values, double p);
/// L^p norm of boundary samples for d theta / 2 pi.
inline double boundary_norm(const BoundarySamples& f, double p) { return mean_norm(f.values(), p); }

/// Trapezoid approximation of M_p(r, f). m = 0 selects default_grid_size.
double integral_mean(const TaylorPoly& f, double r, double p, size_t m = 0);

/// H^p norm with its radial profile on `n_radii` equispaced radii in [0, 1].
/// For polynomials the supremum is attained at r = 1.
NormReport hardy_norm(const TaylorPoly& f, double p, size_t m = 0, int n_radii = 50);

/// (integral |v|^p dA/pi)^{1/p} for values sampled at the grid nodes.
double disc_norm(std::span<const cplx> node_values, double p, const PolarGrid& grid);
double bergman_norm(const TaylorPoly& f, double p, const PolarGrid& grid);

/// Values of f at all grid nodes, in grid index order.
std::vector<cplx> sample_on_grid(const TaylorPoly& f, const PolarGrid& grid);

/// |v|^{p-2} v, i.e. F^{p/2} conj(F)^{p/2 - 1} without branch cuts. Zero at
/// v == 0.
cplx lift_value(cplx v, double p);
std::vector<cplx> nonlinear_lift(std::span<const cplx> values, double p);
BoundarySamples nonlinear_lift(const TaylorPoly& F, double p, size_t m);
std::vector<cplx> nonlinear_lift(const TaylorPoly& F, double p, const PolarGrid& grid);

/// ||h||_{A^{2p}} <= ||h||_{H^p}.
struct IsoperimetricCheck {
  double a_norm = 0.0;
  double h_norm = 0.0;
  bool ok = false;
};
IsoperimetricCheck check_isoperimetric(const TaylorPoly& h, double p, const PolarGrid& grid);

}  // namespace hardylab
