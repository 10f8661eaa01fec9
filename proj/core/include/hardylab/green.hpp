#pragma once

#include "hardylab/polar_grid.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

// Closed forms for f = |F|^{p-2} F = F^{p/2} conj(F)^{p/2 - 1}, F analytic:
//   d_zbar f = (p/2 - 1) |F|^{p-4} F^2 conj(F')
//   Laplacian f = p (p - 2) |F|^{p-4} F |F'|^2
cplx lift_dzbar(const TaylorPoly& F, const TaylorPoly& dF, double p, cplx z);
cplx lift_laplacian(const TaylorPoly& F, const TaylorPoly& dF, double p, cplx z);
/// Laplacian of f h for analytic h: 4 h' d_zbar f + h Laplacian f.
cplx lift_times_analytic_laplacian(const TaylorPoly& F, const TaylorPoly& h, double p, cplx z);

/// Both sides of (1/2pi) int f h dtheta = (1/2pi) int_D Laplacian(f h) log(1/|z|) dA
/// for h(0) = 0.
struct GreenCheck {
  cplx lhs = 0.0;
  cplx rhs = 0.0;
  double rel_error = 0.0;  // |lhs - rhs| / (|lhs| + |rhs| + 1e-12)
};
GreenCheck green_identity_check(const TaylorPoly& F, const TaylorPoly& h, double p, const PolarGrid& grid,
                                size_t boundary_m = 1024);

/// (1/2pi) int_{|z| < radius} Laplacian(f h) log(1/|z|) dA by Gauss-Legendre
/// quadrature on the smaller disc.
cplx green_inner_term(const TaylorPoly& F, const TaylorPoly& h, double p, double radius = 0.25,
                      int n_radial = 48, int n_theta = 128);

}  // namespace hardylab
