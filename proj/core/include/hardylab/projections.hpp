#pragma once

#include <span>
#include <vector>

#include "hardylab/fourier.hpp"
#include "hardylab/mixed_poly.hpp"
#include "hardylab/polar_grid.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

/// Bergman projection of z^a conj(z)^b: ((a-b+1)/(a+1)) z^{a-b} when a >= b,
/// zero otherwise.
TaylorPoly bergman_project_monomial(int a, int b);

/// Closed-form route: sums the monomial rule over the terms of f.
TaylorPoly bergman_project(const MixedPoly& f);

/// Quadrature route: coefficient n is (n+1) <f, z^n> in L^2(dA/pi), n <= max_degree.
/// Throws std::invalid_argument if max_degree exceeds grid.max_degree().
TaylorPoly bergman_project(std::span<const cplx> node_values, const PolarGrid& grid, int max_degree);

/// Fourier truncation to frequencies 0..n. Requires n < M/2.
TaylorPoly truncated_projection(const BoundarySamples& f, int n);

/// Keeps the frequencies 0..M/2-1.
TaylorPoly szego_project(const BoundarySamples& f);

/// f - szego_project(f), which carries only negative frequencies.
BoundarySamples szego_coproject(const BoundarySamples& f);

/// csc(pi / p), the L^p operator norm of the Szego projection.
double szego_norm_bound(double p);

struct SzegoNormCheck {
  double max_ratio = 0.0;
  double bound = 0.0;
  bool ok = false;
};
SzegoNormCheck szego_norm_check(std::span<const BoundarySamples> corpus, double p);

}  // namespace hardylab
