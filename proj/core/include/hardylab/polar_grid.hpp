#pragma once

#include <cstddef>
#include <vector>

#include "hardylab/taylor_poly.hpp"

namespace hardylab {

/// Gauss-Legendre nodes and weights on [lo, hi], nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n, double lo = 0.0, double hi = 1.0);

/// Tensor quadrature on the annulus inner < |z| < outer (default the unit
/// disc): Gauss-Legendre in r times the uniform rule in theta.
///
/// area_weight() integrates against the normalized measure dA/pi, so summing
/// area weights over the unit disc gives 1. radial_weight() is the bare
/// Gauss-Legendre weight, for integrals in (r, phi) coordinates.
class PolarGrid {
 public:
  PolarGrid(int n_radial, int n_theta, double outer = 1.0, double inner = 0.0);

  int n_radial() const { return static_cast<int>(r_.size()); }
  int n_theta() const { return n_theta_; }
  size_t size() const { return r_.size() * static_cast<size_t>(n_theta_); }
  double outer_radius() const { return outer_; }
  double inner_radius() const { return inner_; }

  double r(int i) const { return r_[i]; }
  double radial_weight(int i) const { return wr_[i]; }
  double theta(int j) const;
  /// Weight of node (i, j) for the measure dA/pi.
  double area_weight(int i) const { return area_[i]; }
  cplx node(int i, int j) const;
  size_t index(int i, int j) const { return static_cast<size_t>(i) * n_theta_ + j; }

  /// All nodes in index order.
  std::vector<cplx> nodes() const;
  std::vector<double> area_weights() const;
  /// Highest monomial degree whose Bergman coefficient the grid resolves
  /// exactly: min(n_theta/2 - 1, n_radial - 1).
  int max_degree() const;

  static PolarGrid default_grid() { return PolarGrid(64, 128); }

  /// Composite rule: n_per_panel Gauss-Legendre nodes on each interval
  /// between consecutive breaks (ascending, within [0, 1]).
  static PolarGrid panels(const std::vector<double>& breaks, int n_per_panel, int n_theta);

 private:
  PolarGrid(std::vector<double> r, std::vector<double> wr, int n_theta);

  std::vector<double> r_, wr_, area_;
  int n_theta_;
  double outer_;
  double inner_;
};

}  // namespace hardylab
