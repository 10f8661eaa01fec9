#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hardylab/mixed_poly.hpp"
#include "hardylab/polar_grid.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

/// Approach region {(r, phi) : |theta - phi| < aperture * (1 - r), r_min < r < 1}.
struct ConeSpec {
  double aperture = 0.5;
  double r_min = 0.0;
  double half_width(double r) const { return aperture * (1.0 - r); }
  /// Area of the cone in (r, phi) coordinates; 1/2 for the default cone.
  double area() const;
};

/// |grad G| is measured with the Euclidean (d/dx, d/dy) gradient, so that
/// |grad |F|| = |F'| for analytic F.
enum class GradConvention { euclidean };

/// Nonnegative squared-gradient values at the nodes of a polar grid.
struct GradField {
  PolarGrid grid;
  std::vector<double> values;
  GradConvention convention = GradConvention::euclidean;
};

/// |grad |F|^s|^2 = (s |F|^{s-1} |F'|)^2. Throws if F vanishes at a node
/// and s < 1.
GradField grad_modulus_power(const TaylorPoly& F, double s, const PolarGrid& grid);

/// |d_z f|^2 from values of d_z f at the grid nodes.
GradField dz_field(std::span<const cplx> dz_values, const PolarGrid& grid);
GradField dz_field(const MixedPoly& f, const PolarGrid& grid);

/// |d_z f|^2 for f = |F|^{p-2} F, with d_z computed by centered differences.
GradField lift_dz_field_fd(const TaylorPoly& F, double p, const PolarGrid& grid, double h = 1e-4);

/// S(theta) = sqrt( integral over the cone at theta of field dr dphi ). The
/// angular integral is taken exactly over the trigonometric interpolant of
/// each ring; the radial one uses the grid's Gauss-Legendre rule.
double square_function(const GradField& field, double theta, const ConeSpec& cone = {});

/// S at every grid angle theta_j = 2 pi j / n_theta.
std::vector<double> square_function_sweep(const GradField& field, const ConeSpec& cone = {});

/// S_z(f)(theta) from the values of d_z f at the grid nodes.
double square_function_sz(std::span<const cplx> dz_values, const PolarGrid& grid, double theta,
                          const ConeSpec& cone = {});

/// Cone sampling used by the nontangential maximal function.
struct ConeSampling {
  int n_radial = 64;   // radii i / n_radial, i = 0..n_radial (the last is the boundary limit)
  int n_angular = 17;  // points spread across the closed cone at each radius
};

/// sup of |h| over the closed cone at theta, including the boundary point e^{i theta}.
double nontangential_max(const TaylorPoly& h, double theta, const ConeSampling& s = {},
                         const ConeSpec& cone = {});
std::vector<double> nontangential_max_profile(const TaylorPoly& h, int n_theta, const ConeSampling& s = {},
                                              const ConeSpec& cone = {});

/// Resolution for calderon_ratios. The radial rule is composite, with
/// n_radial / 2 Gauss-Legendre nodes per panel and panel breaks at the moduli
/// of the zeros of F.
struct CalderonGrid {
  int n_radial = 32;
  int n_theta = 512;
  double r_min = 0.0;  // cone truncation, see ConeSpec
  CalderonGrid doubled() const { return {2 * n_radial, 2 * n_theta, r_min}; }
};

/// Ratios from the square-function inequalities for G = |F|^delta.
struct CalderonRatios {
  double s_norm = 0.0;  // ||S(G)||_p over the circle
  double g_norm = 0.0;  // ||G||_p on the circle
  double upper = 0.0;   // ||S(G)||_p / ||G||_p
  std::optional<double> lower;  // ||G||_p / ||S(G)||_p, only when F(0) == 0
};
CalderonRatios calderon_ratios(const TaylorPoly& F, double delta, double p, const CalderonGrid& grid = {});

/// S(G) and G on the boundary grid, reusable across exponents p.
struct CalderonProfile {
  std::vector<double> s;  // S(G)(e^{i theta_j})
  std::vector<double> g;  // G(e^{i theta_j})
  bool vanishes_at_origin = false;
};
CalderonProfile calderon_profile(const TaylorPoly& F, double delta, const CalderonGrid& grid = {});
CalderonRatios calderon_ratios(const CalderonProfile& profile, double p);

/// Max relative error of |d_z f| = (p/2) |F|^{p-2} |F'| for f = |F|^{p-2} F,
/// with d_z f from centered differences on nodes in 0.1 <= r <= 0.9.
double lift_sz_identity_check(const TaylorPoly& F, double p, double h = 1e-4);

}  // namespace hardylab
