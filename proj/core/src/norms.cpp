#include "hardylab/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace hardylab {
namespace {

void require_positive_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("norm exponent must be positive and finite");
}

}  // namespace

double conjugate_exponent(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("conjugate exponent needs p > 1");
  return p / (p - 1.0);
}

double mean_norm(std::span<const cplx> values, double p) {
  require_positive_exponent(p);
  double s = 0.0;
  for (const auto& v : values) s += std::pow(std::abs(v), p);
  return std::pow(s / static_cast<double>(values.size()), 1.0 / p);
}

double mean_norm(std::span<const double> values, double p) {
  require_positive_exponent(p);
  double s = 0.0;
  for (double v : values) s += std::pow(std::abs(v), p);
  return std::pow(s / static_cast<double>(values.size()), 1.0 / p);
}

double integral_mean(const TaylorPoly& f, double r, double p, size_t m) {
  require_positive_exponent(p);
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("integral mean radius must lie in [0, 1]");
  if (m == 0) m = default_grid_size(f.degree());
  std::vector<cplx> scaled(f.coeffs().begin(), f.coeffs().end());
  double rn = 1.0;
  for (auto& c : scaled) {
    c *= rn;
    rn *= r;
  }
  return boundary_norm(BoundarySamples::from_poly(TaylorPoly(std::move(scaled)), m), p);
}

NormReport hardy_norm(const TaylorPoly& f, double p, size_t m, int n_radii) {
  require_positive_exponent(p);
  if (n_radii < 2) throw std::invalid_argument("hardy_norm needs at least two radii");
  NormReport rep;
  rep.p = p;
  rep.radii.resize(n_radii);
  rep.means.resize(n_radii);
  for (int i = 0; i < n_radii; ++i) {
    rep.radii[i] = static_cast<double>(i) / (n_radii - 1);
    rep.means[i] = integral_mean(f, rep.radii[i], p, m);
    rep.norm_estimate = std::max(rep.norm_estimate, rep.means[i]);
  }
  return rep;
}

double disc_norm(std::span<const cplx> node_values, double p, const PolarGrid& grid) {
  require_positive_exponent(p);
  if (node_values.size() != grid.size()) throw std::invalid_argument("node values do not match grid");
  double s = 0.0;
  for (int i = 0; i < grid.n_radial(); ++i) {
    double ring = 0.0;
    for (int j = 0; j < grid.n_theta(); ++j) ring += std::pow(std::abs(node_values[grid.index(i, j)]), p);
    s += grid.area_weight(i) * ring;
  }
  return std::pow(s, 1.0 / p);
}

std::vector<cplx> sample_on_grid(const TaylorPoly& f, const PolarGrid& grid) {
  std::vector<cplx> out(grid.size());
  for (int i = 0; i < grid.n_radial(); ++i)
    for (int j = 0; j < grid.n_theta(); ++j) out[grid.index(i, j)] = f.eval(grid.node(i, j));
  return out;
}

double bergman_norm(const TaylorPoly& f, double p, const PolarGrid& grid) {
  return disc_norm(sample_on_grid(f, grid), p, grid);
}

cplx lift_value(cplx v, double p) {
  const double a = std::abs(v);
  if (a == 0.0) return 0.0;
  return std::pow(a, p - 2.0) * v;
}

std::vector<cplx> nonlinear_lift(std::span<const cplx> values, double p) {
  std::vector<cplx> out(values.size());
  for (size_t j = 0; j < values.size(); ++j) out[j] = lift_value(values[j], p);
  return out;
}

BoundarySamples nonlinear_lift(const TaylorPoly& F, double p, size_t m) {
  auto s = BoundarySamples::from_poly(F, m);
  return BoundarySamples(nonlinear_lift(s.values(), p));
}

std::vector<cplx> nonlinear_lift(const TaylorPoly& F, double p, const PolarGrid& grid) {
  return nonlinear_lift(sample_on_grid(F, grid), p);
}

IsoperimetricCheck check_isoperimetric(const TaylorPoly& h, double p, const PolarGrid& grid) {
  if (!(p > 0.5)) throw std::invalid_argument("isoperimetric check needs p > 1/2");
  IsoperimetricCheck c;
  c.a_norm = bergman_norm(h, 2.0 * p, grid);
  c.h_norm = integral_mean(h, 1.0, p);
  c.ok = c.a_norm <= c.h_norm + 1e-9;
  return c;
}

}  // namespace hardylab
