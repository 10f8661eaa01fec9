#include "hardylab/green.hpp"

#include <cmath>
#include <stdexcept>

#include "hardylab/fourier.hpp"
#include "hardylab/norms.hpp"

namespace hardylab {
namespace {

cplx laplacian_product(const TaylorPoly& F, const TaylorPoly& dF, const TaylorPoly& h, const TaylorPoly& dh, double p,
                       cplx z) {
  return 4.0 * dh.eval(z) * lift_dzbar(F, dF, p, z) + h.eval(z) * lift_laplacian(F, dF, p, z);
}

cplx disc_log_integral(const TaylorPoly& F, const TaylorPoly& h, double p, const PolarGrid& grid) {
  const TaylorPoly dF = F.derivative();
  const TaylorPoly dh = h.derivative();
  cplx s = 0.0;
  for (int i = 0; i < grid.n_radial(); ++i) {
    cplx ring = 0.0;
    for (int j = 0; j < grid.n_theta(); ++j) ring += laplacian_product(F, dF, h, dh, p, grid.node(i, j));
    s += grid.area_weight(i) * std::log(1.0 / grid.r(i)) * ring;
  }
  // area weights integrate dA/pi, and (1/2pi) dA = (1/2) dA/pi.
  return 0.5 * s;
}

}  // namespace

cplx lift_dzbar(const TaylorPoly& F, const TaylorPoly& dF, double p, cplx z) {
  const cplx v = F.eval(z);
  const double a = std::abs(v);
  if (a == 0.0) return 0.0;
  return (0.5 * p - 1.0) * std::pow(a, p - 4.0) * v * v * std::conj(dF.eval(z));
}

cplx lift_laplacian(const TaylorPoly& F, const TaylorPoly& dF, double p, cplx z) {
  const cplx v = F.eval(z);
  const double a = std::abs(v);
  if (a == 0.0) return 0.0;
  return p * (p - 2.0) * std::pow(a, p - 4.0) * v * std::norm(dF.eval(z));
}

cplx lift_times_analytic_laplacian(const TaylorPoly& F, const TaylorPoly& h, double p, cplx z) {
  return laplacian_product(F, F.derivative(), h, h.derivative(), p, z);
}

GreenCheck green_identity_check(const TaylorPoly& F, const TaylorPoly& h, double p, const PolarGrid& grid,
                                size_t boundary_m) {
  if (!(p > 1.0)) throw std::invalid_argument("Green identity check needs p > 1");
  if (h[0] != 0.0) throw std::invalid_argument("Green identity check needs h(0) = 0");
  if (grid.outer_radius() != 1.0) throw std::invalid_argument("Green identity check needs a unit-disc grid");
  GreenCheck out;
  const auto lift = nonlinear_lift(F, p, boundary_m);
  const auto hv = BoundarySamples::from_poly(h, boundary_m);
  cplx s = 0.0;
  for (size_t j = 0; j < boundary_m; ++j) s += lift[j] * hv[j];
  out.lhs = s / static_cast<double>(boundary_m);
  out.rhs = disc_log_integral(F, h, p, grid);
  out.rel_error = std::abs(out.lhs - out.rhs) / (std::abs(out.lhs) + std::abs(out.rhs) + 1e-12);
  return out;
}

cplx green_inner_term(const TaylorPoly& F, const TaylorPoly& h, double p, double radius, int n_radial, int n_theta) {
  return disc_log_integral(F, h, p, PolarGrid(n_radial, n_theta, radius));
}

}  // namespace hardylab
