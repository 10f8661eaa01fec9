#include "hardylab/projections.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardylab/norms.hpp"

namespace hardylab {

TaylorPoly bergman_project_monomial(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  if (a < b) return {};
  return TaylorPoly::monomial(a - b, static_cast<double>(a - b + 1) / static_cast<double>(a + 1));
}

TaylorPoly bergman_project(const MixedPoly& f) {
  TaylorPoly out;
  for (const auto& t : f.terms()) out += bergman_project_monomial(t.a, t.b) * t.c;
  return out;
}

TaylorPoly bergman_project(std::span<const cplx> node_values, const PolarGrid& grid, int max_degree) {
  if (node_values.size() != grid.size()) throw std::invalid_argument("node values do not match grid");
  if (max_degree < 0 || max_degree > grid.max_degree())
    throw std::invalid_argument("projection degree exceeds grid resolution");
  const int nt = grid.n_theta();
  std::vector<cplx> coeffs(static_cast<size_t>(max_degree) + 1, cplx{0.0});
  // Ring-wise angular DFT, then the radial sum of r^n times the ring moment.
  std::vector<cplx> ring(nt);
  for (int i = 0; i < grid.n_radial(); ++i) {
    for (int j = 0; j < nt; ++j) ring[j] = node_values[grid.index(i, j)];
    const auto c = forward_dft(ring);  // c[n] = mean_j f e^{-i n theta_j}
    const double r = grid.r(i);
    double rn = 1.0;
    // sum_j w f conj(z)^n = w * nt * r^n * c[n]
    const double w = grid.area_weight(i) * nt;
    for (int n = 0; n <= max_degree; ++n) {
      coeffs[n] += w * rn * c[n];
      rn *= r;
    }
  }
  for (int n = 0; n <= max_degree; ++n) coeffs[n] *= static_cast<double>(n + 1);
  return TaylorPoly(std::move(coeffs));
}

TaylorPoly truncated_projection(const BoundarySamples& f, int n) {
  if (n < 0 || static_cast<size_t>(n) >= f.size() / 2)
    throw std::invalid_argument("truncation degree must satisfy 0 <= n < M/2");
  const auto c = f.fourier();
  std::vector<cplx> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = c.at(k);
  return TaylorPoly(std::move(out));
}

TaylorPoly szego_project(const BoundarySamples& f) {
  return truncated_projection(f, static_cast<int>(f.size() / 2) - 1);
}

BoundarySamples szego_coproject(const BoundarySamples& f) {
  auto c = f.fourier();
  for (int n = 0; n <= c.max_freq(); ++n) c.set(n, 0.0);
  return c.to_samples();
}

double szego_norm_bound(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("Szego projection is bounded only for p > 1");
  return 1.0 / std::sin(std::numbers::pi / p);
}

SzegoNormCheck szego_norm_check(std::span<const BoundarySamples> corpus, double p) {
  SzegoNormCheck out;
  out.bound = szego_norm_bound(p);
  for (const auto& f : corpus) {
    const double denom = boundary_norm(f, p);
    if (denom == 0.0) continue;
    const auto proj = BoundarySamples::from_poly(szego_project(f), f.size());
    out.max_ratio = std::max(out.max_ratio, boundary_norm(proj, p) / denom);
  }
  out.ok = out.max_ratio <= out.bound + 1e-8;
  return out;
}

}  // namespace hardylab
