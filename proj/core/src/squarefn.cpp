#include "hardylab/squarefn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardylab/fourier.hpp"
#include "hardylab/norms.hpp"

namespace hardylab {
namespace {

constexpr double kPi = std::numbers::pi;

// Integral of e^{i n phi} over [theta - w, theta + w], without the e^{i n theta}.
double box_factor(int n, double w) {
  if (n == 0) return 2.0 * w;
  return 2.0 * std::sin(n * w) / n;
}

std::vector<cplx> ring_coefficients(const GradField& field, int i) {
  const int nt = field.grid.n_theta();
  std::vector<cplx> ring(nt);
  for (int j = 0; j < nt; ++j) ring[j] = field.values[field.grid.index(i, j)];
  return forward_dft(ring);
}

double ring_window_integral(const std::vector<cplx>& c, double theta, double w) {
  const int nt = static_cast<int>(c.size());
  const int half = nt / 2;
  double s = c[0].real() * box_factor(0, w);
  for (int n = 1; n < half; ++n) {
    const double k = box_factor(n, w);
    s += k * (c[n] * std::polar(1.0, n * theta)).real();
    s += k * (c[nt - n] * std::polar(1.0, -n * theta)).real();
  }
  if (nt >= 2) s += (c[half] * std::cos(half * theta)).real() * box_factor(half, w);
  return s;
}

void require_field(const GradField& field) {
  if (field.values.size() != field.grid.size()) throw std::invalid_argument("field does not match its grid");
}

cplx finite_difference_dz(const TaylorPoly& F, double p, cplx z, double h) {
  auto f = [&](cplx w) { return lift_value(F.eval(w), p); };
  const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
  const cplx dy = (f(z + cplx(0.0, h)) - f(z - cplx(0.0, h))) / (2.0 * h);
  return 0.5 * (dx - cplx(0.0, 1.0) * dy);
}

}  // namespace

double ConeSpec::area() const {
  const double lo = std::clamp(r_min, 0.0, 1.0);
  // integral_{lo}^{1} 2 a (1 - r) dr
  return aperture * (1.0 - lo) * (1.0 - lo);
}

GradField grad_modulus_power(const TaylorPoly& F, double s, const PolarGrid& grid) {
  if (!(s > 0.0)) throw std::invalid_argument("gradient power must be positive");
  const TaylorPoly dF = F.derivative();
  GradField out{grid, std::vector<double>(grid.size()), GradConvention::euclidean};
  for (int i = 0; i < grid.n_radial(); ++i) {
    for (int j = 0; j < grid.n_theta(); ++j) {
      const cplx z = grid.node(i, j);
      const double a = std::abs(F.eval(z));
      if (a == 0.0 && s < 1.0) throw std::domain_error("|F|^s has a singular gradient at a zero of F");
      const double g = s * std::pow(a, s - 1.0) * std::abs(dF.eval(z));
      out.values[grid.index(i, j)] = g * g;
    }
  }
  return out;
}

GradField dz_field(std::span<const cplx> dz_values, const PolarGrid& grid) {
  if (dz_values.size() != grid.size()) throw std::invalid_argument("d_z values do not match grid");
  GradField out{grid, std::vector<double>(grid.size()), GradConvention::euclidean};
  for (size_t k = 0; k < dz_values.size(); ++k) out.values[k] = std::norm(dz_values[k]);
  return out;
}

GradField dz_field(const MixedPoly& f, const PolarGrid& grid) {
  std::vector<cplx> d(grid.size());
  for (int i = 0; i < grid.n_radial(); ++i)
    for (int j = 0; j < grid.n_theta(); ++j) d[grid.index(i, j)] = f.dz(grid.node(i, j));
  return dz_field(d, grid);
}

GradField lift_dz_field_fd(const TaylorPoly& F, double p, const PolarGrid& grid, double h) {
  std::vector<cplx> d(grid.size());
  for (int i = 0; i < grid.n_radial(); ++i)
    for (int j = 0; j < grid.n_theta(); ++j) d[grid.index(i, j)] = finite_difference_dz(F, p, grid.node(i, j), h);
  return dz_field(d, grid);
}

double square_function(const GradField& field, double theta, const ConeSpec& cone) {
  require_field(field);
  const auto& g = field.grid;
  double s = 0.0;
  for (int i = 0; i < g.n_radial(); ++i) {
    if (g.r(i) < cone.r_min) continue;
    const double w = std::min(cone.half_width(g.r(i)), kPi);
    s += g.radial_weight(i) * ring_window_integral(ring_coefficients(field, i), theta, w);
  }
  return std::sqrt(std::max(s, 0.0));
}

std::vector<double> square_function_sweep(const GradField& field, const ConeSpec& cone) {
  require_field(field);
  const auto& g = field.grid;
  const int nt = g.n_theta();
  std::vector<double> acc(nt, 0.0);
  std::vector<cplx> filtered(nt);
  for (int i = 0; i < g.n_radial(); ++i) {
    if (g.r(i) < cone.r_min) continue;
    const double w = std::min(cone.half_width(g.r(i)), kPi);
    const auto c = ring_coefficients(field, i);
    for (int k = 0; k < nt; ++k) {
      const int n = k <= nt / 2 ? k : k - nt;  // the Nyquist factor is even in n
      filtered[k] = c[k] * box_factor(n, w);
    }
    const auto vals = inverse_dft(filtered);
    for (int j = 0; j < nt; ++j) acc[j] += g.radial_weight(i) * vals[j].real();
  }
  for (auto& v : acc) v = std::sqrt(std::max(v, 0.0));
  return acc;
}

double square_function_sz(std::span<const cplx> dz_values, const PolarGrid& grid, double theta,
                          const ConeSpec& cone) {
  return square_function(dz_field(dz_values, grid), theta, cone);
}

double nontangential_max(const TaylorPoly& h, double theta, const ConeSampling& s, const ConeSpec& cone) {
  if (s.n_radial < 1 || s.n_angular < 1) throw std::invalid_argument("cone sampling needs positive sizes");
  double best = std::abs(h.eval(std::polar(1.0, theta)));
  for (int i = 0; i < s.n_radial; ++i) {
    const double r = static_cast<double>(i) / s.n_radial;
    if (r < cone.r_min) continue;
    const double w = cone.half_width(r);
    for (int k = 0; k < s.n_angular; ++k) {
      const double t = s.n_angular == 1 ? 0.0 : -1.0 + 2.0 * k / (s.n_angular - 1);
      best = std::max(best, std::abs(h.eval(std::polar(r, theta + t * w))));
    }
  }
  return best;
}

std::vector<double> nontangential_max_profile(const TaylorPoly& h, int n_theta, const ConeSampling& s,
                                              const ConeSpec& cone) {
  std::vector<double> out(n_theta);
  for (int j = 0; j < n_theta; ++j) out[j] = nontangential_max(h, 2.0 * kPi * j / n_theta, s, cone);
  return out;
}

namespace {

PolarGrid calderon_grid(const TaylorPoly& F, const CalderonGrid& cg) {
  std::vector<double> breaks{cg.r_min, 1.0};
  for (const cplx& z : roots(F)) {
    const double r = std::abs(z);
    if (r > cg.r_min && r < 1.0) breaks.push_back(r);
  }
  std::sort(breaks.begin(), breaks.end());
  return PolarGrid::panels(breaks, std::max(4, cg.n_radial / 2), cg.n_theta);
}

}  // namespace

CalderonProfile calderon_profile(const TaylorPoly& F, double delta, const CalderonGrid& cg) {
  if (!(delta > 0.0)) throw std::invalid_argument("calderon_profile needs delta > 0");
  if (F.is_zero()) throw std::invalid_argument("calderon_profile needs F not identically zero");
  const PolarGrid grid = calderon_grid(F, cg);
  const auto field = grad_modulus_power(F, delta, grid);
  CalderonProfile out;
  out.s = square_function_sweep(field, ConeSpec{.r_min = cg.r_min});
  out.g.resize(cg.n_theta);
  for (int j = 0; j < cg.n_theta; ++j) out.g[j] = std::pow(std::abs(F.eval(std::polar(1.0, grid.theta(j)))), delta);
  out.vanishes_at_origin = F[0] == 0.0;
  return out;
}

CalderonRatios calderon_ratios(const CalderonProfile& profile, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("calderon_ratios needs p > 0");
  CalderonRatios out;
  out.s_norm = mean_norm(std::span<const double>(profile.s), p);
  out.g_norm = mean_norm(std::span<const double>(profile.g), p);
  out.upper = out.s_norm / out.g_norm;
  if (profile.vanishes_at_origin) out.lower = out.g_norm / out.s_norm;
  return out;
}

CalderonRatios calderon_ratios(const TaylorPoly& F, double delta, double p, const CalderonGrid& cg) {
  if (!(p > 0.0)) throw std::invalid_argument("calderon_ratios needs p > 0");
  return calderon_ratios(calderon_profile(F, delta, cg), p);
}

double lift_sz_identity_check(const TaylorPoly& F, double p, double h) {
  if (!(p > 1.0)) throw std::invalid_argument("lift identity needs p > 1");
  const TaylorPoly dF = F.derivative();
  double worst = 0.0;
  constexpr int kRadii = 9;
  constexpr int kAngles = 32;
  for (int i = 0; i < kRadii; ++i) {
    const double r = 0.1 + 0.1 * i;
    for (int j = 0; j < kAngles; ++j) {
      const cplx z = std::polar(r, 2.0 * kPi * j / kAngles);
      const double a = std::abs(F.eval(z));
      if (a == 0.0) continue;
      const double exact = 0.5 * p * std::pow(a, p - 2.0) * std::abs(dF.eval(z));
      const double fd = std::abs(finite_difference_dz(F, p, z, h));
      const double scale = std::max(exact, 1e-300);
      if (exact == 0.0 && fd < 1e-12) continue;
      worst = std::max(worst, std::abs(fd - exact) / scale);
    }
  }
  return worst;
}

}  // namespace hardylab
