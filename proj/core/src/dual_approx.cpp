#include "hardylab/dual_approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardylab/norms.hpp"
#include "hardylab/projections.hpp"
#include "norm_ball.hpp"

namespace hardylab {
namespace {

constexpr double kAdaptiveTailTol = 1e-9;
constexpr int kAdaptiveMaxDegree = 512;

double mean_power(const Eigen::VectorXcd& r, double p) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < r.size(); ++j) s += std::pow(std::abs(r[j]), p);
  return s / static_cast<double>(r.size());
}

}  // namespace

BoundarySamples conjugate_coefficients(const TaylorPoly& kernel, size_t m) {
  return BoundarySamples::from_poly(kernel, m).conj();
}

TaylorPoly extremal_form(const BoundarySamples& kd) {
  const auto c = kd.fourier();
  std::vector<cplx> out(kd.size() / 2);
  for (size_t n = 0; n < out.size(); ++n) out[n] = std::conj(c.at(-static_cast<int>(n)));
  return TaylorPoly(std::move(out)).chopped();
}

DualSolution solve_dual_min(const BoundarySamples& k, double p_prime, const DualOptions& opt) {
  if (!(p_prime > 1.0) || !std::isfinite(p_prime)) throw std::invalid_argument("dual problem needs 1 < p' < infinity");
  const size_t m = k.size();
  const int n = opt.degree_cap < 0 ? std::min(4 * k.fourier().bandwidth() + 32, static_cast<int>(m / 2) - 1)
                                    : opt.degree_cap;
  if (n < 1 || static_cast<size_t>(n) >= m / 2) throw std::invalid_argument("dual degree cap must satisfy 1 <= N < M/2");

  const Eigen::Index mm = static_cast<Eigen::Index>(m);
  auto residual_of = [&](const Eigen::VectorXcd& g) {
    std::vector<cplx> c(m, cplx{0.0});
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i) + 1] = g[i];
    const auto gv = inverse_dft(c);
    Eigen::VectorXcd r(mm);
    for (Eigen::Index j = 0; j < mm; ++j) r[j] = k[static_cast<size_t>(j)] - gv[static_cast<size_t>(j)];
    return r;
  };

  // Least-squares start: the H^2-orthogonal projection onto span{z..z^N}.
  const auto kc = k.fourier();
  Eigen::VectorXcd g(n);
  for (int c = 0; c < n; ++c) g[c] = kc.at(c + 1);

  DualSolution sol;
  sol.degree_cap = n;
  sol.weight_floor = opt.weight_floor;
  Eigen::VectorXcd r = residual_of(g);
  double phi = mean_power(r, p_prime);
  // Newton form of IRLS: each node contributes its exact 2x2 Hessian of |r|^{p'}
  // instead of the isotropic weight |r|^{p'-2}.
  std::vector<double> alpha(m);
  std::vector<cplx> beta(m), wr(m);
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (phi == 0.0) {
      sol.converged = true;
      break;
    }
    for (size_t j = 0; j < m; ++j) {
      const cplx rj = r[static_cast<Eigen::Index>(j)];
      const double a = std::max(std::abs(rj), opt.weight_floor);
      const double w = p_prime * std::pow(a, p_prime - 2.0);
      const cplx u = std::conj(rj) / a;
      alpha[j] = 0.5 * w * p_prime;
      beta[j] = 0.5 * w * (p_prime - 2.0) * u * u;
      wr[j] = w * rj;
    }
    const auto gh = forward_dft(wr);
    Eigen::VectorXd grad(2 * n);
    for (int c = 0; c < n; ++c) {
      const cplx ell = static_cast<double>(m) * std::conj(gh[static_cast<size_t>(c) + 1]);
      grad[c] = -ell.real();
      grad[n + c] = ell.imag();
    }
    const Eigen::MatrixXd hess = detail::circle_quadratic_form(alpha, beta, n, 1);
    const Eigen::VectorXd dx = hess.ldlt().solve(-grad);
    Eigen::VectorXcd dir(n);
    for (int c = 0; c < n; ++c) dir[c] = cplx(dx[c], dx[n + c]);
    const double slope = grad.dot(dx) / static_cast<double>(m);
    if (!(slope < 0.0)) {
      sol.converged = true;
      break;
    }

    double step = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls, step *= 0.5) {
      const Eigen::VectorXcd gt = g + step * dir;
      const Eigen::VectorXcd rt = residual_of(gt);
      const double phit = mean_power(rt, p_prime);
      if (phit <= phi + 1e-4 * step * slope) {
        const double decrease = (phi - phit) / phi;
        g = gt;
        r = rt;
        phi = phit;
        accepted = true;
        sol.iterations = it + 1;
        if (decrease < opt.tol && -slope < opt.tol * phi) sol.converged = true;
        break;
      }
    }
    if (!accepted) {
      // No step decreases the objective: stationary to working precision.
      sol.converged = true;
      break;
    }
    if (sol.converged) break;
  }

  std::vector<cplx> coeffs(static_cast<size_t>(n) + 1, cplx{0.0});
  for (int c = 0; c < n; ++c) coeffs[c + 1] = g[c];
  sol.g = TaylorPoly(std::move(coeffs));
  sol.min_norm = std::pow(phi, 1.0 / p_prime);
  return sol;
}

double extremal_kernel_residual(const BoundarySamples& kd, const TaylorPoly& g, const TaylorPoly& F, double lambda,
                                double p) {
  const double pp = conjugate_exponent(p);
  const size_t m = kd.size();
  const BoundarySamples kernel = kd - BoundarySamples::from_poly(g, m);
  const BoundarySamples lift = nonlinear_lift(F, p, m);
  const BoundarySamples diff = kernel.conj() - lift * lambda;
  return boundary_norm(diff, pp) / boundary_norm(kernel, pp);
}

double holder_spread(const BoundarySamples& kd, const TaylorPoly& g, const TaylorPoly& F, double p, double threshold) {
  const double pp = conjugate_exponent(p);
  const size_t m = kd.size();
  const BoundarySamples kernel = kd - BoundarySamples::from_poly(g, m);
  const BoundarySamples fv = BoundarySamples::from_poly(F, m);
  std::vector<double> ratios;
  for (size_t j = 0; j < m; ++j) {
    const double a = std::abs(kernel[j]);
    const double b = std::abs(fv[j]);
    if (a > threshold && b > threshold) ratios.push_back(std::pow(a, pp) / std::pow(b, p));
  }
  if (ratios.empty()) return 0.0;
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r / mean - 1.0));
  return worst;
}

DualityReport duality_gap(const BoundarySamples& kd, double p, const ExtremalOptions& primal_opt,
                          const DualOptions& dual_opt) {
  const double pp = conjugate_exponent(p);
  const TaylorPoly kernel = extremal_form(kd);
  DualityReport rep;
  rep.dual_solution = solve_dual_min(kd, pp, dual_opt);
  rep.dual = rep.dual_solution.min_norm;
  if (kernel.is_zero()) {
    // kd already lies in H_0: both sides vanish.
    rep.primal = 0.0;
    rep.gap = rep.dual;
    rep.dual_solution.gap = rep.gap;
    return rep;
  }
  rep.primal_solution = solve_hardy_extremal(kernel, p, primal_opt);
  rep.primal = rep.primal_solution.lambda;
  rep.gap = std::abs(rep.primal - rep.dual) / rep.primal;
  rep.kernel_residual =
      extremal_kernel_residual(kd, rep.dual_solution.g, rep.primal_solution.F, rep.primal_solution.lambda, p);
  rep.holder_spread = holder_spread(kd, rep.dual_solution.g, rep.primal_solution.F, p);
  rep.dual_solution.gap = rep.gap;
  rep.dual_solution.kernel_residual = rep.kernel_residual;
  return rep;
}

DualityReport duality_gap(const TaylorPoly& kernel, double p, const ExtremalOptions& primal_opt,
                          const DualOptions& dual_opt) {
  if (primal_opt.degree_cap >= 0) {
    const size_t m = primal_opt.grid_m > 0 ? primal_opt.grid_m : 2 * default_grid_size(primal_opt.degree_cap);
    return duality_gap(conjugate_coefficients(kernel, m), p, primal_opt, dual_opt);
  }
  // Adaptive truncation: double N until the trailing coefficients of F are negligible.
  DualityReport rep;
  for (int n = kernel.degree() + 32;; n *= 2) {
    ExtremalOptions popt = primal_opt;
    popt.degree_cap = n;
    popt.grid_m = 2 * default_grid_size(n);
    DualOptions dopt = dual_opt;
    if (dopt.degree_cap < 0) dopt.degree_cap = std::max(4 * kernel.degree() + 32, n);
    rep = duality_gap(conjugate_coefficients(kernel, popt.grid_m), p, popt, dopt);
    const TaylorPoly& F = rep.primal_solution.F;
    double top = 0.0, tail = 0.0;
    for (int i = 0; i <= F.degree(); ++i) top = std::max(top, std::abs(F[i]));
    for (int i = std::max(0, n - 7); i <= n; ++i) tail = std::max(tail, std::abs(F[i]));
    if (tail <= kAdaptiveTailTol * top || 2 * n > kAdaptiveMaxDegree) break;
  }
  return rep;
}

BestApproximation best_analytic_approx(const BoundarySamples& k, double p, const DualOptions& opt) {
  const size_t m = k.size();
  const TaylorPoly pk = szego_project(k).chopped();
  const BoundarySamples target = szego_coproject(k).shifted(1);  // z P_S^perp k, anti-analytic

  BestApproximation out;
  out.dual = solve_dual_min(target, p, opt);
  std::vector<cplx> h(std::max(out.dual.g.degree(), 1));
  for (int n = 1; n <= out.dual.g.degree(); ++n) h[n - 1] = out.dual.g[n];
  out.f = TaylorPoly(std::move(h)) + pk;
  out.distance = boundary_norm(BoundarySamples::from_poly(out.f, m) - k, p);
  return out;
}

CrossNormReport cross_norm_report(const TaylorPoly& f, const BoundarySamples& k, double q, double ctilde) {
  CrossNormReport rep;
  if (!(ctilde < 1.0)) return rep;
  rep.applicable = true;
  const size_t m = std::max(k.size(), 2 * default_grid_size(f.degree()));
  rep.f_norm_q = boundary_norm(BoundarySamples::from_poly(f, m), q);
  const double kq = boundary_norm(k, q);
  const double s = szego_norm_bound(q);
  rep.bound = (2.0 + 1.0 / (1.0 - ctilde)) * s * kq;
  rep.tight_bound = (1.0 + 1.0 / (1.0 - ctilde)) * s * kq;
  rep.ok = rep.f_norm_q <= rep.bound + 1e-9;
  return rep;
}

}  // namespace hardylab
