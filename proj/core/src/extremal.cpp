#include "hardylab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardylab/fourier.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/projections.hpp"
#include "norm_ball.hpp"

namespace hardylab {
namespace detail {
namespace {

class Discretization {
 public:
  Discretization(const DiscreteMeasure& mu, int n_coeffs, double p)
      : p_(p), circle_(mu.uniform_circle), n_(n_coeffs) {
    const Eigen::Index m = static_cast<Eigen::Index>(mu.nodes.size());
    w_ = Eigen::Map<const Eigen::VectorXd>(mu.weights.data(), m);
    if (circle_) {
      m_ = m;
      return;
    }
    vander_.resize(m, n_coeffs);
    for (Eigen::Index j = 0; j < m; ++j) {
      cplx zn = 1.0;
      for (int n = 0; n < n_coeffs; ++n) {
        vander_(j, n) = zn;
        zn *= mu.nodes[j];
      }
    }
  }

  Eigen::VectorXcd values(const Eigen::VectorXcd& a) const {
    if (!circle_) return vander_ * a;
    std::vector<cplx> c(static_cast<size_t>(m_), cplx{0.0});
    for (Eigen::Index i = 0; i < a.size(); ++i) c[i] = a[i];
    const auto v = inverse_dft(c);
    return Eigen::Map<const Eigen::VectorXcd>(v.data(), m_);
  }

  double power_sum(const Eigen::VectorXcd& f) const {
    double s = 0.0;
    for (Eigen::Index j = 0; j < f.size(); ++j) s += w_[j] * std::pow(std::abs(f[j]), p_);
    return s;
  }

  double norm(const Eigen::VectorXcd& a) const { return std::pow(power_sum(values(a)), 1.0 / p_); }

  // Real gradient of Phi = power_sum / p in the coordinates [Re a; Im a].
  Eigen::VectorXd gradient(const Eigen::VectorXcd& f) const {
    Eigen::VectorXcd wl(f.size());
    for (Eigen::Index j = 0; j < f.size(); ++j) wl[j] = w_[j] * lift_value(f[j], p_);
    Eigen::VectorXcd g(n_);
    if (circle_) {
      const auto c = forward_dft(std::span<const cplx>(wl.data(), static_cast<size_t>(wl.size())));
      for (int i = 0; i < n_; ++i) g[i] = static_cast<double>(m_) * c[i];
    } else {
      g = vander_.adjoint() * wl;
    }
    Eigen::VectorXd out(2 * g.size());
    out << g.real(), g.imag();
    return out;
  }

  // Real Hessian of Phi: integral |f|^{p-2} |u|^2 + (p-2) |f|^{p-4} Re(conj(f) u)^2.
  Eigen::MatrixXd hessian(const Eigen::VectorXcd& f) const {
    const Eigen::Index m = f.size();
    const Eigen::Index n = n_;
    double fmax = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) fmax = std::max(fmax, std::abs(f[j]));
    const double floor = std::max(fmax * 1e-8, 1e-300);

    Eigen::VectorXd s(m);
    Eigen::MatrixXcd q(m, n);
    Eigen::VectorXd t(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const double a = std::max(std::abs(f[j]), floor);
      s[j] = w_[j] * std::pow(a, p_ - 2.0);
      t[j] = w_[j] * (p_ - 2.0) * std::pow(a, p_ - 4.0);
    }
    if (circle_) {
      std::vector<double> alpha(m);
      std::vector<cplx> beta(m);
      for (Eigen::Index j = 0; j < m; ++j) {
        alpha[j] = s[j] + 0.5 * t[j] * std::norm(f[j]);
        beta[j] = 0.5 * t[j] * std::conj(f[j]) * std::conj(f[j]);
      }
      return circle_quadratic_form(alpha, beta, static_cast<int>(n), 0);
    }
    const Eigen::MatrixXcd sv = s.asDiagonal() * vander_;
    const Eigen::MatrixXcd b = vander_.adjoint() * sv;
    for (Eigen::Index j = 0; j < m; ++j) q.row(j) = std::conj(f[j]) * vander_.row(j);
    Eigen::MatrixXd r(m, 2 * n);
    r << q.real(), -q.imag();

    Eigen::MatrixXd h(2 * n, 2 * n);
    h.topLeftCorner(n, n) = b.real();
    h.topRightCorner(n, n) = -b.imag();
    h.bottomLeftCorner(n, n) = b.imag();
    h.bottomRightCorner(n, n) = b.real();
    h.noalias() += r.transpose() * t.asDiagonal() * r;
    return 0.5 * (h + h.transpose());
  }

 private:
  double p_;
  bool circle_;
  int n_;
  Eigen::Index m_ = 0;
  Eigen::MatrixXcd vander_;
  Eigen::VectorXd w_;
};

Eigen::VectorXd to_real(const Eigen::VectorXcd& a) {
  Eigen::VectorXd x(2 * a.size());
  x << a.real(), a.imag();
  return x;
}

Eigen::VectorXcd to_complex(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size() / 2;
  Eigen::VectorXcd a(n);
  for (Eigen::Index i = 0; i < n; ++i) a[i] = cplx(x[i], x[n + i]);
  return a;
}

}  // namespace

Eigen::MatrixXd circle_quadratic_form(std::span<const double> alpha, std::span<const cplx> beta, int n, int shift) {
  const size_t m = alpha.size();
  const std::vector<cplx> a(alpha.begin(), alpha.end());
  const auto ah = forward_dft(a);
  const auto bh = forward_dft(beta);
  const double scale = static_cast<double>(m);
  auto at = [&](const std::vector<cplx>& c, long k) {
    const long mm = static_cast<long>(m);
    return scale * c[static_cast<size_t>(((k % mm) + mm) % mm)];
  };
  Eigen::MatrixXd h(2 * n, 2 * n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      const cplx t = at(ah, c - d);
      const cplx b = at(bh, -(c + d + 2 * shift));
      h(c, d) = t.real() + b.real();
      h(c, n + d) = -t.imag() - b.imag();
      h(n + c, d) = t.imag() - b.imag();
      h(n + c, n + d) = t.real() - b.real();
    }
  return 0.5 * (h + h.transpose());
}

SphereAscentResult sphere_ascent(const DiscreteMeasure& mu, const Eigen::VectorXcd& functional, double p,
                                 const Eigen::VectorXcd& initial, double tol, int max_iterations,
                                 const std::function<double(const Eigen::VectorXcd&, double)>& residual) {
  const Eigen::Index n = functional.size();
  const Discretization disc(mu, static_cast<int>(n), p);
  const Eigen::VectorXd c = to_real(functional);

  Eigen::VectorXd x = to_real(initial);
  double ell = c.dot(x);
  if (!(ell > 0.0)) {
    // Fall back to the Riesz representer, which always pairs positively.
    x = c;
    ell = c.dot(x);
  }
  x /= ell;

  SphereAscentResult out;
  struct Iterate {
    Eigen::VectorXcd coeffs;
    double value;
    double residual;
  };
  auto evaluate = [&](const Eigen::VectorXd& xs) {
    const Eigen::VectorXcd a = to_complex(xs);
    const double nrm = disc.norm(a);
    Iterate e{a / nrm, 1.0 / nrm, 0.0};  // Re<x, c> == 1 on the slice
    e.residual = residual(e.coeffs, e.value);
    return e;
  };
  auto accept = [&](const Iterate& e) {
    out.coeffs = e.coeffs;
    out.value = e.value;
    out.residual_history.push_back(e.residual);
    out.objective_history.push_back(e.value);
  };

  accept(evaluate(x));
  double res = out.residual_history.back();
  Eigen::VectorXcd f = disc.values(to_complex(x));
  double phi = disc.power_sum(f) / p;
  for (int it = 0; it < max_iterations && !(res < tol); ++it) {
    const Eigen::VectorXd g = disc.gradient(f);
    Eigen::MatrixXd h = disc.hessian(f);
    const double ridge = 1e-14 * std::max(h.diagonal().maxCoeff(), 1e-300);
    h.diagonal().array() += ridge;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
    const Eigen::VectorXd hg = ldlt.solve(g);
    const Eigen::VectorXd hc = ldlt.solve(c);
    const double nu = -c.dot(hg) / c.dot(hc);
    Eigen::VectorXd dir = -(hg + nu * hc);
    dir -= (c.dot(dir) / c.squaredNorm()) * c;  // stay on the slice exactly
    const double slope = g.dot(dir);
    if (!(slope < 0.0)) break;

    if (-slope < 1e-12 * phi) {
      // Phi can no longer resolve the decrease; take full Newton steps while
      // the residual keeps improving.
      const Eigen::VectorXd trial = x + dir;
      const Iterate e = evaluate(trial);
      if (!(e.residual < res)) break;
      x = trial;
      f = disc.values(to_complex(x));
      phi = disc.power_sum(f) / p;
      accept(e);
      res = e.residual;
      out.iterations = it + 1;
      continue;
    }

    double step = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
      const Eigen::VectorXd trial = x + step * dir;
      const Eigen::VectorXcd ft = disc.values(to_complex(trial));
      const double phit = disc.power_sum(ft) / p;
      if (phit <= phi + 1e-4 * step * slope) {
        x = trial;
        f = ft;
        phi = phit;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    out.iterations = it + 1;
    accept(evaluate(x));
    res = out.residual_history.back();
  }
  out.converged = res < tol;
  return out;
}

}  // namespace detail

namespace {

void validate(const TaylorPoly& k, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("extremal problems need 1 < p < infinity");
  if (k.is_zero()) throw std::invalid_argument("extremal kernel must be nonzero");
}

int resolve_degree_cap(const TaylorPoly& k, const ExtremalOptions& opt) {
  const int n = opt.degree_cap < 0 ? k.degree() + 32 : opt.degree_cap;
  if (n < k.degree()) throw std::invalid_argument("degree cap below the kernel degree");
  return n;
}

Eigen::VectorXcd padded(const TaylorPoly& f, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + 1);
  for (int i = 0; i <= std::min(n, f.degree()); ++i) v[i] = f[i];
  return v;
}

TaylorPoly from_vector(const Eigen::VectorXcd& v) { return TaylorPoly(std::vector<cplx>(v.data(), v.data() + v.size())); }

}  // namespace

std::string to_string(Space s) { return s == Space::bergman ? "bergman" : "hardy"; }

Space space_from_string(const std::string& s) {
  if (s == "bergman") return Space::bergman;
  if (s == "hardy") return Space::hardy;
  throw std::invalid_argument("unknown space: " + s);
}

ExtremalSolution solve_bergman_extremal(const TaylorPoly& k, double p, const ExtremalOptions& opt) {
  validate(k, p);
  const int n = resolve_degree_cap(k, opt);
  const int nr = opt.grid_r > 0 ? opt.grid_r : 2 * n + 8;
  const int nt = opt.grid_theta > 0 ? opt.grid_theta : static_cast<int>(default_grid_size(n));
  const PolarGrid grid(nr, nt);
  if (n > grid.max_degree()) throw std::invalid_argument("Bergman grid too coarse for the degree cap");

  detail::DiscreteMeasure mu{grid.nodes(), grid.area_weights()};
  Eigen::VectorXcd functional(n + 1);
  for (int i = 0; i <= n; ++i) functional[i] = k[i] / static_cast<double>(i + 1);

  const Eigen::VectorXcd init = padded(opt.initial ? *opt.initial : k, n);
  auto residual = [&](const Eigen::VectorXcd& a, double lambda) {
    return optimality_residual_bergman(from_vector(a), k, lambda, p, grid, n);
  };
  auto r = detail::sphere_ascent(mu, functional, p, init, opt.tol, opt.max_iterations, residual);

  ExtremalSolution sol;
  sol.F = from_vector(r.coeffs);
  sol.lambda = r.value;
  sol.residual = r.residual_history.back();
  sol.iterations = r.iterations;
  sol.converged = r.converged;
  sol.degree_cap = n;
  sol.grid_r = nr;
  sol.grid_theta = nt;
  sol.residual_history = std::move(r.residual_history);
  sol.objective_history = std::move(r.objective_history);
  return sol;
}

ExtremalSolution solve_hardy_extremal(const TaylorPoly& k, double p, const ExtremalOptions& opt) {
  validate(k, p);
  const int n = resolve_degree_cap(k, opt);
  const size_t m = opt.grid_m > 0 ? opt.grid_m : 2 * default_grid_size(n);
  if (!is_power_of_two(m) || static_cast<size_t>(n) >= m / 2)
    throw std::invalid_argument("Hardy boundary grid too coarse for the degree cap");

  detail::DiscreteMeasure mu;
  mu.nodes.resize(m);
  mu.weights.assign(m, 1.0 / static_cast<double>(m));
  mu.uniform_circle = true;
  for (size_t j = 0; j < m; ++j)
    mu.nodes[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
  const Eigen::VectorXcd functional = padded(k, n);

  const Eigen::VectorXcd init = padded(opt.initial ? *opt.initial : k, n);
  auto residual = [&](const Eigen::VectorXcd& a, double lambda) {
    return optimality_residual_hardy(from_vector(a), k, lambda, p, m, n);
  };
  auto r = detail::sphere_ascent(mu, functional, p, init, opt.tol, opt.max_iterations, residual);

  ExtremalSolution sol;
  sol.F = from_vector(r.coeffs);
  sol.lambda = r.value;
  sol.residual = r.residual_history.back();
  sol.iterations = r.iterations;
  sol.converged = r.converged;
  sol.degree_cap = n;
  sol.grid_theta = static_cast<int>(m);
  sol.residual_history = std::move(r.residual_history);
  sol.objective_history = std::move(r.objective_history);
  return sol;
}

ExtremalSolution solve_extremal(Space space, const TaylorPoly& k, double p, const ExtremalOptions& opt) {
  return space == Space::bergman ? solve_bergman_extremal(k, p, opt) : solve_hardy_extremal(k, p, opt);
}

double optimality_residual_bergman(const TaylorPoly& F, const TaylorPoly& k, double lambda, double p,
                                   const PolarGrid& grid, int max_degree) {
  const double pp = conjugate_exponent(p);
  const int n = max_degree < 0 ? grid.max_degree() : max_degree;
  const auto lift = nonlinear_lift(F, p, grid);
  const TaylorPoly diff = k - bergman_project(lift, grid, n) * lambda;
  return bergman_norm(diff, pp, grid) / bergman_norm(k, pp, grid);
}

double optimality_residual_hardy(const TaylorPoly& F, const TaylorPoly& k, double lambda, double p, size_t m,
                                 int max_degree) {
  const double pp = conjugate_exponent(p);
  if (m == 0) m = 2 * default_grid_size(std::max(F.degree(), k.degree()));
  TaylorPoly proj = szego_project(nonlinear_lift(F, p, m));
  if (max_degree >= 0) proj = proj.truncated(max_degree);
  const TaylorPoly diff = k - proj * lambda;
  return boundary_norm(BoundarySamples::from_poly(diff, m), pp) / boundary_norm(BoundarySamples::from_poly(k, m), pp);
}

RyabykhProfile ryabykh_profile(const TaylorPoly& k, double p, double q, Space space, const ExtremalOptions& opt,
                               std::vector<double> radii) {
  if (!(q > 0.0)) throw std::invalid_argument("ryabykh_profile needs q > 0");
  RyabykhProfile out;
  out.space = space;
  out.p = p;
  out.q = q;
  out.exponent = (p - 1.0) * q;
  out.solution = solve_extremal(space, k, p, opt);
  out.radii = std::move(radii);
  const size_t m = 2 * default_grid_size(out.solution.F.degree());
  for (double r : out.radii) out.means.push_back(integral_mean(out.solution.F, r, out.exponent, m));
  return out;
}

}  // namespace hardylab
