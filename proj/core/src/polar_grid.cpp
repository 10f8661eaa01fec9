#include "hardylab/polar_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardylab {

GaussLegendre gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root; store ascending.
    gl.nodes[n - 1 - i] = mid + half * x;
    gl.nodes[i] = mid - half * x;
    gl.weights[n - 1 - i] = half * w;
    gl.weights[i] = half * w;
  }
  return gl;
}

PolarGrid::PolarGrid(int n_radial, int n_theta, double outer, double inner)
    : n_theta_(n_theta), outer_(outer), inner_(inner) {
  if (n_radial < 1 || n_theta < 1) throw std::invalid_argument("polar grid needs positive sizes");
  if (!(outer > 0.0 && outer <= 1.0)) throw std::invalid_argument("polar grid radius must lie in (0, 1]");
  if (!(inner >= 0.0 && inner < outer)) throw std::invalid_argument("polar grid inner radius must lie in [0, outer)");
  auto gl = gauss_legendre(n_radial, inner, outer);
  r_ = std::move(gl.nodes);
  wr_ = std::move(gl.weights);
  area_.resize(r_.size());
  // dA/pi = r dr dtheta / pi, and the theta rule has weight 2 pi / n_theta.
  for (size_t i = 0; i < r_.size(); ++i) area_[i] = wr_[i] * r_[i] * 2.0 / n_theta_;
}

PolarGrid::PolarGrid(std::vector<double> r, std::vector<double> wr, int n_theta)
    : r_(std::move(r)), wr_(std::move(wr)), n_theta_(n_theta), outer_(1.0), inner_(0.0) {
  if (r_.empty() || n_theta < 1) throw std::invalid_argument("polar grid needs positive sizes");
  inner_ = r_.front();
  outer_ = r_.back();
  area_.resize(r_.size());
  for (size_t i = 0; i < r_.size(); ++i) area_[i] = wr_[i] * r_[i] * 2.0 / n_theta_;
}

PolarGrid PolarGrid::panels(const std::vector<double>& breaks, int n_per_panel, int n_theta) {
  if (breaks.size() < 2) throw std::invalid_argument("composite grid needs at least two breaks");
  if (!std::is_sorted(breaks.begin(), breaks.end()) || breaks.front() < 0.0 || breaks.back() > 1.0)
    throw std::invalid_argument("composite grid breaks must be ascending within [0, 1]");
  std::vector<double> r, w;
  for (size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (!(breaks[k + 1] > breaks[k])) continue;
    const auto gl = gauss_legendre(n_per_panel, breaks[k], breaks[k + 1]);
    r.insert(r.end(), gl.nodes.begin(), gl.nodes.end());
    w.insert(w.end(), gl.weights.begin(), gl.weights.end());
  }
  PolarGrid g(std::move(r), std::move(w), n_theta);
  g.inner_ = breaks.front();
  g.outer_ = breaks.back();
  return g;
}

double PolarGrid::theta(int j) const { return 2.0 * std::numbers::pi * j / n_theta_; }

cplx PolarGrid::node(int i, int j) const { return std::polar(r_[i], theta(j)); }

std::vector<cplx> PolarGrid::nodes() const {
  std::vector<cplx> out(size());
  for (int i = 0; i < n_radial(); ++i)
    for (int j = 0; j < n_theta_; ++j) out[index(i, j)] = node(i, j);
  return out;
}

std::vector<double> PolarGrid::area_weights() const {
  std::vector<double> out(size());
  for (int i = 0; i < n_radial(); ++i)
    for (int j = 0; j < n_theta_; ++j) out[index(i, j)] = area_[i];
  return out;
}

int PolarGrid::max_degree() const { return std::min(n_theta_ / 2 - 1, n_radial() - 1); }

}  // namespace hardylab
