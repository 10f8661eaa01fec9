#pragma once

// Reference computations that share no code with the library: plain loops,
// composite Simpson rules and closed forms.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// (1/2pi) int_0^{2pi} g(theta) dtheta by the periodic trapezoid rule.
inline double circle_mean(const std::function<double(double)>& g, int n = 4096) {
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += g(2.0 * pi * j / n);
  return s / n;
}

/// Composite Simpson rule on [a, b] with n (even) intervals.
inline double simpson(const std::function<double(double)>& g, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = g(a) + g(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return s * h / 3.0;
}

/// int_D f dA/pi, Simpson in r and trapezoid in theta.
inline cplx disc_integral(const std::function<cplx(cplx)>& f, int nr = 400, int nt = 256) {
  auto part = [&](bool imag) {
    return simpson(
               [&](double r) {
                 double s = 0.0;
                 for (int j = 0; j < nt; ++j) {
                   const cplx v = f(std::polar(r, 2.0 * pi * j / nt));
                   s += imag ? v.imag() : v.real();
                 }
                 return s * r * 2.0 / nt;
               },
               0.0, 1.0, nr);
  };
  return {part(false), part(true)};
}

/// Hardy L^p mean on the circle of radius r.
inline double lp_mean(const std::vector<cplx>& c, double p, double r = 1.0, int n = 4096) {
  return std::pow(circle_mean([&](double t) { return std::pow(std::abs(horner(c, std::polar(r, t))), p); }, n),
                  1.0 / p);
}

/// d/dz of g at z by centered differences, (d/dx - i d/dy) / 2.
inline cplx dz_fd(const std::function<cplx(cplx)>& g, cplx z, double h = 1e-5) {
  const cplx dx = (g(z + h) - g(z - h)) / (2.0 * h);
  const cplx dy = (g(z + cplx(0, h)) - g(z - cplx(0, h))) / (2.0 * h);
  return 0.5 * (dx - cplx(0, 1) * dy);
}

}  // namespace oracle
