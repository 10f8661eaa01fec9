#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hardylab/corpus.hpp"
#include "hardylab/fourier.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/polar_grid.hpp"
#include "hardylab/taylor_poly.hpp"
#include "oracles.hpp"

using namespace hardylab;
using doctest::Approx;

namespace {
constexpr double kSixQuarter = 1.5650845800732873;   // 6^{1/4}
constexpr double kThirdQuarter = 0.7598356856515925; // (1/3)^{1/4}
}  // namespace

TEST_CASE("TaylorPoly degree and trimming") {
  CHECK(TaylorPoly().degree() == 0);
  CHECK(TaylorPoly().is_zero());
  CHECK(TaylorPoly({1.0, 2.0, 0.0, 0.0}).degree() == 1);
  CHECK(TaylorPoly({0.0, 0.0}).is_zero());
  const TaylorPoly f({3.0, cplx(0, 1), 2.0});
  CHECK(f.eval(0.0) == cplx(3.0));
  CHECK(f[7] == cplx(0.0));
  CHECK(f.derivative() == TaylorPoly({cplx(0, 1), 4.0}));
  CHECK(f.truncated(1) == TaylorPoly({3.0, cplx(0, 1)}));
}

TEST_CASE("eval examples") {
  CHECK(eval(TaylorPoly({1.0, 1.0}), 0.0) == cplx(1.0));
  const cplx v = eval(TaylorPoly::monomial(3, 1.0), cplx(0, 1));
  CHECK(v.real() == Approx(0.0));
  CHECK(v.imag() == Approx(-1.0));
  CHECK(eval(TaylorPoly({1.0, 2.0, 1.0}), 0.5).real() == Approx(2.25));
}

TEST_CASE("integral_mean examples") {
  CHECK(integral_mean(TaylorPoly::monomial(1, 1.0), 0.5, 2.0) == Approx(0.5).epsilon(1e-14));
  for (double r : {0.0, 0.3, 1.0})
    for (double p : {1.0, 4.0 / 3.0, 3.0}) CHECK(integral_mean(TaylorPoly({1.0}), r, p) == Approx(1.0));
  const TaylorPoly f({1.0, 1.0});
  // (2 + 2 cos t)^2 = 4 + 8 cos t + 4 cos^2 t, whose circle mean is 6
  CHECK(integral_mean(f, 1.0, 4.0) == Approx(kSixQuarter).epsilon(1e-13));
  CHECK(integral_mean(f, 1.0, 4.0) == Approx(oracle::lp_mean({1.0, 1.0}, 4.0)).epsilon(1e-12));
  CHECK_THROWS_AS(integral_mean(f, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integral_mean(f, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("hardy_norm examples") {
  for (int n : {0, 1, 5})
    for (double p : {1.0, 2.0, 3.5}) CHECK(hardy_norm(TaylorPoly::monomial(n, 1.0), p).norm_estimate == Approx(1.0));
  CHECK(hardy_norm(TaylorPoly({1.0, 1.0}), 2.0).norm_estimate == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(hardy_norm(TaylorPoly({1.0, 1.0}), 4.0).norm_estimate == Approx(kSixQuarter).epsilon(1e-13));
}

TEST_CASE("bergman_norm examples") {
  const auto grid = PolarGrid::default_grid();
  CHECK(bergman_norm(TaylorPoly({1.0}), 2.0, grid) == Approx(1.0).epsilon(1e-13));
  CHECK(bergman_norm(TaylorPoly::monomial(1, 1.0), 2.0, grid) == Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(bergman_norm(TaylorPoly::monomial(1, 1.0), 4.0, grid) == Approx(kThirdQuarter).epsilon(1e-13));
  const auto ref = oracle::disc_integral([](cplx z) { return std::pow(std::abs(1.0 + z), 3.0); });
  CHECK(bergman_norm(TaylorPoly({1.0, 1.0}), 3.0, grid) == Approx(std::cbrt(ref.real())).epsilon(1e-7));
}

TEST_CASE("nonlinear_lift examples") {
  const TaylorPoly F({0.5, cplx(0.2, -0.1), 0.3});
  const auto at2 = nonlinear_lift(F, 2.0, 64);
  const auto plain = BoundarySamples::from_poly(F, 64);
  for (size_t j = 0; j < 64; ++j) CHECK(std::abs(at2[j] - plain[j]) < 1e-15);
  const cplx c(0.6, -0.8);
  const auto cl = nonlinear_lift(TaylorPoly({c}), 3.0, 16);
  for (size_t j = 0; j < 16; ++j) CHECK(std::abs(cl[j] - std::abs(c) * c) < 1e-15);
  const auto zl = nonlinear_lift(TaylorPoly::monomial(1, 1.0), 4.0, 32);
  for (size_t j = 0; j < 32; ++j) CHECK(std::abs(zl[j] - std::polar(1.0, zl.theta(j))) < 1e-14);
  CHECK(lift_value(0.0, 1.5) == cplx(0.0));
}

TEST_CASE("check_isoperimetric examples") {
  const auto grid = PolarGrid::default_grid();
  auto c = check_isoperimetric(TaylorPoly({1.0}), 2.0, grid);
  CHECK(c.a_norm == Approx(1.0));
  CHECK(c.h_norm == Approx(1.0));
  CHECK(c.ok);
  c = check_isoperimetric(TaylorPoly::monomial(1, 1.0), 2.0, grid);
  CHECK(c.a_norm == Approx(kThirdQuarter).epsilon(1e-12));
  CHECK(c.h_norm == Approx(1.0));
  CHECK(c.ok);
  c = check_isoperimetric(TaylorPoly({1.0, 1.0}), 2.0, grid);
  const auto ref = oracle::disc_integral([](cplx z) { return std::pow(std::abs(1.0 + z), 4.0); });
  CHECK(c.a_norm == Approx(std::pow(ref.real(), 0.25)).epsilon(1e-8));
  CHECK(c.h_norm == Approx(std::sqrt(2.0)));
  CHECK(c.ok);
  CHECK_THROWS(check_isoperimetric(TaylorPoly({1.0}), 0.5, grid));
}

TEST_CASE("polar grid: normalized area and moments") {
  for (int nr : {16, 64}) {
    const PolarGrid g(nr, 32);
    double total = 0.0;
    for (int i = 0; i < g.n_radial(); ++i) total += g.area_weight(i) * g.n_theta();
    CHECK(std::abs(total - 1.0) < 1e-12);
    for (int m = 0; m <= nr / 2; ++m) {
      double s = 0.0;
      for (int i = 0; i < g.n_radial(); ++i) s += g.area_weight(i) * g.n_theta() * std::pow(g.r(i), 2 * m);
      CHECK(std::abs(s - 1.0 / (m + 1)) < 1e-10);
    }
  }
}

TEST_CASE("radial rule handles log(1/r) moments") {
  const auto gl = gauss_legendre(64);
  for (int m = 0; m <= 10; ++m) {
    double s = 0.0;
    for (size_t i = 0; i < gl.nodes.size(); ++i)
      s += gl.weights[i] * std::pow(gl.nodes[i], 2 * m + 1) * std::log(1.0 / gl.nodes[i]);
    const double exact = 1.0 / ((2.0 * m + 2.0) * (2.0 * m + 2.0));
    CHECK(std::abs(s - exact) < 1e-6 * exact);
  }
}

TEST_CASE("composite polar grid") {
  const auto g = PolarGrid::panels({0.1, 0.4, 1.0}, 8, 16);
  CHECK(g.n_radial() == 16);
  double s = 0.0;
  for (int i = 0; i < g.n_radial(); ++i) s += g.radial_weight(i) * g.r(i) * g.r(i);
  CHECK(s == Approx((1.0 - 0.001) / 3.0).epsilon(1e-13));
  CHECK_THROWS(PolarGrid::panels({0.5, 0.2}, 4, 8));
}

TEST_CASE("boundary samples round trip") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_poly(rng, 16);
    const size_t m = default_grid_size(f.degree());
    CHECK(m >= 4 * static_cast<size_t>(f.degree()) + 16);
    CHECK(is_power_of_two(m));
    const auto s = BoundarySamples::from_poly(f, m);
    const auto c = s.fourier();
    double scale = 0.0, err = 0.0;
    for (int n = 0; n <= f.degree(); ++n) {
      scale = std::max(scale, std::abs(f[n]));
      err = std::max(err, std::abs(c.at(n) - f[n]));
    }
    for (int n = c.min_freq(); n < 0; ++n) err = std::max(err, std::abs(c.at(n)));
    CHECK(err <= 1e-12 * scale);
    const auto back = c.to_samples();
    for (size_t j = 0; j < m; ++j) CHECK(std::abs(back[j] - s[j]) < 1e-12);
  }
  CHECK_THROWS(BoundarySamples::from_poly(TaylorPoly::monomial(8, 1.0), 16));
  CHECK_THROWS(BoundarySamples(std::vector<cplx>(12)));
}

TEST_CASE("integral means are nondecreasing in r") {
  const auto corpus = poly_corpus(11, 20, 12);
  for (const auto& f : corpus)
    for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0}) {
      const auto rep = hardy_norm(f, p, 0, 50);
      REQUIRE(rep.means.size() == 50);
      for (size_t i = 1; i < rep.means.size(); ++i) CHECK(rep.means[i] >= rep.means[i - 1] - 1e-10);
      CHECK(rep.norm_estimate == Approx(rep.means.back()));
    }
}

TEST_CASE("Parseval") {
  for (const auto& f : poly_corpus(12, 20, 16)) {
    const double h2 = hardy_norm(f, 2.0).norm_estimate;
    CHECK(h2 * h2 == Approx(f.coefficient_energy()).epsilon(1e-10));
  }
}

TEST_CASE("Bergman grid exactness for monomials") {
  const auto grid = PolarGrid::default_grid();
  for (int n = 0; n <= grid.max_degree(); ++n) {
    const double b = bergman_norm(TaylorPoly::monomial(n, 1.0), 2.0, grid);
    CHECK(std::abs(b * b - 1.0 / (n + 1)) < 1e-10);
  }
}

TEST_CASE("lift modulus is |F|^{p-1}") {
  for (const auto& F : poly_corpus(13, 10, 8))
    for (double p : {4.0 / 3.0, 3.0, 6.0}) {
      const auto values = BoundarySamples::from_poly(F, 64);
      const auto lift = nonlinear_lift(F, p, 64);
      for (size_t j = 0; j < 64; ++j) {
        const double a = std::abs(values[j]);
        if (a == 0.0) continue;
        CHECK(std::abs(std::abs(lift[j]) - std::pow(a, p - 1.0)) <= 1e-12 * std::max(1.0, std::pow(a, p - 1.0)));
      }
    }
}

TEST_CASE("isoperimetric inequality on a corpus") {
  const auto grid = PolarGrid::default_grid();
  for (const auto& h : poly_corpus(14, 100, 12))
    for (double p : {4.0 / 3.0, 2.0, 4.0}) CHECK(check_isoperimetric(h, p, grid).ok);
}

TEST_CASE("roots of polynomials") {
  const TaylorPoly f({cplx(-0.25), 0.0, 1.0});  // z^2 - 1/4
  auto r = roots(f);
  REQUIRE(r.size() == 2);
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  CHECK(std::abs(r[0] + 0.5) < 1e-14);
  CHECK(std::abs(r[1] - 0.5) < 1e-14);
  for (const auto& g : poly_corpus(15, 10, 16))
    for (const cplx z : roots(g)) CHECK(std::abs(g.eval(z)) < 1e-9 * std::max(1.0, std::pow(std::abs(z), g.degree())));
}

TEST_CASE("corpora are seeded and prefix stable") {
  const auto a = poly_corpus(5, 30, 16);
  const auto b = poly_corpus(5, 10, 16);
  for (size_t i = 0; i < b.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(poly_corpus(6, 1, 16)[0] != a[0]);
  for (const auto& f : a) {
    CHECK(f.degree() <= 16);
    for (const cplx c : f.coeffs()) CHECK(std::abs(c) <= 1.0);
  }
  for (const auto& k : kernel_corpus(5, 20, 3)) {
    CHECK(k[0] == cplx(1.0));
    CHECK(k.degree() <= 3);
  }
  for (const auto& F : zero_free_corpus(5, 20, 4)) {
    double tail = 0.0;
    for (int n = 1; n <= F.degree(); ++n) tail += std::abs(F[n]);
    CHECK(tail < std::abs(F[0]));
  }
  Rng r1(9), r2(9);
  for (int i = 0; i < 100; ++i) {
    const double u = r1.uniform();
    CHECK(u == r2.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
