#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hardylab/corpus.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/squarefn.hpp"
#include "oracles.hpp"

using namespace hardylab;
using doctest::Approx;

namespace {
constexpr double kHalfRoot = 0.7071067811865476;     // sqrt(1/2)
constexpr double kThirdRoot = 0.5773502691896257;    // sqrt(1/3)
constexpr double kTwelfthRoot = 0.28867513459481287; // sqrt(1/12)
constexpr double kPi = std::numbers::pi;

const PolarGrid& grid() {
  static const PolarGrid g(32, 128);
  return g;
}
}  // namespace

TEST_CASE("grad_modulus_power examples") {
  const auto one = grad_modulus_power(TaylorPoly::monomial(1), 1.0, grid());
  for (double v : one.values) CHECK(v == Approx(1.0).epsilon(1e-14));
  const auto sq = grad_modulus_power(TaylorPoly::monomial(2), 1.0, grid());
  for (int i = 0; i < grid().n_radial(); ++i)
    for (int j = 0; j < grid().n_theta(); ++j)
      CHECK(sq.values[grid().index(i, j)] == Approx(4.0 * grid().r(i) * grid().r(i)).epsilon(1e-13));
  for (double v : grad_modulus_power(TaylorPoly({cplx(0.3, 0.4)}), 0.7, grid()).values) CHECK(v == 0.0);
  CHECK_THROWS(grad_modulus_power(TaylorPoly::monomial(1), 0.0, grid()));
  const TaylorPoly at_node({-grid().r(0), 1.0});
  CHECK_THROWS(grad_modulus_power(at_node, 0.5, grid()));
  CHECK_NOTHROW(grad_modulus_power(at_node, 1.0, grid()));
}

TEST_CASE("|grad |F|| equals |F'| for analytic F") {
  for (const auto& F : zero_free_corpus(31, 5, 4)) {
    const auto field = grad_modulus_power(F, 1.0, grid());
    const auto dF = F.derivative();
    for (int i = 0; i < grid().n_radial(); i += 5)
      for (int j = 0; j < grid().n_theta(); j += 7) {
        const cplx z = grid().node(i, j);
        const double h = 1e-5;
        const double gx = (std::abs(F.eval(z + h)) - std::abs(F.eval(z - h))) / (2 * h);
        const double gy = (std::abs(F.eval(z + cplx(0, h))) - std::abs(F.eval(z - cplx(0, h)))) / (2 * h);
        CHECK(field.values[grid().index(i, j)] == Approx(std::norm(dF.eval(z))).epsilon(1e-10));
        CHECK(std::sqrt(gx * gx + gy * gy) == Approx(std::abs(dF.eval(z))).epsilon(1e-8));
      }
  }
}

TEST_CASE("square_function examples") {
  const auto one = grad_modulus_power(TaylorPoly::monomial(1), 1.0, grid());
  for (double t : {0.0, 1.0, 4.0}) CHECK(square_function(one, t) == Approx(kHalfRoot).epsilon(1e-12));
  CHECK(square_function(grad_modulus_power(TaylorPoly({2.0}), 1.0, grid()), 0.3) == 0.0);
  const auto sq = grad_modulus_power(TaylorPoly::monomial(2), 1.0, grid());
  CHECK(square_function(sq, 2.0) == Approx(kThirdRoot).epsilon(1e-12));
  CHECK(ConeSpec{}.area() == Approx(0.5));
  CHECK(ConeSpec{.r_min = 0.1}.area() == Approx(0.405));
}

TEST_CASE("square_function_sz examples") {
  const auto& g = grid();
  auto dz_of = [&](const MixedPoly& f) {
    std::vector<cplx> d(g.size());
    for (int i = 0; i < g.n_radial(); ++i)
      for (int j = 0; j < g.n_theta(); ++j) d[g.index(i, j)] = f.dz(g.node(i, j));
    return d;
  };
  CHECK(square_function_sz(dz_of(MixedPoly({{0, 1, 1.0}})), g, 0.5) == 0.0);
  CHECK(square_function_sz(dz_of(MixedPoly({{1, 0, 1.0}})), g, 0.5) == Approx(kHalfRoot).epsilon(1e-12));
  CHECK(square_function_sz(dz_of(MixedPoly({{1, 1, 1.0}})), g, 0.5) == Approx(kTwelfthRoot).epsilon(1e-12));
}

TEST_CASE("square function sweep agrees with single cones") {
  const TaylorPoly F({0.5, cplx(0.2, 0.3), -0.4, 0.1});
  const auto field = grad_modulus_power(F, 1.5, grid());
  const auto sweep = square_function_sweep(field);
  for (int j = 0; j < grid().n_theta(); j += 9) CHECK(sweep[j] == Approx(square_function(field, grid().theta(j))).epsilon(1e-12));
}

TEST_CASE("cone area identity with an independent radial rule") {
  const double area = oracle::simpson([](double r) { return 1.0 - r; }, 0.0, 1.0, 10);
  CHECK(area == Approx(0.5).epsilon(1e-15));
  const auto one = grad_modulus_power(TaylorPoly::monomial(1), 1.0, grid());
  for (int j = 0; j < 16; ++j) CHECK(std::abs(square_function(one, 2.0 * kPi * j / 16) - std::sqrt(area)) < 1e-8);
}

TEST_CASE("rotation equivariance") {
  for (const auto& F : poly_corpus(32, 5, 8)) {
    const double alpha = 0.7;
    const auto a = grad_modulus_power(F, 2.0, grid());
    const auto b = grad_modulus_power(F.rotated(alpha), 2.0, grid());
    for (double t : {0.0, 1.3, 3.1}) CHECK(std::abs(square_function(b, t) - square_function(a, t + alpha)) < 1e-8);
  }
}

TEST_CASE("absolute homogeneity") {
  const cplx c(0.6, -1.7);
  for (const auto& F : zero_free_corpus(33, 5, 4))
    for (double delta : {0.5, 1.0, 2.0}) {
      const double s1 = square_function(grad_modulus_power(F, delta, grid()), 0.4);
      const double s2 = square_function(grad_modulus_power(F * c, delta, grid()), 0.4);
      CHECK(s2 == Approx(std::pow(std::abs(c), delta) * s1).epsilon(1e-10));
    }
}

TEST_CASE("S_z of the lift is a multiple of S(|F|^{p-1})") {
  for (const auto& F : zero_free_corpus(34, 10, 4))
    for (double p : {4.0 / 3.0, 3.0, 4.0}) {
      const double sz = square_function(lift_dz_field_fd(F, p, grid()), 1.1);
      const double s = square_function(grad_modulus_power(F, p - 1.0, grid()), 1.1);
      CHECK(std::abs(sz - (p / 2.0) / (p - 1.0) * s) <= 1e-6 * s);
    }
}

TEST_CASE("nontangential_max examples") {
  CHECK(nontangential_max(TaylorPoly({1.0}), 0.3) == Approx(1.0));
  for (double t : {0.0, 2.0, 5.0}) CHECK(nontangential_max(TaylorPoly::monomial(1), t) == Approx(1.0));
  std::vector<cplx> geo(31);
  for (int n = 0; n <= 30; ++n) geo[n] = std::pow(0.5, n);
  const TaylorPoly h(geo);
  double dense = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double r = i / 2000.0;
    for (int k = -20; k <= 20; ++k) dense = std::max(dense, std::abs(oracle::horner(geo, std::polar(r, k / 20.0 * 0.5 * (1 - r)))));
  }
  CHECK(nontangential_max(h, 0.0) == Approx(dense).epsilon(1e-12));
  CHECK(nontangential_max(h, 0.0) == Approx(2.0).epsilon(1e-8));
}

TEST_CASE("nontangential_max dominates radial values") {
  for (const auto& h : poly_corpus(35, 10, 10))
    for (double t : {0.0, 0.9, 2.5}) {
      const double m = nontangential_max(h, t);
      for (int i = 0; i <= 64; ++i) CHECK(m >= std::abs(h.eval(std::polar(i / 64.0, t))) - 1e-15);
    }
}

TEST_CASE("calderon_ratios examples") {
  const auto z = calderon_ratios(TaylorPoly::monomial(1), 1.0, 2.0);
  CHECK(z.upper == Approx(kHalfRoot).epsilon(1e-10));
  REQUIRE(z.lower.has_value());
  CHECK(*z.lower == Approx(std::sqrt(2.0)).epsilon(1e-10));
  const auto c = calderon_ratios(TaylorPoly({0.8}), 1.0, 2.0);
  CHECK(c.upper == 0.0);
  CHECK_FALSE(c.lower.has_value());
  const TaylorPoly z2 = TaylorPoly::monomial(2);
  const auto base = calderon_ratios(z2, 0.5, 4.0);
  const auto fine = calderon_ratios(z2, 0.5, 4.0, CalderonGrid{}.doubled());
  CHECK(base.upper > 0.0);
  CHECK(std::isfinite(base.upper));
  CHECK(std::abs(base.upper - fine.upper) <= 0.02 * fine.upper);
  CHECK(std::abs(*base.lower - *fine.lower) <= 0.02 * *fine.lower);
  CHECK_THROWS(calderon_ratios(TaylorPoly(), 1.0, 2.0));
}

TEST_CASE("calderon ratios on truncated cones are stable") {
  const CalderonGrid cg{32, 512, 0.1};
  for (const auto& F : poly_corpus(36, 4, 8, true)) {
    const auto a = calderon_ratios(F, 0.5, 2.0, cg);
    const auto b = calderon_ratios(F, 0.5, 2.0, cg.doubled());
    CHECK(std::abs(a.upper - b.upper) <= 0.02 * b.upper);
  }
}

TEST_CASE("lift_sz_identity_check examples") {
  CHECK(lift_sz_identity_check(TaylorPoly::monomial(1), 2.0) < 1e-8);
  CHECK(lift_sz_identity_check(TaylorPoly::monomial(1), 4.0) < 1e-6);
  CHECK(lift_sz_identity_check(TaylorPoly({1.0, 0.5}), 3.0) < 1e-6);
  const cplx z(0.3, 0.4);
  const cplx fd = oracle::dz_fd([](cplx w) { return std::norm(w) * w; }, z);
  CHECK(std::abs(fd) == Approx(2.0 * std::norm(z)).epsilon(1e-8));
}
