#include <cmath>

#include "doctest.h"
#include "hardylab/corpus.hpp"
#include "hardylab/dual_approx.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/projections.hpp"

using namespace hardylab;
using doctest::Approx;

namespace {
constexpr double kSqrtTwo = 1.4142135623730951;

BoundarySamples trig(std::function<cplx(double)> f, size_t m = 128) { return BoundarySamples::from_function(f, m); }
}  // namespace

TEST_CASE("solve_dual_min examples") {
  const auto z = solve_dual_min(BoundarySamples::from_poly(TaylorPoly::monomial(1), 64), 2.0);
  CHECK(max_coeff_diff(z.g, TaylorPoly::monomial(1)) < 1e-10);
  CHECK(z.min_norm < 1e-10);
  for (double q : {4.0 / 3.0, 2.0, 4.0}) {
    const auto one = solve_dual_min(BoundarySamples::from_poly(TaylorPoly({1.0}), 64), q);
    CHECK(one.g.is_zero());
    CHECK(one.min_norm == Approx(1.0).epsilon(1e-12));
  }
  const auto anti = solve_dual_min(trig([](double t) { return std::polar(1.0, -t); }), 2.0);
  CHECK(max_coeff_diff(anti.g, TaylorPoly()) < 1e-12);
  CHECK(anti.min_norm == Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(solve_dual_min(BoundarySamples::from_poly(TaylorPoly({1.0}), 64), 1.0));
}

TEST_CASE("dual minimizer has g(0) = 0 exactly") {
  for (const auto& k : trig_corpus(51, 10, 4, 128))
    for (double q : {4.0 / 3.0, 4.0}) CHECK(solve_dual_min(k, q).g[0] == cplx(0.0));
}

TEST_CASE("duality_gap examples") {
  const auto one = duality_gap(TaylorPoly({1.0}), 2.0);
  CHECK(one.gap < 1e-12);
  CHECK(one.primal == Approx(1.0));
  const auto anti = duality_gap(trig([](double t) { return std::polar(1.0, -t); }), 4.0);
  CHECK(anti.primal == Approx(1.0).epsilon(1e-9));
  CHECK(anti.dual == Approx(1.0).epsilon(1e-9));
  CHECK(max_coeff_diff(anti.primal_solution.F, TaylorPoly::monomial(1)) < 1e-6);
  const auto mixed = duality_gap(trig([](double t) { return 1.0 + 0.5 * std::polar(1.0, -t); }), 4.0 / 3.0);
  CHECK(mixed.gap < 1e-4);
  CHECK(mixed.kernel_residual < 1e-3);
}

TEST_CASE("weak duality and Holder proportionality") {
  for (const auto& k : kernel_corpus(52, 8, 3))
    for (double p : {4.0 / 3.0, 4.0}) {
      const auto r = duality_gap(k, p);
      CHECK(r.primal <= r.dual + 1e-8);
      CHECK(r.dual_solution.min_norm >= r.primal - 1e-6);
      CHECK(r.gap < 1e-4);
      CHECK(r.holder_spread < 1e-4);
      CHECK(r.dual_solution.g[0] == cplx(0.0));
    }
}

TEST_CASE("extremal_kernel_residual examples") {
  const auto one = BoundarySamples::from_poly(TaylorPoly({1.0}), 64);
  CHECK(extremal_kernel_residual(one, TaylorPoly(), TaylorPoly({1.0}), 1.0, 4.0) < 1e-14);
  const auto anti = trig([](double t) { return std::polar(1.0, -t); }, 64);
  CHECK(extremal_kernel_residual(anti, TaylorPoly(), TaylorPoly::monomial(1), 1.0, 4.0) < 1e-14);
}

TEST_CASE("pairing convention is an involution") {
  for (const auto& k : kernel_corpus(53, 5, 3)) {
    const auto kd = conjugate_coefficients(k, 64);
    CHECK(max_coeff_diff(extremal_form(kd), k) < 1e-14);
    for (size_t j = 0; j < 64; ++j) CHECK(std::abs(kd[j] - std::conj(k.eval(std::polar(1.0, kd.theta(j))))) < 1e-14);
  }
}

TEST_CASE("best_analytic_approx examples") {
  const TaylorPoly h({0.2, cplx(0, 0.5), -0.3});
  const auto a = best_analytic_approx(BoundarySamples::from_poly(h, 64), 4.0);
  CHECK(max_coeff_diff(a.f, h) < 1e-10);
  CHECK(a.distance < 1e-10);
  const auto zbar = best_analytic_approx(trig([](double t) { return std::polar(1.0, -t); }), 2.0);
  CHECK(max_coeff_diff(zbar.f, TaylorPoly()) < 1e-12);
  CHECK(zbar.distance == Approx(1.0).epsilon(1e-12));
  const auto cosine = best_analytic_approx(trig([](double t) { return cplx(2.0 * std::cos(t)); }), 2.0);
  CHECK(max_coeff_diff(cosine.f, TaylorPoly::monomial(1)) < 1e-12);
  CHECK(cosine.distance == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("best approximation at p = 2 is the Szego projection") {
  for (const auto& k : trig_corpus(54, 10, 6, 128)) {
    const auto a = best_analytic_approx(k, 2.0);
    CHECK(max_coeff_diff(a.f, szego_project(k)) < 1e-8);
  }
}

TEST_CASE("best approximation distance is translation equivariant") {
  const TaylorPoly shift({0.7, cplx(-0.2, 0.4), 0.3});
  for (const auto& k : trig_corpus(55, 5, 4, 128))
    for (double p : {4.0 / 3.0, 2.0, 4.0}) {
      const auto a = best_analytic_approx(k, p);
      const auto b = best_analytic_approx(k + BoundarySamples::from_poly(shift, 128), p);
      CHECK(std::abs(a.distance - b.distance) < 1e-8);
      CHECK(max_coeff_diff(b.f, a.f + shift) < 1e-6);
    }
}

TEST_CASE("cross_norm_report examples") {
  const TaylorPoly h({1.0, 0.5});
  const auto hk = BoundarySamples::from_poly(h, 64);
  const auto an = cross_norm_report(h, hk, 3.0, 0.2);
  CHECK(an.applicable);
  CHECK(an.ok);
  CHECK(an.bound >= 3.0 * an.f_norm_q);
  const auto zb = cross_norm_report(TaylorPoly(), trig([](double t) { return std::polar(1.0, -t); }, 64), 2.0, 0.0);
  CHECK(zb.ok);
  CHECK(zb.f_norm_q == 0.0);
  CHECK(zb.bound == Approx(3.0));
  const auto c4 = cross_norm_report(TaylorPoly::monomial(1), trig([](double t) { return cplx(2.0 * std::cos(t)); }, 64),
                                    4.0, 0.0);
  CHECK(c4.f_norm_q == Approx(1.0));
  // ||2 cos||_4 = (mean 16 cos^4)^{1/4} = 6^{1/4}
  CHECK(c4.bound == Approx(3.0 * kSqrtTwo * 1.5650845800732873).epsilon(1e-12));
  CHECK(c4.tight_bound == Approx(2.0 * kSqrtTwo * 1.5650845800732873).epsilon(1e-12));
  CHECK(c4.ok);
  CHECK_FALSE(cross_norm_report(h, hk, 2.0, 1.0).applicable);
}
