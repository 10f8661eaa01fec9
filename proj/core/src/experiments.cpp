#include "hardylab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "hardylab/corpus.hpp"
#include "hardylab/dual_approx.hpp"
#include "hardylab/fourier.hpp"
#include "hardylab/green.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/projections.hpp"
#include "hardylab/squarefn.hpp"

namespace hardylab {

BpinhardyRatio bpinhardy_ratio(const MixedPoly& f, double p, const PolarGrid& grid) {
  if (!(p > 1.0)) throw std::invalid_argument("bpinhardy_ratio needs p > 1");
  BpinhardyRatio out;
  const TaylorPoly pf = bergman_project(f);
  out.lhs = pf.is_zero() ? 0.0 : integral_mean(pf, 1.0, p);
  const auto s = square_function_sweep(dz_field(f, grid));
  out.sz_norm = mean_norm(std::span<const double>(s), p);
  std::vector<cplx> values(grid.size());
  for (int i = 0; i < grid.n_radial(); ++i)
    for (int j = 0; j < grid.n_theta(); ++j) values[grid.index(i, j)] = f.eval(grid.node(i, j));
  out.disc_norm = disc_norm(values, 2.0 * p / (p + 1.0), grid);
  out.rhs = out.sz_norm + out.disc_norm;
  out.ratio = out.lhs / out.rhs;
  return out;
}

BoundCheck hardy_extremal_bound_check(const TaylorPoly& k, double p, double q, const ConstantsLedger* ledger,
                                      const ExtremalOptions& opt, double rel_tol) {
  BoundCheck out;
  if (p == 2.0) {
    out.ctilde = 0.0;
  } else {
    if (!ledger) throw MissingLedgerEntry("hardy_extremal_bound_check needs a ledger for p != 2");
    out.ctilde = assemble_ctilde(q, p, *ledger);
  }
  if (!(out.ctilde < 1.0)) return out;
  const auto sol = solve_hardy_extremal(k, p, opt);
  const double e = (p - 1.0) * q;
  out.lhs = std::pow(integral_mean(sol.F, 1.0, e), p - 1.0);
  out.rhs = integral_mean(k, 1.0, q) / ((1.0 - out.ctilde) * sol.lambda);
  out.outcome = out.lhs <= out.rhs * (1.0 + rel_tol) ? Outcome::pass : Outcome::fail;
  return out;
}

BoundCheck szego_lower_bound_check(const TaylorPoly& F, double p, double q, const ConstantsLedger* ledger,
                                   size_t m, double rel_tol) {
  BoundCheck out;
  if (p == 2.0) {
    out.ctilde = 0.0;
  } else {
    if (!ledger) throw MissingLedgerEntry("szego_lower_bound_check needs a ledger for p != 2");
    out.ctilde = assemble_ctilde(q, p, *ledger);
  }
  if (!(out.ctilde < 1.0)) return out;
  if (m == 0) m = 4 * default_grid_size(F.degree());
  const auto f = nonlinear_lift(F, p, m);
  out.lhs = boundary_norm(BoundarySamples::from_poly(szego_project(f), m), q);
  out.rhs = (1.0 - out.ctilde) * boundary_norm(f, q);
  out.outcome = out.lhs >= out.rhs * (1.0 - rel_tol) ? Outcome::pass : Outcome::fail;
  return out;
}

double monomial_kernel_error(int a, int b, const PolarGrid& grid) {
  static const std::vector<cplx> points{0.0, {0.3, 0.0}, std::polar(0.5, 1.0), {0.0, -0.4}, std::polar(0.45, 2.5),
                                        std::polar(0.2, -2.0)};
  const TaylorPoly closed = bergman_project_monomial(a, b);
  double worst = 0.0;
  for (const cplx z : points) {
    cplx acc = 0.0;
    for (int i = 0; i < grid.n_radial(); ++i) {
      cplx ring = 0.0;
      for (int j = 0; j < grid.n_theta(); ++j) {
        const cplx w = grid.node(i, j);
        const cplx d = 1.0 - z * std::conj(w);
        ring += std::pow(w, a) * std::pow(std::conj(w), b) / (d * d);
      }
      acc += grid.area_weight(i) * ring;
    }
    worst = std::max(worst, std::abs(acc - closed.eval(z)));
  }
  return worst;
}

namespace {

constexpr std::uint64_t kPartnerStream = 0x68706172ULL;

struct Ctx {
  const ExperimentConfig& cfg;
  Report& report;

  ReportRow row(double p, double q, std::string id) const {
    ReportRow r;
    r.experiment = cfg.experiment;
    r.p = p;
    r.q = q;
    r.kernel_id = std::move(id);
    r.seed = cfg.seed;
    r.grid_m = cfg.grid.m;
    r.grid_r = cfg.grid.radial;
    return r;
  }
  double tol(double fallback) const { return cfg.tolerance > 0.0 ? cfg.tolerance : fallback; }
  void add(ReportRow r) const { report.rows.push_back(std::move(r)); }
};

std::string index_id(const std::string& prefix, size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return prefix + "-" + buf;
}

std::string num(double x) { return format_number(x); }

Outcome check(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

double safe_ratio(double a, double b) { return b != 0.0 ? a / b : kNoValue; }

std::vector<std::pair<std::string, TaylorPoly>> analytic_inputs(const ExperimentConfig& c) {
  const auto& k = c.kernel;
  if (k.family == "seeded") {
    std::vector<std::pair<std::string, TaylorPoly>> out;
    const auto corpus = kernel_corpus(c.seed, k.count, k.max_degree);
    for (size_t i = 0; i < corpus.size(); ++i) out.emplace_back(index_id("kernel", i), corpus[i]);
    return out;
  }
  if (k.family == "coefficients") return {{"custom", TaylorPoly(k.coefficients)}};
  if (k.family == "one") return {{"one", TaylorPoly({1.0})}};
  if (k.family == "z") return {{"z", TaylorPoly::monomial(1, 1.0)}};
  if (k.family == "one_plus_half_z") return {{"one_plus_half_z", TaylorPoly({1.0, 0.5})}};
  throw ConfigError("kernel family '" + k.family + "' does not describe analytic polynomials");
}

std::vector<std::pair<std::string, BoundarySamples>> boundary_inputs(const ExperimentConfig& c, size_t m) {
  const auto& k = c.kernel;
  if (k.family == "seeded") {
    std::vector<std::pair<std::string, BoundarySamples>> out;
    const int count = c.samples > 0 ? c.samples : k.count;
    const auto corpus = trig_corpus(c.seed, count, k.max_degree, m);
    for (size_t i = 0; i < corpus.size(); ++i) out.emplace_back(index_id("trig", i), corpus[i]);
    return out;
  }
  if (k.family == "fourier") {
    FourierCoefficients f(std::vector<cplx>(m, cplx{0.0}));
    for (const auto& t : k.fourier) f.set(t.n, f.at(t.n) + t.c);
    return {{"custom", f.to_samples()}};
  }
  if (k.family == "zbar") return {{"zbar", BoundarySamples::from_function([](double t) { return std::polar(1.0, -t); }, m)}};
  if (k.family == "two_cos") return {{"two_cos", BoundarySamples::from_function([](double t) { return cplx(2.0 * std::cos(t)); }, m)}};
  std::vector<std::pair<std::string, BoundarySamples>> out;
  for (const auto& [id, f] : analytic_inputs(c)) out.emplace_back(id, BoundarySamples::from_poly(f, m));
  return out;
}

std::vector<std::pair<std::string, MixedPoly>> mixed_inputs(const ExperimentConfig& c) {
  if (c.kernel.family == "terms") return {{"custom", MixedPoly(c.kernel.terms)}};
  if (c.kernel.family == "seeded") {
    std::vector<std::pair<std::string, MixedPoly>> out;
    const int count = c.samples > 0 ? c.samples : c.kernel.count;
    const auto corpus = mixed_corpus(c.seed, count, c.max_exponent);
    for (size_t i = 0; i < corpus.size(); ++i) out.emplace_back(index_id("mixed", i), corpus[i]);
    return out;
  }
  std::vector<std::pair<std::string, MixedPoly>> out;
  for (const auto& [id, f] : analytic_inputs(c)) out.emplace_back(id, MixedPoly::from_analytic(f));
  return out;
}

std::vector<Space> spaces(const ExperimentConfig& c) {
  if (c.space == "bergman") return {Space::bergman};
  if (c.space == "hardy") return {Space::hardy};
  return {Space::bergman, Space::hardy};
}

ExtremalOptions extremal_options(const ExperimentConfig& c) {
  ExtremalOptions o;
  o.degree_cap = c.degree_cap;
  if (c.tol > 0.0) o.tol = c.tol;
  o.grid_r = c.grid.radial;
  o.grid_theta = c.grid.theta;
  o.grid_m = c.grid.m;
  return o;
}

DualOptions dual_options(const ExperimentConfig& c) {
  DualOptions o;
  o.degree_cap = c.degree_cap;
  return o;
}

int radial_or(const ExperimentConfig& c, int fallback) { return c.grid.radial > 0 ? c.grid.radial : fallback; }
int theta_or(const ExperimentConfig& c, int fallback) { return c.grid.theta > 0 ? c.grid.theta : fallback; }
size_t m_or(const ExperimentConfig& c, size_t fallback) { return c.grid.m > 0 ? c.grid.m : fallback; }

ConstantsLedger obtain_ledger(const ExperimentConfig& c) {
  if (!c.ledger_path.empty()) {
    std::ifstream in(c.ledger_path);
    if (!in) throw ConfigError("cannot read ledger " + c.ledger_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ConstantsLedger::from_json(ss.str());
  }
  LedgerSpec spec;
  spec.seed = c.seed;
  spec.samples = c.ledger_samples;
  spec.threads = c.threads;
  spec.targets.clear();
  for (double q : c.q)
    for (double p : c.p)
      if (p != 2.0) spec.targets.emplace_back(q, p);
  return build_ledger(spec);
}

/// Bergman A^2 or Hardy H^2 norm from coefficients.
double hilbert_norm(const TaylorPoly& k, Space s) {
  double acc = 0.0;
  for (int n = 0; n <= k.degree(); ++n) acc += std::norm(k[n]) / (s == Space::bergman ? n + 1.0 : 1.0);
  return std::sqrt(acc);
}

void exp_monomial_projection(Ctx& x) {
  const PolarGrid grid(radial_or(x.cfg, 96), theta_or(x.cfg, 128));
  const int n = x.cfg.max_exponent;
  std::vector<double> err((n + 1) * (n + 1));
  parallel_for(err.size(), [&](size_t i) { err[i] = monomial_kernel_error(i / (n + 1), i % (n + 1), grid); },
               x.cfg.threads);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      auto r = x.row(kNoValue, kNoValue, "z^" + std::to_string(a) + "*zbar^" + std::to_string(b));
      r.lhs = err[a * (n + 1) + b];
      r.rhs = 0.0;
      r.tolerance = x.tol(1e-8);
      r.pass = check(r.lhs < r.tolerance);
      r.diagnostics["closed_form_coefficient"] = bergman_project_monomial(a, b)[std::max(a - b, 0)].real();
      x.add(std::move(r));
    }
}

void exp_cone_geometry(Ctx& x) {
  const PolarGrid grid(radial_or(x.cfg, 64), theta_or(x.cfg, 64));
  const double tol = x.tol(1e-8);
  GradField constant{grid, std::vector<double>(grid.size(), 1.0)};
  const auto s = square_function_sweep(constant);
  for (int j = 0; j < grid.n_theta(); ++j) {
    auto r = x.row(kNoValue, kNoValue, "constant-field/theta-" + std::to_string(j));
    r.lhs = s[j];
    r.rhs = std::sqrt(0.5);
    r.ratio = r.lhs / r.rhs;
    r.tolerance = tol;
    r.pass = check(std::abs(r.lhs - r.rhs) <= tol);
    x.add(std::move(r));
  }
  struct Case {
    std::string id;
    GradField field;
    double expected;
    double tolerance;
  };
  std::vector<Case> cases;
  cases.push_back({"F=z,delta=1", grad_modulus_power(TaylorPoly::monomial(1, 1.0), 1.0, grid), std::sqrt(0.5), tol});
  cases.push_back({"F=z^2,delta=1", grad_modulus_power(TaylorPoly::monomial(2, 1.0), 1.0, grid), std::sqrt(1.0 / 3.0),
                   std::max(tol, 1e-6)});
  cases.push_back({"Sz(|z|^2)", dz_field(MixedPoly({{1, 1, 1.0}}), grid), std::sqrt(1.0 / 12.0), std::max(tol, 1e-6)});
  for (auto& c : cases) {
    const auto v = square_function_sweep(c.field);
    double worst = 0.0;
    for (double y : v) worst = std::max(worst, std::abs(y - c.expected));
    auto r = x.row(kNoValue, kNoValue, c.id);
    r.lhs = square_function(c.field, 0.0);
    r.rhs = c.expected;
    r.ratio = r.lhs / r.rhs;
    r.tolerance = c.tolerance;
    r.pass = check(std::abs(r.lhs - r.rhs) <= c.tolerance && worst <= c.tolerance);
    r.diagnostics["sweep_max_error"] = worst;
    x.add(std::move(r));
  }
}

void exp_calderon_sweep(Ctx& x) {
  const int samples = x.cfg.samples > 0 ? x.cfg.samples : 50;
  auto corpus = poly_corpus(x.cfg.seed, samples, x.cfg.kernel.max_degree);
  for (size_t i = 1; i < corpus.size(); i += 2) {
    std::vector<cplx> c(corpus[i].coeffs().begin(), corpus[i].coeffs().end());
    c[0] = 0.0;
    corpus[i] = TaylorPoly(std::move(c));
  }
  const CalderonGrid base{radial_or(x.cfg, 32), theta_or(x.cfg, 512), x.cfg.grid.r_min >= 0.0 ? x.cfg.grid.r_min : 0.1};
  const auto& deltas = x.cfg.delta;
  const size_t nd = deltas.size();
  std::vector<CalderonProfile> coarse(corpus.size() * nd), fine(corpus.size() * nd);
  parallel_for(
      coarse.size(),
      [&](size_t t) {
        const auto& F = corpus[t / nd];
        coarse[t] = calderon_profile(F, deltas[t % nd], base);
        fine[t] = calderon_profile(F, deltas[t % nd], base.doubled());
      },
      x.cfg.threads);
  const double tol = x.tol(0.02);
  x.report.metadata["cone_r_min"] = num(base.r_min);
  x.report.metadata["grid_theta"] = std::to_string(base.n_theta);
  for (size_t t = 0; t < coarse.size(); ++t) {
    const size_t i = t / nd;
    const double delta = deltas[t % nd];
    for (double p : x.cfg.p) {
      const auto a = calderon_ratios(coarse[t], p);
      const auto b = calderon_ratios(fine[t], p);
      auto emit = [&](const char* kind, double lo, double hi) {
        auto r = x.row(p, kNoValue, index_id("poly", i) + "/delta=" + num(delta) + "/" + kind);
        r.lhs = lo;
        r.rhs = hi;
        r.ratio = lo / hi;
        r.tolerance = tol;
        r.grid_m = static_cast<std::uint64_t>(base.n_theta);
        r.grid_r = base.n_radial;
        r.pass = check(finite_positive(lo) && finite_positive(hi) && std::abs(r.ratio - 1.0) < tol);
        r.diagnostics["delta"] = delta;
        r.diagnostics["degree"] = corpus[i].degree();
        x.add(std::move(r));
      };
      emit("upper", a.upper, b.upper);
      if (a.lower && b.lower) emit("lower", *a.lower, *b.lower);
    }
  }
}

void exp_hilbert(Ctx& x) {
  const auto kernels = analytic_inputs(x.cfg);
  const auto sp = spaces(x.cfg);
  const auto opt = extremal_options(x.cfg);
  for (double p : x.cfg.p) {
    if (p != 2.0) throw ConfigError("hilbert experiment is defined for p = 2 only");
    std::vector<ExtremalSolution> sols(kernels.size() * sp.size());
    parallel_for(
        sols.size(),
        [&](size_t t) { sols[t] = solve_extremal(sp[t % sp.size()], kernels[t / sp.size()].second, p, opt); },
        x.cfg.threads);
    for (size_t t = 0; t < sols.size(); ++t) {
      const auto& [id, k] = kernels[t / sp.size()];
      const Space s = sp[t % sp.size()];
      const auto& sol = sols[t];
      const double norm = hilbert_norm(k, s);
      TaylorPoly exact = k;
      exact *= 1.0 / norm;
      auto r = x.row(p, kNoValue, id + "/" + to_string(s) + "/coefficients");
      r.lhs = max_coeff_diff(sol.F, exact);
      r.rhs = 0.0;
      r.tolerance = x.tol(1e-6);
      r.pass = check(r.lhs < r.tolerance);
      r.grid_r = sol.grid_r;
      r.grid_m = static_cast<std::uint64_t>(sol.grid_theta);
      r.diagnostics["lambda"] = sol.lambda;
      r.diagnostics["exact_lambda"] = norm;
      r.diagnostics["iterations"] = sol.iterations;
      x.add(r);
      r.kernel_id = id + "/" + to_string(s) + "/residual";
      r.lhs = sol.residual;
      r.tolerance = 1e-8;
      r.pass = check(sol.converged && sol.residual < 1e-8);
      x.add(std::move(r));
    }
  }
}

void exp_optimality(Ctx& x) {
  const auto kernels = analytic_inputs(x.cfg);
  const auto sp = spaces(x.cfg);
  const auto opt = extremal_options(x.cfg);
  for (double p : x.cfg.p) {
    const double pp = conjugate_exponent(p);
    std::vector<ExtremalSolution> sols(kernels.size() * sp.size());
    std::vector<double> holder(sols.size()), trial(sols.size());
    parallel_for(
        sols.size(),
        [&](size_t t) {
          const auto& k = kernels[t / sp.size()].second;
          const Space s = sp[t % sp.size()];
          sols[t] = solve_extremal(s, k, p, opt);
          if (s == Space::bergman) {
            const PolarGrid g(sols[t].grid_r, sols[t].grid_theta);
            holder[t] = bergman_norm(k, pp, g);
            trial[t] = hilbert_norm(k, s) * hilbert_norm(k, s) / bergman_norm(k, p, g);
          } else {
            holder[t] = integral_mean(k, 1.0, pp);
            trial[t] = hilbert_norm(k, s) * hilbert_norm(k, s) / integral_mean(k, 1.0, p);
          }
        },
        x.cfg.threads);
    for (size_t t = 0; t < sols.size(); ++t) {
      const auto& id = kernels[t / sp.size()].first;
      const Space s = sp[t % sp.size()];
      const auto& sol = sols[t];
      auto r = x.row(p, kNoValue, id + "/" + to_string(s) + "/residual");
      r.lhs = sol.residual;
      r.rhs = 0.0;
      r.tolerance = x.tol(1e-3);
      r.pass = check(sol.converged && sol.residual < r.tolerance);
      r.grid_r = sol.grid_r;
      r.grid_m = static_cast<std::uint64_t>(sol.grid_theta);
      r.diagnostics["lambda"] = sol.lambda;
      r.diagnostics["iterations"] = sol.iterations;
      r.diagnostics["degree_cap"] = sol.degree_cap;
      r.series["residual_history"] = sol.residual_history;
      x.add(r);
      r.series.clear();
      r.kernel_id = id + "/" + to_string(s) + "/holder-upper";
      r.lhs = sol.lambda;
      r.rhs = holder[t];
      r.ratio = r.lhs / r.rhs;
      r.tolerance = 1e-8;
      r.pass = check(r.lhs <= r.rhs + 1e-8);
      x.add(r);
      r.kernel_id = id + "/" + to_string(s) + "/trial-lower";
      r.lhs = trial[t];
      r.rhs = sol.lambda;
      r.ratio = r.lhs / r.rhs;
      r.pass = check(r.lhs <= r.rhs + 1e-8);
      x.add(std::move(r));
    }
  }
}

void emit_duality(Ctx& x, double p, const std::string& id, const DualityReport& rep, double gap_tol) {
  auto r = x.row(p, kNoValue, id + "/gap");
  r.lhs = rep.primal;
  r.rhs = rep.dual;
  r.ratio = safe_ratio(rep.primal, rep.dual);
  r.tolerance = gap_tol;
  r.pass = check(rep.gap < gap_tol);
  r.grid_m = static_cast<std::uint64_t>(rep.primal_solution.grid_theta);
  r.diagnostics["relative_gap"] = rep.gap;
  r.diagnostics["primal_residual"] = rep.primal_solution.residual;
  r.diagnostics["primal_iterations"] = rep.primal_solution.iterations;
  r.diagnostics["dual_iterations"] = rep.dual_solution.iterations;
  r.diagnostics["dual_degree_cap"] = rep.dual_solution.degree_cap;
  r.diagnostics["weight_floor"] = rep.dual_solution.weight_floor;
  x.add(r);
  r.kernel_id = id + "/weak-duality";
  r.tolerance = 1e-8;
  r.pass = check(rep.primal <= rep.dual + 1e-8);
  r.diagnostics.clear();
  x.add(r);
  r.kernel_id = id + "/kernel-residual";
  r.lhs = rep.kernel_residual;
  r.rhs = 0.0;
  r.ratio = kNoValue;
  r.tolerance = 1e-3;
  r.pass = check(rep.kernel_residual < 1e-3);
  x.add(r);
  r.kernel_id = id + "/holder-proportionality";
  r.lhs = rep.holder_spread;
  r.tolerance = 1e-4;
  r.pass = check(rep.holder_spread < 1e-4);
  x.add(std::move(r));
}

void exp_duality(Ctx& x) {
  const auto kernels = analytic_inputs(x.cfg);
  const auto popt = extremal_options(x.cfg);
  const auto dopt = dual_options(x.cfg);
  for (double p : x.cfg.p) {
    std::vector<DualityReport> reps(kernels.size());
    parallel_for(
        kernels.size(), [&](size_t i) { reps[i] = duality_gap(kernels[i].second, p, popt, dopt); }, x.cfg.threads);
    for (size_t i = 0; i < kernels.size(); ++i) emit_duality(x, p, kernels[i].first, reps[i], x.tol(1e-4));
  }
}

void exp_dual(Ctx& x) {
  const size_t m = m_or(x.cfg, 256);
  const auto inputs = boundary_inputs(x.cfg, m);
  const auto popt = extremal_options(x.cfg);
  const auto dopt = dual_options(x.cfg);
  for (double p : x.cfg.p)
    for (const auto& [id, kd] : inputs) emit_duality(x, p, id, duality_gap(kd, p, popt, dopt), x.tol(1e-4));
}

void exp_green_identity(Ctx& x) {
  const int samples = x.cfg.samples > 0 ? x.cfg.samples : 10;
  const auto Fs = zero_free_corpus(x.cfg.seed, samples, x.cfg.kernel.max_degree);
  const auto hs = poly_corpus(x.cfg.seed ^ kPartnerStream, samples, x.cfg.kernel.max_degree, true);
  const PolarGrid grid(radial_or(x.cfg, 64), theta_or(x.cfg, 128));
  const size_t m = m_or(x.cfg, 1024);
  const auto& ps = x.cfg.p;
  std::vector<GreenCheck> checks(Fs.size() * ps.size());
  parallel_for(
      checks.size(),
      [&](size_t t) { checks[t] = green_identity_check(Fs[t / ps.size()], hs[t / ps.size()], ps[t % ps.size()], grid, m); },
      x.cfg.threads);
  for (size_t t = 0; t < checks.size(); ++t) {
    const auto& c = checks[t];
    auto r = x.row(ps[t % ps.size()], kNoValue, index_id("pair", t / ps.size()));
    r.lhs = std::abs(c.lhs);
    r.rhs = std::abs(c.rhs);
    r.ratio = safe_ratio(r.lhs, r.rhs);
    r.tolerance = x.tol(1e-6);
    r.pass = check(c.rel_error < r.tolerance);
    r.grid_m = m;
    r.grid_r = grid.n_radial();
    r.diagnostics["relative_error"] = c.rel_error;
    r.diagnostics["lhs_re"] = c.lhs.real();
    r.diagnostics["lhs_im"] = c.lhs.imag();
    r.diagnostics["rhs_re"] = c.rhs.real();
    r.diagnostics["rhs_im"] = c.rhs.imag();
    x.add(std::move(r));
  }
}

void exp_bpinhardy(Ctx& x) {
  auto inputs = mixed_inputs(x.cfg);
  const PolarGrid coarse(radial_or(x.cfg, 48), theta_or(x.cfg, 128));
  const PolarGrid fine(2 * coarse.n_radial(), 2 * coarse.n_theta());
  const double tol = x.tol(0.02);
  const std::vector<std::pair<std::string, MixedPoly>> antianalytic{
      {"zbar", MixedPoly({{0, 1, 1.0}})},
      {"zbar^2", MixedPoly({{0, 2, 1.0}})},
      {"2zbar^3+i*zbar", MixedPoly({{0, 3, 2.0}, {0, 1, cplx(0.0, 1.0)}})}};
  for (double p : x.cfg.p) {
    std::vector<BpinhardyRatio> a(inputs.size()), b(inputs.size());
    parallel_for(
        inputs.size(),
        [&](size_t i) {
          a[i] = bpinhardy_ratio(inputs[i].second, p, coarse);
          b[i] = bpinhardy_ratio(inputs[i].second, p, fine);
        },
        x.cfg.threads);
    double max_a = 0.0, max_b = 0.0;
    for (size_t i = 0; i < inputs.size(); ++i) {
      auto r = x.row(p, kNoValue, inputs[i].first);
      r.lhs = a[i].lhs;
      r.rhs = a[i].rhs;
      r.ratio = a[i].ratio;
      r.grid_r = coarse.n_radial();
      r.grid_m = static_cast<std::uint64_t>(coarse.n_theta());
      r.pass = check(std::isfinite(r.ratio) && r.rhs > 0.0);
      r.diagnostics["sz_norm"] = a[i].sz_norm;
      r.diagnostics["disc_norm"] = a[i].disc_norm;
      r.diagnostics["ratio_fine_grid"] = b[i].ratio;
      max_a = std::max(max_a, a[i].ratio);
      max_b = std::max(max_b, b[i].ratio);
      x.add(std::move(r));
    }
    auto r = x.row(p, kNoValue, "corpus-max");
    r.lhs = max_a;
    r.rhs = max_b;
    r.ratio = max_a / max_b;
    r.tolerance = tol;
    r.grid_r = coarse.n_radial();
    r.grid_m = static_cast<std::uint64_t>(coarse.n_theta());
    r.pass = check(finite_positive(max_a) && finite_positive(max_b) && std::abs(r.ratio - 1.0) < tol);
    x.add(std::move(r));
    for (const auto& [id, f] : antianalytic) {
      const auto v = bpinhardy_ratio(f, p, coarse);
      auto z = x.row(p, kNoValue, id);
      z.lhs = v.lhs;
      z.rhs = v.rhs;
      z.ratio = v.ratio;
      z.tolerance = 0.0;
      z.grid_r = coarse.n_radial();
      z.grid_m = static_cast<std::uint64_t>(coarse.n_theta());
      z.pass = check(v.lhs == 0.0);
      x.add(std::move(z));
    }
  }
}

void exp_p2_bound(Ctx& x) {
  const auto kernels = analytic_inputs(x.cfg);
  const auto opt = extremal_options(x.cfg);
  for (double p : x.cfg.p) {
    if (p != 2.0) throw ConfigError("p2-bound is defined for p = 2 only");
    for (double q : x.cfg.q) {
      std::vector<BoundCheck> checks(kernels.size());
      parallel_for(
          kernels.size(), [&](size_t i) { checks[i] = hardy_extremal_bound_check(kernels[i].second, p, q, nullptr, opt); },
          x.cfg.threads);
      for (size_t i = 0; i < kernels.size(); ++i) {
        const auto& c = checks[i];
        auto r = x.row(p, q, kernels[i].first);
        r.lhs = c.lhs;
        r.rhs = c.rhs;
        r.ratio = c.lhs / c.rhs;
        r.tolerance = x.tol(1e-6);
        r.pass = check(c.ctilde == 0.0 && std::abs(c.lhs - c.rhs) <= r.tolerance * c.rhs);
        r.diagnostics["ctilde"] = c.ctilde;
        x.add(std::move(r));
      }
    }
  }
}

void exp_best_approx(Ctx& x) {
  const size_t m = m_or(x.cfg, 512);
  const auto inputs = boundary_inputs(x.cfg, m);
  const auto dopt = dual_options(x.cfg);
  for (double p : x.cfg.p) {
    std::vector<BestApproximation> best(inputs.size());
    std::vector<DualSolution> direct(inputs.size());
    parallel_for(
        inputs.size(),
        [&](size_t i) {
          best[i] = best_analytic_approx(inputs[i].second, p, dopt);
          if (p != 2.0) direct[i] = solve_dual_min(inputs[i].second.shifted(1), p, dopt);
        },
        x.cfg.threads);
    for (size_t i = 0; i < inputs.size(); ++i) {
      const auto& [id, k] = inputs[i];
      auto r = x.row(p, kNoValue, id);
      r.grid_m = m;
      if (p == 2.0) {
        r.kernel_id = id + "/szego-match";
        r.lhs = max_coeff_diff(best[i].f, szego_project(k));
        r.rhs = 0.0;
        r.tolerance = x.tol(1e-8);
        r.pass = check(r.lhs < r.tolerance);
        r.diagnostics["distance"] = best[i].distance;
        x.add(r);
        for (double q : x.cfg.q) {
          const auto cn = cross_norm_report(best[i].f, k, q, 0.0);
          auto c = x.row(p, q, id + "/cross-norm");
          c.grid_m = m;
          c.lhs = cn.f_norm_q;
          c.rhs = cn.bound;
          c.ratio = safe_ratio(c.lhs, c.rhs);
          c.tolerance = 1e-9;
          c.pass = check(cn.applicable && cn.ok);
          c.diagnostics["tight_bound"] = cn.tight_bound;
          c.diagnostics["ctilde"] = 0.0;
          x.add(std::move(c));
        }
      } else {
        r.kernel_id = id + "/distance";
        r.lhs = best[i].distance;
        r.rhs = direct[i].min_norm;
        r.ratio = safe_ratio(r.lhs, r.rhs);
        r.tolerance = x.cfg.tolerance > 0.0 ? x.cfg.tolerance : 1e-4;
        r.pass = check(std::abs(r.lhs - r.rhs) < r.tolerance);
        r.diagnostics["dual_iterations"] = best[i].dual.iterations;
        r.diagnostics["direct_iterations"] = direct[i].iterations;
        x.add(std::move(r));
      }
    }
  }
}

void exp_szego_norm(Ctx& x) {
  const size_t m = m_or(x.cfg, 256);
  const auto inputs = boundary_inputs(x.cfg, m);
  std::vector<BoundarySamples> corpus;
  for (const auto& in : inputs) corpus.push_back(in.second);
  for (double p : x.cfg.p) {
    const auto c = szego_norm_check(corpus, p);
    auto r = x.row(p, kNoValue, "corpus-max");
    r.lhs = c.max_ratio;
    r.rhs = c.bound;
    r.ratio = c.max_ratio / c.bound;
    r.tolerance = x.tol(1e-8);
    r.grid_m = m;
    r.pass = check(c.max_ratio <= c.bound + r.tolerance);
    r.diagnostics["corpus_size"] = static_cast<double>(corpus.size());
    x.add(std::move(r));
  }
}

void exp_ctilde_continuity(Ctx& x) {
  auto ledger = obtain_ledger(x.cfg);
  x.report.ledger_conditional = true;
  for (double q : x.cfg.q) {
    std::map<double, double> value;
    for (double p : x.cfg.p) value[p] = assemble_ctilde(q, p, ledger);
    for (double p : x.cfg.p) {
      auto r = x.row(p, q, "ctilde");
      r.lhs = value[p];
      r.note = "ledger-conditional";
      if (p == 2.0) {
        r.rhs = 0.0;
        r.tolerance = 0.0;
        r.pass = check(value[p] == 0.0);
      } else {
        // compare against the next exponent further from 2 on the same side
        std::optional<double> farther;
        for (double o : x.cfg.p)
          if ((o - 2.0) * (p - 2.0) > 0.0 && std::abs(o - 2.0) > std::abs(p - 2.0) &&
              (!farther || std::abs(o - 2.0) < std::abs(*farther - 2.0)))
            farther = o;
        const bool ok = finite_positive(value[p]);
        if (farther) {
          r.rhs = value[*farther];
          r.ratio = r.lhs / r.rhs;
          r.diagnostics["compared_p"] = *farther;
          r.pass = check(ok && r.lhs <= r.rhs);
        } else {
          r.pass = check(ok);
        }
      }
      x.add(std::move(r));
    }
  }
  x.report.ledger = std::move(ledger);
}

void exp_ledger_bounds(Ctx& x) {
  auto ledger = obtain_ledger(x.cfg);
  x.report.ledger_conditional = true;
  const auto kernels = analytic_inputs(x.cfg);
  const auto opt = extremal_options(x.cfg);
  const double rel = x.tol(1e-8);
  auto emit = [&](double p, double q, const std::string& id, const BoundCheck& c) {
    auto r = x.row(p, q, id);
    r.note = "ledger-conditional";
    r.diagnostics["ctilde"] = c.ctilde;
    r.pass = c.outcome;
    if (c.outcome != Outcome::not_applicable) {
      r.lhs = c.lhs;
      r.rhs = c.rhs;
      r.ratio = safe_ratio(c.lhs, c.rhs);
      r.tolerance = rel;
    } else {
      r.note += ", not-applicable (ctilde >= 1)";
    }
    x.add(std::move(r));
  };
  for (double q : x.cfg.q)
    for (double p : x.cfg.p) {
      for (const auto& [id, k] : kernels) {
        emit(p, q, id + "/extremal-bound", hardy_extremal_bound_check(k, p, q, &ledger, opt, rel));
        emit(p, q, id + "/szego-lower", szego_lower_bound_check(k, p, q, &ledger, 0, rel));
      }
      emit(p, q, "z/szego-lower", szego_lower_bound_check(TaylorPoly::monomial(1, 1.0), p, q, &ledger, 0, rel));
    }
  x.report.ledger = std::move(ledger);
}

void exp_ryabykh(Ctx& x) {
  const auto kernels = analytic_inputs(x.cfg);
  const auto opt = extremal_options(x.cfg);
  for (double p : x.cfg.p)
    for (double q : x.cfg.q)
      for (Space s : spaces(x.cfg))
        for (const auto& [id, k] : kernels) {
          const auto prof = ryabykh_profile(k, p, q, s, opt);
          const double bound = integral_mean(prof.solution.F, 1.0, prof.exponent);
          double prev = 0.0;
          for (size_t i = 0; i < prof.radii.size(); ++i) {
            auto r = x.row(p, q, id + "/" + to_string(s) + "/r=" + num(prof.radii[i]));
            r.lhs = prof.means[i];
            r.rhs = bound;
            r.ratio = r.lhs / r.rhs;
            r.tolerance = 1e-10;
            r.pass = check(prof.solution.converged && std::isfinite(r.lhs) && r.lhs >= prev - 1e-10 &&
                           r.lhs <= bound + 1e-10);
            r.diagnostics["exponent"] = prof.exponent;
            r.diagnostics["radius"] = prof.radii[i];
            prev = r.lhs;
            x.add(std::move(r));
          }
        }
}

void exp_isoperimetric(Ctx& x) {
  const int samples = x.cfg.samples > 0 ? x.cfg.samples : 100;
  const auto corpus = poly_corpus(x.cfg.seed, samples, x.cfg.kernel.max_degree);
  const PolarGrid grid(radial_or(x.cfg, 64), theta_or(x.cfg, 128));
  for (double p : x.cfg.p) {
    std::vector<IsoperimetricCheck> checks(corpus.size());
    parallel_for(
        corpus.size(), [&](size_t i) { checks[i] = check_isoperimetric(corpus[i], p, grid); }, x.cfg.threads);
    for (size_t i = 0; i < corpus.size(); ++i) {
      auto r = x.row(p, kNoValue, index_id("poly", i));
      r.lhs = checks[i].a_norm;
      r.rhs = checks[i].h_norm;
      r.ratio = r.lhs / r.rhs;
      r.tolerance = x.tol(1e-9);
      r.grid_r = grid.n_radial();
      r.grid_m = static_cast<std::uint64_t>(grid.n_theta());
      r.pass = check(checks[i].ok);
      x.add(std::move(r));
    }
  }
}

void exp_project(Ctx& x) {
  const auto& fam = x.cfg.kernel.family;
  if (fam == "fourier" || fam == "zbar" || fam == "two_cos") {
    const size_t m = m_or(x.cfg, 64);
    for (const auto& [id, f] : boundary_inputs(x.cfg, m)) {
      const TaylorPoly ps = szego_project(f);
      auto back = BoundarySamples::from_poly(ps, m);
      back += szego_coproject(f);
      back -= f;
      double worst = 0.0;
      for (size_t j = 0; j < m; ++j) worst = std::max(worst, std::abs(back[j]));
      auto r = x.row(kNoValue, kNoValue, id + "/szego");
      r.lhs = worst;
      r.rhs = 0.0;
      r.tolerance = x.tol(1e-12);
      r.grid_m = m;
      r.pass = check(worst <= r.tolerance);
      std::vector<double> re, im;
      for (const cplx c : ps.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
      }
      r.series["coefficients_re"] = re;
      r.series["coefficients_im"] = im;
      x.add(std::move(r));
    }
    return;
  }
  for (const auto& [id, f] : mixed_inputs(x.cfg)) {
    const TaylorPoly closed = bergman_project(f);
    const int n = std::max(closed.degree(), f.max_a());
    const PolarGrid grid(radial_or(x.cfg, std::max(64, f.max_a() + f.max_b() + 8)),
                         theta_or(x.cfg, static_cast<int>(default_grid_size(f.max_a() + f.max_b()))));
    std::vector<cplx> values(grid.size());
    for (int i = 0; i < grid.n_radial(); ++i)
      for (int j = 0; j < grid.n_theta(); ++j) values[grid.index(i, j)] = f.eval(grid.node(i, j));
    const TaylorPoly quad = bergman_project(values, grid, std::min(n, grid.max_degree()));
    auto r = x.row(kNoValue, kNoValue, id + "/bergman");
    r.lhs = max_coeff_diff(closed, quad);
    r.rhs = 0.0;
    r.tolerance = x.tol(1e-8);
    r.grid_r = grid.n_radial();
    r.grid_m = static_cast<std::uint64_t>(grid.n_theta());
    r.pass = check(r.lhs < r.tolerance);
    std::vector<double> re, im;
    for (const cplx c : closed.coeffs()) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    r.series["coefficients_re"] = re;
    r.series["coefficients_im"] = im;
    x.add(std::move(r));
  }
}

void exp_squarefn(Ctx& x) {
  const CalderonGrid grid{radial_or(x.cfg, 32), theta_or(x.cfg, 512), std::max(x.cfg.grid.r_min, 0.0)};
  for (const auto& [id, F] : analytic_inputs(x.cfg))
    for (double delta : x.cfg.delta) {
      const auto prof = calderon_profile(F, delta, grid);
      for (double p : x.cfg.p) {
        const auto c = calderon_ratios(prof, p);
        auto r = x.row(p, kNoValue, id + "/delta=" + num(delta));
        r.lhs = c.s_norm;
        r.rhs = c.g_norm;
        r.ratio = safe_ratio(c.s_norm, c.g_norm);
        r.grid_r = grid.n_radial;
        r.grid_m = static_cast<std::uint64_t>(grid.n_theta);
        r.pass = check(std::isfinite(c.s_norm) && std::isfinite(c.g_norm));
        if (c.lower) r.diagnostics["lower_ratio"] = *c.lower;
        r.series["S"] = prof.s;
        x.add(std::move(r));
      }
    }
}

void exp_extremal(Ctx& x) {
  const auto opt = extremal_options(x.cfg);
  for (const auto& [id, k] : analytic_inputs(x.cfg))
    for (double p : x.cfg.p)
      for (Space s : spaces(x.cfg)) {
        const auto sol = solve_extremal(s, k, p, opt);
        const double pp = conjugate_exponent(p);
        const double holder = s == Space::hardy ? integral_mean(k, 1.0, pp)
                                                : bergman_norm(k, pp, PolarGrid(sol.grid_r, sol.grid_theta));
        auto r = x.row(p, kNoValue, id + "/" + to_string(s));
        r.lhs = sol.lambda;
        r.rhs = holder;
        r.ratio = sol.lambda / holder;
        r.tolerance = 1e-8;
        r.grid_r = sol.grid_r;
        r.grid_m = static_cast<std::uint64_t>(sol.grid_theta);
        r.pass = check(sol.converged && sol.lambda <= holder + 1e-8);
        r.diagnostics["residual"] = sol.residual;
        r.diagnostics["iterations"] = sol.iterations;
        r.diagnostics["degree_cap"] = sol.degree_cap;
        std::vector<double> re, im;
        for (const cplx c : sol.F.coeffs()) {
          re.push_back(c.real());
          im.push_back(c.imag());
        }
        r.series["F_re"] = re;
        r.series["F_im"] = im;
        r.series["residual_history"] = sol.residual_history;
        x.add(std::move(r));
      }
}

void exp_approx(Ctx& x) {
  const size_t m = m_or(x.cfg, 512);
  const auto dopt = dual_options(x.cfg);
  for (const auto& [id, k] : boundary_inputs(x.cfg, m))
    for (double p : x.cfg.p) {
      const auto best = best_analytic_approx(k, p, dopt);
      auto r = x.row(p, kNoValue, id + "/distance");
      r.lhs = best.distance;
      r.grid_m = m;
      r.pass = check(std::isfinite(best.distance) && best.dual.g[0] == 0.0);
      std::vector<double> re, im;
      for (const cplx c : best.f.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
      }
      r.series["f_re"] = re;
      r.series["f_im"] = im;
      x.add(std::move(r));
      if (p != 2.0) continue;
      for (double q : x.cfg.q) {
        const auto cn = cross_norm_report(best.f, k, q, 0.0);
        auto c = x.row(p, q, id + "/cross-norm");
        c.grid_m = m;
        c.lhs = cn.f_norm_q;
        c.rhs = cn.bound;
        c.ratio = safe_ratio(cn.f_norm_q, cn.bound);
        c.tolerance = 1e-9;
        c.pass = check(cn.ok);
        c.diagnostics["tight_bound"] = cn.tight_bound;
        x.add(std::move(c));
      }
    }
}

void exp_ledger(Ctx& x) {
  auto ledger = obtain_ledger(x.cfg);
  for (const auto& [key, c] : ledger.calderon_cells()) {
    auto r = x.row(c.p, kNoValue, "C/delta=" + num(c.delta));
    r.lhs = c.upper;
    r.rhs = c.lower ? *c.lower : kNoValue;
    r.grid_r = ledger.grid.n_radial;
    r.grid_m = static_cast<std::uint64_t>(ledger.grid.n_theta);
    r.pass = check(finite_positive(c.upper));
    r.diagnostics["samples"] = c.samples;
    x.add(std::move(r));
  }
  for (const auto& [key, e] : ledger.ntmax_cells()) {
    auto r = x.row(kNoValue, e.q, "m");
    r.lhs = e.value;
    r.pass = check(finite_positive(e.value));
    x.add(std::move(r));
  }
  for (const auto& [key, e] : ledger.kappa_cells()) {
    auto r = x.row(kNoValue, e.q, "k");
    r.lhs = e.value;
    r.pass = check(finite_positive(e.value));
    x.add(std::move(r));
  }
  x.report.ledger = std::move(ledger);
}

const std::map<std::string, std::function<void(Ctx&)>>& dispatch() {
  static const std::map<std::string, std::function<void(Ctx&)>> table{
      {"monomial-projection", exp_monomial_projection},
      {"cone-geometry", exp_cone_geometry},
      {"calderon-sweep", exp_calderon_sweep},
      {"hilbert", exp_hilbert},
      {"optimality", exp_optimality},
      {"duality", exp_duality},
      {"green-identity", exp_green_identity},
      {"bpinhardy", exp_bpinhardy},
      {"p2-bound", exp_p2_bound},
      {"best-approx", exp_best_approx},
      {"szego-norm", exp_szego_norm},
      {"ctilde-continuity", exp_ctilde_continuity},
      {"ledger-bounds", exp_ledger_bounds},
      {"ryabykh", exp_ryabykh},
      {"isoperimetric", exp_isoperimetric},
      {"project", exp_project},
      {"squarefn", exp_squarefn},
      {"extremal", exp_extremal},
      {"dual", exp_dual},
      {"approx", exp_approx},
      {"ledger", exp_ledger}};
  return table;
}

}  // namespace

Report build_report(const ExperimentConfig& config) {
  if (config.schema_version != kSchemaVersion) throw ConfigError("unsupported schema_version");
  const auto& table = dispatch();
  auto it = table.find(config.experiment);
  if (it == table.end()) throw ConfigError("unknown experiment '" + config.experiment + "'");
  Report report;
  report.config = config;
  Ctx ctx{config, report};
  it->second(ctx);
  return report;
}

RunResult run_experiment(const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  RunResult out;
  out.report.config = config;
  const std::string base = config.basename.empty() ? config.experiment : config.basename;
  const fs::path dir(config.output_dir.empty() ? "." : config.output_dir);
  fs::create_directories(dir);
  out.csv_path = (dir / (base + ".csv")).string();
  out.json_path = (dir / (base + ".json")).string();
  const std::string failure = (dir / (base + ".failure.json")).string();
  try {
    out.report = build_report(config);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  };
  if (out.error.empty()) {
    write(out.csv_path, to_csv(out.report));
    write(out.json_path, to_json(out.report));
  }
  if (!out.error.empty() || !out.report.passed()) {
    out.failure_path = failure;
    write(failure, failure_record(out.report, out.error));
    out.exit_code = out.error.empty() ? 1 : 2;
  } else {
    std::error_code ec;
    fs::remove(failure, ec);
  }
  return out;
}

}  // namespace hardylab
