#include "hardylab/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "hardylab/corpus.hpp"
#include "hardylab/green.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/parallel.hpp"
#include "json.hpp"

namespace hardylab {

using nlohmann::json;

std::string ConstantsLedger::key(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string ConstantsLedger::key(double p, double delta) { return key(p) + "/" + key(delta); }

void ConstantsLedger::set_calderon(const CalderonEstimate& e) { calderon_[key(e.p, e.delta)] = e; }

bool ConstantsLedger::has_calderon(double p, double delta) const { return calderon_.count(key(p, delta)) > 0; }

const CalderonEstimate& ConstantsLedger::calderon(double p, double delta) const {
  auto it = calderon_.find(key(p, delta));
  if (it == calderon_.end()) throw MissingLedgerEntry("ledger has no Calderon cell C_{" + key(p, delta) + "}");
  return it->second;
}

double ConstantsLedger::calderon_lower(double p, double delta) const {
  const auto& c = calderon(p, delta);
  if (!c.lower) throw MissingLedgerEntry("ledger has no lower Calderon estimate for " + key(p, delta));
  return *c.lower;
}

void ConstantsLedger::set_ntmax(const ScalarEstimate& e) { ntmax_[key(e.q)] = e; }

double ConstantsLedger::ntmax(double q) const {
  auto it = ntmax_.find(key(q));
  if (it == ntmax_.end()) throw MissingLedgerEntry("ledger has no nontangential maximal constant for q = " + key(q));
  return it->second.value;
}

void ConstantsLedger::set_kappa(const ScalarEstimate& e) { kappa_[key(e.q)] = e; }

double ConstantsLedger::kappa(double q) const {
  auto it = kappa_.find(key(q));
  if (it == kappa_.end()) throw MissingLedgerEntry("ledger has no point-evaluation constant for q = " + key(q));
  return it->second.value;
}

double ConstantsLedger::szego(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("Szego norm needs p > 1");
  if (p == 2.0) return 1.0;
  return 1.0 / std::sin(std::numbers::pi / p);
}

bool operator==(const CalderonEstimate& a, const CalderonEstimate& b) {
  return a.p == b.p && a.delta == b.delta && a.upper == b.upper && a.lower == b.lower && a.samples == b.samples;
}

bool operator==(const ScalarEstimate& a, const ScalarEstimate& b) {
  return a.q == b.q && a.value == b.value && a.samples == b.samples;
}

bool operator==(const ConstantsLedger& a, const ConstantsLedger& b) {
  return a.seed == b.seed && a.samples == b.samples && a.max_degree == b.max_degree &&
         a.grid.n_radial == b.grid.n_radial && a.grid.n_theta == b.grid.n_theta && a.grid.r_min == b.grid.r_min &&
         a.kappa_exponents == b.kappa_exponents && a.calderon_ == b.calderon_ && a.ntmax_ == b.ntmax_ &&
         a.kappa_ == b.kappa_;
}

std::string ConstantsLedger::to_json(int indent) const {
  json j;
  j["seed"] = seed;
  j["samples"] = samples;
  j["max_degree"] = max_degree;
  j["grid"] = {{"n_radial", grid.n_radial}, {"n_theta", grid.n_theta}, {"r_min", grid.r_min}};
  j["kappa_exponents"] = kappa_exponents;
  j["calderon"] = json::array();
  for (const auto& [k, c] : calderon_) {
    json row = {{"p", c.p}, {"delta", c.delta}, {"upper", c.upper}, {"samples", c.samples}};
    row["lower"] = c.lower ? json(*c.lower) : json(nullptr);
    j["calderon"].push_back(row);
  }
  auto scalars = [](const std::map<std::string, ScalarEstimate>& m) {
    json arr = json::array();
    for (const auto& [k, e] : m) arr.push_back({{"q", e.q}, {"value", e.value}, {"samples", e.samples}});
    return arr;
  };
  j["ntmax"] = scalars(ntmax_);
  j["kappa"] = scalars(kappa_);
  return j.dump(indent);
}

ConstantsLedger ConstantsLedger::from_json(const std::string& text) {
  const json j = json::parse(text);
  ConstantsLedger l;
  l.seed = j.at("seed").get<std::uint64_t>();
  l.samples = j.at("samples").get<int>();
  l.max_degree = j.at("max_degree").get<int>();
  const auto& g = j.at("grid");
  l.grid = CalderonGrid{g.at("n_radial").get<int>(), g.at("n_theta").get<int>(), g.at("r_min").get<double>()};
  l.kappa_exponents = j.at("kappa_exponents").get<std::vector<double>>();
  for (const auto& row : j.at("calderon")) {
    CalderonEstimate c;
    c.p = row.at("p").get<double>();
    c.delta = row.at("delta").get<double>();
    c.upper = row.at("upper").get<double>();
    c.samples = row.at("samples").get<int>();
    if (!row.at("lower").is_null()) c.lower = row.at("lower").get<double>();
    l.set_calderon(c);
  }
  for (const auto& row : j.at("ntmax"))
    l.set_ntmax({row.at("q").get<double>(), row.at("value").get<double>(), row.at("samples").get<int>()});
  for (const auto& row : j.at("kappa"))
    l.set_kappa({row.at("q").get<double>(), row.at("value").get<double>(), row.at("samples").get<int>()});
  return l;
}

std::vector<std::pair<double, double>> required_calderon_cells(double q, double p) {
  if (p == 2.0) return {};
  return {{q, p - 1.0}, {conjugate_exponent(q), 1.0}, {2.0 * q, 0.5 * (p - 1.0)}};
}

namespace {

TaylorPoly vanishing_at_origin(const TaylorPoly& f) {
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  c[0] = 0.0;
  return TaylorPoly(std::move(c));
}

constexpr std::uint64_t kKappaStream = 0x6b61707061ULL;

}  // namespace

ConstantsLedger build_ledger(const LedgerSpec& spec) {
  if (spec.samples < 1) throw std::invalid_argument("ledger needs at least one sample");
  ConstantsLedger ledger;
  ledger.seed = spec.seed;
  ledger.samples = spec.samples;
  ledger.max_degree = spec.max_degree;
  ledger.grid = spec.grid;
  ledger.kappa_exponents = spec.kappa_exponents;

  std::map<std::string, std::pair<double, double>> cells;
  std::set<double> ntmax_q, kappa_q;
  for (const auto& [q, p] : spec.targets) {
    if (p == 2.0) continue;
    for (const auto& c : required_calderon_cells(q, p)) cells[ConstantsLedger::key(c.first, c.second)] = c;
    ntmax_q.insert(conjugate_exponent(q));
    kappa_q.insert(q);
  }

  const auto corpus = poly_corpus(spec.seed, spec.samples, spec.max_degree);
  const size_t n = corpus.size();

  std::map<double, std::vector<std::pair<double, double>>> by_delta;
  for (const auto& [k, c] : cells) by_delta[c.second].push_back(c);
  for (const auto& [delta, group] : by_delta) {
    // slots 0..n-1: corpus items, n..2n-1: the same items with c_0 = 0
    std::vector<CalderonProfile> profiles(2 * n);
    parallel_for(
        2 * n,
        [&](size_t i) {
          const TaylorPoly F = i < n ? corpus[i] : vanishing_at_origin(corpus[i - n]);
          profiles[i] = calderon_profile(F, delta, spec.grid);
        },
        spec.threads);
    for (const auto& [p, d] : group) {
      CalderonEstimate e{p, d, 0.0, std::nullopt, spec.samples};
      double lower = 0.0;
      for (size_t i = 0; i < 2 * n; ++i) {
        const auto r = calderon_ratios(profiles[i], p);
        e.upper = std::max(e.upper, r.upper);
        if (r.lower) lower = std::max(lower, *r.lower);
      }
      e.lower = lower;
      ledger.set_calderon(e);
    }
  }

  if (!ntmax_q.empty()) {
    std::vector<std::vector<double>> hstar(n);
    parallel_for(
        n,
        [&](size_t i) { hstar[i] = nontangential_max_profile(corpus[i], spec.ntmax_theta, spec.ntmax_sampling); },
        spec.threads);
    for (double q : ntmax_q) {
      double best = 0.0;
      for (size_t i = 0; i < n; ++i)
        best = std::max(best, mean_norm(std::span<const double>(hstar[i]), q) / integral_mean(corpus[i], 1.0, q));
      ledger.set_ntmax({q, best, spec.samples});
    }
  }

  if (!kappa_q.empty()) {
    const auto hs = poly_corpus(spec.seed ^ kKappaStream, spec.samples, spec.max_degree, true);
    const size_t np = spec.kappa_exponents.size();
    std::vector<double> inner(n * np);
    parallel_for(
        n,
        [&](size_t i) {
          for (size_t k = 0; k < np; ++k)
            inner[i * np + k] = std::abs(green_inner_term(corpus[i], hs[i], spec.kappa_exponents[k]));
        },
        spec.threads);
    for (double q : kappa_q) {
      const double qp = conjugate_exponent(q);
      double best = 0.0;
      for (size_t i = 0; i < n; ++i) {
        const double h_norm = integral_mean(hs[i], 1.0, qp);
        for (size_t k = 0; k < np; ++k) {
          const double p = spec.kappa_exponents[k];
          const double factor = p * std::abs(p - 2.0) / (p - 1.0);
          const double f_norm = std::pow(integral_mean(corpus[i], 1.0, (p - 1.0) * q), p - 1.0);
          best = std::max(best, inner[i * np + k] / (factor * f_norm * h_norm));
        }
      }
      ledger.set_kappa({q, best, spec.samples});
    }
  }
  return ledger;
}

double assemble_ctilde(double q, double p, const ConstantsLedger& ledger) {
  if (!(q > 1.0) || !(p > 1.0)) throw std::invalid_argument("assemble_ctilde needs q > 1 and p > 1");
  if (p == 2.0) return 0.0;
  const double qp = conjugate_exponent(q);
  const double a = std::abs(p - 2.0);
  const double c2 = ledger.calderon_upper(2.0 * q, 0.5 * (p - 1.0));
  const double bracket = p * a / (p - 1.0) * ledger.kappa(q) +
                         a / (4.0 * (p - 1.0)) * ledger.calderon_upper(q, p - 1.0) * ledger.calderon_upper(qp, 1.0) +
                         ledger.ntmax(qp) * p * a / (2.0 * (p - 1.0)) * c2 * c2;
  return ConstantsLedger::szego(qp) * bracket;
}

}  // namespace hardylab
