#include "hardylab/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hardylab {

using nlohmann::json;

std::vector<std::string> experiment_names() {
  return {"monomial-projection", "cone-geometry", "calderon-sweep", "hilbert",      "optimality",
          "duality",             "green-identity", "bpinhardy",     "p2-bound",     "best-approx",
          "szego-norm",          "ctilde-continuity", "ledger-bounds", "ryabykh",   "isoperimetric",
          "project",             "squarefn",       "extremal",      "dual",         "approx",
          "ledger"};
}

ExperimentConfig default_config(const std::string& name) {
  const auto names = experiment_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw ConfigError("unknown experiment '" + name + "'");
  ExperimentConfig c;
  c.experiment = name;
  if (name == "monomial-projection") {
    c.grid = {0, 96, 128, -1.0};
    c.tolerance = 1e-8;
  } else if (name == "cone-geometry") {
    c.grid = {0, 64, 64, -1.0};
    c.tolerance = 1e-8;
  } else if (name == "calderon-sweep") {
    c.p = {1.0, 2.0, 4.0};
    c.delta = {0.5, 1.0, 2.0};
    c.samples = 50;
    c.kernel.max_degree = 16;
    c.grid = {0, 32, 512, 0.1};
    c.tolerance = 0.02;
  } else if (name == "hilbert") {
    c.p = {2.0};
    c.kernel.count = 20;
    c.tol = 1e-12;
    c.tolerance = 1e-6;
  } else if (name == "optimality") {
    c.p = {4.0 / 3.0, 4.0};
    c.tolerance = 1e-3;
  } else if (name == "duality") {
    c.p = {4.0};
    c.tolerance = 1e-4;
  } else if (name == "green-identity") {
    c.p = {3.0, 4.0};
    c.samples = 10;
    c.kernel.max_degree = 4;
    c.grid = {1024, 64, 128, -1.0};
    c.tolerance = 1e-6;
  } else if (name == "bpinhardy") {
    c.p = {4.0 / 3.0, 2.0, 4.0};
    c.samples = 100;
    c.max_exponent = 5;
    c.grid = {0, 48, 128, -1.0};
    c.tolerance = 0.02;
  } else if (name == "p2-bound") {
    c.p = {2.0};
    c.q = {4.0 / 3.0, 2.0, 4.0};
    c.tolerance = 1e-6;
  } else if (name == "best-approx") {
    c.p = {2.0, 4.0};
    c.q = {4.0 / 3.0, 2.0, 4.0};
    c.samples = 20;
    c.kernel.max_degree = 4;
  } else if (name == "szego-norm") {
    c.p = {4.0 / 3.0, 2.0, 4.0};
    c.samples = 100;
    c.kernel.max_degree = 16;
    c.tolerance = 1e-8;
  } else if (name == "ctilde-continuity") {
    c.p = {1.9, 1.95, 2.0, 2.05, 2.1};
    c.q = {2.0};
  } else if (name == "ledger-bounds") {
    c.p = {2.05, 4.0};
    c.q = {2.0};
    c.kernel.family = "one_plus_half_z";
    c.tolerance = 1e-8;
  } else if (name == "ryabykh") {
    c.p = {4.0};
    c.q = {4.0 / 3.0, 2.0};
    c.kernel.family = "one_plus_half_z";
  } else if (name == "isoperimetric") {
    c.p = {4.0 / 3.0, 2.0, 4.0};
    c.samples = 100;
    c.kernel.max_degree = 12;
    c.tolerance = 1e-9;
  } else if (name == "project") {
    c.kernel.family = "terms";
    c.kernel.terms = {{2, 1, 1.0}, {1, 0, 1.0}};
    c.grid = {0, 64, 128, -1.0};
  } else if (name == "squarefn") {
    c.p = {2.0};
    c.delta = {1.0};
    c.kernel.family = "coefficients";
    c.kernel.coefficients = {0.0, 0.0, 1.0};
    c.grid = {0, 32, 512, 0.0};
  } else if (name == "extremal") {
    c.p = {4.0};
    c.kernel.family = "z";
  } else if (name == "dual") {
    c.p = {4.0 / 3.0};
    c.kernel.family = "fourier";
    c.kernel.fourier = {{0, 1.0}, {-1, 0.5}};
  } else if (name == "ledger") {
    c.p = {1.9, 1.95, 2.05, 2.1, 4.0};
    c.q = {2.0};
  } else if (name == "approx") {
    c.p = {2.0};
    c.q = {2.0};
    c.kernel.family = "two_cos";
  }
  return c;
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown field '" + k + "' in " + where);
}

cplx complex_from(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError("complex numbers are written as a number or [re, im]");
}

json complex_to(cplx c) { return json::array({c.real(), c.imag()}); }

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) {
    try {
      out = j.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(std::string("field '") + key + "': " + e.what());
    }
  }
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(j,
                 {"schema_version", "experiment", "p", "q", "delta", "space", "kernel", "grid", "degree_cap", "tol",
                  "tolerance", "samples", "max_exponent", "seed", "output_dir", "basename", "ledger_path",
                  "ledger_samples", "threads"},
                 "config");
  if (!j.contains("schema_version")) throw ConfigError("config lacks schema_version");
  if (j.at("schema_version") != kSchemaVersion)
    throw ConfigError("unsupported schema_version " + j.at("schema_version").dump());
  if (!j.contains("experiment")) throw ConfigError("config lacks experiment");
  ExperimentConfig c = default_config(j.at("experiment").get<std::string>());
  read(j, "p", c.p);
  read(j, "q", c.q);
  read(j, "delta", c.delta);
  read(j, "space", c.space);
  read(j, "degree_cap", c.degree_cap);
  read(j, "tol", c.tol);
  read(j, "tolerance", c.tolerance);
  read(j, "samples", c.samples);
  read(j, "max_exponent", c.max_exponent);
  read(j, "seed", c.seed);
  read(j, "output_dir", c.output_dir);
  read(j, "basename", c.basename);
  read(j, "ledger_path", c.ledger_path);
  read(j, "ledger_samples", c.ledger_samples);
  read(j, "threads", c.threads);
  if (c.space != "bergman" && c.space != "hardy" && c.space != "both")
    throw ConfigError("space must be bergman, hardy or both");
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    reject_unknown(g, {"m", "radial", "theta", "r_min"}, "grid");
    read(g, "m", c.grid.m);
    read(g, "radial", c.grid.radial);
    read(g, "theta", c.grid.theta);
    read(g, "r_min", c.grid.r_min);
  }
  if (j.contains("kernel")) {
    const auto& k = j.at("kernel");
    reject_unknown(k, {"family", "coefficients", "terms", "fourier", "count", "max_degree"}, "kernel");
    read(k, "family", c.kernel.family);
    read(k, "count", c.kernel.count);
    read(k, "max_degree", c.kernel.max_degree);
    if (k.contains("coefficients")) {
      c.kernel.coefficients.clear();
      for (const auto& v : k.at("coefficients")) c.kernel.coefficients.push_back(complex_from(v));
    }
    if (k.contains("terms")) {
      c.kernel.terms.clear();
      for (const auto& t : k.at("terms")) {
        reject_unknown(t, {"a", "b", "c"}, "kernel.terms");
        c.kernel.terms.push_back({t.at("a").get<int>(), t.at("b").get<int>(), complex_from(t.at("c"))});
      }
    }
    if (k.contains("fourier")) {
      c.kernel.fourier.clear();
      for (const auto& t : k.at("fourier")) {
        reject_unknown(t, {"n", "c"}, "kernel.fourier");
        c.kernel.fourier.push_back({t.at("n").get<int>(), complex_from(t.at("c"))});
      }
    }
  }
  return c;
}

std::string config_to_json(const ExperimentConfig& c, int indent) {
  json k = {{"family", c.kernel.family}, {"count", c.kernel.count}, {"max_degree", c.kernel.max_degree}};
  k["coefficients"] = json::array();
  for (const auto& v : c.kernel.coefficients) k["coefficients"].push_back(complex_to(v));
  k["terms"] = json::array();
  for (const auto& t : c.kernel.terms) k["terms"].push_back({{"a", t.a}, {"b", t.b}, {"c", complex_to(t.c)}});
  k["fourier"] = json::array();
  for (const auto& t : c.kernel.fourier) k["fourier"].push_back({{"n", t.n}, {"c", complex_to(t.c)}});
  json j = {{"schema_version", c.schema_version},
            {"experiment", c.experiment},
            {"p", c.p},
            {"q", c.q},
            {"delta", c.delta},
            {"space", c.space},
            {"kernel", k},
            {"grid", {{"m", c.grid.m}, {"radial", c.grid.radial}, {"theta", c.grid.theta}, {"r_min", c.grid.r_min}}},
            {"degree_cap", c.degree_cap},
            {"tol", c.tol},
            {"tolerance", c.tolerance},
            {"samples", c.samples},
            {"max_exponent", c.max_exponent},
            {"seed", c.seed},
            {"output_dir", c.output_dir},
            {"basename", c.basename},
            {"ledger_path", c.ledger_path},
            {"ledger_samples", c.ledger_samples},
            {"threads", c.threads}};
  return j.dump(indent);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

void apply_overrides(ExperimentConfig& c, const ConfigOverrides& o) {
  if (o.seed) c.seed = *o.seed;
  if (o.grid_m) c.grid.m = *o.grid_m;
  if (o.grid_r) c.grid.radial = *o.grid_r;
  if (o.degree_cap) c.degree_cap = *o.degree_cap;
  if (o.tol) c.tol = *o.tol;
  if (o.output_dir) c.output_dir = *o.output_dir;
}

}  // namespace hardylab
