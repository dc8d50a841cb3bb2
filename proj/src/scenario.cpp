#include "photonfield/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace photonfield {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ConfigError(path + ": " + what); }

/// A JSON object being consumed key by key; `finish` rejects whatever was not read.
class ObjectReader {
 public:
  ObjectReader(const json& value, std::string path) : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) const { return value_.contains(key); }
  std::string path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& required(const std::string& key) {
    if (!value_.contains(key)) fail(path(key), "missing required field");
    seen_.insert(key);
    return value_.at(key);
  }

  const json* optional(const std::string& key) {
    if (!value_.contains(key)) return nullptr;
    seen_.insert(key);
    return &value_.at(key);
  }

  void finish() const {
    for (const auto& [key, _] : value_.items()) {
      if (!seen_.count(key)) fail(path(key), "unknown key");
    }
  }

 private:
  const json& value_;
  std::string path_;
  std::set<std::string> seen_;
};

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

double as_positive(const json& v, const std::string& path) {
  const double x = as_number(v, path);
  if (!(x > 0.0) || !std::isfinite(x)) fail(path, "expected a positive finite number");
  return x;
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long long>();
}

int as_int_in(const json& v, const std::string& path, long long lo, long long hi) {
  const long long x = as_integer(v, path);
  if (x < lo || x > hi) fail(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!v.is_array()) fail(path, "expected an array");
  if (size && v.size() != *size) fail(path, "expected " + std::to_string(*size) + " entries");
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Vec3 as_vec3(const json& v, const std::string& path) {
  as_array(v, path, 3);
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) out(static_cast<int>(i)) = as_number(v[i], at(path, i));
  return out;
}

IVec3 as_ivec3(const json& v, const std::string& path) {
  as_array(v, path, 3);
  IVec3 out;
  for (std::size_t i = 0; i < 3; ++i) out(static_cast<int>(i)) = as_int_in(v[i], at(path, i), -1000, 1000);
  return out;
}

/// A number or a [re, im] pair.
Complex as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) fail(path, "expected a number or a [re, im] pair");
  return {as_number(v[0], at(path, 0)), as_number(v[1], at(path, 1))};
}

Helicity as_helicity(const json& v, const std::string& path) {
  const std::string s = as_string(v, path);
  if (s == "+") return Helicity::plus;
  if (s == "-") return Helicity::minus;
  fail(path, "expected \"+\" or \"-\"");
}

FieldKind as_field_kind(const json& v, const std::string& path) {
  try {
    return parse_field_kind(as_string(v, path));
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

ModeSpec parse_mode(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  ModeSpec m;
  m.s = as_helicity(r.required("s"), r.path("s"));
  m.n = as_ivec3(r.required("n"), r.path("n"));
  r.finish();
  return m;
}

std::vector<int> as_occupancies(const json& v, const std::string& path) {
  as_array(v, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int_in(v[i], at(path, i), 0, 1000));
  return out;
}

TransverseGauge parse_gauge(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  TransverseGauge g;
  if (const json* p = r.optional("primary")) g.primary = as_vec3(*p, r.path("primary"));
  if (const json* p = r.optional("fallback")) g.fallback = as_vec3(*p, r.path("fallback"));
  if (const json* p = r.optional("switch_threshold")) g.switch_threshold = as_positive(*p, r.path("switch_threshold"));
  r.finish();
  return g;
}

LatticeConfig parse_lattice(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  LatticeConfig c;
  if (const json* p = r.optional("box_length")) c.box_length = as_positive(*p, r.path("box_length"));
  if (const json* p = r.optional("hbar")) c.units.hbar = as_positive(*p, r.path("hbar"));
  if (const json* p = r.optional("c")) c.units.c = as_positive(*p, r.path("c"));
  c.n_max = as_int_in(r.required("n_max"), r.path("n_max"), 1, 1000);
  if (const json* p = r.optional("max_dimension")) {
    c.max_dimension = static_cast<std::size_t>(as_int_in(*p, r.path("max_dimension"), 1, 1LL << 30));
  }
  if (const json* p = r.optional("max_nonzeros")) {
    c.max_nonzeros = static_cast<std::size_t>(as_int_in(*p, r.path("max_nonzeros"), 1, 1LL << 30));
  }
  if (const json* p = r.optional("gauge")) c.gauge = parse_gauge(*p, r.path("gauge"));

  const json* modes = r.optional("modes");
  const json* cube = r.optional("cube_cutoff");
  if ((modes == nullptr) == (cube == nullptr)) fail(path, "exactly one of `modes` or `cube_cutoff` is required");
  if (modes) {
    const std::string mp = r.path("modes");
    as_array(*modes, mp);
    for (std::size_t i = 0; i < modes->size(); ++i) c.modes.push_back(parse_mode((*modes)[i], at(mp, i)));
  } else {
    c.modes = cube_modes(as_int_in(*cube, r.path("cube_cutoff"), 1, 50));
  }
  r.finish();

  try {
    ModeSet check(c);
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
  return c;
}

StateSpec parse_state(const json& v, const std::string& path, const LatticeConfig& lattice) {
  ObjectReader r(v, path);
  StateSpec s;
  const std::string kind = as_string(r.required("kind"), r.path("kind"));
  const std::size_t modes = lattice.modes.size();
  auto check_length = [&](std::size_t n, const std::string& p) {
    if (n != modes) fail(p, "expected one entry per lattice mode (" + std::to_string(modes) + ")");
  };
  if (kind == "vacuum") {
    s.kind = StateSpec::Kind::vacuum;
  } else if (kind == "number") {
    s.kind = StateSpec::Kind::number;
    s.occupancies = as_occupancies(r.required("occupancies"), r.path("occupancies"));
    check_length(s.occupancies.size(), r.path("occupancies"));
  } else if (kind == "coherent") {
    s.kind = StateSpec::Kind::coherent;
    s.alpha = as_complex(r.required("alpha"), r.path("alpha"));
    s.mode = parse_mode(r.required("mode"), r.path("mode"));
    if (std::find(lattice.modes.begin(), lattice.modes.end(), s.mode) == lattice.modes.end()) {
      fail(r.path("mode"), "mode is not part of the lattice");
    }
    s.cap = as_int_in(r.required("cap"), r.path("cap"), 0, lattice.n_max);
  } else if (kind == "coherent_product") {
    s.kind = StateSpec::Kind::coherent_product;
    const std::string ap = r.path("alphas");
    const json& a = as_array(r.required("alphas"), ap);
    for (std::size_t i = 0; i < a.size(); ++i) s.alphas.push_back(as_complex(a[i], at(ap, i)));
    check_length(s.alphas.size(), ap);
  } else if (kind == "coefficients") {
    s.kind = StateSpec::Kind::coefficients;
    const std::string tp = r.path("terms");
    const json& terms = as_array(r.required("terms"), tp);
    if (terms.empty()) fail(tp, "expected at least one term");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      ObjectReader t(terms[i], at(tp, i));
      auto occ = as_occupancies(t.required("occupancies"), t.path("occupancies"));
      check_length(occ.size(), t.path("occupancies"));
      s.coefficients[occ] += as_complex(t.required("amplitude"), t.path("amplitude"));
      t.finish();
    }
  } else {
    fail(r.path("kind"), "unknown state kind '" + kind +
                             "' (expected vacuum, number, coherent, coherent_product or coefficients)");
  }
  for (std::size_t i = 0; i < s.occupancies.size(); ++i) {
    if (s.occupancies[i] > lattice.n_max) fail(at(r.path("occupancies"), i), "occupancy exceeds n_max");
  }
  for (const auto& [occ, _] : s.coefficients) {
    for (int n : occ) {
      if (n > lattice.n_max) fail(r.path("terms"), "occupancy exceeds n_max");
    }
  }
  r.finish();
  return s;
}

GridSpec parse_grid(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  GridSpec g;
  if (const json* p = r.optional("field")) g.field = as_field_kind(*p, r.path("field"));
  if (const json* p = r.optional("r")) g.r = as_vec3(*p, r.path("r"));
  g.t_begin = as_number(r.required("t_begin"), r.path("t_begin"));
  g.t_end = as_number(r.required("t_end"), r.path("t_end"));
  g.count = as_int_in(r.required("count"), r.path("count"), 0, 1000000);
  r.finish();
  return g;
}

ScanSpec parse_scan(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  ScanSpec s;
  if (const json* p = r.optional("field")) s.field = as_field_kind(*p, r.path("field"));
  const std::string cp = r.path("cutoffs");
  const json& c = as_array(r.required("cutoffs"), cp);
  for (std::size_t i = 0; i < c.size(); ++i) {
    s.cutoffs.push_back(as_int_in(c[i], at(cp, i), 1, 50));
    if (i > 0 && s.cutoffs[i] <= s.cutoffs[i - 1]) fail(at(cp, i), "cutoffs must be strictly increasing");
  }
  r.finish();
  return s;
}

SamplingSpec parse_sampling(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  SamplingSpec s;
  auto count = [&](const char* key, int& out) {
    if (const json* p = r.optional(key)) out = as_int_in(*p, r.path(key), 0, 1000000);
  };
  count("directions", s.directions);
  count("near_singular_directions", s.near_singular_directions);
  count("boosts", s.boosts);
  count("point_pairs", s.point_pairs);
  count("random_states", s.random_states);
  count("random_points", s.random_points);
  if (const json* p = r.optional("fd_step")) s.fd_step = as_positive(*p, r.path("fd_step"));
  if (const json* p = r.optional("later_time")) s.later_time = as_number(*p, r.path("later_time"));
  if (const json* p = r.optional("probe")) {
    ObjectReader pr(*p, r.path("probe"));
    if (const json* q = pr.optional("r")) s.probe.r = as_vec3(*q, pr.path("r"));
    if (const json* q = pr.optional("t")) s.probe.t = as_number(*q, pr.path("t"));
    pr.finish();
  }
  r.finish();
  return s;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("<document>: invalid JSON: ") + e.what());
  }
  ObjectReader r(doc, "");
  const std::string schema = as_string(r.required("schema"), "schema");
  if (schema != kScenarioSchema) fail("schema", "unsupported schema '" + schema + "', expected '" + kScenarioSchema + "'");

  Scenario s;
  if (const json* p = r.optional("name")) s.name = as_string(*p, "name");
  if (const json* p = r.optional("seed")) {
    if (!p->is_number_unsigned()) fail("seed", "expected a nonnegative integer");
    s.seed = p->get<std::uint64_t>();
  }
  s.lattice = parse_lattice(r.required("lattice"), "lattice");
  if (const json* p = r.optional("state")) s.state = parse_state(*p, "state", s.lattice);
  if (const json* p = r.optional("checks")) {
    as_array(*p, "checks");
    const auto& known = registered_checks();
    for (std::size_t i = 0; i < p->size(); ++i) {
      const std::string name = as_string((*p)[i], at("checks", i));
      if (!std::binary_search(known.begin(), known.end(), name)) fail(at("checks", i), "unknown check '" + name + "'");
      if (std::find(s.checks.begin(), s.checks.end(), name) != s.checks.end()) fail(at("checks", i), "duplicate check");
      s.checks.push_back(name);
    }
  }
  if (const json* p = r.optional("grid")) s.grid = parse_grid(*p, "grid");
  if (const json* p = r.optional("vacuum_scan")) s.vacuum_scan = parse_scan(*p, "vacuum_scan");
  if (const json* p = r.optional("sampling")) s.sampling = parse_sampling(*p, "sampling");
  r.finish();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

FockState build_state(const FockBasis& basis, const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::vacuum:
      return vacuum(basis);
    case StateSpec::Kind::number:
      return number_state(basis, spec.occupancies);
    case StateSpec::Kind::coherent:
      return superposition(basis, coherent_profile(basis, spec.alpha, basis.mode_set().index_of(spec.mode), spec.cap));
    case StateSpec::Kind::coherent_product:
      return coherent_product_state(basis, spec.alphas);
    case StateSpec::Kind::coefficients:
      return superposition(basis, spec.coefficients);
  }
  throw InvalidInput("unknown state kind");
}

}  // namespace photonfield
