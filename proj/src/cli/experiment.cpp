#include "patchcap/cli/experiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "patchcap/errors.hpp"

namespace patchcap::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw SpecError(field + ": " + msg);
}

double get_number(const json& node, const std::string& field) {
  if (!node.is_number()) fail(field, "expected a number");
  return node.get<double>();
}

double positive(const json& node, const std::string& field) {
  const double v = get_number(node, field);
  if (!(v > 0.0) || !std::isfinite(v)) fail(field, "must be positive");
  return v;
}

std::uint64_t count(const json& node, const std::string& field) {
  if (node.is_number_unsigned()) return node.get<std::uint64_t>();
  if (node.is_number_float()) {
    const double v = node.get<double>();
    if (v >= 1.0 && v == std::floor(v) && v < 1.8e19) return static_cast<std::uint64_t>(v);
  }
  fail(field, "expected a positive integer");
}

Reactivity reactivity(const json& node, const std::string& field) {
  try {
    if (node.is_string()) return Reactivity::parse(node.get<std::string>());
    return Reactivity(get_number(node, field));
  } catch (const DomainError& e) {
    fail(field, e.what());
  }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail(where.empty() ? key : where + "." + key, "unknown field");
  }
}

LayoutSpec parse_layout(const json& node) {
  if (!node.is_object()) fail("layout", "expected an object");
  LayoutSpec spec;
  if (node.contains("centers")) {
    reject_unknown(node, {"centers", "radii", "kappas"}, "layout");
    try {
      spec.explicit_layout = layout_from_json(node);
    } catch (const Error& e) {
      fail("layout", e.what());
    }
    return spec;
  }
  reject_unknown(node, {"preset", "radius", "n", "seed"}, "layout");
  if (!node.contains("preset") || !node["preset"].is_string()) {
    fail("layout.preset", "expected a preset name or explicit centers");
  }
  spec.preset = node["preset"].get<std::string>();
  if (!node.contains("radius")) fail("layout.radius", "missing");
  spec.radius = positive(node["radius"], "layout.radius");
  if (spec.preset == "random" || spec.preset == "fibonacci") {
    if (!node.contains("n")) fail("layout.n", "missing");
    spec.n = count(node["n"], "layout.n");
  } else if (spec.preset != "single" && spec.preset != "octahedron" &&
             spec.preset != "icosahedron") {
    fail("layout.preset",
         "unknown preset '" + spec.preset +
             "' (expected single, octahedron, icosahedron, random or fibonacci)");
  }
  if (node.contains("seed")) spec.seed = node["seed"].get<std::uint64_t>();
  spec.build(Reactivity(1.0));  // surface geometry errors at parse time
  return spec;
}

SimConfig parse_mc(const json& node) {
  if (!node.is_object()) fail("mc", "expected an object");
  reject_unknown(node, {"layer_width", "trajectories", "seed", "start", "max_cycles"}, "mc");
  SimConfig cfg;
  if (node.contains("layer_width")) cfg.layer_width = positive(node["layer_width"], "mc.layer_width");
  if (node.contains("trajectories")) cfg.trajectories = count(node["trajectories"], "mc.trajectories");
  if (node.contains("max_cycles")) cfg.max_cycles = count(node["max_cycles"], "mc.max_cycles");
  if (node.contains("seed")) {
    if (!node["seed"].is_number_unsigned()) fail("mc.seed", "expected a nonnegative integer");
    cfg.seed = node["seed"].get<std::uint64_t>();
  }
  if (node.contains("start")) {
    const json& s = node["start"];
    if (!s.is_object() || !s.contains("type") || !s["type"].is_string()) {
      fail("mc.start", "expected {\"type\": \"uniform\" | \"point\"}");
    }
    const auto type = s["type"].get<std::string>();
    if (type == "uniform") {
      cfg.start = UniformOnSphere{};
    } else if (type == "point") {
      if (!s.contains("point") || !s["point"].is_array() || s["point"].size() != 3) {
        fail("mc.start.point", "expected [x, y, z]");
      }
      const auto& p = s["point"];
      cfg.start = PointStart{{get_number(p[0], "mc.start.point"), get_number(p[1], "mc.start.point"),
                              get_number(p[2], "mc.start.point")}};
    } else {
      fail("mc.start.type", "unknown start type '" + type + "'");
    }
  }
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    fail("mc", e.what());
  }
  return cfg;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::ThreeTerm: return "three_term";
    case Method::Homogenized: return "homogenized";
    case Method::BergPurcell: return "berg_purcell";
    case Method::Heuristic: return "heuristic";
    case Method::Dagdug: return "dagdug";
    case Method::MonteCarlo: return "monte_carlo";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::ThreeTerm, Method::Homogenized, Method::BergPurcell, Method::Heuristic,
                   Method::Dagdug, Method::MonteCarlo}) {
    if (method_name(m) == name) return m;
  }
  throw SpecError("methods: unknown method '" + name + "'");
}

PatchLayout LayoutSpec::build(Reactivity kappa) const {
  if (explicit_layout) return explicit_layout->with_uniform_kappa(kappa);
  if (preset == "single") return layout_single(radius, kappa);
  if (preset == "octahedron") return layout_octahedron(radius, kappa);
  if (preset == "icosahedron") return layout_icosahedron(radius, kappa);
  if (preset == "random") return layout_random_uniform(n, radius, kappa, seed);
  if (preset == "fibonacci") return layout_fibonacci(n, radius, kappa);
  throw SpecError("layout.preset: unknown preset '" + preset + "'");
}

PatchLayout LayoutSpec::build_native() const {
  if (!explicit_layout) throw SpecError("kappa: a grid is required for preset layouts");
  return *explicit_layout;
}

std::vector<PatchLayout> ExperimentSpec::layouts() const {
  std::vector<PatchLayout> out;
  if (kappas.empty()) {
    out.push_back(layout.build_native());
  } else {
    for (const auto& k : kappas) out.push_back(layout.build(k));
  }
  return out;
}

std::vector<Reactivity> parse_kappa_grid(const json& node) {
  std::vector<Reactivity> grid;
  if (node.is_object()) {
    reject_unknown(node, {"log_range"}, "kappa");
    const json& r = node.value("log_range", json());
    if (!r.is_array() || r.size() != 3) fail("kappa.log_range", "expected [lo, hi, count]");
    const double lo = positive(r[0], "kappa.log_range[0]");
    const double hi = positive(r[1], "kappa.log_range[1]");
    const auto n = count(r[2], "kappa.log_range[2]");
    if (!(hi >= lo)) fail("kappa.log_range", "hi must not be below lo");
    if (n == 1) return {Reactivity(lo)};
    for (std::uint64_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      grid.emplace_back(i + 1 == n ? hi : lo * std::pow(hi / lo, t));
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      grid.push_back(reactivity(node[i], "kappa[" + std::to_string(i) + "]"));
    }
  } else {
    grid.push_back(reactivity(node, "kappa"));
  }
  if (grid.empty()) fail("kappa", "the grid is empty");
  return grid;
}

ExperimentSpec parse_experiment(const json& doc) {
  if (!doc.is_object()) throw SpecError("experiment: expected a JSON object");
  reject_unknown(doc, {"layout", "kappa", "eps", "methods", "model", "mc", "dimensional", "output"},
                 "");
  ExperimentSpec spec;
  if (!doc.contains("layout")) fail("layout", "missing");
  spec.layout = parse_layout(doc["layout"]);
  if (doc.contains("kappa")) {
    spec.kappas = parse_kappa_grid(doc["kappa"]);
  } else if (!spec.layout.explicit_layout) {
    fail("kappa", "missing (required for preset layouts)");
  }
  if (doc.contains("eps")) spec.eps = positive(doc["eps"], "eps");
  if (doc.contains("methods")) {
    const json& m = doc["methods"];
    if (!m.is_array()) fail("methods", "expected a list");
    for (const auto& name : m) {
      if (!name.is_string()) fail("methods", "expected method names");
      spec.methods.insert(method_from_name(name.get<std::string>()));
    }
    if (spec.methods.empty()) fail("methods", "at least one method is required");
  } else {
    spec.methods = {Method::ThreeTerm};
  }
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) fail("model", "expected a model name");
    spec.model = model_from_name(doc["model"].get<std::string>());
  }
  if (doc.contains("mc")) spec.mc = parse_mc(doc["mc"]);
  if (doc.contains("dimensional")) {
    const json& d = doc["dimensional"];
    if (!d.is_object()) fail("dimensional", "expected an object");
    reject_unknown(d, {"R", "D", "U_inf"}, "dimensional");
    DimensionalContext ctx;
    if (d.contains("R")) ctx.R = positive(d["R"], "dimensional.R");
    if (d.contains("D")) ctx.D = positive(d["D"], "dimensional.D");
    if (d.contains("U_inf")) ctx.U_inf = positive(d["U_inf"], "dimensional.U_inf");
    spec.dimensional = ctx;
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) fail("output", "expected a path");
    spec.output = doc["output"].get<std::string>();
  }
  return spec;
}

ExperimentSpec load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open experiment file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                    ": invalid JSON");
  }
  return parse_experiment(doc);
}

}  // namespace patchcap::cli
