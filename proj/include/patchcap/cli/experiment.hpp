#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "patchcap/asymptotics.hpp"
#include "patchcap/geometry.hpp"
#include "patchcap/montecarlo.hpp"
#include "patchcap/patch_kernels.hpp"

namespace patchcap::cli {

enum class Method { ThreeTerm, Homogenized, BergPurcell, Heuristic, Dagdug, MonteCarlo };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Named preset or explicit layout. Presets: single, octahedron, icosahedron,
/// random, fibonacci.
struct LayoutSpec {
  std::string preset;  ///< empty for an explicit layout
  double radius = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<PatchLayout> explicit_layout;

  /// The layout with every patch at reactivity `kappa`.
  PatchLayout build(Reactivity kappa) const;
  /// Explicit layouts keep their own reactivities when no grid is given.
  PatchLayout build_native() const;
};

/// One experiment: a layout, a kappa grid and the methods to evaluate on it.
///
///   {
///     "layout": {"preset": "icosahedron", "radius": 0.2}
///            or {"centers": [[x,y,z],...], "radii": [...], "kappas": [...]},
///     "kappa": [0.1, 1, "inf"] or {"log_range": [1e-2, 1e2, 9]},
///     "eps": 0.2,                     (optional, defaults to the largest radius)
///     "methods": ["three_term", "homogenized", "monte_carlo"],
///     "model": "sigmoid",
///     "mc": {"layer_width": 0.01, "trajectories": 100000, "seed": 1,
///            "start": {"type": "uniform"} or {"type": "point", "point": [0,0,2]}},
///     "dimensional": {"R": 1, "D": 1, "U_inf": 1},   (optional)
///     "output": "out.csv"             (optional)
///   }
struct ExperimentSpec {
  LayoutSpec layout;
  std::vector<Reactivity> kappas;  ///< empty only for explicit layouts
  std::optional<double> eps;
  std::set<Method> methods;
  CapacitanceModel model = SigmoidModel{};
  SimConfig mc;
  std::optional<DimensionalContext> dimensional;
  std::string output;

  /// Layouts to evaluate, one per grid point (or the explicit layout once).
  std::vector<PatchLayout> layouts() const;
};

/// Parses and validates; throws SpecError naming the offending field.
ExperimentSpec parse_experiment(const nlohmann::json& doc);
/// Reads a JSON file; parse errors report line and column.
ExperimentSpec load_experiment(const std::string& path);

/// Accepts a number, "inf", or {"log_range": [lo, hi, count]} (inclusive,
/// log-spaced).
std::vector<Reactivity> parse_kappa_grid(const nlohmann::json& node);

}  // namespace patchcap::cli
