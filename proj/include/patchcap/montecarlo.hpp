#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "patchcap/geometry.hpp"
#include "patchcap/philox.hpp"
#include "patchcap/reactivity.hpp"
#include "patchcap/vec3.hpp"

namespace patchcap {

struct UniformOnSphere {};
struct PointStart {
  Vec3 position;  ///< must satisfy |position| > R
};
using StartPosition = std::variant<UniformOnSphere, PointStart>;

struct SimConfig {
  double layer_width = 1e-2;
  std::uint64_t trajectories = 100000;
  std::uint64_t seed = 0;
  StartPosition start = UniformOnSphere{};
  double R = 1.0;
  std::uint64_t max_cycles = 1000000;
  unsigned workers = 1;

  /// DomainError on nonpositive width, radius or trajectory count, or a start
  /// point not strictly outside the sphere.
  void validate() const;
};

/// Warning text when the layer is not thin relative to the smallest patch
/// (a > radius/5), empty otherwise.
std::string layer_width_warning(const PatchLayout& layout, const SimConfig& cfg);

struct TrajectoryOutcome {
  bool reacted = false;
  Vec3 point;               ///< reaction point on the sphere (|point| = R) if reacted
  std::uint64_t jumps = 0;  ///< completed layer cycles
  double kappa_at_reaction = 0.0;
};

/// Polar angle of the first arrival on the unit sphere from distance rho,
/// or nullopt (escape to infinity) when eta > 1/rho.
std::optional<double> sample_arrival_angle(double rho, double eta);

/// Cosine of the sampled arrival angle, computed without acos.
std::optional<double> sample_arrival_cos(double rho, double eta);

/// Density of the arrival polar angle, (rho^2-1) sin(t) / (2 (1 - 2 rho cos t + rho^2)^{3/2}).
double arrival_angle_density(double theta, double rho);
/// Its integral from 0 to theta; equals 1/rho at theta = pi.
double arrival_angle_cdf(double theta, double rho);

/// First arrival point on the sphere of radius R from `from` (|from| > R), or
/// nullopt when the particle escapes to infinity.
std::optional<Vec3> arrival_point(const Vec3& from, double R, Philox4x32& rng);

/// Uniform point on the sphere of radius R.
Vec3 uniform_on_sphere(double R, Philox4x32& rng);

/// Probability of leaving the layer of width a before reacting, starting on a
/// sphere of radius R with dimensional reactivity K R / D:
/// (1 + (a K/D) / (1 + a/R))^{-1}. 1 for zero reactivity, 0 for infinite.
double escape_probability(Reactivity reactivity_RD, double a, double R);

/// Dimensionless patch reactivity kappa = eps K R / D converted to K R / D.
Reactivity surface_reactivity(Reactivity kappa, double eps);

/// kappa of the patch containing `point` (strict containment), zero elsewhere.
Reactivity local_reactivity(const PatchLayout& layout, const Vec3& point);

/// Precomputed per-patch data for fast membership and escape tests.
class TrajectorySimulator {
 public:
  TrajectorySimulator(const PatchLayout& layout, const SimConfig& cfg);

  TrajectoryOutcome run(Philox4x32& rng) const;
  /// Trajectory `index` on its own substream of cfg.seed.
  TrajectoryOutcome run_index(std::uint64_t index) const;

  const SimConfig& config() const { return cfg_; }

 private:
  std::ptrdiff_t patch_at(const Vec3& unit_point) const;

  PatchLayout layout_;
  SimConfig cfg_;
  std::vector<Vec3> centers_;
  std::vector<double> cos_threshold_;
  std::vector<double> escape_;
  std::vector<double> kappa_;
};

TrajectoryOutcome run_trajectory(const PatchLayout& layout, const SimConfig& cfg,
                                 Philox4x32& rng);

struct ReactionCounts {
  std::uint64_t trajectories = 0;
  std::uint64_t reacted = 0;

  ReactionCounts& operator+=(const ReactionCounts& o) {
    trajectories += o.trajectories;
    reacted += o.reacted;
    return *this;
  }
  friend bool operator==(const ReactionCounts&, const ReactionCounts&) = default;
};

/// Runs trajectories [begin, end) serially.
ReactionCounts count_reactions(const TrajectorySimulator& sim, std::uint64_t begin,
                               std::uint64_t end);

struct ReactionEstimate {
  double p_hat = 0.0;
  double std_error = 0.0;
  std::uint64_t M = 0;
  std::uint64_t M_react = 0;
  std::uint64_t seed = 0;

  static ReactionEstimate from_counts(const ReactionCounts& counts, std::uint64_t seed);
};

/// P_react ~ M_react / M over cfg.trajectories, split over cfg.workers threads.
ReactionEstimate estimate_reaction(const PatchLayout& layout, const SimConfig& cfg);

struct KeffEstimate {
  double k_eff = 0.0;
  double std_error = 0.0;  ///< delta-method propagation of the p_hat error
  ReactionEstimate reaction;
};

/// k_eff = (1/p - 1)^{-1} from a uniform start. DomainError for a point start
/// or when p_hat is 0 or 1.
KeffEstimate keff_from_reaction(const ReactionEstimate& r);
KeffEstimate estimate_keff(const PatchLayout& layout, const SimConfig& cfg);

/// Calls `sink(index, outcome)` for every trajectory in [begin, end), in order.
void for_each_outcome(const TrajectorySimulator& sim, std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::uint64_t, const TrajectoryOutcome&)>& sink);

}  // namespace patchcap
