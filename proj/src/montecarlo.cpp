#include "patchcap/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "patchcap/errors.hpp"

namespace patchcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 1 - cos(theta) of the arrival angle, or nullopt on escape.
std::optional<double> sample_one_minus_cos(double rho, double eta) {
  if (!(rho > 1.0) || !std::isfinite(rho)) throw DomainError("arrival sampling needs rho > 1");
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("arrival sampling needs eta in (0, 1)");
  if (eta > 1.0 / rho) return std::nullopt;
  const double t = 1.0 - 2.0 * rho * eta / (1.0 + rho);
  const double delta = ((rho - 1.0) * (rho - 1.0) / (2.0 * rho)) * (1.0 / (t * t) - 1.0);
  return std::clamp(delta, 0.0, 2.0);
}

Vec3 point_from_pole(const Vec3& unit_pole, double one_minus_cos, double phi) {
  const double c = 1.0 - one_minus_cos;
  const double s = std::sqrt(one_minus_cos * (2.0 - one_minus_cos));
  return LocalFrame::around(unit_pole).point(c, s, phi);
}

}  // namespace

void SimConfig::validate() const {
  if (!(layer_width > 0.0) || !std::isfinite(layer_width)) {
    throw DomainError("layer width must be positive");
  }
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("sphere radius R must be positive");
  if (trajectories == 0) throw DomainError("at least one trajectory is required");
  if (max_cycles == 0) throw DomainError("max_cycles must be positive");
  if (workers == 0) throw DomainError("at least one worker is required");
  if (const auto* p = std::get_if<PointStart>(&start)) {
    if (!(p->position.norm() > R)) throw DomainError("start point must lie outside the sphere");
  }
}

std::string layer_width_warning(const PatchLayout& layout, const SimConfig& cfg) {
  const double rmin = *std::min_element(layout.radii().begin(), layout.radii().end());
  if (cfg.layer_width / cfg.R > rmin / 5.0) {
    return "layer width " + std::to_string(cfg.layer_width) +
           " is not small against the smallest patch radius " + std::to_string(rmin * cfg.R);
  }
  return {};
}

std::optional<double> sample_arrival_cos(double rho, double eta) {
  const auto d = sample_one_minus_cos(rho, eta);
  if (!d) return std::nullopt;
  return 1.0 - *d;
}

std::optional<double> sample_arrival_angle(double rho, double eta) {
  const auto d = sample_one_minus_cos(rho, eta);
  if (!d) return std::nullopt;
  // theta = 2 asin(sqrt(delta/2)) keeps full precision near the pole
  return 2.0 * std::asin(std::sqrt(*d / 2.0));
}

double arrival_angle_density(double theta, double rho) {
  if (!(rho > 1.0)) throw DomainError("arrival law needs rho > 1");
  const double q = 1.0 - 2.0 * rho * std::cos(theta) + rho * rho;
  return (rho * rho - 1.0) * std::sin(theta) / (2.0 * q * std::sqrt(q));
}

double arrival_angle_cdf(double theta, double rho) {
  if (!(rho > 1.0)) throw DomainError("arrival law needs rho > 1");
  const double q = 1.0 - 2.0 * rho * std::cos(theta) + rho * rho;
  return ((rho + 1.0) / (2.0 * rho)) * (1.0 - (rho - 1.0) / std::sqrt(q));
}

std::optional<Vec3> arrival_point(const Vec3& from, double R, Philox4x32& rng) {
  const double dist = from.norm();
  if (!(dist > R)) throw DomainError("arrival sampling needs a start outside the sphere");
  const auto d = sample_one_minus_cos(dist / R, rng.uniform());
  if (!d) return std::nullopt;
  const double phi = kTwoPi * rng.uniform();
  return point_from_pole(from / dist, *d, phi) * R;
}

Vec3 uniform_on_sphere(double R, Philox4x32& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = kTwoPi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3{s * std::cos(phi), s * std::sin(phi), z} * R;
}

double escape_probability(Reactivity reactivity_RD, double a, double R) {
  if (!(a > 0.0) || !(R > 0.0)) throw DomainError("escape probability needs a > 0 and R > 0");
  if (reactivity_RD.is_infinite()) return 0.0;
  const double ar = a / R;
  return 1.0 / (1.0 + ar * reactivity_RD.value() / (1.0 + ar));
}

Reactivity surface_reactivity(Reactivity kappa, double eps) {
  if (!(eps > 0.0)) throw DomainError("length scale must be positive");
  return kappa.scaled(1.0 / eps);
}

Reactivity local_reactivity(const PatchLayout& layout, const Vec3& point) {
  const auto i = layout.containing_patch(point);
  return i < 0 ? Reactivity::zero() : layout.kappa(static_cast<std::size_t>(i));
}

TrajectorySimulator::TrajectorySimulator(const PatchLayout& layout, const SimConfig& cfg)
    : layout_(layout), cfg_(cfg) {
  cfg_.validate();
  const double eps = layout_.length_scale();
  for (std::size_t i = 0; i < layout_.size(); ++i) {
    centers_.push_back(layout_.center(i).vec());
    const double r = layout_.radius(i);
    cos_threshold_.push_back(1.0 - r * r / 2.0);
    escape_.push_back(
        escape_probability(surface_reactivity(layout_.kappa(i), eps), cfg_.layer_width, cfg_.R));
    kappa_.push_back(layout_.kappa(i).as_double());
  }
}

std::ptrdiff_t TrajectorySimulator::patch_at(const Vec3& unit_point) const {
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    if (unit_point.dot(centers_[i]) > cos_threshold_[i]) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

TrajectoryOutcome TrajectorySimulator::run(Philox4x32& rng) const {
  TrajectoryOutcome out;
  // Work on the unit sphere; the lifted radius is 1 + a/R.
  const double rho = 1.0 + cfg_.layer_width / cfg_.R;
  Vec3 x;
  if (const auto* p = std::get_if<PointStart>(&cfg_.start)) {
    const auto first = arrival_point(p->position / cfg_.R, 1.0, rng);
    if (!first) return out;
    x = *first;
  } else {
    x = uniform_on_sphere(1.0, rng);
  }
  for (;;) {
    const auto i = patch_at(x);
    if (i >= 0) {
      const auto k = static_cast<std::size_t>(i);
      if (escape_[k] == 0.0 || rng.uniform() >= escape_[k]) {
        out.reacted = true;
        out.point = x * cfg_.R;
        out.kappa_at_reaction = kappa_[k];
        return out;
      }
    }
    if (++out.jumps > cfg_.max_cycles) {
      throw NonterminationError("trajectory exceeded " + std::to_string(cfg_.max_cycles) +
                                " layer cycles");
    }
    const auto d = sample_one_minus_cos(rho, rng.uniform());
    if (!d) return out;
    x = point_from_pole(x, *d, kTwoPi * rng.uniform());
    x = x / x.norm();
  }
}

TrajectoryOutcome TrajectorySimulator::run_index(std::uint64_t index) const {
  Philox4x32 rng(cfg_.seed, index);
  return run(rng);
}

TrajectoryOutcome run_trajectory(const PatchLayout& layout, const SimConfig& cfg,
                                 Philox4x32& rng) {
  return TrajectorySimulator(layout, cfg).run(rng);
}

ReactionCounts count_reactions(const TrajectorySimulator& sim, std::uint64_t begin,
                               std::uint64_t end) {
  ReactionCounts c;
  for (std::uint64_t i = begin; i < end; ++i) {
    ++c.trajectories;
    if (sim.run_index(i).reacted) ++c.reacted;
  }
  return c;
}

ReactionEstimate ReactionEstimate::from_counts(const ReactionCounts& counts, std::uint64_t seed) {
  if (counts.trajectories == 0) throw DomainError("no trajectories to estimate from");
  ReactionEstimate r;
  r.M = counts.trajectories;
  r.M_react = counts.reacted;
  r.seed = seed;
  r.p_hat = static_cast<double>(r.M_react) / static_cast<double>(r.M);
  r.std_error = std::sqrt(r.p_hat * (1.0 - r.p_hat) / static_cast<double>(r.M));
  return r;
}

ReactionEstimate estimate_reaction(const PatchLayout& layout, const SimConfig& cfg) {
  const TrajectorySimulator sim(layout, cfg);
  const std::uint64_t m = cfg.trajectories;
  const std::uint64_t w = std::min<std::uint64_t>(cfg.workers, m);
  if (w <= 1) return ReactionEstimate::from_counts(count_reactions(sim, 0, m), cfg.seed);

  std::vector<ReactionCounts> parts(w);
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> pool;
  for (std::uint64_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      try {
        parts[t] = count_reactions(sim, m * t / w, m * (t + 1) / w);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ReactionCounts total;
  for (const auto& p : parts) total += p;
  return ReactionEstimate::from_counts(total, cfg.seed);
}

KeffEstimate keff_from_reaction(const ReactionEstimate& r) {
  if (!(r.p_hat > 0.0 && r.p_hat < 1.0)) {
    throw DomainError("k_eff estimate undefined when every or no trajectory reacts");
  }
  KeffEstimate k;
  k.reaction = r;
  const double q = 1.0 - r.p_hat;
  k.k_eff = r.p_hat / q;
  k.std_error = r.std_error / (q * q);
  return k;
}

KeffEstimate estimate_keff(const PatchLayout& layout, const SimConfig& cfg) {
  if (!std::holds_alternative<UniformOnSphere>(cfg.start)) {
    throw DomainError("k_eff estimation needs the uniform start (source at infinity)");
  }
  return keff_from_reaction(estimate_reaction(layout, cfg));
}

void for_each_outcome(const TrajectorySimulator& sim, std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::uint64_t, const TrajectoryOutcome&)>& sink) {
  for (std::uint64_t i = begin; i < end; ++i) sink(i, sim.run_index(i));
}

}  // namespace patchcap
