#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "patchcap/reactivity.hpp"
#include "patchcap/vec3.hpp"

namespace patchcap {

/// Tolerance applied to the strict non-overlap test between patches.
inline constexpr double kOverlapTolerance = 1e-12;

/// Largest admissible patch radius: a chord of 2 covers the whole unit sphere.
inline constexpr double kMaxPatchRadius = 2.0;

/// Angular half-width of a patch with chord radius r on the unit sphere.
double angular_radius(double chord_radius);

/// Circular patches on the unit sphere.
///
/// A patch of radius r centered at c is the spherical cap {x : |x - c| <= r}
/// (Euclidean chord radius). With this convention the cap area is exactly
/// pi r^2, so the covered fraction is sum(r_i^2)/4, and two caps are disjoint
/// iff the angle between their centers exceeds the sum of their angular
/// half-widths 2 asin(r/2).
///
/// Reactivities are the dimensionless kappa_i = L K_i / D where L is the
/// layout length scale (the largest radius on the unit sphere, times R).
class PatchLayout {
 public:
  /// Validates every invariant and throws ConfigurationError on failure.
  PatchLayout(std::vector<UnitVector3> centers, std::vector<double> radii,
              std::vector<Reactivity> kappas);

  std::size_t size() const { return centers_.size(); }
  const std::vector<UnitVector3>& centers() const { return centers_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<Reactivity>& kappas() const { return kappas_; }

  const UnitVector3& center(std::size_t i) const { return centers_.at(i); }
  double radius(std::size_t i) const { return radii_.at(i); }
  Reactivity kappa(std::size_t i) const { return kappas_.at(i); }

  /// epsilon: the largest patch radius.
  double length_scale() const;
  /// Covered fraction of the sphere, sum(r_i^2) / 4.
  double area_fraction() const;
  /// True when every patch has the same radius and reactivity.
  bool is_uniform() const;

  /// Same geometry with every reactivity replaced by `kappa`.
  PatchLayout with_uniform_kappa(Reactivity kappa) const;
  /// Same reactivities and radii, centers mapped through `rotation`.
  PatchLayout rotated(const Rotation3& rotation) const;

  /// Index of the patch containing `point` (strict containment), or -1.
  std::ptrdiff_t containing_patch(const Vec3& point) const;

 private:
  std::vector<UnitVector3> centers_;
  std::vector<double> radii_;
  std::vector<Reactivity> kappas_;
};

/// Six patches at +-e1, +-e2, +-e3.
PatchLayout layout_octahedron(double radius, Reactivity kappa);
/// Twelve patches at the normalized golden-ratio icosahedron vertices.
PatchLayout layout_icosahedron(double radius, Reactivity kappa);
/// i.i.d. uniform centers, whole-configuration rejection until non-overlapping.
PatchLayout layout_random_uniform(std::size_t n, double radius, Reactivity kappa,
                                  std::uint64_t seed, std::size_t max_retries = 10000);
/// Fibonacci lattice from pole to pole; n = 1 puts the patch at the north pole.
PatchLayout layout_fibonacci(std::size_t n, double radius, Reactivity kappa);
/// One patch centered at the north pole.
PatchLayout layout_single(double radius, Reactivity kappa);

/// Surface Neumann Green's function of the exterior unit sphere between two
/// boundary points: 1/(2 pi s) - log(1 + 2/s)/(4 pi), s = |xi - xj|.
double greens_value(const UnitVector3& xi, const UnitVector3& xj);

/// Symmetric N x N matrix of pairwise Green's values with zero diagonal.
class GreensMatrix {
 public:
  explicit GreensMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set_symmetric(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  /// w^T G w.
  double quadratic_form(std::span<const double> w) const;
  /// G w.
  std::vector<double> apply(std::span<const double> w) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

GreensMatrix greens_matrix(const PatchLayout& layout);

/// Discrete interaction energy sum_{i<j} [1/s_ij - log(1 + 2/s_ij)/2].
double interaction_energy(const PatchLayout& layout);

/// Large-N expansion of the interaction energy for uniformly spread points:
/// N^2/4 - d1 N^{3/2} + N log N / 8 + d2 N + d3 N^{1/2}.
double h_asymptotic(std::size_t n);

inline constexpr double kEnergyD1 = 0.55230;
inline constexpr double kEnergyD2 = 0.125;
inline constexpr double kEnergyD3 = 0.25;

/// {centers:[[x,y,z],...], radii:[...], kappas:[number or "inf", ...]}
nlohmann::json layout_to_json(const PatchLayout& layout);
PatchLayout layout_from_json(const nlohmann::json& doc);

}  // namespace patchcap
