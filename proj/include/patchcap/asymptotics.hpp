#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patchcap/geometry.hpp"
#include "patchcap/patch_kernels.hpp"

namespace patchcap {

/// Three-term capacitance of a patchy unit sphere with every term exposed.
///
///   1/C_T = u0_term * (1 + log_term + order_eps_term)
///   u0_term        = |U0| / eps = 2 / (eps Cbar)
///   log_term       = eps (sum C_i^2 / (2 Cbar)) log(eps/2)
///   order_eps_term = eps (2 pi C^T G C / Cbar - Ebar / Cbar)
struct CapacitanceBreakdown {
  double eps = 0.0;
  double c_bar = 0.0;
  double e_bar = 0.0;
  double interaction = 0.0;  ///< C^T G C
  double u0_term = 0.0;
  double log_term = 0.0;
  double order_eps_term = 0.0;
  double inv_CT = 0.0;
  double CT = 0.0;
};

/// Capacitance of `layout` with patch sizes a_i = radius_i / eps. The default
/// eps is the layout length scale. C_i come from `model`, E_i from the
/// heuristic monopole formula.
///
/// DomainError when all reactivities vanish, AsymptoticValidityError when the
/// bracket is nonpositive.
CapacitanceBreakdown capacitance_three_term(const PatchLayout& layout,
                                            const CapacitanceModel& model = SigmoidModel{},
                                            std::optional<double> eps = std::nullopt);

/// k_eff = 1 / (1/C_T - 1); DomainError unless 0 < ct < 1.
double keff_from_ct(double ct);

/// Homogenized result for N identical, uniformly spread patches.
struct HomogenizedResult {
  std::size_t n = 0;
  double eps = 0.0;
  double f = 0.0;
  double C = 0.0;
  double E = 0.0;
  double beta = 0.0;
  double bracket = 0.0;  ///< the bracket whose inverse scales k_eff
  double k_eff = 0.0;
  double C_eff = 0.0;
  double eps_c_sqrt_n = 0.0;  ///< eps C sqrt(N): the effective small parameter
  std::vector<std::string> warnings;
};

inline constexpr double kCoverageWarning = 0.25;

/// k_eff = (N eps C / 2) [1 - sqrt(N) eps C (2 d1 - 1/(2N)
///                          - log(beta eps sqrt(N) / 2) / (2 sqrt(N)))]^{-1},
/// with 1/C_eff = 1 + 1/k_eff. Kept in bracket form, never re-expanded.
HomogenizedResult homogenized(std::size_t n, double eps, Reactivity kappa,
                              const CapacitanceModel& model = SigmoidModel{});

/// Leading-order homogenized reactivity N eps C / 2.
double homogenized_leading_order(std::size_t n, double eps, Reactivity kappa,
                                 const CapacitanceModel& model = SigmoidModel{});

/// Homogenized result for a uniform layout (same radius and kappa everywhere).
HomogenizedResult homogenized(const PatchLayout& layout,
                              const CapacitanceModel& model = SigmoidModel{});

/// Berg-Purcell reactivity R K_BP / D = eps N / pi.
double berg_purcell(std::size_t n, double eps);

/// Heuristic interpolation R K_heur / D = (2f/eps) A(kappa), A = sigmoid.
double heuristic_reactivity(double f, double eps, Reactivity kappa);

/// Empirical single-patch reactivity
/// (2/pi) sqrt(f) (1 + 2.32 sqrt(f) - 1.47 f^2) / (1 - f)^{3/2}.
double dagdug_empirical(double f);

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Three-term capacitance of disks of radius eps a_i on a reflecting plane,
/// 1/C_T = (1/(eps Cbar)) [1 + eps gamma + eps^2 (gamma^2 - S/Cbar)],
/// gamma = C^T G C / Cbar with G_ij = 1/|x_i - x_j|, S = sum_j C_j (G C)_j^2.
double planar_capacitance(std::span<const PlanarPoint> centers, double eps,
                          std::span<const double> radii, std::span<const Reactivity> kappas,
                          const CapacitanceModel& model = SigmoidModel{});

/// Physical scales for converting dimensionless results.
struct DimensionalContext {
  double R = 1.0;      ///< sphere radius
  double D = 1.0;      ///< diffusivity
  double L = 1.0;      ///< largest patch radius
  double U_inf = 1.0;  ///< concentration at infinity

  /// DomainError unless every field is strictly positive.
  void validate() const;
  double eps() const { return L / R; }
  /// kappa = L K / D.
  Reactivity kappa_from_dimensional(Reactivity K) const;
};

struct DimensionalValues {
  double capacitance = 0.0;  ///< R C_T
  double K_eff = 0.0;        ///< D k_eff / R
  double flux = 0.0;         ///< 4 pi D U_inf (R C_T)
  double flux_smol = 0.0;    ///< 4 pi D R U_inf
};

DimensionalValues dimensional_convert(const DimensionalContext& ctx, const HomogenizedResult& r);
DimensionalValues dimensional_convert(const DimensionalContext& ctx,
                                      const CapacitanceBreakdown& b);

}  // namespace patchcap
