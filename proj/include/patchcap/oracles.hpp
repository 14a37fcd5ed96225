#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "patchcap/reactivity.hpp"

namespace patchcap {

/// Reaction probability for a homogeneously reactive sphere from distance
/// rho0 = |X0|/R >= 1: (1/rho0) / (1 + D/(K R)).
double homogeneous_reaction_probability(double rho0, Reactivity kappa_RD);

/// Minimum starting distance accepted by the spread harmonic measure series.
inline constexpr double kSpreadMinRho = 1.05;

struct LegendreSeriesParams {
  double rho0 = 2.0;
  Reactivity kappa_RD = Reactivity(1.0);  ///< K R / D
  std::size_t n_max = 200;
  double tail_tol = 1e-12;

  /// DomainError if rho0 < kSpreadMinRho or n_max < 1.
  void validate() const;
};

/// Legendre polynomial P_n(x) by the three-term recurrence.
double legendre(std::size_t n, double x);

/// Density of the reaction polar angle (start on the pole at distance rho0):
/// sin(t) sum_n P_n(cos t) rho0^{-(n+1)} (n + 1/2) / (1 + (n+1) D/(K R)).
/// The series stops once rho0^{-(n+1)} (n + 1/2) < tail_tol or at n_max.
double spread_harmonic_density(double theta, const LegendreSeriesParams& params);

/// Integral of the density over [0, theta], term by term with
/// int_{cos t}^1 P_n = (P_{n-1}(cos t) - P_{n+1}(cos t)) / (2n+1).
double spread_harmonic_cdf(double theta, const LegendreSeriesParams& params);

/// Complete elliptic integral of the second kind E(k), modulus k in [0, 1],
/// by the arithmetic-geometric mean to 1e-15.
double elliptic_e(double k);

/// c3 = (4/pi^2) int_0^1 r E(r)^2 dr.
double taylor_c3_quadrature();

/// C of a disk of radius a at infinite reactivity from 2 int_0^a q rho drho,
/// q = 1 / (pi sqrt(a^2 - rho^2)).
double disk_capacitance_quadrature(double a);

/// Monopole coefficient E at infinite reactivity by the radial quadrature
/// E = -int_0^a 2 rho q F drho, F' = (1/rho) int_0^rho eta q deta,
/// F(a) = (C/2) log a, with rho = a sin t removing the edge singularity.
double e_infinity_quadrature(double a);

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and a
/// continuous CDF. `samples` is sorted in place.
double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// Asymptotic 1% critical value of the one-sample KS statistic, 1.628/sqrt(n).
double ks_critical_1pct(std::size_t n);

}  // namespace patchcap
