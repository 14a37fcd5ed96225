#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "patchcap/reactivity.hpp"

namespace patchcap {

/// Axially symmetric Steklov eigenvalues mu_k and weights d_k of the unit
/// disk in the upper half-space.
class SteklovSpectrum {
 public:
  /// Throws ConfigurationError unless 0 < mu_0 < mu_1 < ... and d_k > 0.
  SteklovSpectrum(std::vector<double> mu, std::vector<double> d);

  /// The eight tabulated modes for the unit disk.
  static const SteklovSpectrum& unit_disk();
  /// CSV with header "k,mu,d" and one row per mode, ordered by k.
  static SteklovSpectrum from_csv(std::istream& in);

  std::size_t size() const { return mu_.size(); }
  const std::vector<double>& eigenvalues() const { return mu_; }
  const std::vector<double>& weights() const { return d_; }

  /// (1/2pi) sum mu_k d_k^2: the truncated C(infinity).
  double truncated_limit() const;
  /// 2/pi minus truncated_limit(): mass lost to the truncated tail.
  double tail_deficit() const;
  /// Taylor coefficient c_n = (1/2pi) sum d_k^2 / mu_k^{n-1} of the truncated sum.
  double taylor_coefficient(int n) const;

 private:
  std::vector<double> mu_;
  std::vector<double> d_;
};

// Reactive capacitance models for a unit disk. Each maps mu = kappa * a to
// the unit-radius capacitance C(mu).

struct SpectralModel {
  SteklovSpectrum spectrum = SteklovSpectrum::unit_disk();
  bool tail_compensate = true;
};
struct SigmoidModel {};
struct TaylorModel {};
struct LargeKappaModel {};

using CapacitanceModel = std::variant<SpectralModel, SigmoidModel, TaylorModel, LargeKappaModel>;

/// Validity window of the cubic Taylor model, kappa in [0, 0.45].
inline constexpr double kTaylorWindow = 0.45;
/// Documented lower end of the large-reactivity expansion.
inline constexpr double kLargeKappaWindow = 10.0;

inline constexpr double kTaylorC1 = 0.5;
/// 4 / (3 pi).
double taylor_c2();
/// (4/pi^2) int_0^1 r E(r)^2 dr, rounded as tabulated.
inline constexpr double kTaylorC3 = 0.3651;

/// C(kappa) = (kappa/2pi) sum mu_k d_k^2 / (mu_k + kappa), optionally plus the
/// tail remainder weighted by kappa / (kappa + mu_{K-1}) so that C(inf) = 2/pi.
double c_spectral(Reactivity kappa, const SteklovSpectrum& spectrum, bool tail_compensate);

/// (2 mu/pi) / (mu + 4/pi).
double c_sigmoid(Reactivity kappa);

/// c1 k - c2 k^2 + c3 k^3. Appends a warning when kappa exceeds the window.
double c_taylor(double kappa, std::vector<std::string>* warnings = nullptr);

/// Fitted Taylor coefficient for n >= 2: 0.4888/1.1578^{n-1} + 0.0084/4.3168^{n-1}.
double taylor_coefficient_fit(int n);

/// 2/pi - 2 [log kappa + log 2 + gamma_e + 1] / (pi^2 kappa).
double c_large_kappa(Reactivity kappa);

/// Unit-disk capacitance under `model`.
double c_unit(Reactivity kappa, const CapacitanceModel& model);

/// Scaling law for a disk of radius a: a * C_unit(kappa a).
double c_scaled(double a, Reactivity kappa, const CapacitanceModel& model);

/// Heuristic monopole coefficient of a disk of radius a:
/// -(a^2 log a / 2) Capp(ka)^2 + a^2 Eapp(ka),
/// Eapp(mu) = Capp(mu)^2 (3/4 - log 2 + 1 / (1/(log 2 - 5/8) + 5.17 mu^0.81)).
double e_heuristic(double a, Reactivity kappa);

/// Closed-form E at infinite reactivity: -(2a^2/pi^2)(log a + log 4 - 3/2).
double e_infinite_closed_form(double a);

/// beta = exp(-2E/C^2) exp(4 d2), with C from `model` and E heuristic.
/// DomainError when C = 0.
double beta_coefficient(double a, Reactivity kappa,
                        const CapacitanceModel& model = SigmoidModel{});

std::string model_name(const CapacitanceModel& model);
/// "sigmoid", "spectral", "spectral-raw", "taylor", "large-kappa".
CapacitanceModel model_from_name(const std::string& name);

}  // namespace patchcap
