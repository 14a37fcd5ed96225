#include "patchcap/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "patchcap/errors.hpp"
#include "patchcap/quadrature.hpp"

namespace patchcap {

namespace {

constexpr double kPi = std::numbers::pi;

// Weight of mode n: rho0^{-(n+1)} (n + 1/2) / (1 + (n+1)/k), with the
// geometric part returned separately for the stopping rule.
struct ModeWeight {
  double geometric;
  double value;
};

ModeWeight mode_weight(std::size_t n, double inv_rho_pow, const LegendreSeriesParams& p) {
  const double g = inv_rho_pow * (static_cast<double>(n) + 0.5);
  if (p.kappa_RD.is_infinite()) return {g, g};
  const double k = p.kappa_RD.value();
  if (k == 0.0) return {g, 0.0};
  return {g, g / (1.0 + static_cast<double>(n + 1) / k)};
}

}  // namespace

double homogeneous_reaction_probability(double rho0, Reactivity kappa_RD) {
  if (!(rho0 >= 1.0) || !std::isfinite(rho0)) throw DomainError("rho0 must be at least 1");
  if (kappa_RD.is_infinite()) return 1.0 / rho0;
  const double k = kappa_RD.value();
  if (k == 0.0) return 0.0;
  return (1.0 / rho0) / (1.0 + 1.0 / k);
}

void LegendreSeriesParams::validate() const {
  if (!(rho0 >= kSpreadMinRho) || !std::isfinite(rho0)) {
    throw DomainError("the spread harmonic series converges too slowly below rho0 = 1.05");
  }
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (!(tail_tol > 0.0)) throw DomainError("tail_tol must be positive");
}

double legendre(std::size_t n, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk + 1.0) * x * p1 - kk * p0) / (kk + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double spread_harmonic_density(double theta, const LegendreSeriesParams& params) {
  params.validate();
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("theta must lie in [0, pi]");
  const double x = std::cos(theta);
  const double inv_rho = 1.0 / params.rho0;
  double p_prev = 0.0, p = 1.0;  // P_{n-1}, P_n
  double pow_n = inv_rho;
  double sum = 0.0;
  for (std::size_t n = 0; n <= params.n_max; ++n) {
    const auto w = mode_weight(n, pow_n, params);
    sum += w.value * p;
    if (w.geometric < params.tail_tol) break;
    const double nn = static_cast<double>(n);
    const double p_next = ((2.0 * nn + 1.0) * x * p - nn * p_prev) / (nn + 1.0);
    p_prev = p;
    p = p_next;
    pow_n *= inv_rho;
  }
  return std::sin(theta) * sum;
}

double spread_harmonic_cdf(double theta, const LegendreSeriesParams& params) {
  params.validate();
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("theta must lie in [0, pi]");
  const double x = std::cos(theta);
  const double inv_rho = 1.0 / params.rho0;
  double p_prev = 1.0, p = x;  // P_{n-1}, P_n starting at n = 1
  double pow_n = inv_rho;
  double sum = mode_weight(0, pow_n, params).value * (1.0 - x);
  for (std::size_t n = 1; n <= params.n_max; ++n) {
    pow_n *= inv_rho;
    const double nn = static_cast<double>(n);
    const double p_next = ((2.0 * nn + 1.0) * x * p - nn * p_prev) / (nn + 1.0);
    const auto w = mode_weight(n, pow_n, params);
    sum += w.value * (p_prev - p_next) / (2.0 * nn + 1.0);
    if (w.geometric < params.tail_tol) break;
    p_prev = p;
    p = p_next;
  }
  return sum;
}

double elliptic_e(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("elliptic modulus must lie in [0, 1]");
  if (k == 1.0) return 1.0;
  double a = 1.0, b = std::sqrt(1.0 - k * k), c = k;
  double pow2 = 0.5;  // 2^{n-1}
  double s = pow2 * c * c;
  while (std::abs(c) > 1e-15) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    pow2 *= 2.0;
    s += pow2 * c * c;
  }
  return (kPi / (2.0 * a)) * (1.0 - s);
}

double taylor_c3_quadrature() {
  const double integral = integrate(
      [](double r) {
        const double e = elliptic_e(r);
        return r * e * e;
      },
      0.0, 1.0);
  return 4.0 / (kPi * kPi) * integral;
}

double disk_capacitance_quadrature(double a) {
  if (!(a > 0.0)) throw DomainError("disk radius must be positive");
  // rho = a sin t:  2 q rho drho = (2 a / pi) sin t dt
  return integrate([a](double t) { return 2.0 * a * std::sin(t) / kPi; }, 0.0, kPi / 2.0);
}

double e_infinity_quadrature(double a) {
  if (!(a > 0.0)) throw DomainError("disk radius must be positive");
  const double c = disk_capacitance_quadrature(a);
  const double f_edge = 0.5 * c * std::log(a);
  // F(a) - F(rho) with s = a sin u:  int_t^{pi/2} (a/pi) tan(u/2) cos(u) du
  auto drop = [a](double t) {
    return integrate([a](double u) { return (a / kPi) * std::tan(0.5 * u) * std::cos(u); }, t,
                     kPi / 2.0);
  };
  return -integrate(
      [&](double t) { return (2.0 * a * std::sin(t) / kPi) * (f_edge - drop(t)); }, 0.0,
      kPi / 2.0);
}

double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("KS statistic needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_1pct(std::size_t n) {
  if (n == 0) throw DomainError("KS critical value needs n >= 1");
  return 1.628 / std::sqrt(static_cast<double>(n));
}

}  // namespace patchcap
