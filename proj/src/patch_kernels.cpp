#include "patchcap/patch_kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "patchcap/errors.hpp"

namespace patchcap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCInf = 2.0 / kPi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw SpecError("Steklov CSV line " + std::to_string(line) + ": bad number '" + field + "'");
  }
}

}  // namespace

SteklovSpectrum::SteklovSpectrum(std::vector<double> mu, std::vector<double> d)
    : mu_(std::move(mu)), d_(std::move(d)) {
  if (mu_.empty()) throw ConfigurationError("Steklov spectrum needs at least one mode");
  if (mu_.size() != d_.size()) throw ConfigurationError("Steklov mu and d differ in length");
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    if (!(mu_[k] > 0.0) || !std::isfinite(mu_[k])) {
      throw ConfigurationError("Steklov eigenvalue " + std::to_string(k) + " is not positive");
    }
    if (k > 0 && !(mu_[k] > mu_[k - 1])) {
      throw ConfigurationError("Steklov eigenvalues must be strictly increasing");
    }
    if (!(d_[k] > 0.0) || !std::isfinite(d_[k])) {
      throw ConfigurationError("Steklov weight " + std::to_string(k) + " is not positive");
    }
  }
}

const SteklovSpectrum& SteklovSpectrum::unit_disk() {
  static const SteklovSpectrum table(
      {1.1578, 4.3168, 7.4602, 10.602, 13.744, 16.886, 20.028, 23.169},
      {1.7524, 0.2298, 0.1000, 0.0587, 0.0397, 0.0291, 0.0225, 0.0180});
  return table;
}

SteklovSpectrum SteklovSpectrum::from_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<double> mu, d;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    if (!header) {
      if (fields != std::vector<std::string>{"k", "mu", "d"}) {
        throw SpecError("Steklov CSV must start with the header k,mu,d");
      }
      header = true;
      continue;
    }
    if (fields.size() != 3) {
      throw SpecError("Steklov CSV line " + std::to_string(lineno) + ": expected 3 fields");
    }
    if (parse_double(fields[0], lineno) != static_cast<double>(mu.size())) {
      throw SpecError("Steklov CSV line " + std::to_string(lineno) + ": rows must be ordered by k");
    }
    mu.push_back(parse_double(fields[1], lineno));
    d.push_back(parse_double(fields[2], lineno));
  }
  if (!header) throw SpecError("Steklov CSV is empty");
  return SteklovSpectrum(std::move(mu), std::move(d));
}

double SteklovSpectrum::truncated_limit() const {
  double s = 0.0;
  for (std::size_t k = 0; k < size(); ++k) s += mu_[k] * d_[k] * d_[k];
  return s / (2.0 * kPi);
}

double SteklovSpectrum::tail_deficit() const { return kCInf - truncated_limit(); }

double SteklovSpectrum::taylor_coefficient(int n) const {
  if (n < 1) throw DomainError("Taylor coefficients are indexed from 1");
  double s = 0.0;
  for (std::size_t k = 0; k < size(); ++k) s += d_[k] * d_[k] / std::pow(mu_[k], n - 1);
  return s / (2.0 * kPi);
}

double taylor_c2() { return 4.0 / (3.0 * kPi); }

double c_spectral(Reactivity kappa, const SteklovSpectrum& spectrum, bool tail_compensate) {
  const double tail = tail_compensate ? spectrum.tail_deficit() : 0.0;
  if (kappa.is_infinite()) return spectrum.truncated_limit() + tail;
  const double k = kappa.value();
  const auto& mu = spectrum.eigenvalues();
  const auto& d = spectrum.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) s += mu[i] * d[i] * d[i] / (mu[i] + k);
  double c = k * s / (2.0 * kPi);
  if (tail_compensate) c += tail * k / (k + mu.back());
  return c;
}

double c_sigmoid(Reactivity kappa) {
  if (kappa.is_infinite()) return kCInf;
  const double m = kappa.value();
  return (2.0 * m / kPi) / (m + 4.0 / kPi);
}

double c_taylor(double kappa, std::vector<std::string>* warnings) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw DomainError("Taylor model needs a finite nonnegative reactivity");
  }
  if (kappa > kTaylorWindow && warnings != nullptr) {
    warnings->push_back("Taylor model used at kappa=" + std::to_string(kappa) +
                        " outside its window [0, 0.45]");
  }
  return kappa * (kTaylorC1 + kappa * (-taylor_c2() + kappa * kTaylorC3));
}

double taylor_coefficient_fit(int n) {
  if (n < 2) throw DomainError("the coefficient fit covers n >= 2");
  return 0.4888 / std::pow(1.1578, n - 1) + 0.0084 / std::pow(4.3168, n - 1);
}

double c_large_kappa(Reactivity kappa) {
  if (kappa.is_infinite()) return kCInf;
  const double k = kappa.value();
  if (!(k > 0.0)) throw DomainError("large-kappa expansion needs kappa > 0");
  return kCInf -
         2.0 * (std::log(k) + std::numbers::ln2 + std::numbers::egamma + 1.0) / (kPi * kPi * k);
}

double c_unit(Reactivity kappa, const CapacitanceModel& model) {
  struct Visitor {
    Reactivity k;
    double operator()(const SpectralModel& m) const {
      return c_spectral(k, m.spectrum, m.tail_compensate);
    }
    double operator()(const SigmoidModel&) const { return c_sigmoid(k); }
    double operator()(const TaylorModel&) const {
      if (k.is_infinite()) throw DomainError("Taylor model is undefined at infinite kappa");
      return c_taylor(k.value());
    }
    double operator()(const LargeKappaModel&) const { return c_large_kappa(k); }
  };
  return std::visit(Visitor{kappa}, model);
}

double c_scaled(double a, Reactivity kappa, const CapacitanceModel& model) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("patch scale a must be positive");
  return a * c_unit(kappa.scaled(a), model);
}

double e_heuristic(double a, Reactivity kappa) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("patch scale a must be positive");
  const Reactivity mu = kappa.scaled(a);
  const double c = c_sigmoid(mu);
  double shape = 0.0;  // 1 / (1/(log2 - 5/8) + 5.17 mu^0.81)
  if (!mu.is_infinite()) {
    shape = 1.0 / (1.0 / (std::numbers::ln2 - 0.625) + 5.17 * std::pow(mu.value(), 0.81));
  }
  const double e_app = c * c * (0.75 - std::numbers::ln2 + shape);
  return -(a * a * std::log(a) / 2.0) * c * c + a * a * e_app;
}

double e_infinite_closed_form(double a) {
  if (!(a > 0.0)) throw DomainError("patch scale a must be positive");
  return -(2.0 * a * a / (kPi * kPi)) * (std::log(a) + std::log(4.0) - 1.5);
}

double beta_coefficient(double a, Reactivity kappa, const CapacitanceModel& model) {
  const double c = c_scaled(a, kappa, model);
  if (!(c > 0.0)) throw DomainError("beta is undefined when the capacitance vanishes");
  const double e = e_heuristic(a, kappa);
  return std::exp(-2.0 * e / (c * c) + 0.5);
}

std::string model_name(const CapacitanceModel& model) {
  struct Visitor {
    std::string operator()(const SpectralModel& m) const {
      return m.tail_compensate ? "spectral" : "spectral-raw";
    }
    std::string operator()(const SigmoidModel&) const { return "sigmoid"; }
    std::string operator()(const TaylorModel&) const { return "taylor"; }
    std::string operator()(const LargeKappaModel&) const { return "large-kappa"; }
  };
  return std::visit(Visitor{}, model);
}

CapacitanceModel model_from_name(const std::string& name) {
  if (name == "sigmoid") return SigmoidModel{};
  if (name == "spectral") return SpectralModel{};
  if (name == "spectral-raw") return SpectralModel{SteklovSpectrum::unit_disk(), false};
  if (name == "taylor") return TaylorModel{};
  if (name == "large-kappa") return LargeKappaModel{};
  throw SpecError("unknown capacitance model '" + name +
                  "' (expected sigmoid, spectral, spectral-raw, taylor or large-kappa)");
}

}  // namespace patchcap
