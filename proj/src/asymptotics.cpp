#include "patchcap/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "patchcap/errors.hpp"

namespace patchcap {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

CapacitanceBreakdown capacitance_three_term(const PatchLayout& layout,
                                            const CapacitanceModel& model,
                                            std::optional<double> eps_opt) {
  const double eps = eps_opt.value_or(layout.length_scale());
  require_positive(eps, "eps");
  const std::size_t n = layout.size();
  std::vector<double> c(n);
  double c_bar = 0.0, e_bar = 0.0, c_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = layout.radius(i) / eps;
    c[i] = c_scaled(a, layout.kappa(i), model);
    c_bar += c[i];
    c_sq += c[i] * c[i];
    e_bar += e_heuristic(a, layout.kappa(i));
  }
  if (!(c_bar > 0.0)) throw DomainError("every patch is inert: total capacitance is zero");

  CapacitanceBreakdown b;
  b.eps = eps;
  b.c_bar = c_bar;
  b.e_bar = e_bar;
  b.interaction = greens_matrix(layout).quadratic_form(c);
  b.u0_term = 2.0 / (eps * c_bar);
  b.log_term = eps * (c_sq / (2.0 * c_bar)) * std::log(eps / 2.0);
  b.order_eps_term = eps * (2.0 * kPi * b.interaction / c_bar - e_bar / c_bar);
  const double bracket = 1.0 + b.log_term + b.order_eps_term;
  if (!(bracket > 0.0)) {
    std::ostringstream os;
    os << "three-term bracket is nonpositive (" << bracket << ") at eps=" << eps
       << "; the expansion is not valid here";
    throw AsymptoticValidityError(os.str());
  }
  b.inv_CT = b.u0_term * bracket;
  b.CT = 1.0 / b.inv_CT;
  return b;
}

double keff_from_ct(double ct) {
  if (!(ct > 0.0 && ct < 1.0)) throw DomainError("k_eff needs 0 < C_T < 1");
  return 1.0 / (1.0 / ct - 1.0);
}

HomogenizedResult homogenized(std::size_t n, double eps, Reactivity kappa,
                              const CapacitanceModel& model) {
  if (n == 0) throw DomainError("homogenization needs at least one patch");
  require_positive(eps, "eps");
  if (kappa.is_zero()) throw DomainError("homogenization needs kappa > 0");

  HomogenizedResult r;
  r.n = n;
  r.eps = eps;
  const double N = static_cast<double>(n);
  const double sn = std::sqrt(N);
  r.f = N * eps * eps / 4.0;
  if (!(r.f < 1.0)) throw DomainError("area fraction must be below 1");
  r.C = c_unit(kappa, model);
  r.E = e_heuristic(1.0, kappa);
  r.beta = beta_coefficient(1.0, kappa, model);
  r.eps_c_sqrt_n = eps * r.C * sn;
  r.bracket = 1.0 - r.eps_c_sqrt_n * (2.0 * kEnergyD1 - 1.0 / (2.0 * N) -
                                      std::log(r.beta * eps * sn / 2.0) / (2.0 * sn));
  if (r.f > kCoverageWarning) {
    r.warnings.push_back("area fraction " + std::to_string(r.f) +
                         " exceeds 0.25; homogenized accuracy degrades");
  }
  if (!(r.bracket > 0.0)) {
    std::ostringstream os;
    os << "homogenized bracket is nonpositive (" << r.bracket << ") at N=" << n
       << ", eps=" << eps << ", f=" << r.f << ", eps*C*sqrt(N)=" << r.eps_c_sqrt_n;
    throw AsymptoticValidityError(os.str());
  }
  r.k_eff = (N * eps * r.C / 2.0) / r.bracket;
  r.C_eff = 1.0 / (1.0 + 1.0 / r.k_eff);
  return r;
}

double homogenized_leading_order(std::size_t n, double eps, Reactivity kappa,
                                 const CapacitanceModel& model) {
  if (n == 0) throw DomainError("homogenization needs at least one patch");
  require_positive(eps, "eps");
  return static_cast<double>(n) * eps * c_unit(kappa, model) / 2.0;
}

HomogenizedResult homogenized(const PatchLayout& layout, const CapacitanceModel& model) {
  if (!layout.is_uniform()) {
    throw ConfigurationError(
        "homogenization needs identical patches; use the three-term formula instead");
  }
  return homogenized(layout.size(), layout.length_scale(), layout.kappa(0), model);
}

double berg_purcell(std::size_t n, double eps) {
  if (n == 0) throw DomainError("Berg-Purcell needs at least one patch");
  require_positive(eps, "eps");
  return eps * static_cast<double>(n) / kPi;
}

double heuristic_reactivity(double f, double eps, Reactivity kappa) {
  if (!(f > 0.0 && f < 1.0)) throw DomainError("area fraction must lie in (0, 1)");
  require_positive(eps, "eps");
  return (2.0 * f / eps) * c_sigmoid(kappa);
}

double dagdug_empirical(double f) {
  if (!(f > 0.0 && f < 1.0)) throw DomainError("area fraction must lie in (0, 1)");
  const double s = std::sqrt(f);
  return (2.0 / kPi) * s * (1.0 + 2.32 * s - 1.47 * f * f) / std::pow(1.0 - f, 1.5);
}

double planar_capacitance(std::span<const PlanarPoint> centers, double eps,
                          std::span<const double> radii, std::span<const Reactivity> kappas,
                          const CapacitanceModel& model) {
  const std::size_t n = centers.size();
  if (n == 0) throw DomainError("planar target needs at least one disk");
  if (radii.size() != n || kappas.size() != n) {
    throw DomainError("centers, radii and kappas must have equal length");
  }
  require_positive(eps, "eps");
  std::vector<double> c(n);
  double c_bar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = c_scaled(radii[i], kappas[i], model);
    c_bar += c[i];
  }
  if (!(c_bar > 0.0)) throw DomainError("every disk is inert: total capacitance is zero");

  std::vector<double> gc(n, 0.0);  // (G C)_j
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = std::hypot(centers[i].x - centers[j].x, centers[i].y - centers[j].y);
      if (!(d > 0.0)) throw DomainError("coincident disk centers");
      gc[i] += c[j] / d;
    }
  }
  double ctgc = 0.0, triple = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    ctgc += c[j] * gc[j];
    triple += c[j] * gc[j] * gc[j];
  }
  const double gamma = ctgc / c_bar;
  const double bracket = 1.0 + eps * gamma + eps * eps * (gamma * gamma - triple / c_bar);
  if (!(bracket > 0.0)) throw AsymptoticValidityError("planar bracket is nonpositive");
  return eps * c_bar / bracket;
}

void DimensionalContext::validate() const {
  require_positive(R, "R");
  require_positive(D, "D");
  require_positive(L, "L");
  require_positive(U_inf, "U_inf");
}

Reactivity DimensionalContext::kappa_from_dimensional(Reactivity K) const {
  validate();
  return K.scaled(L / D);
}

namespace {

DimensionalValues convert(const DimensionalContext& ctx, double ct, double k_eff) {
  ctx.validate();
  DimensionalValues v;
  v.capacitance = ctx.R * ct;
  v.K_eff = ctx.D * k_eff / ctx.R;
  v.flux = 4.0 * kPi * ctx.D * ctx.U_inf * v.capacitance;
  v.flux_smol = 4.0 * kPi * ctx.D * ctx.R * ctx.U_inf;
  return v;
}

}  // namespace

DimensionalValues dimensional_convert(const DimensionalContext& ctx, const HomogenizedResult& r) {
  return convert(ctx, r.C_eff, r.k_eff);
}

DimensionalValues dimensional_convert(const DimensionalContext& ctx,
                                      const CapacitanceBreakdown& b) {
  return convert(ctx, b.CT, keff_from_ct(b.CT));
}

}  // namespace patchcap
