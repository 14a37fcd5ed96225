#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "patchcap/cli/commands.hpp"
#include "patchcap/errors.hpp"
#include "patchcap/oracles.hpp"

namespace patchcap::cli {

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
    if (!ok) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

std::string measured(double value, double target, double tol) {
  std::ostringstream os;
  os << "measured=" << fmt(value) << " target=" << fmt(target) << " tol=" << fmt(tol);
  return os.str();
}

}  // namespace

int cmd_validate(const RunOptions& opts, std::ostream& out) {
  Report rep(out);
  constexpr double kPi = std::numbers::pi;

  SteklovSpectrum spectrum = SteklovSpectrum::unit_disk();
  if (!opts.steklov_csv.empty()) {
    std::ifstream in(opts.steklov_csv);
    if (!in) throw SpecError("cannot open Steklov table '" + opts.steklov_csv + "'");
    spectrum = SteklovSpectrum::from_csv(in);
  }

  SimConfig cfg;
  cfg.seed = opts.seed.value_or(1);
  cfg.trajectories = opts.trajectories.value_or(100000);
  cfg.workers = std::max(1u, opts.threads);

  {  // homogeneous sphere, K R / D = 1: the whole sphere is one patch of chord radius 2
    const auto r = estimate_reaction(layout_single(2.0, Reactivity(2.0)), cfg);
    const double target = homogeneous_reaction_probability(1.0, Reactivity(1.0));
    rep.check("homogeneous_reaction", std::abs(r.p_hat - target) <= 3.0 * r.std_error,
              measured(r.p_hat, target, 3.0 * r.std_error));
  }
  {  // reaction angles from rho0 = 2 against the spread harmonic measure
    SimConfig pc = cfg;
    pc.start = PointStart{{0.0, 0.0, 2.0}};
    const auto layout = layout_single(2.0, Reactivity(2.0));
    const TrajectorySimulator sim(layout, pc);
    std::vector<double> theta;
    for_each_outcome(sim, 0, pc.trajectories, [&](std::uint64_t, const TrajectoryOutcome& o) {
      if (o.reacted) theta.push_back(std::acos(std::clamp(o.point.z / o.point.norm(), -1.0, 1.0)));
    });
    LegendreSeriesParams p;
    const double total = spread_harmonic_cdf(kPi, p);
    const double d = ks_statistic(theta, [&](double t) { return spread_harmonic_cdf(t, p) / total; });
    const double crit = ks_critical_1pct(theta.size());
    rep.check("spread_harmonic_ks", d < crit, measured(d, 0.0, crit));
  }
  {
    LegendreSeriesParams p;
    p.kappa_RD = Reactivity::infinite();
    double worst = 0.0;
    for (int i = 0; i <= 180; ++i) {
      const double t = kPi * i / 180.0;
      worst = std::max(worst, std::abs(spread_harmonic_density(t, p) - arrival_angle_density(t, 2.0)));
    }
    rep.check("spread_measure_infinite_limit", worst <= 1e-8, measured(worst, 0.0, 1e-8));
  }
  {
    const double c3 = taylor_c3_quadrature();
    rep.check("taylor_c3_quadrature", std::abs(c3 - kTaylorC3) <= 5e-4, measured(c3, kTaylorC3, 5e-4));
  }
  {
    const double target = e_infinite_closed_form(1.0);
    const double e = e_infinity_quadrature(1.0);
    rep.check("e_infinity_quadrature", std::abs(e - target) <= 1e-6, measured(e, target, 1e-6));
    const double h = e_heuristic(1.0, Reactivity(1e6));
    rep.check("e_heuristic_large_kappa", std::abs(h - target) <= 1e-3, measured(h, target, 1e-3));
  }
  {
    double worst = 0.0;
    for (int i = 0; i <= 120; ++i) {
      const Reactivity k(std::pow(10.0, -3.0 + 0.05 * i));
      const double s = c_spectral(k, spectrum, true);
      worst = std::max(worst, std::abs(c_sigmoid(k) - s) / s);
    }
    rep.check("sigmoid_vs_spectral", worst <= 0.05, measured(worst, 0.0, 0.05));
    const double c1 = spectrum.taylor_coefficient(1);
    rep.check("spectral_c1", std::abs(c1 - 0.5) <= 1e-3, measured(c1, 0.5, 1e-3));
  }
  {
    const double lo = beta_coefficient(1.0, Reactivity(1e-4));
    const double hi = beta_coefficient(1.0, Reactivity(1e6));
    const double lo_t = std::exp(0.25), hi_t = 4.0 / std::numbers::e;
    rep.check("beta_small_kappa", std::abs(lo / lo_t - 1.0) <= 0.01, measured(lo, lo_t, 0.01 * lo_t));
    rep.check("beta_large_kappa", std::abs(hi / hi_t - 1.0) <= 0.01, measured(hi, hi_t, 0.01 * hi_t));
  }
  {
    const double h = interaction_energy(layout_fibonacci(500, 1e-3, Reactivity(1.0)));
    const double a = h_asymptotic(500);
    const double rel = std::abs(h - a) / h;
    rep.check("energy_asymptotics", rel <= 0.01, measured(rel, 0.0, 0.01));
  }
  out << (rep.failures() == 0 ? "all checks passed" : std::to_string(rep.failures()) + " check(s) failed")
      << '\n';
  return rep.failures();
}

}  // namespace patchcap::cli
