#include "patchcap/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "patchcap/errors.hpp"

namespace patchcap::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

// Evaluates an asymptotic formula, turning breakdowns into NaN with a note on stderr.
template <class F>
double or_nan(F&& f, const char* what) {
  try {
    return f();
  } catch (const Error& e) {
    std::cerr << "warning: " << what << ": " << e.what() << '\n';
    return kNaN;
  }
}

SimConfig mc_config(SimConfig cfg, const RunOptions& opts) {
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.trajectories) cfg.trajectories = *opts.trajectories;
  cfg.workers = std::max(1u, opts.threads);
  cfg.validate();
  return cfg;
}

struct McResult {
  ReactionEstimate reaction;
  double k_eff = kNaN;
  double k_eff_se = kNaN;
  double seconds = 0.0;
};

McResult run_mc(const PatchLayout& layout, const SimConfig& cfg) {
  const std::string warn = layer_width_warning(layout, cfg);
  if (!warn.empty()) std::cerr << "warning: " << warn << '\n';
  const auto t0 = std::chrono::steady_clock::now();
  McResult r;
  r.reaction = estimate_reaction(layout, cfg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (std::holds_alternative<UniformOnSphere>(cfg.start) && r.reaction.p_hat > 0.0 &&
      r.reaction.p_hat < 1.0) {
    const auto k = keff_from_reaction(r.reaction);
    r.k_eff = k.k_eff;
    r.k_eff_se = k.std_error;
  }
  return r;
}

std::string kappa_label(const PatchLayout& layout) {
  return layout.is_uniform() ? fmt(layout.kappa(0).as_double()) : "mixed";
}

double three_term_keff(const PatchLayout& layout, const CapacitanceModel& model,
                       std::optional<double> eps = std::nullopt) {
  return or_nan([&] { return keff_from_ct(capacitance_three_term(layout, model, eps).CT); },
                "three-term");
}

double homogenized_keff(const PatchLayout& layout, const CapacitanceModel& model) {
  return or_nan([&] { return homogenized(layout, model).k_eff; }, "homogenized");
}

double heuristic_keff(const PatchLayout& layout) {
  if (!layout.is_uniform()) return kNaN;
  return or_nan(
      [&] {
        return heuristic_reactivity(layout.area_fraction(), layout.length_scale(), layout.kappa(0));
      },
      "heuristic");
}

}  // namespace

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void cmd_capacitance(const ExperimentSpec& spec, const RunOptions&, std::ostream& out) {
  std::vector<std::string> header = {"kappa",  "N",        "eps",      "f",
                                     "c_bar",  "e_bar",    "interaction", "u0_term",
                                     "log_term", "order_eps_term", "inv_CT", "CT", "k_eff"};
  if (spec.dimensional) {
    for (const char* h : {"capacitance_dim", "K_eff_dim", "flux", "flux_smol"}) header.push_back(h);
  }
  write_row(out, header);
  for (const auto& layout : spec.layouts()) {
    std::vector<std::string> row = {kappa_label(layout), std::to_string(layout.size())};
    try {
      const auto b = capacitance_three_term(layout, spec.model, spec.eps);
      const double k = or_nan([&] { return keff_from_ct(b.CT); }, "k_eff");
      for (double v : {b.eps, layout.area_fraction(), b.c_bar, b.e_bar, b.interaction, b.u0_term,
                       b.log_term, b.order_eps_term, b.inv_CT, b.CT, k}) {
        row.push_back(fmt(v));
      }
      if (spec.dimensional) {
        DimensionalContext ctx = *spec.dimensional;
        ctx.L = b.eps * ctx.R;
        const double cap = ctx.R * b.CT;
        row.push_back(fmt(cap));
        row.push_back(fmt(ctx.D * k / ctx.R));
        row.push_back(fmt(4.0 * std::numbers::pi * ctx.D * ctx.U_inf * cap));
        row.push_back(fmt(4.0 * std::numbers::pi * ctx.D * ctx.R * ctx.U_inf));
      }
    } catch (const Error& e) {
      std::cerr << "warning: three-term: " << e.what() << '\n';
      row.resize(header.size(), "nan");
      row[2] = fmt(spec.eps.value_or(layout.length_scale()));
      row[3] = fmt(layout.area_fraction());
    }
    write_row(out, row);
  }
}

void cmd_keff(const ExperimentSpec& spec, const RunOptions& opts, std::ostream& out) {
  const auto& m = spec.methods;
  std::vector<std::string> header = {"kappa", "N", "eps", "f"};
  if (m.count(Method::ThreeTerm)) header.push_back("three_term");
  if (m.count(Method::Homogenized)) header.push_back("homogenized");
  if (m.count(Method::BergPurcell)) header.push_back("berg_purcell");
  if (m.count(Method::Heuristic)) header.push_back("heuristic");
  if (m.count(Method::Dagdug)) header.push_back("dagdug");
  if (m.count(Method::MonteCarlo)) {
    header.push_back("mc_k_eff");
    header.push_back("mc_stderr");
  }
  if (spec.dimensional) header.push_back("K_eff_dim_three_term");
  write_row(out, header);

  const SimConfig cfg = mc_config(spec.mc, opts);
  for (const auto& layout : spec.layouts()) {
    const double eps = spec.eps.value_or(layout.length_scale());
    const double f = layout.area_fraction();
    std::vector<std::string> row = {kappa_label(layout), std::to_string(layout.size()), fmt(eps),
                                    fmt(f)};
    const double tt = three_term_keff(layout, spec.model, spec.eps);
    if (m.count(Method::ThreeTerm)) row.push_back(fmt(tt));
    if (m.count(Method::Homogenized)) row.push_back(fmt(homogenized_keff(layout, spec.model)));
    if (m.count(Method::BergPurcell)) row.push_back(fmt(berg_purcell(layout.size(), eps)));
    if (m.count(Method::Heuristic)) row.push_back(fmt(heuristic_keff(layout)));
    if (m.count(Method::Dagdug)) row.push_back(fmt(or_nan([&] { return dagdug_empirical(f); }, "dagdug")));
    if (m.count(Method::MonteCarlo)) {
      const auto r = run_mc(layout, cfg);
      row.push_back(fmt(r.k_eff));
      row.push_back(fmt(r.k_eff_se));
    }
    if (spec.dimensional) row.push_back(fmt(spec.dimensional->D * tt / spec.dimensional->R));
    write_row(out, row);
  }
}

void cmd_mc(const ExperimentSpec& spec, const RunOptions& opts, std::ostream& out) {
  const SimConfig cfg = mc_config(spec.mc, opts);
  std::ofstream dump;
  if (!opts.dump_outcomes.empty()) {
    dump.open(opts.dump_outcomes);
    if (!dump) throw SpecError("cannot open outcome dump '" + opts.dump_outcomes + "'");
    write_row(dump, {"kappa", "trajectory_id", "outcome", "jumps", "theta", "phi"});
  }
  write_row(out, {"kappa", "p_hat", "stderr", "k_eff", "k_eff_stderr", "seed", "M", "M_react", "a",
                  "wall_time"});
  for (const auto& layout : spec.layouts()) {
    const auto r = run_mc(layout, cfg);
    const std::string label = kappa_label(layout);
    if (dump.is_open()) {
      const TrajectorySimulator sim(layout, cfg);
      for_each_outcome(sim, 0, cfg.trajectories, [&](std::uint64_t i, const TrajectoryOutcome& o) {
        std::string theta = "", phi = "";
        if (o.reacted) {
          const Vec3 p = o.point / o.point.norm();
          theta = fmt(std::acos(std::clamp(p.z, -1.0, 1.0)));
          phi = fmt(std::atan2(p.y, p.x));
        }
        write_row(dump, {label, std::to_string(i), o.reacted ? "reacted" : "escaped",
                         std::to_string(o.jumps), theta, phi});
      });
    }
    write_row(out, {label, fmt(r.reaction.p_hat), fmt(r.reaction.std_error), fmt(r.k_eff),
                    fmt(r.k_eff_se), std::to_string(r.reaction.seed), std::to_string(r.reaction.M),
                    std::to_string(r.reaction.M_react), fmt(cfg.layer_width),
                    opts.timing ? fmt(r.seconds) : ""});
  }
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig3", "fig6", "fig7", "fig8", "fig9", "fig10"};
  return ids;
}

namespace {

SimConfig figure_mc(const RunOptions& opts) {
  SimConfig cfg;
  cfg.layer_width = 1e-2;
  cfg.trajectories = 100000;
  cfg.seed = 1;
  return mc_config(cfg, opts);
}

std::vector<Reactivity> figure_kappas() {
  std::vector<Reactivity> k;
  for (int i = 0; i <= 8; ++i) k.emplace_back(std::pow(10.0, -2.0 + 0.5 * i));
  return k;
}

void kappa_sweep(std::ostream& out, const std::vector<double>& eps_values,
                 const std::function<PatchLayout(double, Reactivity)>& make,
                 const std::vector<Reactivity>& kappas, const SimConfig& cfg) {
  write_row(out, {"eps", "kappa", "N", "f", "mc_k_eff", "mc_stderr", "three_term", "homogenized",
                  "heuristic", "berg_purcell"});
  for (double eps : eps_values) {
    for (const auto& k : kappas) {
      const auto layout = make(eps, k);
      const auto r = run_mc(layout, cfg);
      write_row(out, {fmt(eps), fmt(k.as_double()), std::to_string(layout.size()),
                      fmt(layout.area_fraction()), fmt(r.k_eff), fmt(r.k_eff_se),
                      fmt(three_term_keff(layout, SigmoidModel{})),
                      fmt(homogenized_keff(layout, SigmoidModel{})), fmt(heuristic_keff(layout)),
                      fmt(berg_purcell(layout.size(), eps))});
    }
  }
}

void echo_layout(const PatchLayout& layout, const RunOptions& opts) {
  const std::string text = layout_to_json(layout).dump(2);
  if (opts.layout_out.empty()) {
    std::cerr << text << '\n';
    return;
  }
  std::ofstream f(opts.layout_out);
  if (!f) throw SpecError("cannot write layout to '" + opts.layout_out + "'");
  f << text << '\n';
}

}  // namespace

void cmd_sweep_figures(const std::string& id, const RunOptions& opts, std::ostream& out) {
  const SimConfig cfg = figure_mc(opts);
  if (id == "fig3") {
    write_row(out, {"f", "eps", "mc_k_eff", "mc_stderr", "dagdug", "berg_purcell", "three_term"});
    for (double f : {0.005, 0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8,
                     0.9}) {
      const double eps = 2.0 * std::sqrt(f);
      const auto layout = layout_single(eps, Reactivity::infinite());
      const auto r = run_mc(layout, cfg);
      write_row(out, {fmt(f), fmt(eps), fmt(r.k_eff), fmt(r.k_eff_se), fmt(dagdug_empirical(f)),
                      fmt(berg_purcell(1, eps)), fmt(three_term_keff(layout, SigmoidModel{}))});
    }
  } else if (id == "fig6") {
    kappa_sweep(out, {0.2, 0.3, 0.4}, layout_icosahedron, figure_kappas(), cfg);
  } else if (id == "fig7") {
    kappa_sweep(out, {0.2, 0.3, 0.4}, layout_octahedron, figure_kappas(), cfg);
  } else if (id == "fig8" || id == "fig9") {
    const std::uint64_t layout_seed = opts.seed.value_or(1);
    const auto base = layout_random_uniform(12, 0.2, Reactivity(1.0), layout_seed);
    echo_layout(base, opts);
    auto kappas = figure_kappas();
    if (id == "fig9") kappas.push_back(Reactivity::infinite());
    kappa_sweep(out, {0.2}, [&](double, Reactivity k) { return base.with_uniform_kappa(k); },
                kappas, cfg);
  } else if (id == "fig10") {
    write_row(out, {"eps", "f", "kappa", "mc_k_eff", "mc_stderr", "three_term", "homogenized",
                    "heuristic"});
    for (int i = 1; i <= 20; ++i) {
      const double eps = 0.05 * i;
      const Reactivity kappa(10.0 * eps);  // R K / D = 10
      const auto layout = layout_single(eps, kappa);
      const auto r = run_mc(layout, cfg);
      write_row(out, {fmt(eps), fmt(layout.area_fraction()), fmt(kappa.value()), fmt(r.k_eff),
                      fmt(r.k_eff_se), fmt(three_term_keff(layout, SigmoidModel{})),
                      fmt(homogenized_keff(layout, SigmoidModel{})), fmt(heuristic_keff(layout))});
    }
  } else {
    std::string known;
    for (const auto& f : figure_ids()) known += (known.empty() ? "" : ", ") + f;
    throw SpecError("unknown figure id '" + id + "' (expected one of " + known + ")");
  }
}

}  // namespace patchcap::cli
