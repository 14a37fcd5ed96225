#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "patchcap/cli/commands.hpp"
#include "patchcap/errors.hpp"

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("PATCHCAP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid PATCHCAP_THREADS='" << env << "'\n";
  }
  return 1;
}

template <class F>
void with_output(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw patchcap::SpecError("cannot write '" + path + "'");
  body(f);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace patchcap::cli;
  CLI::App app{"Capacitance and effective reactivity of a sphere with reactive patches"};
  app.require_subcommand(1);

  RunOptions opts;
  opts.threads = default_threads();
  std::string spec_path, out_path, figure;
  std::uint64_t seed = 0, trajectories = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file (default stdout)");
    sub->add_option("--seed", seed, "Override the random seed");
    sub->add_option("--trajectories", trajectories, "Override the Monte Carlo sample size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", opts.threads,
                    "Monte Carlo worker threads (default $PATCHCAP_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };

  auto* cap = app.add_subcommand("capacitance", "Three-term capacitance breakdown per kappa");
  cap->add_option("spec", spec_path, "Experiment JSON")->required();
  add_common(cap);

  auto* keff = app.add_subcommand("keff", "Effective reactivity by every requested method");
  keff->add_option("spec", spec_path, "Experiment JSON")->required();
  add_common(keff);

  auto* mc = app.add_subcommand("mc", "Monte Carlo reaction probability per kappa");
  mc->add_option("spec", spec_path, "Experiment JSON")->required();
  add_common(mc);
  bool no_timing = false;
  mc->add_flag("--no-timing", no_timing, "Leave wall_time empty for byte-reproducible output");
  mc->add_option("--dump-outcomes", opts.dump_outcomes, "Per-trajectory outcome CSV");

  auto* sweep = app.add_subcommand("sweep-figures", "Comparison tables for the reference figures");
  sweep->add_option("figure", figure, "fig3, fig6, fig7, fig8, fig9 or fig10")->required();
  add_common(sweep);
  sweep->add_option("--layout-out", opts.layout_out, "Where to write the random layout JSON");

  auto* val = app.add_subcommand("validate", "Run the oracle validation suite");
  add_common(val);
  val->add_option("--steklov", opts.steklov_csv, "Steklov table CSV (k,mu,d)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto* sub : {cap, keff, mc, sweep, val}) {
      if (sub->count("--seed")) opts.seed = seed;
      if (sub->count("--trajectories")) opts.trajectories = trajectories;
    }
    opts.timing = !no_timing;

    if (*val) {
      int failures = 0;
      with_output(out_path, [&](std::ostream& o) { failures = cmd_validate(opts, o); });
      return failures == 0 ? 0 : 1;
    }
    if (*sweep) {
      with_output(out_path, [&](std::ostream& o) { cmd_sweep_figures(figure, opts, o); });
      return 0;
    }
    const ExperimentSpec spec = load_experiment(spec_path);
    const std::string path = out_path.empty() ? spec.output : out_path;
    with_output(path, [&](std::ostream& o) {
      if (*cap) cmd_capacitance(spec, opts, o);
      if (*keff) cmd_keff(spec, opts, o);
      if (*mc) cmd_mc(spec, opts, o);
    });
  } catch (const patchcap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
