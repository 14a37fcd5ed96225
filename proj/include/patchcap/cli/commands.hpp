#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "patchcap/cli/experiment.hpp"

namespace patchcap::cli {

/// Command-line overrides shared by every subcommand.
struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trajectories;
  unsigned threads = 1;
  bool timing = true;               ///< false blanks the wall_time column
  std::string dump_outcomes;        ///< per-trajectory CSV path for `mc`
  std::string layout_out;           ///< where sweep-figures echoes random layouts
  std::string steklov_csv;          ///< alternative Steklov table for `validate`
};

/// Formats a double for CSV: "inf", "nan" or %.10g.
std::string fmt(double v);

void cmd_capacitance(const ExperimentSpec& spec, const RunOptions& opts, std::ostream& out);
void cmd_keff(const ExperimentSpec& spec, const RunOptions& opts, std::ostream& out);
void cmd_mc(const ExperimentSpec& spec, const RunOptions& opts, std::ostream& out);

/// Figure ids accepted by cmd_sweep_figures.
const std::vector<std::string>& figure_ids();
/// Writes the comparison table for one figure; SpecError for unknown ids.
void cmd_sweep_figures(const std::string& figure_id, const RunOptions& opts, std::ostream& out);

/// Runs the oracle suite, one PASS/FAIL line per check. Returns the number of
/// failed checks.
int cmd_validate(const RunOptions& opts, std::ostream& out);

}  // namespace patchcap::cli
