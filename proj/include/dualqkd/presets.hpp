#ifndef DUALQKD_PRESETS_HPP
#define DUALQKD_PRESETS_HPP

#include <array>
#include <optional>
#include <string>

#include "dualqkd/scenario.hpp"
#include "dualqkd/sweep.hpp"

namespace dualqkd {

// Built-in parameter sets for figures 1-9:
//   1-3  BB84 with a single-photon source (three detector pairings)
//   4    decoy-state BB84, mu = 0.73
//   5    GMCS direct reconciliation, V = 40, beta = 1
//   6    GMCS reverse reconciliation, V = 40, beta = 1
//   7    GMCS reverse reconciliation, V = 20, beta = 0.8
//   8,9  figures 2 and 3 with a 3 dB switch in front of the dual receiver
struct FigurePreset {
  int id = 0;
  std::string title;
  Scenario dual;
  Scenario fast;  // single_fast
  Scenario slow;  // single_slow
  std::optional<Scenario> dual_no_pa;  // figure 4 only
  double l_min = 0.0;
  double l_max = 250.0;
  double step = 1.0;

  std::array<Scenario, 2> singles() const { return {fast, slow}; }
  SearchOptions search() const { return {step, 0.01}; }
};

// Throws ConfigError for ids outside 1..9.
FigurePreset figure_preset(int id);

// Copy of the scenario with the given switch insertion loss.
Scenario with_switch_loss(Scenario scenario, double loss_db);

}  // namespace dualqkd

#endif  // DUALQKD_PRESETS_HPP
