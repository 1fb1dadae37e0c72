#ifndef DUALQKD_SCENARIO_HPP
#define DUALQKD_SCENARIO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dualqkd/bb84.hpp"
#include "dualqkd/core.hpp"
#include "dualqkd/decoy.hpp"

namespace dualqkd {

enum class Protocol { kBb84SinglePhoton, kDecoyBb84, kGmcsDr, kGmcsRr };

enum class Mode {
  kSingleFast,  // conventional receiver built from the first detector
  kSingleSlow,  // conventional receiver built from the last detector
  kDual,
  kDualNoPa,    // decoy only: dual receiver without privacy amplification
};

std::string_view to_string(Protocol p);
std::string_view to_string(Mode m);
Protocol parse_protocol(std::string_view s);  // ConfigError on unknown names
Mode parse_mode(std::string_view s);

using DetectorList = std::variant<std::vector<SpdSpec>, std::vector<HomodyneSpec>>;
using ProtocolConfig = std::variant<Bb84Config, DecoyConfig, GmcsSource>;

// One curve of a figure: a protocol, a receiver configuration and a link.
// detectors holds [fast, slow] for dual modes, or one or two detectors for
// single modes (single_fast uses the first, single_slow the last).
struct Scenario {
  Protocol protocol = Protocol::kBb84SinglePhoton;
  Mode mode = Mode::kDual;
  LinkSpec link;
  DetectorList detectors;
  ProtocolConfig config;

  // Throws ConfigError on kind/count mismatches or out-of-range parameters.
  void validate() const;
};

// Raw (unclamped) key rate in bits/s at the given fiber length. Single modes
// never see link.switch_loss; dual modes apply it to both arms.
double evaluate(const Scenario& scenario, double length_km);

// Scenario files are JSON; unknown keys are rejected with ConfigError.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::string& path);
std::string scenario_to_json(const Scenario& scenario);

}  // namespace dualqkd

#endif  // DUALQKD_SCENARIO_HPP
