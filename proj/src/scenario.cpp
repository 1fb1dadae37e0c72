#include "dualqkd/scenario.hpp"

#include <array>
#include <string>

#include "dualqkd/gmcs.hpp"

namespace dualqkd {
namespace {

constexpr std::array<std::pair<Protocol, std::string_view>, 4> kProtocolNames{{
    {Protocol::kBb84SinglePhoton, "bb84_single_photon"},
    {Protocol::kDecoyBb84, "decoy_bb84"},
    {Protocol::kGmcsDr, "gmcs_dr"},
    {Protocol::kGmcsRr, "gmcs_rr"},
}};

constexpr std::array<std::pair<Mode, std::string_view>, 4> kModeNames{{
    {Mode::kSingleFast, "single_fast"},
    {Mode::kSingleSlow, "single_slow"},
    {Mode::kDual, "dual"},
    {Mode::kDualNoPa, "dual_no_pa"},
}};

bool is_gmcs(Protocol p) { return p == Protocol::kGmcsDr || p == Protocol::kGmcsRr; }

bool is_dual(Mode m) { return m == Mode::kDual || m == Mode::kDualNoPa; }

template <class Detector>
const Detector& pick(const std::vector<Detector>& list, Mode mode) {
  return mode == Mode::kSingleSlow ? list.back() : list.front();
}

double evaluate_spd(const Scenario& s, const std::vector<SpdSpec>& spds, const LinkSpec& link) {
  if (s.protocol == Protocol::kBb84SinglePhoton) {
    const auto& cfg = std::get<Bb84Config>(s.config);
    if (is_dual(s.mode)) return bb84_rate_dual(spds[0], spds[1], link, cfg);
    return bb84_rate_single(pick(spds, s.mode), link, cfg);
  }
  DecoyConfig cfg = std::get<DecoyConfig>(s.config);
  if (s.mode == Mode::kDualNoPa) cfg.drop_pa = true;
  if (is_dual(s.mode)) return decoy_rate_dual(spds[0], spds[1], link, cfg);
  return decoy_rate_single(pick(spds, s.mode), link, cfg);
}

double evaluate_homodyne(const Scenario& s, const std::vector<HomodyneSpec>& dets,
                         const LinkSpec& link) {
  const auto& source = std::get<GmcsSource>(s.config);
  if (s.protocol == Protocol::kGmcsDr) {
    if (is_dual(s.mode)) return gmcs_dr_rate_dual(source, dets[0], dets[1], link);
    return gmcs_dr_rate_single(source, pick(dets, s.mode), link);
  }
  if (is_dual(s.mode)) return gmcs_rr_rate_dual(source, dets[0], dets[1], link);
  return gmcs_rr_rate_single(source, pick(dets, s.mode), link);
}

}  // namespace

std::string_view to_string(Protocol p) {
  for (const auto& [value, name] : kProtocolNames) {
    if (value == p) return name;
  }
  return "unknown";
}

std::string_view to_string(Mode m) {
  for (const auto& [value, name] : kModeNames) {
    if (value == m) return name;
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view s) {
  for (const auto& [value, name] : kProtocolNames) {
    if (name == s) return value;
  }
  throw ConfigError("unknown protocol '" + std::string(s) + "'");
}

Mode parse_mode(std::string_view s) {
  for (const auto& [value, name] : kModeNames) {
    if (name == s) return value;
  }
  throw ConfigError("unknown mode '" + std::string(s) + "'");
}

void Scenario::validate() const {
  const bool wants_homodyne = is_gmcs(protocol);
  const bool has_homodyne = std::holds_alternative<std::vector<HomodyneSpec>>(detectors);
  if (wants_homodyne != has_homodyne) {
    throw ConfigError(std::string("protocol ") + std::string(to_string(protocol)) + " needs " +
                      (wants_homodyne ? "homodyne" : "spd") + " detectors");
  }
  const std::size_t count =
      std::visit([](const auto& list) { return list.size(); }, detectors);
  if (count < 1 || count > 2) throw ConfigError("detectors must list 1 or 2 entries");
  if (is_dual(mode) && count != 2) {
    throw ConfigError("dual modes need exactly two detectors [fast, slow]");
  }
  if (mode == Mode::kDualNoPa && protocol != Protocol::kDecoyBb84) {
    throw ConfigError("mode dual_no_pa is only defined for decoy_bb84");
  }

  const bool config_ok =
      (protocol == Protocol::kBb84SinglePhoton && std::holds_alternative<Bb84Config>(config)) ||
      (protocol == Protocol::kDecoyBb84 && std::holds_alternative<DecoyConfig>(config)) ||
      (wants_homodyne && std::holds_alternative<GmcsSource>(config));
  if (!config_ok) throw ConfigError("config block does not match the protocol");
  if (wants_homodyne && link.g_bob != 1.0) {
    throw ConfigError("GMCS scenarios fold receiver optics into g_det; g_bob must be 1");
  }

  try {
    link.validate();
    std::visit([](const auto& list) {
      for (const auto& d : list) d.validate();
    }, detectors);
    std::visit([](const auto& c) { c.validate(); }, config);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (protocol == Protocol::kGmcsRr && is_dual(mode)) {
    const auto& dets = std::get<std::vector<HomodyneSpec>>(detectors);
    if (dets[0].g_det != dets[1].g_det) {
      throw ConfigError("gmcs_rr dual needs equal g_det on both detectors");
    }
  }
}

double evaluate(const Scenario& scenario, double length_km) {
  scenario.validate();
  const LinkSpec link = scenario.link.at_length(length_km);
  if (const auto* spds = std::get_if<std::vector<SpdSpec>>(&scenario.detectors)) {
    return evaluate_spd(scenario, *spds, link);
  }
  return evaluate_homodyne(scenario, std::get<std::vector<HomodyneSpec>>(scenario.detectors),
                           link);
}

}  // namespace dualqkd
