#include "dualqkd/presets.hpp"

#include <string>
#include <utility>

namespace dualqkd {
namespace {

constexpr double kAlpha = 0.21;
constexpr double kGBob = 0.16;
constexpr double kFec = 1.22;
constexpr double kSwitchLossDb = 3.0;

// Up-conversion SPD, 1 GHz.
constexpr SpdSpec kUpconversion{1e9, 0.059, 1.3e-5, 0.018};
// Transition-edge sensor, 2.5 MHz.
constexpr SpdSpec kTes{2.5e6, 0.5, 3e-7, 0.018};
// Low-jitter up-conversion SPD at 10 GHz; cross-talk between adjacent pulses
// shows up as a large e_det.
constexpr SpdSpec kLowJitter10G{1e10, 0.0027, 3.2e-9, 0.097};
// Same device run at 100 MHz, where cross-talk is negligible.
constexpr SpdSpec kLowJitter100M{1e8, 0.0027, 3.2e-9, 0.018};

constexpr HomodyneSpec kFastHomodyne{82e6, 0.8, 0.43};
constexpr HomodyneSpec kSlowHomodyne{1e6, 0.8, 0.01};

Scenario make(Protocol protocol, Mode mode, LinkSpec link, DetectorList detectors,
              ProtocolConfig config) {
  Scenario s;
  s.protocol = protocol;
  s.mode = mode;
  s.link = link;
  if (mode == Mode::kSingleFast || mode == Mode::kSingleSlow) s.link.switch_loss = 0.0;
  s.detectors = std::move(detectors);
  s.config = std::move(config);
  return s;
}

FigurePreset triple(int id, std::string title, Protocol protocol, LinkSpec link,
                    DetectorList detectors, ProtocolConfig config) {
  FigurePreset f;
  f.id = id;
  f.title = std::move(title);
  f.dual = make(protocol, Mode::kDual, link, detectors, config);
  f.fast = make(protocol, Mode::kSingleFast, link, detectors, config);
  f.slow = make(protocol, Mode::kSingleSlow, link, detectors, config);
  return f;
}

FigurePreset bb84(int id, std::string title, SpdSpec fast, SpdSpec slow, double switch_db) {
  const LinkSpec link{kAlpha, 0.0, kGBob, switch_db};
  return triple(id, std::move(title), Protocol::kBb84SinglePhoton, link,
                std::vector<SpdSpec>{fast, slow}, Bb84Config{0.5, kFec});
}

FigurePreset gmcs(int id, std::string title, Protocol protocol, GmcsSource source) {
  const LinkSpec link{kAlpha, 0.0, 1.0, 0.0};
  FigurePreset f = triple(id, std::move(title), protocol, link,
                          std::vector<HomodyneSpec>{kFastHomodyne, kSlowHomodyne}, source);
  f.l_max = 60.0;
  f.step = 0.25;
  return f;
}

}  // namespace

FigurePreset figure_preset(int id) {
  switch (id) {
    case 1:
      return bb84(1, "BB84 single photon: up-conversion SPD + TES", kUpconversion, kTes, 0.0);
    case 2:
      return bb84(2, "BB84 single photon: 10 GHz low-jitter SPD + TES", kLowJitter10G, kTes, 0.0);
    case 3:
      return bb84(3, "BB84 single photon: two low-jitter SPDs (10 GHz / 100 MHz)", kLowJitter10G,
                  kLowJitter100M, 0.0);
    case 4: {
      const LinkSpec link{kAlpha, 0.0, kGBob, 0.0};
      const DecoyConfig cfg{0.73, 0.5, kFec, false};
      FigurePreset f = triple(4, "decoy-state BB84: up-conversion SPD + TES", Protocol::kDecoyBb84,
                              link, std::vector<SpdSpec>{kUpconversion, kTes}, cfg);
      Scenario no_pa = f.dual;
      no_pa.mode = Mode::kDualNoPa;
      f.dual_no_pa = std::move(no_pa);
      return f;
    }
    case 5:
      return gmcs(5, "GMCS direct reconciliation, V=40, beta=1", Protocol::kGmcsDr,
                  GmcsSource{40.0, 1.0, 0.05});
    case 6:
      return gmcs(6, "GMCS reverse reconciliation, V=40, beta=1", Protocol::kGmcsRr,
                  GmcsSource{40.0, 1.0, 0.05});
    case 7:
      return gmcs(7, "GMCS reverse reconciliation, V=20, beta=0.8", Protocol::kGmcsRr,
                  GmcsSource{20.0, 0.8, 0.05});
    case 8:
      return bb84(8, "figure 2 pairing with a 3 dB optical switch", kLowJitter10G, kTes,
                  kSwitchLossDb);
    case 9:
      return bb84(9, "figure 3 pairing with a 3 dB optical switch", kLowJitter10G,
                  kLowJitter100M, kSwitchLossDb);
    default:
      throw ConfigError("unknown figure id " + std::to_string(id) + " (expected 1..9)");
  }
}

Scenario with_switch_loss(Scenario scenario, double loss_db) {
  scenario.link.switch_loss = loss_db;
  return scenario;
}

}  // namespace dualqkd
