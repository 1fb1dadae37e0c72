#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "dualqkd/scenario.hpp"
#include "json.hpp"

namespace dualqkd {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) {
      throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

double number(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError("missing key '" + std::string(key) + "' in " + std::string(where));
  }
  if (!it->is_number()) {
    throw ConfigError("key '" + std::string(key) + "' in " + std::string(where) +
                      " must be a number");
  }
  return it->get<double>();
}

double number_or(const json& obj, const char* key, std::string_view where, double fallback) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

LinkSpec parse_link(const json& j) {
  reject_unknown(j, "link", {"alpha_db_per_km", "length_km", "g_bob", "switch_loss_db"});
  LinkSpec link;
  link.alpha = number(j, "alpha_db_per_km", "link");
  link.length = number_or(j, "length_km", "link", 0.0);
  link.g_bob = number_or(j, "g_bob", "link", 1.0);
  link.switch_loss = number_or(j, "switch_loss_db", "link", 0.0);
  return link;
}

SpdSpec parse_spd(const json& j) {
  reject_unknown(j, "spd", {"rep_rate_hz", "eta_d", "y0", "e_det"});
  return SpdSpec{number(j, "rep_rate_hz", "spd"), number(j, "eta_d", "spd"),
                 number(j, "y0", "spd"), number(j, "e_det", "spd")};
}

HomodyneSpec parse_homodyne(const json& j) {
  reject_unknown(j, "homodyne", {"rep_rate_hz", "g_det", "eps_det"});
  return HomodyneSpec{number(j, "rep_rate_hz", "homodyne"), number(j, "g_det", "homodyne"),
                      number(j, "eps_det", "homodyne")};
}

DetectorList parse_detectors(const json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2) {
    throw ConfigError("detectors must be an array of 1 or 2 objects");
  }
  std::vector<SpdSpec> spds;
  std::vector<HomodyneSpec> homodynes;
  for (const auto& entry : j) {
    if (!entry.is_object() || entry.size() != 1) {
      throw ConfigError("each detector must be an object with a single 'spd' or 'homodyne' key");
    }
    if (entry.contains("spd")) {
      spds.push_back(parse_spd(entry.at("spd")));
    } else if (entry.contains("homodyne")) {
      homodynes.push_back(parse_homodyne(entry.at("homodyne")));
    } else {
      throw ConfigError("unknown detector kind '" + entry.begin().key() + "'");
    }
  }
  if (!spds.empty() && !homodynes.empty()) {
    throw ConfigError("detectors must all be of the same kind");
  }
  if (!spds.empty()) return spds;
  return homodynes;
}

ProtocolConfig parse_config(Protocol protocol, const json& j) {
  switch (protocol) {
    case Protocol::kBb84SinglePhoton: {
      reject_unknown(j, "config", {"basis_factor", "f_ec"});
      Bb84Config cfg;
      cfg.basis_factor = number_or(j, "basis_factor", "config", 0.5);
      cfg.f_ec = number(j, "f_ec", "config");
      return cfg;
    }
    case Protocol::kDecoyBb84: {
      reject_unknown(j, "config", {"mu", "basis_factor", "f_ec", "drop_pa"});
      DecoyConfig cfg;
      cfg.mu = number(j, "mu", "config");
      cfg.basis_factor = number_or(j, "basis_factor", "config", 0.5);
      cfg.f_ec = number(j, "f_ec", "config");
      if (j.contains("drop_pa")) {
        if (!j.at("drop_pa").is_boolean()) throw ConfigError("config.drop_pa must be a boolean");
        cfg.drop_pa = j.at("drop_pa").get<bool>();
      }
      return cfg;
    }
    case Protocol::kGmcsDr:
    case Protocol::kGmcsRr: {
      reject_unknown(j, "config", {"v", "beta", "eps_pre"});
      return GmcsSource{number(j, "v", "config"), number(j, "beta", "config"),
                        number(j, "eps_pre", "config")};
    }
  }
  throw ConfigError("unhandled protocol");
}

std::string required_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ConfigError("top-level key '" + std::string(key) + "' must be a string");
  }
  return it->get<std::string>();
}

json detector_json(const SpdSpec& d) {
  return {{"spd", {{"rep_rate_hz", d.rep_rate}, {"eta_d", d.eta_d}, {"y0", d.y0},
                   {"e_det", d.e_det}}}};
}

json detector_json(const HomodyneSpec& d) {
  return {{"homodyne", {{"rep_rate_hz", d.rep_rate}, {"g_det", d.g_det},
                        {"eps_det", d.eps_det}}}};
}

json config_json(const Bb84Config& c) {
  return {{"basis_factor", c.basis_factor}, {"f_ec", c.f_ec}};
}

json config_json(const DecoyConfig& c) {
  return {{"mu", c.mu}, {"basis_factor", c.basis_factor}, {"f_ec", c.f_ec},
          {"drop_pa", c.drop_pa}};
}

json config_json(const GmcsSource& c) {
  return {{"v", c.v}, {"beta", c.beta}, {"eps_pre", c.eps_pre}};
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown(root, "scenario", {"protocol", "mode", "link", "detectors", "config"});
  for (const char* key : {"link", "detectors", "config"}) {
    if (!root.contains(key)) throw ConfigError("missing top-level key '" + std::string(key) + "'");
  }
  Scenario s;
  s.protocol = parse_protocol(required_string(root, "protocol"));
  s.mode = parse_mode(required_string(root, "mode"));
  s.link = parse_link(root.at("link"));
  s.detectors = parse_detectors(root.at("detectors"));
  s.config = parse_config(s.protocol, root.at("config"));
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  json root;
  root["protocol"] = std::string(to_string(s.protocol));
  root["mode"] = std::string(to_string(s.mode));
  root["link"] = {{"alpha_db_per_km", s.link.alpha}, {"length_km", s.link.length},
                  {"g_bob", s.link.g_bob}, {"switch_loss_db", s.link.switch_loss}};
  json dets = json::array();
  std::visit([&dets](const auto& list) {
    for (const auto& d : list) dets.push_back(detector_json(d));
  }, s.detectors);
  root["detectors"] = dets;
  root["config"] = std::visit([](const auto& c) { return config_json(c); }, s.config);
  return root.dump(2);
}

}  // namespace dualqkd
