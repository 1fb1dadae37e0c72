#include "dualqkd/core.hpp"

#include <cmath>

#include "check.hpp"

namespace dualqkd {

void SpdSpec::validate() const {
  internal::require(rep_rate > 0.0, "SPD rep_rate must be > 0");
  internal::require(eta_d >= 0.0 && eta_d <= 1.0, "SPD eta_d must lie in [0,1]");
  internal::require(y0 >= 0.0 && y0 < 1.0, "SPD y0 must lie in [0,1)");
  internal::require(e_det >= 0.0 && e_det <= 0.5, "SPD e_det must lie in [0,0.5]");
}

void HomodyneSpec::validate() const {
  internal::require(rep_rate > 0.0, "homodyne rep_rate must be > 0");
  internal::require(g_det > 0.0 && g_det <= 1.0, "homodyne g_det must lie in (0,1]");
  internal::require(eps_det >= 0.0, "homodyne eps_det must be >= 0");
}

void LinkSpec::validate() const {
  internal::require(alpha >= 0.0, "link alpha must be >= 0");
  internal::require(length >= 0.0, "link length must be >= 0");
  internal::require(g_bob > 0.0 && g_bob <= 1.0, "link g_bob must lie in (0,1]");
  internal::require(switch_loss >= 0.0, "link switch_loss must be >= 0");
}

double LinkSpec::channel_transmittance() const {
  return dualqkd::channel_transmittance(alpha, length);
}

double LinkSpec::switch_transmittance() const {
  return db_to_transmittance(switch_loss);
}

LinkSpec LinkSpec::at_length(double km) const {
  LinkSpec out = *this;
  out.length = km;
  return out;
}

void GmcsSource::validate() const {
  internal::require(v >= 1.0, "GMCS v must be >= 1");
  internal::require(beta > 0.0 && beta <= 1.0, "GMCS beta must lie in (0,1]");
  internal::require(eps_pre >= 0.0, "GMCS eps_pre must be >= 0");
}

double binary_entropy(double x) {
  internal::require(x >= 0.0 && x <= 1.0, "binary_entropy argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double channel_transmittance(double alpha_db_per_km, double length_km) {
  internal::require(alpha_db_per_km >= 0.0, "attenuation must be >= 0");
  internal::require(length_km >= 0.0, "fiber length must be >= 0");
  return std::pow(10.0, -alpha_db_per_km * length_km / 10.0);
}

double db_to_transmittance(double loss_db) {
  internal::require(loss_db >= 0.0, "loss in dB must be >= 0");
  return std::pow(10.0, -loss_db / 10.0);
}

}  // namespace dualqkd
