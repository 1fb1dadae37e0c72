#include "dualqkd/practical.hpp"

#include <cmath>

#include "check.hpp"
#include "dualqkd/core.hpp"

namespace dualqkd {
namespace {

void check_window(double p, int k) {
  internal::require(p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
  internal::require(k >= 1, "k must be a positive integer");
}

}  // namespace

int SchedulingParams::k() const {
  internal::require(p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
  internal::require(t_sig > 0.0 && t_det > 0.0, "t_sig and t_det must be > 0");
  const double ratio = t_det / t_sig;
  internal::require(ratio >= 1.0 - 1e-9, "t_det must be at least t_sig");
  internal::require(ratio < 2147483647.0, "t_det / t_sig too large");
  return static_cast<int>(std::lround(ratio));
}

ChoiceProbabilities choice_probabilities(double p, int k) {
  check_window(p, k);
  ChoiceProbabilities out{};
  // log1p keeps (1-p)^k accurate for tiny p, where PM is a small difference
  const double l = p < 1.0 ? std::log1p(-p) : -INFINITY;
  out.none = std::exp(k * l);
  out.once = k == 1 ? p : k * p * std::exp((k - 1) * l);
  out.multiple = 1.0 - (out.none + out.once);
  return out;
}

double multi_pulse_qber(double p, int k) {
  check_window(p, k);
  return (k - 1) * p / 4.0;
}

bool multi_pulse_model_valid(double p, int k) {
  check_window(p, k);
  return k * p <= 0.1 && multi_pulse_qber(p, k) < 0.25;
}

std::optional<double> max_slow_probability(int k, double qber_budget) {
  internal::require(k >= 1, "k must be a positive integer");
  internal::require(qber_budget >= 0.0 && qber_budget < 0.25, "qber_budget must lie in [0,0.25)");
  if (k == 1) return std::nullopt;
  return 4.0 * qber_budget / (k - 1);
}

double slow_detector_efficiency(double channel_loss_db, double g_bob, double switch_loss_db,
                                double eta_d) {
  internal::require(g_bob > 0.0 && g_bob <= 1.0, "g_bob must lie in (0,1]");
  internal::require(eta_d > 0.0 && eta_d <= 1.0, "eta_d must lie in (0,1]");
  return db_to_transmittance(channel_loss_db) * g_bob * db_to_transmittance(switch_loss_db) *
         eta_d;
}

double accumulation_time(double p, double rep_rate, double mu, double overall_eta,
                         double target_counts) {
  internal::require(target_counts >= 0.0, "target_counts must be >= 0");
  internal::require(p > 0.0 && p <= 1.0, "p must lie in (0,1]");
  internal::require(rep_rate > 0.0, "rep_rate must be > 0");
  internal::require(mu > 0.0, "mu must be > 0");
  internal::require(overall_eta > 0.0 && overall_eta <= 1.0, "overall_eta must lie in (0,1]");
  return target_counts / (p * rep_rate * mu * overall_eta);
}

}  // namespace dualqkd
