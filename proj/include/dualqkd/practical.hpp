#ifndef DUALQKD_PRACTICAL_HPP
#define DUALQKD_PRACTICAL_HPP

#include <optional>

namespace dualqkd {

// Finite routing probability for the slow detector. Within one response
// window of the slow detector (t_det) Alice sends k = t_det / t_sig pulses;
// each is routed to the slow detector with probability p.
struct SchedulingParams {
  double p = 0.0;
  double t_sig = 1e-9;  // s
  double t_det = 1e-7;  // s

  // Pulses per response window, rounded to the nearest integer. Throws
  // DomainError if the ratio is below 1 or p is outside [0, 1].
  int k() const;
};

struct ChoiceProbabilities {
  double none;      // P0: slow detector not chosen in the window
  double once;      // P1: chosen exactly once
  double multiple;  // PM: chosen two or more times
};

// Exact binomial probabilities; multiple = 1 - (none + once).
ChoiceProbabilities choice_probabilities(double p, int k);

// Extra QBER from ambiguous multi-pulse detections, (k - 1) p / 4.
double multi_pulse_qber(double p, int k);

// False when kp > 0.1 or the estimate reaches 1/4, where the first-order
// approximation behind multi_pulse_qber stops being meaningful.
bool multi_pulse_model_valid(double p, int k);

// Largest p keeping multi_pulse_qber below qber_budget: 4 budget / (k - 1).
// std::nullopt for k == 1 (no constraint).
std::optional<double> max_slow_probability(int k, double qber_budget);

// Overall efficiency seen by the slow detector: channel, Bob's optics,
// switch insertion loss and detector efficiency.
double slow_detector_efficiency(double channel_loss_db, double g_bob, double switch_loss_db,
                                double eta_d);

// Seconds for the slow detector to accumulate target_counts detections.
double accumulation_time(double p, double rep_rate, double mu, double overall_eta,
                         double target_counts);

}  // namespace dualqkd

#endif  // DUALQKD_PRACTICAL_HPP
