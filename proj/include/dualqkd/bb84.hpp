#ifndef DUALQKD_BB84_HPP
#define DUALQKD_BB84_HPP

#include "dualqkd/core.hpp"

namespace dualqkd {

// BB84 with an ideal single-photon source.
//
// The "dual" receiver routes a vanishing fraction of pulses to a slow, quiet
// detector whose QBER bounds Eve's information (privacy amplification term),
// while the fast detector supplies the raw key and the error-correction cost.
// All rates are returned unclamped; a negative value means no secure key.

struct Bb84Config {
  double basis_factor = 0.5;  // 0.5 for standard BB84, 1 for efficient BB84
  double f_ec = 1.22;         // error-correction inefficiency, >= 1

  void validate() const;
};

// Q1 = y0 + g_ch * g_bob * extra_loss * eta_d.
double bb84_gain(const SpdSpec& spd, const LinkSpec& link, double extra_loss = 1.0);

// e1 = (e0*y0 + e_det * g_ch * g_bob * extra_loss * eta_d) / Q1.
double bb84_qber(const SpdSpec& spd, const LinkSpec& link, double extra_loss = 1.0);

// Conventional receiver: no switch, so link.switch_loss is ignored.
double bb84_rate_single(const SpdSpec& spd, const LinkSpec& link, const Bb84Config& cfg);

// Dual receiver. The switch loss in link.switch_loss attenuates both arms.
double bb84_rate_dual(const SpdSpec& fast, const SpdSpec& slow, const LinkSpec& link,
                      const Bb84Config& cfg);

}  // namespace dualqkd

#endif  // DUALQKD_BB84_HPP
