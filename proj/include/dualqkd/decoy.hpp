#ifndef DUALQKD_DECOY_HPP
#define DUALQKD_DECOY_HPP

#include "dualqkd/core.hpp"

namespace dualqkd {

// Asymptotic (ideal) decoy-state BB84 with a weak coherent source.
//
// eta below is the overall efficiency g_ch * g_bob * extra_loss * eta_d.
// Signal gain and QBER (Q_mu, E_mu) are measured quantities; the single-photon
// gain and QBER (Q_1, e_1) are the infinite-decoy estimates.

struct DecoyConfig {
  double mu = 0.73;
  double basis_factor = 0.5;
  double f_ec = 1.22;
  // Omit the privacy-amplification term. Diagnostic only: shows the
  // error-correction cost alone.
  bool drop_pa = false;

  void validate() const;
};

// Q_mu = y0 + 1 - exp(-eta*mu)
double decoy_signal_gain(double mu, const SpdSpec& spd, const LinkSpec& link,
                         double extra_loss = 1.0);
// E_mu = [e0*y0 + e_det*(1 - exp(-eta*mu))] / Q_mu
double decoy_signal_qber(double mu, const SpdSpec& spd, const LinkSpec& link,
                         double extra_loss = 1.0);
// Q_1 = (y0 + eta) * mu * exp(-mu)
double decoy_single_photon_gain(double mu, const SpdSpec& spd, const LinkSpec& link,
                                double extra_loss = 1.0);
// e_1 = (e0*y0 + e_det*eta) / (y0 + eta); independent of mu.
double decoy_single_photon_qber(double mu, const SpdSpec& spd, const LinkSpec& link,
                                double extra_loss = 1.0);

double decoy_rate_single(const SpdSpec& spd, const LinkSpec& link, const DecoyConfig& cfg);

// Gains and the error-correction term come from the fast detector; only the
// privacy-amplification argument e_1 is taken from the slow detector.
double decoy_rate_dual(const SpdSpec& fast, const SpdSpec& slow, const LinkSpec& link,
                       const DecoyConfig& cfg);

// Root of (1 - mu) exp(-mu) = f_ec * H2(e_det) / (1 - H2(e_det)) on (0, 1).
// Throws DomainError when the right-hand side is outside (0, 1).
double optimal_mu(double e_det, double f_ec);

}  // namespace dualqkd

#endif  // DUALQKD_DECOY_HPP
