#ifndef DUALQKD_GMCS_HPP
#define DUALQKD_GMCS_HPP

#include "dualqkd/core.hpp"

namespace dualqkd {

// Gaussian-modulated coherent-state QKD with homodyne detection, under
// individual attacks and symmetric quadrature noise. All noise terms are
// referred to the channel input and expressed in shot-noise units.

struct GmcsNoiseBudget {
  double g = 1.0;         // overall transmittance g_ch * g_det (* switch)
  double chi_vac = 0.0;   // (1 - g) / g
  double eps = 0.0;       // eps_pre + eps_det / g
  double chi = 0.0;       // chi_vac + eps
};

GmcsNoiseBudget noise_budget(const GmcsSource& source, const HomodyneSpec& det,
                             const LinkSpec& link, bool include_switch);

// (1/2) log2[(v + chi) / (1 + chi)]. Used for both I_AB and I_BA.
double mutual_info_ab(double v, double chi);

// (1/2) log2[(v + 1/chi) / (1 + 1/chi)]; 0 at chi = 0.
double info_ae(double v, double chi);

// (1/2) log2[g^2 (v + chi) (1/v + chi)].
double info_be(double v, double chi, double g);

// Direct reconciliation: rep_rate * (beta * I_AB - I_AE).
double gmcs_dr_rate_single(const GmcsSource& source, const HomodyneSpec& det,
                           const LinkSpec& link);

// Fast detector's noise feeds I_AB, slow detector's noise bounds I_AE. The
// switch loss is folded into both budgets.
double gmcs_dr_rate_dual(const GmcsSource& source, const HomodyneSpec& fast,
                         const HomodyneSpec& slow, const LinkSpec& link);

// Reverse reconciliation: rep_rate * (beta * I_BA - I_BE).
double gmcs_rr_rate_single(const GmcsSource& source, const HomodyneSpec& det,
                           const LinkSpec& link);

// Requires fast.g_det == slow.g_det: I_BE depends on Bob's efficiency, so the
// slow detector only bounds it for the fast one when both share it.
// Throws ConfigError otherwise.
double gmcs_rr_rate_dual(const GmcsSource& source, const HomodyneSpec& fast,
                         const HomodyneSpec& slow, const LinkSpec& link);

}  // namespace dualqkd

#endif  // DUALQKD_GMCS_HPP
