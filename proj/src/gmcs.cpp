#include "dualqkd/gmcs.hpp"

#include <cmath>

#include "check.hpp"

namespace dualqkd {

GmcsNoiseBudget noise_budget(const GmcsSource& source, const HomodyneSpec& det,
                             const LinkSpec& link, bool include_switch) {
  source.validate();
  det.validate();
  link.validate();
  GmcsNoiseBudget b;
  b.g = link.channel_transmittance() * det.g_det *
        (include_switch ? link.switch_transmittance() : 1.0);
  if (!(b.g > 0.0)) throw DomainError("noise_budget: overall transmittance underflowed to 0");
  b.chi_vac = (1.0 - b.g) / b.g;
  b.eps = source.eps_pre + det.eps_det / b.g;
  b.chi = b.chi_vac + b.eps;
  return b;
}

double mutual_info_ab(double v, double chi) {
  internal::require(v >= 1.0, "mutual_info_ab: v must be >= 1");
  internal::require(chi >= 0.0, "mutual_info_ab: chi must be >= 0");
  return 0.5 * std::log2((v + chi) / (1.0 + chi));
}

double info_ae(double v, double chi) {
  internal::require(v >= 1.0, "info_ae: v must be >= 1");
  internal::require(chi >= 0.0, "info_ae: chi must be >= 0");
  if (chi == 0.0) return 0.0;
  const double inv = 1.0 / chi;
  if (std::isinf(inv)) return 0.0;
  return 0.5 * std::log2((v + inv) / (1.0 + inv));
}

double info_be(double v, double chi, double g) {
  internal::require(v >= 1.0, "info_be: v must be >= 1");
  internal::require(chi >= 0.0, "info_be: chi must be >= 0");
  internal::require(g > 0.0 && g <= 1.0, "info_be: g must lie in (0,1]");
  const double arg = g * g * (v + chi) * (1.0 / v + chi);
  if (!(arg > 0.0)) throw DomainError("info_be: non-positive log argument");
  return 0.5 * std::log2(arg);
}

double gmcs_dr_rate_single(const GmcsSource& source, const HomodyneSpec& det,
                           const LinkSpec& link) {
  const GmcsNoiseBudget b = noise_budget(source, det, link, false);
  return det.rep_rate * (source.beta * mutual_info_ab(source.v, b.chi) - info_ae(source.v, b.chi));
}

double gmcs_dr_rate_dual(const GmcsSource& source, const HomodyneSpec& fast,
                         const HomodyneSpec& slow, const LinkSpec& link) {
  const GmcsNoiseBudget key = noise_budget(source, fast, link, true);
  const GmcsNoiseBudget bound = noise_budget(source, slow, link, true);
  return fast.rep_rate *
         (source.beta * mutual_info_ab(source.v, key.chi) - info_ae(source.v, bound.chi));
}

double gmcs_rr_rate_single(const GmcsSource& source, const HomodyneSpec& det,
                           const LinkSpec& link) {
  const GmcsNoiseBudget b = noise_budget(source, det, link, false);
  return det.rep_rate *
         (source.beta * mutual_info_ab(source.v, b.chi) - info_be(source.v, b.chi, b.g));
}

double gmcs_rr_rate_dual(const GmcsSource& source, const HomodyneSpec& fast,
                         const HomodyneSpec& slow, const LinkSpec& link) {
  if (fast.g_det != slow.g_det) {
    throw ConfigError("gmcs_rr_rate_dual: both homodyne detectors must have the same g_det");
  }
  const GmcsNoiseBudget key = noise_budget(source, fast, link, true);
  const GmcsNoiseBudget bound = noise_budget(source, slow, link, true);
  return fast.rep_rate * (source.beta * mutual_info_ab(source.v, key.chi) -
                          info_be(source.v, bound.chi, bound.g));
}

}  // namespace dualqkd
