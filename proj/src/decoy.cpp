#include "dualqkd/decoy.hpp"

#include <cmath>

#include "check.hpp"

namespace dualqkd {
namespace {

double overall_efficiency(double mu, const SpdSpec& spd, const LinkSpec& link,
                          double extra_loss) {
  internal::require(mu > 0.0 && std::isfinite(mu), "mu must be > 0");
  spd.validate();
  link.validate();
  internal::require(extra_loss > 0.0 && extra_loss <= 1.0, "extra_loss must lie in (0,1]");
  return link.channel_transmittance() * link.g_bob * extra_loss * spd.eta_d;
}

struct SideTerms {
  double q_mu;
  double e_mu;
  double q_1;
  double e_1;
};

SideTerms side_terms(double mu, const SpdSpec& spd, const LinkSpec& link, double extra_loss) {
  return {decoy_signal_gain(mu, spd, link, extra_loss),
          decoy_signal_qber(mu, spd, link, extra_loss),
          decoy_single_photon_gain(mu, spd, link, extra_loss),
          decoy_single_photon_qber(mu, spd, link, extra_loss)};
}

double key_rate(const DecoyConfig& cfg, double rep_rate, const SideTerms& t, double e_pa) {
  double bracket = t.q_1 - cfg.f_ec * t.q_mu * binary_entropy(t.e_mu);
  if (!cfg.drop_pa) bracket -= t.q_1 * binary_entropy(e_pa);
  return cfg.basis_factor * rep_rate * bracket;
}

}  // namespace

void DecoyConfig::validate() const {
  internal::require(mu > 0.0 && std::isfinite(mu), "mu must be > 0");
  internal::require(basis_factor == 0.5 || basis_factor == 1.0, "basis_factor must be 0.5 or 1");
  internal::require(f_ec >= 1.0, "f_ec must be >= 1");
}

double decoy_signal_gain(double mu, const SpdSpec& spd, const LinkSpec& link,
                         double extra_loss) {
  const double eta = overall_efficiency(mu, spd, link, extra_loss);
  return spd.y0 - std::expm1(-eta * mu);
}

double decoy_signal_qber(double mu, const SpdSpec& spd, const LinkSpec& link,
                         double extra_loss) {
  const double eta = overall_efficiency(mu, spd, link, extra_loss);
  const double clicks = -std::expm1(-eta * mu);
  const double gain = spd.y0 + clicks;
  if (gain == 0.0) throw DomainError("decoy_signal_qber: zero signal gain");
  return (kBackgroundErrorRate * spd.y0 + spd.e_det * clicks) / gain;
}

double decoy_single_photon_gain(double mu, const SpdSpec& spd, const LinkSpec& link,
                                double extra_loss) {
  const double eta = overall_efficiency(mu, spd, link, extra_loss);
  return (spd.y0 + eta) * mu * std::exp(-mu);
}

double decoy_single_photon_qber(double mu, const SpdSpec& spd, const LinkSpec& link,
                                double extra_loss) {
  const double eta = overall_efficiency(mu, spd, link, extra_loss);
  // The Poisson weight mu*exp(-mu) cancels between numerator and Q_1.
  const double yield = spd.y0 + eta;
  if (yield == 0.0) throw DomainError("decoy_single_photon_qber: zero single-photon gain");
  return (kBackgroundErrorRate * spd.y0 + spd.e_det * eta) / yield;
}

double decoy_rate_single(const SpdSpec& spd, const LinkSpec& link, const DecoyConfig& cfg) {
  cfg.validate();
  const SideTerms t = side_terms(cfg.mu, spd, link, 1.0);
  return key_rate(cfg, spd.rep_rate, t, t.e_1);
}

double decoy_rate_dual(const SpdSpec& fast, const SpdSpec& slow, const LinkSpec& link,
                       const DecoyConfig& cfg) {
  cfg.validate();
  const double sw = link.switch_transmittance();
  const SideTerms t = side_terms(cfg.mu, fast, link, sw);
  return key_rate(cfg, fast.rep_rate, t, decoy_single_photon_qber(cfg.mu, slow, link, sw));
}

double optimal_mu(double e_det, double f_ec) {
  internal::require(e_det > 0.0 && e_det < 0.5, "optimal_mu: e_det must lie in (0,0.5)");
  internal::require(f_ec >= 1.0, "optimal_mu: f_ec must be >= 1");
  const double h = binary_entropy(e_det);
  const double rhs = f_ec * h / (1.0 - h);
  if (!(rhs > 0.0 && rhs < 1.0)) {
    throw DomainError("optimal_mu: no root, f*H2(e_det)/(1-H2(e_det)) must lie in (0,1)");
  }
  // (1 - mu) exp(-mu) falls strictly from 1 to 0 on [0, 1].
  auto excess = [rhs](double mu) { return (1.0 - mu) * std::exp(-mu) - rhs; };
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dualqkd
