#include "dualqkd/bb84.hpp"

#include "check.hpp"

namespace dualqkd {
namespace {

double detected_signal(const SpdSpec& spd, const LinkSpec& link, double extra_loss) {
  spd.validate();
  link.validate();
  internal::require(extra_loss > 0.0 && extra_loss <= 1.0, "extra_loss must lie in (0,1]");
  return link.channel_transmittance() * link.g_bob * extra_loss * spd.eta_d;
}

// R = basis * rate * Q * [1 - f*H2(e_ec) - H2(e_pa)]
double key_rate(const Bb84Config& cfg, double rep_rate, double gain, double e_ec, double e_pa) {
  return cfg.basis_factor * rep_rate * gain *
         (1.0 - cfg.f_ec * binary_entropy(e_ec) - binary_entropy(e_pa));
}

}  // namespace

void Bb84Config::validate() const {
  internal::require(basis_factor == 0.5 || basis_factor == 1.0, "basis_factor must be 0.5 or 1");
  internal::require(f_ec >= 1.0, "f_ec must be >= 1");
}

double bb84_gain(const SpdSpec& spd, const LinkSpec& link, double extra_loss) {
  return spd.y0 + detected_signal(spd, link, extra_loss);
}

double bb84_qber(const SpdSpec& spd, const LinkSpec& link, double extra_loss) {
  const double signal = detected_signal(spd, link, extra_loss);
  const double gain = spd.y0 + signal;
  if (gain == 0.0) throw DomainError("bb84_qber: zero gain");
  return (kBackgroundErrorRate * spd.y0 + spd.e_det * signal) / gain;
}

double bb84_rate_single(const SpdSpec& spd, const LinkSpec& link, const Bb84Config& cfg) {
  cfg.validate();
  const double e = bb84_qber(spd, link);
  return key_rate(cfg, spd.rep_rate, bb84_gain(spd, link), e, e);
}

double bb84_rate_dual(const SpdSpec& fast, const SpdSpec& slow, const LinkSpec& link,
                      const Bb84Config& cfg) {
  cfg.validate();
  const double sw = link.switch_transmittance();
  return key_rate(cfg, fast.rep_rate, bb84_gain(fast, link, sw), bb84_qber(fast, link, sw),
                  bb84_qber(slow, link, sw));
}

}  // namespace dualqkd
