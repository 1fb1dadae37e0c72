#ifndef DUALQKD_CORE_HPP
#define DUALQKD_CORE_HPP

#include <stdexcept>
#include <string>

namespace dualqkd {

// Raised for arguments outside a formula's domain (exit code 3 in the CLI).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised for malformed or inconsistent scenario configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error rate of background (dark) counts.
inline constexpr double kBackgroundErrorRate = 0.5;

// Single-photon detector.
struct SpdSpec {
  double rep_rate = 0.0;  // Hz
  double eta_d = 0.0;     // detection efficiency
  double y0 = 0.0;        // dark-count probability per gate
  double e_det = 0.0;     // misalignment / cross-talk error probability

  void validate() const;
};

// Homodyne detector. eps_det is in shot-noise units.
struct HomodyneSpec {
  double rep_rate = 0.0;
  double g_det = 1.0;
  double eps_det = 0.0;

  void validate() const;
};

struct LinkSpec {
  double alpha = 0.21;        // dB/km
  double length = 0.0;        // km
  double g_bob = 1.0;         // receiver optical transmittance
  double switch_loss = 0.0;   // dB, only applied to dual-detector receivers

  void validate() const;
  // Fiber transmittance 10^(-alpha*length/10).
  double channel_transmittance() const;
  // Switch insertion loss as a transmittance multiplier.
  double switch_transmittance() const;
  LinkSpec at_length(double km) const;
};

// Gaussian-modulated coherent-state source. v = V_A + 1 in shot-noise units.
struct GmcsSource {
  double v = 1.0;
  double beta = 1.0;
  double eps_pre = 0.0;

  void validate() const;
};

// Binary Shannon entropy in bits, with 0*log(0) = 0.
double binary_entropy(double x);

double channel_transmittance(double alpha_db_per_km, double length_km);

double db_to_transmittance(double loss_db);

}  // namespace dualqkd

#endif  // DUALQKD_CORE_HPP
