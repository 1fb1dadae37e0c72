#include <cmath>

#include "doctest.h"
#include "dualqkd/decoy.hpp"
#include "test_util.hpp"

using namespace dualqkd;
using dualqkd::testing::rel_close;
using dualqkd::testing::uniform;

namespace {

const SpdSpec kUpconversion{1e9, 0.059, 1.3e-5, 0.018};
const SpdSpec kTes{2.5e6, 0.5, 3e-7, 0.018};
const DecoyConfig kCfg{0.73, 0.5, 1.22, false};

LinkSpec fiber(double km, double switch_db = 0.0) { return LinkSpec{0.21, km, 0.16, switch_db}; }

// Newton iteration on (1 - mu) e^-mu - rhs in long double, independent of the
// library's bisection.
long double newton_mu(long double e_det, long double f) {
  const long double h = -e_det * std::log2(e_det) - (1 - e_det) * std::log2(1 - e_det);
  const long double rhs = f * h / (1 - h);
  long double mu = 0.5L;
  for (int i = 0; i < 60; ++i) {
    const long double g = (1 - mu) * std::exp(-mu) - rhs;
    const long double dg = (mu - 2) * std::exp(-mu);
    mu -= g / dg;
  }
  return mu;
}

}  // namespace

TEST_CASE("decoy signal gain and QBER") {
  CHECK(decoy_signal_gain(1e-12, kUpconversion, fiber(50)) ==
        doctest::Approx(kUpconversion.y0).epsilon(1e-9));
  const SpdSpec ideal{1e9, 1.0, 0.0, 0.0};
  const LinkSpec lossless{0.0, 0.0, 1.0, 0.0};
  CHECK(decoy_signal_gain(50.0, ideal, lossless) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(decoy_signal_gain(0.73, kUpconversion, fiber(50)) ==
        doctest::Approx(0.0006269902772660421).epsilon(1e-12));
  CHECK(decoy_signal_qber(0.73, kUpconversion, fiber(50)) ==
        doctest::Approx(0.02799377538567673).epsilon(1e-11));

  SpdSpec quiet = kUpconversion;
  quiet.y0 = 0.0;
  CHECK(decoy_signal_qber(0.73, quiet, fiber(50)) == doctest::Approx(quiet.e_det).epsilon(1e-12));
  CHECK(decoy_signal_qber(0.73, kUpconversion, fiber(3000)) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(decoy_signal_gain(0.0, kUpconversion, fiber(0)), DomainError);
  CHECK_THROWS_AS(decoy_signal_qber(0.5, SpdSpec{1e9, 0.0, 0.0, 0.0}, fiber(0)), DomainError);
}

TEST_CASE("decoy single-photon gain and QBER") {
  CHECK(decoy_single_photon_gain(1e-15, kUpconversion, fiber(50)) < 1e-17);
  const SpdSpec ideal{1e9, 1.0, 0.0, 0.0};
  const LinkSpec lossless{0.0, 0.0, 1.0, 0.0};
  CHECK(decoy_single_photon_gain(1.0, ideal, lossless) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  CHECK(decoy_single_photon_gain(0.73, kUpconversion, fiber(50)) ==
        doctest::Approx(0.00030055162396113997).epsilon(1e-12));
  CHECK(decoy_single_photon_qber(0.73, kUpconversion, fiber(50)) ==
        doctest::Approx(0.025334308945792998).epsilon(1e-12));

  SpdSpec quiet = kUpconversion;
  quiet.y0 = 0.0;
  CHECK(decoy_single_photon_qber(0.73, quiet, fiber(50)) == doctest::Approx(quiet.e_det).epsilon(1e-12));
  CHECK(decoy_single_photon_qber(0.73, kUpconversion, fiber(3000)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(decoy_single_photon_qber(0.5, SpdSpec{1e9, 0.0, 0.0, 0.0}, fiber(0)), DomainError);
}

TEST_CASE("single-photon QBER does not depend on mu") {
  for (int trial = 0; trial < 200; ++trial) {
    const SpdSpec spd = dualqkd::testing::random_spd();
    const LinkSpec link = fiber(uniform(0, 200));
    const double e_ref = decoy_single_photon_qber(0.1, spd, link);
    for (double mu : {0.5, 0.9}) {
      CHECK(std::abs(decoy_single_photon_qber(mu, spd, link) - e_ref) <= 1e-12);
    }
  }
}

TEST_CASE("decoy_rate_single") {
  CHECK(decoy_rate_single(kUpconversion, fiber(50), kCfg) ==
        doctest::Approx(54204.244674568741).epsilon(1e-11));

  const SpdSpec perfect{1e9, 0.5, 0.0, 0.0};
  CHECK(decoy_rate_single(perfect, fiber(20), kCfg) ==
        doctest::Approx(0.5 * 1e9 * decoy_single_photon_gain(0.73, perfect, fiber(20))));

  // The slow detector alone outlives the dual receiver.
  CHECK(decoy_rate_single(kTes, fiber(90), kCfg) > 0.0);
  CHECK(decoy_rate_single(kTes, fiber(90), kCfg) > decoy_rate_dual(kUpconversion, kTes, fiber(90), kCfg));
}

TEST_CASE("dropping privacy amplification never lowers the rate") {
  DecoyConfig no_pa = kCfg;
  no_pa.drop_pa = true;
  for (int trial = 0; trial < 300; ++trial) {
    const SpdSpec spd = dualqkd::testing::random_spd();
    const LinkSpec link = fiber(uniform(0, 200));
    CHECK(decoy_rate_single(spd, link, kCfg) <= decoy_rate_single(spd, link, no_pa));
  }
}

TEST_CASE("single-photon gain does not exceed the signal gain on the preset grid") {
  for (const SpdSpec& spd : {kUpconversion, kTes}) {
    for (double mu : {0.1, 0.5, 0.73, 1.0}) {
      for (double km = 0; km <= 250; km += 1) {
        const double eta = channel_transmittance(0.21, km) * 0.16 * spd.eta_d;
        const double lhs = spd.y0 * (1 - mu * std::exp(-mu)) + (1 - std::exp(-eta * mu));
        if (lhs < eta * mu * std::exp(-mu)) continue;
        CHECK(decoy_single_photon_gain(mu, spd, fiber(km)) <= decoy_signal_gain(mu, spd, fiber(km)));
      }
    }
  }
}

TEST_CASE("decoy_rate_dual") {
  for (int trial = 0; trial < 300; ++trial) {
    const SpdSpec spd = dualqkd::testing::random_spd();
    const LinkSpec link = fiber(uniform(0, 200));
    CHECK(rel_close(decoy_rate_dual(spd, spd, link, kCfg), decoy_rate_single(spd, link, kCfg), 1e-12));
  }
  CHECK(decoy_rate_dual(kUpconversion, kTes, fiber(50), kCfg) > decoy_rate_single(kUpconversion, fiber(50), kCfg));
  CHECK(decoy_rate_dual(kUpconversion, kTes, fiber(50), kCfg) > decoy_rate_single(kTes, fiber(50), kCfg));
}

TEST_CASE("optimal_mu") {
  const double mu = optimal_mu(0.018, 1.22);
  CHECK(mu == doctest::Approx(0.65045752019395773).epsilon(1e-12));
  CHECK(mu == doctest::Approx(static_cast<double>(newton_mu(0.018L, 1.22L))).epsilon(1e-12));
  const double rhs = 1.22 * binary_entropy(0.018) / (1 - binary_entropy(0.018));
  CHECK(std::abs((1 - mu) * std::exp(-mu) - rhs) < 1e-10);

  CHECK(optimal_mu(0.018, 1.0) == doctest::Approx(0.69918355190138923).epsilon(1e-12));
  CHECK(optimal_mu(1e-9, 1.0) > 0.99);

  for (int trial = 0; trial < 200; ++trial) {
    const double e = uniform(1e-4, 0.05);
    const double f = uniform(1.0, 1.5);
    const double h = binary_entropy(e);
    const double r = f * h / (1 - h);
    if (r >= 1.0) continue;
    const double m = optimal_mu(e, f);
    CHECK(std::abs((1 - m) * std::exp(-m) - r) < 1e-10);
  }

  CHECK_THROWS_AS(optimal_mu(0.2, 1.22), DomainError);  // right-hand side >= 1
  CHECK_THROWS_AS(optimal_mu(0.0, 1.22), DomainError);
  CHECK_THROWS_AS(optimal_mu(0.018, 0.5), DomainError);
}
