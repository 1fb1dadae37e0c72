#include <cmath>

#include "doctest.h"
#include "dualqkd/bb84.hpp"
#include "test_util.hpp"

using namespace dualqkd;
using dualqkd::testing::rel_close;
using dualqkd::testing::uniform;

namespace {

const SpdSpec kUpconversion{1e9, 0.059, 1.3e-5, 0.018};
const SpdSpec kTes{2.5e6, 0.5, 3e-7, 0.018};
const SpdSpec kLowJitter10G{1e10, 0.0027, 3.2e-9, 0.097};
const Bb84Config kCfg{0.5, 1.22};

LinkSpec fiber(double km, double switch_db = 0.0) { return LinkSpec{0.21, km, 0.16, switch_db}; }

}  // namespace

TEST_CASE("bb84_gain") {
  CHECK(bb84_gain(kTes, fiber(0)) == doctest::Approx(0.0800003).epsilon(1e-14));
  CHECK(bb84_gain(kUpconversion, fiber(100)) ==
        doctest::Approx(8.7984585357972174e-5).epsilon(1e-13));
  // Only dark counts survive a very long fiber.
  CHECK(bb84_gain(kUpconversion, fiber(5000)) == doctest::Approx(kUpconversion.y0).epsilon(1e-15));
  CHECK_THROWS_AS(bb84_gain(kTes, fiber(0), 0.0), DomainError);
  CHECK_THROWS_AS(bb84_gain(kTes, fiber(0), 1.5), DomainError);
}

TEST_CASE("bb84_qber") {
  SpdSpec quiet = kUpconversion;
  quiet.y0 = 0.0;
  CHECK(bb84_qber(quiet, fiber(80)) == doctest::Approx(quiet.e_det).epsilon(1e-15));
  CHECK(bb84_qber(kUpconversion, fiber(5000)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bb84_qber(kUpconversion, fiber(100)) ==
        doctest::Approx(0.089217020282658473).epsilon(1e-13));

  SpdSpec dead{1e9, 0.0, 0.0, 0.01};
  CHECK_THROWS_AS(bb84_qber(dead, fiber(10)), DomainError);
}

TEST_CASE("bb84_rate_single") {
  SpdSpec perfect{1e9, 0.5, 0.0, 0.0};
  const double q = bb84_gain(perfect, fiber(30));
  CHECK(bb84_rate_single(perfect, fiber(30), kCfg) == doctest::Approx(0.5 * 1e9 * q));

  CHECK(bb84_rate_single(kTes, fiber(124), kCfg) == doctest::Approx(174.98808234259019).epsilon(1e-12));

  // e_det = 0.097 already violates 1 - 2.22 H2(e) > 0 at zero length.
  for (double km = 0; km <= 250; km += 5) CHECK(bb84_rate_single(kLowJitter10G, fiber(km), kCfg) < 0.0);
}

TEST_CASE("bb84_rate_single ignores the switch") {
  CHECK(bb84_rate_single(kTes, fiber(50, 3.0), kCfg) == bb84_rate_single(kTes, fiber(50), kCfg));
}

TEST_CASE("bb84_rate_dual") {
  CHECK(bb84_rate_dual(kUpconversion, kTes, fiber(124), kCfg) ==
        doctest::Approx(196.35384066355386).epsilon(1e-11));
  CHECK(bb84_rate_dual(kUpconversion, kTes, fiber(0), kCfg) ==
        doctest::Approx(3339814.4003277796).epsilon(1e-12));

  CHECK(bb84_rate_dual(kUpconversion, kTes, fiber(124), kCfg) > bb84_rate_single(kTes, fiber(124), kCfg));
  CHECK(bb84_rate_dual(kUpconversion, kTes, fiber(124), kCfg) >
        bb84_rate_single(kUpconversion, fiber(124), kCfg));

  CHECK(bb84_rate_dual(kLowJitter10G, kTes, fiber(100), kCfg) > 0.0);
  CHECK(bb84_rate_single(kLowJitter10G, fiber(100), kCfg) < 0.0);

  // The switch lowers both arms' signal.
  CHECK(bb84_rate_dual(kUpconversion, kTes, fiber(50, 3.0), kCfg) <
        bb84_rate_dual(kUpconversion, kTes, fiber(50), kCfg));
}

TEST_CASE("qber is non-decreasing in length") {
  for (int trial = 0; trial < 50; ++trial) {
    const SpdSpec spd = dualqkd::testing::random_spd();
    double prev = bb84_qber(spd, fiber(0));
    for (double km = 1; km <= 300; km += 1) {
      const double e = bb84_qber(spd, fiber(km));
      CHECK(e >= prev - 1e-15);
      prev = e;
    }
  }
}

TEST_CASE("dual with identical detectors and no switch equals single") {
  for (int trial = 0; trial < 500; ++trial) {
    const SpdSpec spd = dualqkd::testing::random_spd();
    const LinkSpec link = fiber(uniform(0, 200));
    const double single = bb84_rate_single(spd, link, kCfg);
    const double dual = bb84_rate_dual(spd, spd, link, kCfg);
    CHECK(rel_close(dual, single, 1e-12));
  }
}

TEST_CASE("a quieter slow detector never lowers the rate") {
  for (int trial = 0; trial < 500; ++trial) {
    const SpdSpec fast = dualqkd::testing::random_spd();
    const SpdSpec slow = dualqkd::testing::random_spd();
    const LinkSpec link = fiber(uniform(0, 200));
    const double e1 = bb84_qber(fast, link);
    const double e2 = bb84_qber(slow, link);
    if (!(e2 <= e1 && e1 <= 0.5)) continue;
    CHECK(bb84_rate_dual(fast, slow, link, kCfg) >= bb84_rate_single(fast, link, kCfg));
  }
}

TEST_CASE("rates at zero length are positive below the error threshold") {
  for (int trial = 0; trial < 500; ++trial) {
    SpdSpec spd = dualqkd::testing::random_spd();
    spd.y0 = 0.0;
    if (!(1.0 - (kCfg.f_ec + 1.0) * binary_entropy(spd.e_det) > 0.0)) continue;
    CHECK(bb84_rate_single(spd, fiber(0), kCfg) > 0.0);
    CHECK(bb84_rate_dual(spd, spd, fiber(0), kCfg) > 0.0);
  }
}

TEST_CASE("Bb84Config validation") {
  CHECK_THROWS_AS(bb84_rate_single(kTes, fiber(0), Bb84Config{0.7, 1.22}), DomainError);
  CHECK_THROWS_AS(bb84_rate_single(kTes, fiber(0), Bb84Config{0.5, 0.9}), DomainError);
  CHECK(bb84_rate_single(kTes, fiber(0), Bb84Config{1.0, 1.22}) ==
        doctest::Approx(2.0 * bb84_rate_single(kTes, fiber(0), kCfg)));
}
