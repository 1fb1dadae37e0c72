#include <cmath>

#include "doctest.h"
#include "dualqkd/core.hpp"
#include "dualqkd/practical.hpp"
#include "test_util.hpp"

using namespace dualqkd;
using dualqkd::testing::uniform;

TEST_CASE("SchedulingParams::k") {
  CHECK(SchedulingParams{4e-4, 1e-9, 100e-9}.k() == 100);
  CHECK(SchedulingParams{0.0, 1e-9, 1e-9}.k() == 1);
  CHECK_THROWS_AS((SchedulingParams{0.1, 1e-9, 0.5e-9}.k()), DomainError);
  CHECK_THROWS_AS((SchedulingParams{1.5, 1e-9, 1e-7}.k()), DomainError);
}

TEST_CASE("choice_probabilities") {
  const auto none = choice_probabilities(0.0, 50);
  CHECK(none.none == 1.0);
  CHECK(none.once == 0.0);
  CHECK(none.multiple == 0.0);

  const auto one_slot = choice_probabilities(0.3, 1);
  CHECK(one_slot.none == doctest::Approx(0.7));
  CHECK(one_slot.once == doctest::Approx(0.3));
  CHECK(std::abs(one_slot.multiple) < 1e-15);

  const auto c = choice_probabilities(4e-4, 100);
  CHECK(c.none == doctest::Approx(0.96078175081727234).epsilon(1e-13));
  CHECK(c.once == doctest::Approx(0.038446648692167761).epsilon(1e-13));
  CHECK(c.multiple == doctest::Approx(0.00077160049055990294).epsilon(1e-9));

  CHECK_THROWS_AS(choice_probabilities(-0.1, 10), DomainError);
  CHECK_THROWS_AS(choice_probabilities(0.1, 0), DomainError);
}

TEST_CASE("choice probabilities sum to one exactly") {
  for (int i = 0; i < 5000; ++i) {
    const double p = uniform(0.0, 1.0) * (i % 2 ? 1.0 : 1e-3);
    const int k = 1 + static_cast<int>(uniform(0.0, 1000.0));
    const auto c = choice_probabilities(p, k);
    CHECK((c.none + c.once) + c.multiple == 1.0);
  }
}

TEST_CASE("PM stays within the second-order bound for small kp") {
  for (int i = 0; i < 5000; ++i) {
    const int k = 2 + static_cast<int>(uniform(0.0, 500.0));
    const double p = uniform(0.0, 0.1) / k;
    const auto c = choice_probabilities(p, k);
    const double approx = k * (k - 1.0) * p * p / 2.0;
    CHECK(c.multiple <= approx * (1.0 + 10.0 * k * p) + 1e-16);
  }
}

TEST_CASE("multi_pulse_qber") {
  CHECK(multi_pulse_qber(0.3, 1) == 0.0);
  CHECK(multi_pulse_qber(4e-4, 100) == doctest::Approx(9.9e-3).epsilon(1e-14));
  CHECK(multi_pulse_qber(4e-4, 100) < 0.01);
  CHECK(multi_pulse_qber(1e-3, 100) == doctest::Approx(2.475e-2).epsilon(1e-14));

  CHECK(multi_pulse_model_valid(4e-4, 100));
  CHECK_FALSE(multi_pulse_model_valid(2e-3, 100));
  CHECK_FALSE(multi_pulse_model_valid(0.09, 12));  // qber 0.2475 but kp > 0.1
}

TEST_CASE("multi_pulse_qber matches the messed-detection ratio to first order") {
  // P_err = 2 mu eta PM and P_sig = mu eta P1; mu eta cancels.
  for (int i = 0; i < 3000; ++i) {
    const int k = 2 + static_cast<int>(uniform(0.0, 300.0));
    const double p = uniform(1e-9, 0.05) / k;
    const auto c = choice_probabilities(p, k);
    const double p_err = 2.0 * c.multiple;
    const double exact = p_err / (4.0 * (p_err + c.once));
    CHECK(std::abs(multi_pulse_qber(p, k) - exact) <= 0.05 * exact);
  }
}

TEST_CASE("max_slow_probability") {
  CHECK(*max_slow_probability(100, 0.01) == doctest::Approx(0.04 / 99.0).epsilon(1e-15));
  CHECK(std::abs(*max_slow_probability(100, 0.01) - 4.04e-4) < 1e-6);
  CHECK(*max_slow_probability(2, 0.01) == doctest::Approx(0.04));
  CHECK(*max_slow_probability(100, 0.0) == 0.0);
  CHECK_FALSE(max_slow_probability(1, 0.01).has_value());
  CHECK_THROWS_AS(max_slow_probability(0, 0.01), DomainError);
  CHECK_THROWS_AS(max_slow_probability(100, 0.3), DomainError);
  // Inverse of multi_pulse_qber.
  CHECK(multi_pulse_qber(*max_slow_probability(37, 0.02), 37) == doctest::Approx(0.02));
}

TEST_CASE("accumulation_time") {
  const double eta = slow_detector_efficiency(21.0, 0.16, 3.0, 0.5);
  CHECK(accumulation_time(4e-4, 1e9, 1.0, eta, 0.0) == 0.0);
  const double t = accumulation_time(4e-4, 1e9, 1.0, eta, 1e6);
  CHECK(t == doctest::Approx(7849.6450984674378).epsilon(1e-12));
  CHECK(accumulation_time(8e-4, 1e9, 1.0, eta, 1e6) == doctest::Approx(t / 2.0));

  for (int i = 0; i < 500; ++i) {
    const double p = uniform(1e-6, 0.5);
    const double r = uniform(1e6, 1e10);
    const double mu = uniform(0.01, 1.0);
    const double e = uniform(1e-6, 0.5);
    const double base = accumulation_time(p, r, mu, e, 1e6);
    CHECK(accumulation_time(p * 1.01, r, mu, e, 1e6) < base);
    CHECK(accumulation_time(p, r * 1.01, mu, e, 1e6) < base);
    CHECK(accumulation_time(p, r, mu * 1.01, e, 1e6) < base);
    CHECK(accumulation_time(p, r, mu, e * 1.01, 1e6) < base);
  }

  CHECK_THROWS_AS(accumulation_time(0.0, 1e9, 1.0, eta, 1e6), DomainError);
  CHECK_THROWS_AS(accumulation_time(1e-4, 0.0, 1.0, eta, 1e6), DomainError);
  CHECK_THROWS_AS(accumulation_time(1e-4, 1e9, 1.0, 0.0, 1e6), DomainError);
}
