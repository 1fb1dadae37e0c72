#ifndef DUALQKD_SWEEP_HPP
#define DUALQKD_SWEEP_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualqkd/scenario.hpp"

namespace dualqkd {

struct RatePoint {
  double length_km = 0.0;
  double rate = 0.0;      // max(0, raw_rate)
  double raw_rate = 0.0;
};

struct RateCurve {
  std::vector<RatePoint> points;  // strictly increasing length_km
};

// Key rate (bits/s) as a function of fiber length (km).
using RateFunction = std::function<double(double)>;

RateFunction rate_function(const Scenario& scenario);

// Pointwise maximum of the scenarios' raw rates.
RateFunction envelope(std::span<const Scenario> scenarios);

// Inclusive grid l_min, l_min + step, ... up to l_max. Throws DomainError
// unless 0 <= l_min < l_max and step > 0.
std::vector<double> distance_grid(double l_min, double l_max, double step);

RateCurve sweep(const RateFunction& rate, double l_min, double l_max, double step);
RateCurve sweep(const Scenario& scenario, double l_min, double l_max, double step);

// Root search: a coarse scan at step_km, then bisection on the bracketing
// cell until it is narrower than tolerance_km.
struct SearchOptions {
  double step_km = 1.0;
  double tolerance_km = 0.01;
};

// Largest L in [0, l_max] with a positive raw rate. std::nullopt when the rate
// is not positive at L = 0.
std::optional<double> max_secure_distance(const RateFunction& rate, double l_max,
                                          SearchOptions opts = {});
std::optional<double> max_secure_distance(const Scenario& scenario, double l_max,
                                          SearchOptions opts = {});

struct Crossing {
  double km = 0.0;
  // Set when the difference only touches zero at a grid point and turns
  // positive again; km is then the midpoint of the grid cell ending there.
  bool touching = false;
};

// Smallest L where rate_a - rate_b goes from positive to non-positive.
std::optional<Crossing> crossover_distance(const RateFunction& rate_a,
                                           const RateFunction& rate_b, double l_max,
                                           SearchOptions opts = {});
// Both scenarios must share the fiber attenuation (ConfigError otherwise).
std::optional<Crossing> crossover_distance(const Scenario& a, const Scenario& b, double l_max,
                                           SearchOptions opts = {});

// CSV with header length_km,rate_dual_bps,rate_fast_bps,rate_slow_bps.
// Columns hold raw rates; a curve that is absent leaves its column empty.
struct RateTable {
  std::optional<RateCurve> dual;
  std::optional<RateCurve> fast;
  std::optional<RateCurve> slow;
};

inline constexpr std::string_view kCsvHeader = "length_km,rate_dual_bps,rate_fast_bps,rate_slow_bps";

// Distances with 2 decimals, rates in scientific notation with 6 significant
// digits. Throws DomainError if present curves disagree on the grid.
std::string format_rate_csv(const RateTable& table);
// Inverse of format_rate_csv; throws ConfigError on malformed input.
RateTable parse_rate_csv(std::string_view text);

// Places the curve into the column matching the scenario's mode.
RateTable table_for(const Scenario& scenario, RateCurve curve);

}  // namespace dualqkd

#endif  // DUALQKD_SWEEP_HPP
