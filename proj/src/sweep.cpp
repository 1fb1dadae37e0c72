#include "dualqkd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "check.hpp"

namespace dualqkd {
namespace {

// Grid used by the root searches: the regular grid plus l_max itself.
std::vector<double> search_grid(double l_max, const SearchOptions& opts) {
  internal::require(opts.tolerance_km > 0.0, "search tolerance must be > 0");
  std::vector<double> grid = distance_grid(0.0, l_max, opts.step_km);
  if (grid.back() < l_max) grid.push_back(l_max);
  return grid;
}

template <class Pred>
double bisect(const Pred& positive, double lo, double hi, double tolerance) {
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (positive(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string format_number(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(std::string_view field, std::size_t line_no) {
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError("CSV line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

RateFunction rate_function(const Scenario& scenario) {
  scenario.validate();
  return [scenario](double km) { return evaluate(scenario, km); };
}

RateFunction envelope(std::span<const Scenario> scenarios) {
  if (scenarios.empty()) throw ConfigError("envelope of an empty scenario list");
  std::vector<Scenario> copy(scenarios.begin(), scenarios.end());
  for (const auto& s : copy) s.validate();
  return [copy = std::move(copy)](double km) {
    double best = evaluate(copy.front(), km);
    for (std::size_t i = 1; i < copy.size(); ++i) best = std::max(best, evaluate(copy[i], km));
    return best;
  };
}

std::vector<double> distance_grid(double l_min, double l_max, double step) {
  internal::require(std::isfinite(l_min) && std::isfinite(l_max), "grid bounds must be finite");
  internal::require(l_min >= 0.0, "grid l_min must be >= 0");
  internal::require(l_min < l_max, "grid needs l_min < l_max");
  internal::require(step > 0.0 && std::isfinite(step), "grid step must be > 0");
  // Multiplying instead of accumulating keeps grid points free of drift.
  const auto count = static_cast<std::size_t>(std::floor((l_max - l_min) / step + 1e-9)) + 1;
  internal::require(count <= 10'000'000, "grid too fine");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = l_min + static_cast<double>(i) * step;
  return grid;
}

RateCurve sweep(const RateFunction& rate, double l_min, double l_max, double step) {
  RateCurve curve;
  for (double km : distance_grid(l_min, l_max, step)) {
    const double raw = rate(km);
    curve.points.push_back({km, std::max(0.0, raw), raw});
  }
  return curve;
}

RateCurve sweep(const Scenario& scenario, double l_min, double l_max, double step) {
  return sweep(rate_function(scenario), l_min, l_max, step);
}

std::optional<double> max_secure_distance(const RateFunction& rate, double l_max,
                                          SearchOptions opts) {
  const std::vector<double> grid = search_grid(l_max, opts);
  if (!(rate(0.0) > 0.0)) return std::nullopt;
  std::size_t last_positive = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (rate(grid[i]) > 0.0) last_positive = i;
  }
  if (last_positive + 1 == grid.size()) return grid.back();
  return bisect([&](double km) { return rate(km) > 0.0; }, grid[last_positive],
                grid[last_positive + 1], opts.tolerance_km);
}

std::optional<double> max_secure_distance(const Scenario& scenario, double l_max,
                                          SearchOptions opts) {
  return max_secure_distance(rate_function(scenario), l_max, opts);
}

std::optional<Crossing> crossover_distance(const RateFunction& rate_a,
                                           const RateFunction& rate_b, double l_max,
                                           SearchOptions opts) {
  const std::vector<double> grid = search_grid(l_max, opts);
  struct Sample {
    double diff;
    bool near_zero;
  };
  auto sample = [&](double km) {
    const double a = rate_a(km);
    const double b = rate_b(km);
    const double diff = a - b;
    return Sample{diff, std::abs(diff) <= 1e-12 * std::max(std::abs(a), std::abs(b))};
  };

  std::vector<Sample> samples;
  samples.reserve(grid.size());
  for (double km : grid) samples.push_back(sample(km));

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(samples[i].diff > 0.0) || samples[i + 1].diff > 0.0) continue;
    const bool rebounds = i + 2 < grid.size() && samples[i + 2].diff > 0.0;
    if (samples[i + 1].near_zero && rebounds) {
      return Crossing{0.5 * (grid[i] + grid[i + 1]), true};
    }
    const double km = bisect([&](double x) { return rate_a(x) - rate_b(x) > 0.0; }, grid[i],
                             grid[i + 1], opts.tolerance_km);
    return Crossing{km, false};
  }
  return std::nullopt;
}

std::optional<Crossing> crossover_distance(const Scenario& a, const Scenario& b, double l_max,
                                           SearchOptions opts) {
  if (a.link.alpha != b.link.alpha) {
    throw ConfigError("crossover_distance: scenarios use different fiber attenuation");
  }
  return crossover_distance(rate_function(a), rate_function(b), l_max, opts);
}

std::string format_rate_csv(const RateTable& table) {
  const std::optional<RateCurve>* columns[] = {&table.dual, &table.fast, &table.slow};
  const RateCurve* reference = nullptr;
  for (const auto* col : columns) {
    if (col->has_value()) {
      reference = &col->value();
      break;
    }
  }
  std::string out(kCsvHeader);
  out += '\n';
  if (reference == nullptr) return out;
  for (const auto* col : columns) {
    if (!col->has_value()) continue;
    const auto& pts = (*col)->points;
    internal::require(pts.size() == reference->points.size(), "CSV columns differ in length");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      internal::require(pts[i].length_km == reference->points[i].length_km,
                        "CSV columns use different grids");
    }
  }
  for (std::size_t i = 0; i < reference->points.size(); ++i) {
    out += format_number("%.2f", reference->points[i].length_km);
    for (const auto* col : columns) {
      out += ',';
      if (col->has_value()) out += format_number("%.5e", (*col)->points[i].raw_rate);
    }
    out += '\n';
  }
  return out;
}

RateTable parse_rate_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw ConfigError("CSV header must be '" + std::string(kCsvHeader) + "'");
  }
  RateTable table;
  std::optional<RateCurve>* columns[] = {&table.dual, &table.fast, &table.slow};
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto fields = split(lines[n], ',');
    if (fields.size() != 4) {
      throw ConfigError("CSV line " + std::to_string(n + 1) + ": expected 4 fields");
    }
    const double km = parse_double(fields[0], n + 1);
    for (std::size_t c = 0; c < 3; ++c) {
      const bool filled = !fields[c + 1].empty();
      if (n == 1 && filled) columns[c]->emplace();
      if (filled != columns[c]->has_value()) {
        throw ConfigError("CSV line " + std::to_string(n + 1) + ": inconsistent empty columns");
      }
      if (!filled) continue;
      auto& pts = (*columns[c])->points;
      if (!pts.empty() && !(km > pts.back().length_km)) {
        throw ConfigError("CSV line " + std::to_string(n + 1) + ": lengths must increase");
      }
      const double raw = parse_double(fields[c + 1], n + 1);
      pts.push_back({km, std::max(0.0, raw), raw});
    }
  }
  return table;
}

RateTable table_for(const Scenario& scenario, RateCurve curve) {
  RateTable table;
  switch (scenario.mode) {
    case Mode::kSingleFast:
      table.fast = std::move(curve);
      break;
    case Mode::kSingleSlow:
      table.slow = std::move(curve);
      break;
    case Mode::kDual:
    case Mode::kDualNoPa:
      table.dual = std::move(curve);
      break;
  }
  return table;
}

}  // namespace dualqkd
