#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace kilogram::stats {

using Statistic = std::function<double(std::span<const double>)>;

double mean(std::span<const double> values);

struct BootstrapResult {
    double estimate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t resamples = 0;
};

// Percentile bootstrap. Resample r draws from its own generator derived from
// (seed, r), so the result does not depend on evaluation order. The interval
// is widened to contain the point estimate when the percentiles miss it.
BootstrapResult bootstrap_ci(std::span<const double> values, const Statistic& statistic, std::size_t resamples = 1000,
                             double level = 0.95, std::uint64_t seed = 0);

// Linear-interpolation quantile of sorted data (type 7).
double quantile_sorted(std::span<const double> sorted, double q);

}  // namespace kilogram::stats
