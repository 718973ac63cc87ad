#include "kilogram/stats/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kilogram/rng.hpp"

namespace kilogram::stats {

double mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean of empty data");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BootstrapResult bootstrap_ci(std::span<const double> values, const Statistic& statistic, std::size_t resamples,
                             double level, std::uint64_t seed) {
    if (values.empty()) throw std::invalid_argument("bootstrap needs at least one value");
    if (resamples < 1) throw std::invalid_argument("bootstrap needs at least one resample");
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must be in (0, 1)");

    BootstrapResult out;
    out.estimate = statistic(values);
    out.resamples = resamples;

    const std::size_t n = values.size();
    std::vector<double> stats(resamples);
    std::vector<double> sample(n);
    for (std::size_t r = 0; r < resamples; ++r) {
        Rng rng(seed, r);
        for (std::size_t i = 0; i < n; ++i) sample[i] = values[rng.uniform_index(n)];
        stats[r] = statistic(sample);
    }
    std::sort(stats.begin(), stats.end());
    const double alpha = (1.0 - level) / 2.0;
    out.lower = std::min(quantile_sorted(stats, alpha), out.estimate);
    out.upper = std::max(quantile_sorted(stats, 1.0 - alpha), out.estimate);
    return out;
}

}  // namespace kilogram::stats
