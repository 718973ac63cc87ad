#include "kilogram/stats/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kilogram::stats {

namespace {

void check_pair(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("correlation inputs differ in length");
    if (xs.size() < 3) throw std::invalid_argument("correlation needs at least three pairs");
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
    check_pair(xs, ys);
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw DegenerateInput("correlation input has zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
    check_pair(xs, ys);
    const auto rx = fractional_ranks(xs);
    const auto ry = fractional_ranks(ys);
    try {
        return pearson(rx, ry);
    } catch (const DegenerateInput&) {
        throw DegenerateInput("rank correlation input has all-tied ranks");
    }
}

}  // namespace kilogram::stats
