#pragma once

#include <span>
#include <vector>

namespace kilogram::stats {

struct ChiSquareResult {
    double statistic = 0.0;
    int degreesOfFreedom = 0;
    double pValue = 1.0;
};

// Goodness of fit of observed counts against the uniform distribution.
ChiSquareResult chi_square_uniform(std::span<const std::size_t> counts);

}  // namespace kilogram::stats
