#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace kilogram::stats {

class DegenerateInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Sample Pearson coefficient. Equal lengths >= 3 with non-zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Fractional ranks starting at 1; ties share their average rank.
std::vector<double> fractional_ranks(std::span<const double> values);

// Pearson correlation of fractional ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace kilogram::stats
