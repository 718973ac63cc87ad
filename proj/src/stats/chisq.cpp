#include "kilogram/stats/chisq.hpp"

#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace kilogram::stats {

ChiSquareResult chi_square_uniform(std::span<const std::size_t> counts) {
    if (counts.size() < 2) throw std::invalid_argument("chi-square needs at least two categories");
    double total = 0.0;
    for (auto c : counts) total += static_cast<double>(c);
    if (total <= 0.0) throw std::invalid_argument("chi-square needs observations");
    const double expected = total / static_cast<double>(counts.size());
    ChiSquareResult r;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        r.statistic += d * d / expected;
    }
    r.degreesOfFreedom = static_cast<int>(counts.size()) - 1;
    r.pValue = boost::math::gamma_q(r.degreesOfFreedom / 2.0, r.statistic / 2.0);
    return r;
}

}  // namespace kilogram::stats
