#include "kilogram/metrics/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kilogram::metrics {

Assignment max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights) {
    const std::size_t rows = weights.size();
    const std::size_t cols = rows ? weights[0].size() : 0;
    for (const auto& r : weights) {
        if (r.size() != cols) throw std::invalid_argument("assignment matrix rows differ in length");
    }
    const std::size_t n = std::max(rows, cols);
    Assignment result;
    result.rowToColumn.assign(rows, -1);
    if (n == 0) return result;

    // Minimise the negated weights; 1-based arrays with a sentinel column 0.
    auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
        return (i < rows && j < cols) ? -weights[i][j] : 0;
    };
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            std::int64_t delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t i = p[j] - 1;
        if (i < rows && j - 1 < cols) {
            result.rowToColumn[i] = static_cast<int>(j - 1);
            result.total += weights[i][j - 1];
        }
    }
    return result;
}

}  // namespace kilogram::metrics
