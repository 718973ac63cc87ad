#pragma once

#include <cstdint>
#include <vector>

namespace kilogram::metrics {

struct Assignment {
    std::int64_t total = 0;
    // rowToColumn[i] is the column matched to row i, or -1 when row i was
    // matched to a padding column.
    std::vector<int> rowToColumn;
};

// Maximum-weight assignment on a rectangular matrix (rows x columns). The
// matrix is padded to square with zero-weight dummies and solved with the
// Hungarian method (shortest augmenting paths with potentials), O(n^3).
Assignment max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights);

}  // namespace kilogram::metrics
