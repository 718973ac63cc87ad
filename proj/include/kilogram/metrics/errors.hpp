#pragma once

#include <stdexcept>

namespace kilogram::metrics {

// A per-tangram value that is not defined for the given input, for example
// fewer than two usable annotations. Callers report it as missing, never 0.
class MetricUndefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace kilogram::metrics
