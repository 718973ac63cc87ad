#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace kilogram::stats {

inline constexpr double kGmmVarianceFloor = 1e-6;

struct Gmm2Fit {
    std::array<double, 2> means{};  // ascending
    std::array<double, 2> variances{};
    std::array<double, 2> weights{};
    double logLikelihood = 0.0;
    int iterations = 0;
    bool converged = false;
    // All values identical: one component carries the data, means are equal.
    bool singleComponent = false;
    // Log-likelihood after the initialization and after each EM step.
    std::vector<double> logLikelihoodTrace;
};

struct GmmOptions {
    std::uint64_t seed = 0;
    int maxIter = 500;
    double tol = 1e-8;
};

// Two-component one-dimensional Gaussian mixture by EM with k-means++ style
// seeding. Needs at least four values.
Gmm2Fit gmm2_fit(std::span<const double> values, const GmmOptions& options = {});

double gmm2_log_likelihood(std::span<const double> values, const Gmm2Fit& fit);

}  // namespace kilogram::stats
