#include "kilogram/stats/gmm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kilogram/rng.hpp"

namespace kilogram::stats {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;

double log_normal(double x, double mean, double var) {
    const double d = x - mean;
    return -0.5 * (kLog2Pi + std::log(var) + d * d / var);
}

double log_sum_exp(double a, double b) {
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

struct Params {
    std::array<double, 2> mean;
    std::array<double, 2> var;
    std::array<double, 2> weight;
};

double log_likelihood(std::span<const double> xs, const Params& p) {
    double ll = 0.0;
    for (double x : xs) {
        ll += log_sum_exp(std::log(p.weight[0]) + log_normal(x, p.mean[0], p.var[0]),
                          std::log(p.weight[1]) + log_normal(x, p.mean[1], p.var[1]));
    }
    return ll;
}

Params initialize(std::span<const double> xs, Rng& rng) {
    const std::size_t n = xs.size();
    std::array<double, 2> centers{};
    centers[0] = xs[rng.uniform_index(n)];
    std::vector<double> d2(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d2[i] = (xs[i] - centers[0]) * (xs[i] - centers[0]);
        total += d2[i];
    }
    double target = rng.uniform01() * total;
    std::size_t pick = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        if (target < d2[i]) {
            pick = i;
            break;
        }
        target -= d2[i];
        pick = i;
    }
    centers[1] = xs[pick];

    // Hard assignment to the nearest center.
    std::array<double, 2> sum{}, sq{}, cnt{};
    for (double x : xs) {
        const int c = std::abs(x - centers[0]) <= std::abs(x - centers[1]) ? 0 : 1;
        sum[c] += x;
        sq[c] += x * x;
        cnt[c] += 1.0;
    }
    Params p{};
    for (int c = 0; c < 2; ++c) {
        p.mean[c] = cnt[c] > 0 ? sum[c] / cnt[c] : centers[c];
        const double v = cnt[c] > 0 ? sq[c] / cnt[c] - p.mean[c] * p.mean[c] : 0.0;
        p.var[c] = std::max(v, kGmmVarianceFloor);
        p.weight[c] = std::clamp(cnt[c] / static_cast<double>(n), 1e-3, 1.0 - 1e-3);
    }
    const double ws = p.weight[0] + p.weight[1];
    p.weight[0] /= ws;
    p.weight[1] /= ws;
    return p;
}

}  // namespace

Gmm2Fit gmm2_fit(std::span<const double> values, const GmmOptions& options) {
    if (values.size() < 4) throw std::invalid_argument("gmm2_fit needs at least four values");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("gmm2_fit needs finite values");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Gmm2Fit fit;
    const std::size_t n = values.size();
    if (*lo == *hi) {
        fit.singleComponent = true;
        fit.means = {*lo, *lo};
        fit.variances = {kGmmVarianceFloor, kGmmVarianceFloor};
        fit.weights = {1.0, 0.0};
        fit.logLikelihood = static_cast<double>(n) * log_normal(*lo, *lo, kGmmVarianceFloor);
        fit.converged = true;
        return fit;
    }

    Rng rng(options.seed);
    Params p = initialize(values, rng);
    double ll = log_likelihood(values, p);
    fit.logLikelihoodTrace.push_back(ll);

    std::vector<double> resp(n);
    for (int iter = 1; iter <= options.maxIter; ++iter) {
        // E step: responsibility of component 1.
        for (std::size_t i = 0; i < n; ++i) {
            const double a = std::log(p.weight[0]) + log_normal(values[i], p.mean[0], p.var[0]);
            const double b = std::log(p.weight[1]) + log_normal(values[i], p.mean[1], p.var[1]);
            resp[i] = std::exp(b - log_sum_exp(a, b));
        }
        // M step.
        Params next = p;
        std::array<double, 2> nk{}, sum{};
        for (std::size_t i = 0; i < n; ++i) {
            nk[0] += 1.0 - resp[i];
            nk[1] += resp[i];
            sum[0] += (1.0 - resp[i]) * values[i];
            sum[1] += resp[i] * values[i];
        }
        for (int c = 0; c < 2; ++c) {
            if (nk[c] <= 1e-12) continue;  // component emptied; keep its parameters
            next.mean[c] = sum[c] / nk[c];
            double ss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double r = c == 0 ? 1.0 - resp[i] : resp[i];
                ss += r * (values[i] - next.mean[c]) * (values[i] - next.mean[c]);
            }
            next.var[c] = std::max(ss / nk[c], kGmmVarianceFloor);
        }
        const double tot = nk[0] + nk[1];
        next.weight[0] = std::clamp(nk[0] / tot, 1e-12, 1.0 - 1e-12);
        next.weight[1] = 1.0 - next.weight[0];

        const double next_ll = log_likelihood(values, next);
        p = next;
        fit.logLikelihoodTrace.push_back(next_ll);
        fit.iterations = iter;
        const double delta = next_ll - ll;
        ll = next_ll;
        if (std::abs(delta) < options.tol) {
            fit.converged = true;
            break;
        }
    }

    const int first = p.mean[0] <= p.mean[1] ? 0 : 1;
    const int second = 1 - first;
    fit.means = {p.mean[first], p.mean[second]};
    fit.variances = {p.var[first], p.var[second]};
    fit.weights = {p.weight[first], p.weight[second]};
    fit.logLikelihood = ll;
    return fit;
}

double gmm2_log_likelihood(std::span<const double> values, const Gmm2Fit& fit) {
    double ll = 0.0;
    for (double x : values) {
        double acc = -INFINITY;
        for (int c = 0; c < 2; ++c) {
            if (fit.weights[c] <= 0.0) continue;
            acc = log_sum_exp(acc, std::log(fit.weights[c]) + log_normal(x, fit.means[c], fit.variances[c]));
        }
        ll += acc;
    }
    return ll;
}

}  // namespace kilogram::stats
