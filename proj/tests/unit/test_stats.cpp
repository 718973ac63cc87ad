#include <doctest.h>

#include <cmath>
#include <vector>

#include "kilogram/rng.hpp"
#include "kilogram/stats/bootstrap.hpp"
#include "kilogram/stats/chisq.hpp"
#include "kilogram/stats/correlation.hpp"
#include "kilogram/stats/gmm.hpp"

using namespace kilogram::stats;

TEST_CASE("quantiles use linear interpolation") {
    const std::vector<double> v = {1, 2, 3, 4, 10};
    CHECK(quantile_sorted(v, 0.3) == doctest::Approx(2.2));
    CHECK(quantile_sorted(v, 0.0) == 1.0);
    CHECK(quantile_sorted(v, 1.0) == 10.0);
}

TEST_CASE("bootstrap basics") {
    const std::vector<double> one = {0.4};
    const auto r = bootstrap_ci(one, mean, 200, 0.95, 1);
    CHECK(r.lower == 0.4);
    CHECK(r.upper == 0.4);
    CHECK(r.estimate == 0.4);

    kilogram::Rng rng(2);
    std::vector<double> v;
    for (int i = 0; i < 50; ++i) v.push_back(rng.normal());
    const auto a = bootstrap_ci(v, mean, 1000, 0.95, 7);
    const auto b = bootstrap_ci(v, mean, 1000, 0.95, 7);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.lower <= a.estimate);
    CHECK(a.estimate <= a.upper);
    CHECK(a.resamples == 1000);
    CHECK_THROWS(bootstrap_ci(std::vector<double>{}, mean));
}

TEST_CASE("pearson and spearman") {
    CHECK(pearson(std::vector<double>{1, 2, 3, 4, 5.5}, std::vector<double>{2, 1, 4, 3, 6}) ==
          doctest::Approx(0.8483871429665282).epsilon(1e-12));
    CHECK(spearman(std::vector<double>{1, 2, 2, 3, 5}, std::vector<double>{2, 1, 4, 3, 5}) ==
          doctest::Approx(0.6668859288553503).epsilon(1e-12));
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{2, 4, 6}) == doctest::Approx(1.0));
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{6, 4, 2}) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), DegenerateInput);
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}), std::invalid_argument);
    CHECK(fractional_ranks(std::vector<double>{10, 20, 20, 5}) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("spearman is invariant under monotone transforms") {
    kilogram::Rng rng(5);
    std::vector<double> x, y, ex;
    for (int i = 0; i < 40; ++i) {
        x.push_back(rng.normal());
        y.push_back(x.back() + rng.normal());
        ex.push_back(std::exp(x.back()));
    }
    CHECK(spearman(x, y) == doctest::Approx(spearman(ex, y)));
}

TEST_CASE("chi-square uniformity") {
    const std::vector<std::size_t> a = {12, 8, 10, 10};
    const auto r = chi_square_uniform(a);
    CHECK(r.statistic == doctest::Approx(0.8));
    CHECK(r.degreesOfFreedom == 3);
    CHECK(r.pValue == doctest::Approx(0.8494670333918255).epsilon(1e-9));
    const std::vector<std::size_t> b = {30, 10, 10, 10};
    CHECK(chi_square_uniform(b).pValue == doctest::Approx(0.0001697424355528261).epsilon(1e-9));
}

TEST_CASE("gmm recovers separated components") {
    kilogram::Rng rng(11);
    std::vector<double> v;
    for (int i = 0; i < 100; ++i) v.push_back(rng.normal(0.2, 0.05));
    for (int i = 0; i < 100; ++i) v.push_back(rng.normal(0.8, 0.05));
    GmmOptions opt;
    opt.seed = 3;
    const auto fit = gmm2_fit(v, opt);
    CHECK(fit.means[0] == doctest::Approx(0.2).epsilon(0.1));
    CHECK(fit.means[1] == doctest::Approx(0.8).epsilon(0.05));
    CHECK(fit.weights[0] + fit.weights[1] == doctest::Approx(1.0));
    CHECK(fit.converged);
    CHECK(fit.logLikelihood == doctest::Approx(gmm2_log_likelihood(v, fit)));
    for (std::size_t i = 1; i < fit.logLikelihoodTrace.size(); ++i) {
        CHECK(fit.logLikelihoodTrace[i] >= fit.logLikelihoodTrace[i - 1] - 1e-9);
    }
}

TEST_CASE("gmm degenerate inputs") {
    const std::vector<double> same(10, 0.5);
    const auto fit = gmm2_fit(same);
    CHECK(fit.singleComponent);
    CHECK(fit.means[0] == 0.5);
    CHECK(fit.means[1] == 0.5);
    CHECK_THROWS(gmm2_fit(std::vector<double>{1, 2, 3}));
    const auto a = gmm2_fit(std::vector<double>{0, 0.1, 1, 1.1, 0.05, 1.05}, {.seed = 4});
    const auto b = gmm2_fit(std::vector<double>{0, 0.1, 1, 1.1, 0.05, 1.05}, {.seed = 4});
    CHECK(a.means == b.means);
}
