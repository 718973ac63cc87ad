#include <doctest.h>

#include <set>

#include "kilogram/metrics/perplexity.hpp"
#include "kilogram/metrics/psa.hpp"
#include "kilogram/sampling/dense.hpp"
#include "support/synthetic.hpp"

using namespace kilogram;
using namespace kilogram::sampling;

namespace {

std::vector<SamplePlanePoint> random_points(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SamplePlanePoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
        char id[16];
        std::snprintf(id, sizeof id, "p%04zu", i);
        pts.push_back({id, 2.0 + rng.normal(), 1.0 + 6.0 * rng.uniform01()});
    }
    return pts;
}

}  // namespace

TEST_CASE("grid cells are half open with the top edge folded in") {
    CHECK(grid_cell(0.0, 0.0, 1.0, 5) == 0);
    CHECK(grid_cell(0.2, 0.0, 1.0, 5) == 1);
    CHECK(grid_cell(0.19999, 0.0, 1.0, 5) == 0);
    CHECK(grid_cell(1.0, 0.0, 1.0, 5) == 4);
    CHECK(grid_cell(0.5, 0.5, 0.5, 5) == 0);
}

TEST_CASE("convex hull of a square with interior points") {
    std::vector<SamplePlanePoint> pts = {{"a", 0, 0}, {"b", 1, 0}, {"c", 1, 1}, {"d", 0, 1}, {"e", 0.5, 0.5}, {"f", 0.5, 0}};
    const auto hull = convex_hull(pts);
    std::set<std::size_t> h(hull.begin(), hull.end());
    CHECK(h == std::set<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("dense sample sizes, disjointness and determinism") {
    const auto pts = random_points(1004, 1);
    DenseSampleOptions opt;
    opt.seed = 42;
    const auto s = dense_sample(pts, opt);
    CHECK(s.periphery.size() == 12);
    CHECK(s.uniform.size() == 25);
    CHECK(s.grid.size() == 25);
    const auto all = s.all();
    CHECK(all.size() == 62);
    CHECK(std::set<std::string>(all.begin(), all.end()).size() == 62);
    CHECK(dense_sample(pts, opt).all() == all);
    opt.seed = 43;
    CHECK_FALSE(dense_sample(pts, opt).all() == all);
}

TEST_CASE("periphery picks are hull vertices") {
    const auto pts = random_points(300, 2);
    const auto s = dense_sample(pts, {.seed = 1});
    std::set<std::string> hull_ids;
    for (std::size_t i : convex_hull(pts)) hull_ids.insert(pts[i].tangramId);
    if (s.hullLayers == 1) {
        for (const auto& id : s.periphery) CHECK(hull_ids.count(id));
    }
    CHECK(s.hullSize == hull_ids.size());
}

TEST_CASE("grid picks lie in their cells and cover occupied cells") {
    const auto pts = random_points(500, 3);
    const auto s = dense_sample(pts, {.seed = 9});
    std::map<std::string, const SamplePlanePoint*> by_id;
    for (const auto& p : pts) by_id[p.tangramId] = &p;
    std::set<std::pair<int, int>> cells;
    for (const auto& id : s.grid) {
        const auto* p = by_id.at(id);
        cells.insert({grid_cell(p->logPerplexity, s.bounds.minX, s.bounds.maxX, 5),
                      grid_cell(p->psa, s.bounds.minY, s.bounds.maxY, 5)});
    }
    CHECK(cells.size() == std::min<std::size_t>(25, s.occupiedCells));
}

TEST_CASE("all points in one cell") {
    std::vector<SamplePlanePoint> pts;
    for (int i = 0; i < 70; ++i) pts.push_back({"p" + std::to_string(100 + i), 1.0, 7.0});
    const auto s = dense_sample(pts, {.seed = 5});
    CHECK(s.occupiedCells == 1);
    CHECK(s.all().size() == 62);
}

TEST_CASE("insufficient points") {
    CHECK_THROWS_AS(dense_sample(random_points(61, 1)), InsufficientPoints);
}

TEST_CASE("plane points match direct metric evaluation") {
    auto corpus = kgtest::synthetic_corpus(20, 5, 77);
    // One tangram with a single annotation is excluded.
    corpus.push_back(kgtest::synthetic_corpus(21, 1, 5).back());
    const auto set = kgtest::as_set(corpus);
    metrics::PerplexityParams params;
    params.vocabularySize = metrics::whole_vocabulary_size(set);
    const auto plane = build_plane(set, params);
    CHECK(plane.points.size() == 20);
    CHECK(plane.excluded == std::vector<std::string>{"t0020"});
    for (const auto& p : plane.points) {
        const auto& anns = set.annotations(p.tangramId);
        CHECK(p.psa == metrics::psa(anns).value);
        CHECK(p.logPerplexity == metrics::log_perplexity(anns, params).value);
    }
}

TEST_CASE("identical annotations put a tangram at full agreement") {
    corpus::AnalysisSet set("same");
    for (int w = 0; w < 3; ++w) {
        corpus::Annotation a;
        a.tangramId = "t";
        a.workerId = "w" + std::to_string(w);
        a.whole = "dog";
        a.parts = {corpus::make_part({1, 2, 3, 4, 5, 6, 7}, "body")};
        set.add(corpus::make_annotation(a));
    }
    metrics::PerplexityParams params;
    params.vocabularySize = 1;
    const auto plane = build_plane(set, params);
    REQUIRE(plane.points.size() == 1);
    CHECK(plane.points[0].psa == 7.0);
    CHECK(plane.points[0].logPerplexity == 0.0);
}
