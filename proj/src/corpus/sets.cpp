#include "kilogram/corpus/sets.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kilogram/rng.hpp"

namespace kilogram::corpus {

std::string SplitAssignment::split_of(const std::string& tangramId) const {
    if (train.count(tangramId)) return "train";
    if (dev.count(tangramId)) return "dev";
    if (test.count(tangramId)) return "test";
    if (testDense.count(tangramId)) return "test-dense";
    return "";
}

SplitAssignment build_splits(const std::vector<std::string>& tangramIds, const std::vector<std::string>& denseIds,
                             std::uint64_t seed) {
    const std::set<std::string> all(tangramIds.begin(), tangramIds.end());
    if (all.size() != tangramIds.size()) throw SplitError("tangram ids contain duplicates");
    SplitAssignment out;
    for (const auto& id : denseIds) {
        if (!all.count(id)) throw SplitError("dense id not among tangram ids: " + id);
        out.testDense.insert(id);
    }

    std::vector<std::string> rest;
    for (const auto& id : all) {
        if (!out.testDense.count(id)) rest.push_back(id);
    }
    Rng rng(seed);
    rng.shuffle(rest);

    const double total = static_cast<double>(kTrainSize + kDevSize + kTestSize);
    const double r = static_cast<double>(rest.size());
    const auto train_n = static_cast<std::size_t>(std::llround(r * static_cast<double>(kTrainSize) / total));
    const auto dev_n = std::min(rest.size() - train_n,
                                static_cast<std::size_t>(std::llround(r * static_cast<double>(kDevSize) / total)));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        auto& target = i < train_n ? out.train : i < train_n + dev_n ? out.dev : out.test;
        target.insert(rest[i]);
    }
    return out;
}

AnalysisSets build_analysis_sets(const std::vector<Annotation>& annotations, const std::vector<std::string>& denseIds,
                                 std::uint64_t seed) {
    std::map<std::string, std::vector<const Annotation*>> sparse, later;
    std::set<std::string> tangrams;
    for (const auto& a : annotations) {
        tangrams.insert(a.tangramId);
        (a.collection == Collection::Sparse ? sparse : later)[a.tangramId].push_back(&a);
    }
    const std::set<std::string> dense_ids(denseIds.begin(), denseIds.end());

    AnalysisSets sets{AnalysisSet("full"), AnalysisSet("dense"), AnalysisSet("dense10")};
    Rng rng(seed);
    for (const auto& id : tangrams) {
        if (sparse.count(id)) {
            for (const Annotation* a : sparse[id]) sets.full.add(*a);
            continue;
        }
        const auto& pool = later[id];
        if (pool.size() < kFullSampleSize) {
            throw InsufficientAnnotations("tangram " + id + " has no sparse annotations and only " +
                                          std::to_string(pool.size()) + " others; Full needs " +
                                          std::to_string(kFullSampleSize));
        }
        auto picks = rng.sample_without_replacement(pool.size(), kFullSampleSize);
        std::sort(picks.begin(), picks.end());
        for (std::size_t i : picks) sets.full.add(*pool[i]);
    }

    for (const auto& id : dense_ids) {
        const std::size_t n = (sparse.count(id) ? sparse[id].size() : 0) + (later.count(id) ? later[id].size() : 0);
        if (n < kDenseMinimum) {
            throw InsufficientAnnotations("dense tangram " + id + " has " + std::to_string(n) + " annotations, Dense needs " +
                                          std::to_string(kDenseMinimum));
        }
        for (const auto* bucket : {&sparse, &later}) {
            const auto it = bucket->find(id);
            if (it == bucket->end()) continue;
            for (const Annotation* a : it->second) sets.dense.add(*a);
        }
        for (const auto& a : sets.full.annotations(id)) sets.dense10.add(a);
    }
    return sets;
}

}  // namespace kilogram::corpus
