#include "kilogram/metrics/psa.hpp"

#include <bit>

#include "kilogram/metrics/assignment.hpp"

namespace kilogram::metrics {

void require_partition(const Segmentation& seg) {
    corpus::PieceMask covered = 0;
    for (auto part : seg) {
        if (part == 0) throw NotAPartition("segmentation has an empty part");
        if (part & ~corpus::kAllPiecesMask) throw NotAPartition("segmentation references a piece outside 1..7");
        if (covered & part) throw NotAPartition("segmentation parts overlap");
        covered |= part;
    }
    if (covered != corpus::kAllPiecesMask) throw NotAPartition("segmentation does not cover all seven pieces");
}

int psa_pair(const Segmentation& a, const Segmentation& b) {
    require_partition(a);
    require_partition(b);
    std::vector<std::vector<std::int64_t>> w(a.size(), std::vector<std::int64_t>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) w[i][j] = std::popcount(static_cast<unsigned>(a[i] & b[j]));
    }
    return static_cast<int>(max_weight_assignment(w).total);
}

namespace {

int best_mapping(const Segmentation& small, const Segmentation& large, std::size_t i, unsigned used) {
    if (i == small.size()) return 0;
    int best = 0;
    for (std::size_t j = 0; j < large.size(); ++j) {
        if (used & (1u << j)) continue;
        const int here = std::popcount(static_cast<unsigned>(small[i] & large[j]));
        best = std::max(best, here + best_mapping(small, large, i + 1, used | (1u << j)));
    }
    return best;
}

}  // namespace

int brute_force_psa_pair(const Segmentation& a, const Segmentation& b) {
    require_partition(a);
    require_partition(b);
    return a.size() <= b.size() ? best_mapping(a, b, 0, 0) : best_mapping(b, a, 0, 0);
}

PsaScore psa(const std::vector<Segmentation>& segmentations) {
    const std::size_t n = segmentations.size();
    if (n < 2) throw MetricUndefined("PSA needs at least two annotations");
    PsaScore out;
    out.pairValues.assign(n, std::vector<int>(n, corpus::kPieceCount));
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int v = psa_pair(segmentations[i], segmentations[j]);
            out.pairValues[i][j] = out.pairValues[j][i] = v;
            sum += v;
        }
    }
    out.value = sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
    return out;
}

PsaScore psa(const std::vector<corpus::Annotation>& annotations) {
    std::vector<Segmentation> segs;
    segs.reserve(annotations.size());
    for (const auto& a : annotations) segs.push_back(a.segmentation());
    return psa(segs);
}

}  // namespace kilogram::metrics
