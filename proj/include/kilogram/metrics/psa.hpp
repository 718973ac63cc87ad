#pragma once

#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/metrics/errors.hpp"

namespace kilogram::metrics {

using Segmentation = std::vector<corpus::PieceMask>;

class NotAPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws NotAPartition unless the parts are non-empty, disjoint and cover
// all seven pieces.
void require_partition(const Segmentation& seg);

// Largest number of pieces that stay in matched groups when one segmentation
// is edited into the other: maximum-weight assignment over the matrix of
// part intersection sizes.
int psa_pair(const Segmentation& a, const Segmentation& b);

// Exhaustive maximum over every injective part mapping; test oracle for
// psa_pair. At most seven parts per side.
int brute_force_psa_pair(const Segmentation& a, const Segmentation& b);

struct PsaScore {
    double value = 0.0;
    // Symmetric N x N; the diagonal holds 7.
    std::vector<std::vector<int>> pairValues;
};

// Mean of psa_pair over all unordered pairs of distinct annotations.
PsaScore psa(const std::vector<Segmentation>& segmentations);
PsaScore psa(const std::vector<corpus::Annotation>& annotations);

}  // namespace kilogram::metrics
