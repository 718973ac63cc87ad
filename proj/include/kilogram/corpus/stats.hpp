#pragma once

#include <cstddef>
#include <vector>

#include "kilogram/corpus/annotation.hpp"

namespace kilogram::corpus {

// Population standard deviation (ddof = 0).
struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
    std::size_t n = 0;
};

MeanSd mean_sd(const std::vector<double>& values);

struct DatasetStats {
    std::size_t tangrams = 0;
    std::size_t annotations = 0;
    MeanSd wholeLength;    // whitespace tokens
    MeanSd partLength;     // whitespace tokens per part label
    std::size_t wholeVocabulary = 0;  // lowercase + stem
    std::size_t partVocabulary = 0;
    std::size_t overallVocabulary = 0;
    MeanSd partsPerShape;
    MeanSd piecesPerPart;
};

// Requires a non-empty set.
DatasetStats dataset_stats(const AnalysisSet& set);

}  // namespace kilogram::corpus
