#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kilogram/corpus/annotation.hpp"

namespace kilogram::corpus {

// Learning-split sizes for the full 1,016-tangram configuration.
inline constexpr std::size_t kTrainSize = 692;
inline constexpr std::size_t kDevSize = 125;
inline constexpr std::size_t kTestSize = 125;

inline constexpr std::size_t kDenseMinimum = 50;
inline constexpr std::size_t kFullSampleSize = 10;

struct SplitAssignment {
    std::set<std::string> train;
    std::set<std::string> dev;
    std::set<std::string> test;
    std::set<std::string> testDense;

    // "train", "dev", "test", "test-dense", or "" when absent.
    std::string split_of(const std::string& tangramId) const;
    friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

class SplitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// testDense = denseIds; the rest is shuffled under `seed` and cut 692/125/125,
// or proportionally to those sizes for other corpus sizes. Input order does not
// affect the result.
SplitAssignment build_splits(const std::vector<std::string>& tangramIds, const std::vector<std::string>& denseIds,
                             std::uint64_t seed);

class InsufficientAnnotations : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AnalysisSets {
    AnalysisSet full;
    AnalysisSet dense;
    AnalysisSet dense10;
};

// Full: every tangram with its sparse-collection annotations; tangrams with
// none get 10 sampled from their later annotations. Dense: all annotations
// of the dense tangrams (at least 50 each). Dense10: the Full annotations of
// the dense tangrams.
AnalysisSets build_analysis_sets(const std::vector<Annotation>& annotations, const std::vector<std::string>& denseIds,
                                 std::uint64_t seed);

}  // namespace kilogram::corpus
