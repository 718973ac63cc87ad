#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/metrics/errors.hpp"
#include "kilogram/text/normalize.hpp"

namespace kilogram::metrics {

struct PerplexityParams {
    double k = 0.01;                 // additive smoothing
    std::size_t vocabularySize = 1;  // V: whole-shape vocabulary over all tangrams

    void check() const;
};

struct PerplexityResult {
    double value = 0.0;
    // log2 perplexity of each annotation under the model built from the
    // others; empty when that model or the annotation has no tokens.
    std::vector<std::optional<double>> perAnnotation;
};

// Leave-one-out unigram model p(x) = (C(x) + k) / (total + k V) per
// annotation; the tangram value is the mean of the defined per-annotation
// values of -1/M sum log2 p.
PerplexityResult log_perplexity(std::span<const text::TokenList> annotations, const PerplexityParams& params);
PerplexityResult log_perplexity(const std::vector<corpus::Annotation>& annotations, const PerplexityParams& params);

// Distinct normalized whole-shape tokens across the set.
std::size_t whole_vocabulary_size(const corpus::AnalysisSet& set);

}  // namespace kilogram::metrics
