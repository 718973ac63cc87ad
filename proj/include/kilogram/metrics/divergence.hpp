#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/metrics/errors.hpp"
#include "kilogram/text/normalize.hpp"

namespace kilogram::metrics {

struct DivergenceScore {
    double value = 0.0;
    // W(j) for each annotation that was used, in input order.
    std::vector<double> perAnnotation;
    // Input indexes of annotations that normalized to no tokens.
    std::vector<std::size_t> excluded;
};

// Fraction of the other annotations that do not contain `token`. The token
// must occur in annotations[ownIndex]. Membership is by set, so repeated
// occurrences of a token share one value.
double token_rarity(std::string_view token, std::size_t ownIndex, std::span<const text::TokenList> annotations);

// Mean over annotations of the mean token rarity within each annotation.
// Empty token lists are excluded and listed; fewer than two usable
// annotations is MetricUndefined.
DivergenceScore naming_divergence(std::span<const text::TokenList> annotations);

// Shape naming divergence over normalized whole-shape descriptions.
DivergenceScore snd(const std::vector<corpus::Annotation>& annotations);

// Part naming divergence over the concatenated part labels, in submitted order.
DivergenceScore pnd(const std::vector<corpus::Annotation>& annotations);

std::vector<text::TokenList> whole_token_lists(const std::vector<corpus::Annotation>& annotations);
std::vector<text::TokenList> part_token_lists(const std::vector<corpus::Annotation>& annotations);

}  // namespace kilogram::metrics
