#include "kilogram/metrics/divergence.hpp"

#include <stdexcept>

namespace kilogram::metrics {

double token_rarity(std::string_view token, std::size_t ownIndex, std::span<const text::TokenList> annotations) {
    const std::size_t n = annotations.size();
    if (n < 2) throw MetricUndefined("token rarity needs at least two annotations");
    if (ownIndex >= n) throw std::out_of_range("annotation index out of range");
    if (!annotations[ownIndex].contains(token)) {
        throw std::invalid_argument("token '" + std::string(token) + "' is not in its own annotation");
    }
    std::size_t missing = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j != ownIndex && !annotations[j].contains(token)) ++missing;
    }
    return static_cast<double>(missing) / static_cast<double>(n - 1);
}

DivergenceScore naming_divergence(std::span<const text::TokenList> annotations) {
    DivergenceScore out;
    std::vector<text::TokenList> usable;
    for (std::size_t i = 0; i < annotations.size(); ++i) {
        if (annotations[i].empty()) {
            out.excluded.push_back(i);
        } else {
            usable.push_back(annotations[i]);
        }
    }
    if (usable.empty() && !annotations.empty()) throw MetricUndefined("all annotations are empty after normalization");
    if (usable.size() < 2) throw MetricUndefined("naming divergence needs at least two non-empty annotations");

    double sum = 0.0;
    for (std::size_t j = 0; j < usable.size(); ++j) {
        double w = 0.0;
        for (const auto& token : usable[j].tokens()) w += token_rarity(token, j, usable);
        const double wj = w / static_cast<double>(usable[j].size());
        out.perAnnotation.push_back(wj);
        sum += wj;
    }
    out.value = sum / static_cast<double>(usable.size());
    return out;
}

std::vector<text::TokenList> whole_token_lists(const std::vector<corpus::Annotation>& annotations) {
    std::vector<text::TokenList> out;
    out.reserve(annotations.size());
    for (const auto& a : annotations) out.push_back(text::normalize(a.whole));
    return out;
}

std::vector<text::TokenList> part_token_lists(const std::vector<corpus::Annotation>& annotations) {
    std::vector<text::TokenList> out;
    out.reserve(annotations.size());
    for (const auto& a : annotations) {
        std::vector<text::TokenList> labels;
        for (const auto& p : a.parts) labels.push_back(text::normalize_part_label(p.label));
        out.push_back(text::concatenate(labels));
    }
    return out;
}

DivergenceScore snd(const std::vector<corpus::Annotation>& annotations) {
    return naming_divergence(whole_token_lists(annotations));
}

DivergenceScore pnd(const std::vector<corpus::Annotation>& annotations) {
    return naming_divergence(part_token_lists(annotations));
}

}  // namespace kilogram::metrics
