#include "kilogram/metrics/perplexity.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "kilogram/metrics/divergence.hpp"

namespace kilogram::metrics {

void PerplexityParams::check() const {
    if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("smoothing k must be positive");
    if (vocabularySize < 1) throw std::invalid_argument("vocabulary size must be at least 1");
}

PerplexityResult log_perplexity(std::span<const text::TokenList> annotations, const PerplexityParams& params) {
    params.check();
    const std::size_t n = annotations.size();
    if (n < 2) throw MetricUndefined("log perplexity needs at least two annotations");

    std::map<std::string, std::size_t, std::less<>> counts;
    std::size_t total = 0;
    for (const auto& a : annotations) {
        for (const auto& t : a.tokens()) ++counts[t];
        total += a.size();
    }

    const double kv = params.k * static_cast<double>(params.vocabularySize);
    PerplexityResult out;
    double sum = 0.0;
    std::size_t defined = 0;
    for (const auto& a : annotations) {
        const std::size_t others_total = total - a.size();
        if (others_total == 0 || a.empty()) {
            out.perAnnotation.emplace_back();
            continue;
        }
        std::map<std::string_view, std::size_t> own;
        for (const auto& t : a.tokens()) ++own[t];
        double acc = 0.0;
        for (const auto& t : a.tokens()) {
            const double c = static_cast<double>(counts.find(t)->second - own[t]);
            acc += std::log2((c + params.k) / (static_cast<double>(others_total) + kv));
        }
        const double lp = -acc / static_cast<double>(a.size());
        out.perAnnotation.emplace_back(lp);
        sum += lp;
        ++defined;
    }
    if (defined == 0) throw MetricUndefined("no annotation has a defined leave-one-out model");
    out.value = sum / static_cast<double>(defined);
    return out;
}

PerplexityResult log_perplexity(const std::vector<corpus::Annotation>& annotations, const PerplexityParams& params) {
    return log_perplexity(whole_token_lists(annotations), params);
}

std::size_t whole_vocabulary_size(const corpus::AnalysisSet& set) {
    std::set<std::string> vocab;
    for (const auto& [id, list] : set.members()) {
        for (const auto& a : list) {
            const auto tl = text::normalize(a.whole);
            vocab.insert(tl.tokens().begin(), tl.tokens().end());
        }
    }
    return std::max<std::size_t>(vocab.size(), 1);
}

}  // namespace kilogram::metrics
