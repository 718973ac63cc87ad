#include "kilogram/corpus/stats.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "kilogram/text/normalize.hpp"

namespace kilogram::corpus {

MeanSd mean_sd(const std::vector<double>& values) {
    MeanSd out;
    out.n = values.size();
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(values.size()));
    return out;
}

DatasetStats dataset_stats(const AnalysisSet& set) {
    if (set.annotation_count() == 0) throw std::invalid_argument("dataset_stats needs a non-empty set");
    std::vector<double> whole_len, part_len, parts_per_shape, pieces_per_part;
    std::set<std::string> whole_vocab, part_vocab;
    for (const auto& [id, list] : set.members()) {
        for (const auto& a : list) {
            whole_len.push_back(static_cast<double>(text::whitespace_length(a.whole)));
            for (auto& t : text::vocabulary_tokens(a.whole)) whole_vocab.insert(std::move(t));
            parts_per_shape.push_back(static_cast<double>(a.parts.size()));
            for (const auto& p : a.parts) {
                part_len.push_back(static_cast<double>(text::whitespace_length(p.label)));
                pieces_per_part.push_back(static_cast<double>(p.pieceIds.size()));
                for (auto& t : text::vocabulary_tokens(p.label)) part_vocab.insert(std::move(t));
            }
        }
    }
    DatasetStats s;
    s.tangrams = set.tangram_count();
    s.annotations = set.annotation_count();
    s.wholeLength = mean_sd(whole_len);
    s.partLength = mean_sd(part_len);
    s.partsPerShape = mean_sd(parts_per_shape);
    s.piecesPerPart = mean_sd(pieces_per_part);
    s.wholeVocabulary = whole_vocab.size();
    s.partVocabulary = part_vocab.size();
    std::set<std::string> overall = whole_vocab;
    overall.insert(part_vocab.begin(), part_vocab.end());
    s.overallVocabulary = overall.size();
    return s;
}

}  // namespace kilogram::corpus
