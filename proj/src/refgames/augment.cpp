#include "kilogram/refgames/augment.hpp"

#include <numeric>
#include <stdexcept>

#include "kilogram/geometry/svg.hpp"
#include "kilogram/refgames/condition.hpp"
#include "kilogram/refgames/template.hpp"

namespace kilogram::refgames {

ColorMap color_parts(const corpus::Annotation& a, const std::vector<std::size_t>& partOrder) {
    if (partOrder.size() > kPartPalette.size()) throw std::invalid_argument("more colored parts than palette colors");
    ColorMap colors;
    for (int id = 1; id <= corpus::kPieceCount; ++id) colors[id] = geometry::kBlack;
    for (std::size_t pos = 0; pos < partOrder.size(); ++pos) {
        for (int id : a.parts.at(partOrder[pos]).pieceIds) colors[id] = std::string(kPartPalette[pos]);
    }
    return colors;
}

std::vector<AugmentedExample> augment_annotation(const corpus::Annotation& a, Rng& rng) {
    const std::size_t p = a.parts.size();
    if (p == 0) throw std::invalid_argument("augmentation needs at least one part");
    if (p > kPartPalette.size()) throw std::invalid_argument("augmentation supports at most seven parts");
    std::vector<std::size_t> shuffled(p);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    rng.shuffle(shuffled);

    std::vector<AugmentedExample> out;
    out.reserve((std::size_t{1} << p) - 1);
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
        AugmentedExample ex;
        ex.totalParts = p;
        std::vector<std::string> labels;
        for (std::size_t pos = 0; pos < p; ++pos) {
            if (mask & (1u << pos)) {
                ex.partSubset.push_back(shuffled[pos]);
                labels.push_back(a.parts[shuffled[pos]].label);
            }
        }
        ex.renderedText = template_text(a.whole, labels);
        ex.colorMap = color_parts(a, ex.partSubset);
        out.push_back(std::move(ex));
    }
    return out;
}

}  // namespace kilogram::refgames
