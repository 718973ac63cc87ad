#pragma once

#include <map>
#include <string>
#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/rng.hpp"

namespace kilogram::refgames {

using ColorMap = std::map<int, std::string>;  // pieceId -> color

// Colors the given parts (indexes into annotation.parts, in text order) from
// the palette; every other piece is black.
ColorMap color_parts(const corpus::Annotation& a, const std::vector<std::size_t>& partOrder);

struct AugmentedExample {
    std::vector<std::size_t> partSubset;  // indexes into the annotation's parts, in text order
    std::string renderedText;
    ColorMap colorMap;
    std::size_t totalParts = 0;
};

// Shuffles the parts once, then emits one example per non-empty subset of the
// shuffled parts (2^P - 1 examples, subsets in increasing bitmask order).
std::vector<AugmentedExample> augment_annotation(const corpus::Annotation& a, Rng& rng);

}  // namespace kilogram::refgames
