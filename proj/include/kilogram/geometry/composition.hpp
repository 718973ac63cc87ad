#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kilogram/geometry/tangram.hpp"

namespace kilogram::geometry {

class CompositionError : public std::runtime_error {
public:
    enum class Kind { Malformed, NonCanonicalGeometry, InexpressibleCoordinate, PieceCount, Rotation };
    CompositionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

enum class ParseMode {
    Strict,   // exactly seven pieces, rotation on the 45-degree grid, canonical geometry
    Lenient,  // structural parse only; violations are left to validate_tangram
};

// Composition document (JSON):
//   {"id": "...", "pieces": [{"id": 1, "kind": "Square", "rotation": 45, "mirrored": false,
//     "translation": {"x": {"a": "1/2", "b": "0"}, "y": {"a": "0", "b": "3/2"}},
//     "vertices": [...optional, same coordinate encoding...]}]}
// Each coordinate is a + b*sqrt(2) with a and b given as integer fractions.
Tangram parse_composition(std::string_view document, ParseMode mode = ParseMode::Strict);
std::string write_composition(const Tangram& t);

Tangram load_composition_file(const std::string& path, ParseMode mode = ParseMode::Strict);

}  // namespace kilogram::geometry
