#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "kilogram/geometry/tangram.hpp"

namespace kilogram::geometry {

// Fixed rendering constants, in tangram units (small-triangle leg = 1).
inline constexpr double kStrokeWidth = 0.04;
// White padding on each side, as a fraction of the larger bounding-box side.
inline constexpr double kPaddingRatio = 0.1;

inline constexpr const char* kBlack = "#000000";

class RenderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// True for lowercase CSS color keywords and "#000000".
bool is_valid_color(const std::string& color);

// One <path id="piece-N"> per piece. `colors` maps pieceId to a color;
// "black" is written as "#000000".
std::string render_svg(const Tangram& t, const std::map<int, std::string>& colors,
                       const std::string& borderColor = "white");

std::map<int, std::string> all_black(const Tangram& t);

}  // namespace kilogram::geometry
