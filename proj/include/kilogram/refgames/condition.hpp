#pragma once

#include <array>
#include <string>
#include <string_view>

namespace kilogram::refgames {

enum class TextMode { Whole, Parts };
enum class ImageMode { Black, Color };

// Part colors in text order.
inline constexpr std::array<std::string_view, 7> kPartPalette = {
    "coral", "gold", "lightskyblue", "lightpink", "mediumseagreen", "darkgrey", "lightgrey",
};

struct Condition {
    TextMode text = TextMode::Whole;
    ImageMode image = ImageMode::Black;
    bool augmented = false;  // only with parts + color

    // "whole+black", "parts+color", "parts+color+aug", ...
    static Condition parse(std::string_view name);
    std::string str() const;
    bool valid() const { return !augmented || (text == TextMode::Parts && image == ImageMode::Color); }

    friend bool operator==(const Condition&, const Condition&) = default;
};

// The four non-augmented text/image combinations.
inline constexpr std::array<Condition, 4> kBaseConditions = {
    Condition{TextMode::Whole, ImageMode::Black, false},
    Condition{TextMode::Parts, ImageMode::Black, false},
    Condition{TextMode::Whole, ImageMode::Color, false},
    Condition{TextMode::Parts, ImageMode::Color, false},
};

}  // namespace kilogram::refgames
