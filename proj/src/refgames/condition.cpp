#include "kilogram/refgames/condition.hpp"

#include <stdexcept>
#include <vector>

namespace kilogram::refgames {

Condition Condition::parse(std::string_view name) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto plus = name.find('+');
        fields.push_back(name.substr(0, plus));
        if (plus == std::string_view::npos) break;
        name.remove_prefix(plus + 1);
    }
    if (fields.size() < 2 || fields.size() > 3) throw std::invalid_argument("condition must look like 'parts+color[+aug]'");
    Condition c;
    if (fields[0] == "whole") {
        c.text = TextMode::Whole;
    } else if (fields[0] == "parts") {
        c.text = TextMode::Parts;
    } else {
        throw std::invalid_argument("unknown text condition: " + std::string(fields[0]));
    }
    if (fields[1] == "black") {
        c.image = ImageMode::Black;
    } else if (fields[1] == "color") {
        c.image = ImageMode::Color;
    } else {
        throw std::invalid_argument("unknown image condition: " + std::string(fields[1]));
    }
    if (fields.size() == 3) {
        if (fields[2] != "aug") throw std::invalid_argument("unknown condition suffix: " + std::string(fields[2]));
        c.augmented = true;
    }
    if (!c.valid()) throw std::invalid_argument("augmentation is only defined for parts+color");
    return c;
}

std::string Condition::str() const {
    std::string s = text == TextMode::Whole ? "whole" : "parts";
    s += image == ImageMode::Black ? "+black" : "+color";
    if (augmented) s += "+aug";
    return s;
}

}  // namespace kilogram::refgames
