#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kilogram::refgames {

// Plural when the last word ends in 's' and stemming removes it.
bool is_plural_label(std::string_view label);

// "a", "an", or "" for plural labels and labels that already start with a
// determiner or number.
std::string indefinite_article(std::string_view label);

// "<whole> with <part>, <part>, ..., and <part>", each singular part with an
// indefinite article. No parts: the whole description alone.
std::string template_text(std::string_view whole, const std::vector<std::string>& partLabels);

}  // namespace kilogram::refgames
