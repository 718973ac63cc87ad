#pragma once

#include <string>
#include <string_view>

namespace kilogram::text {

// Porter (1980) suffix-stripping stemmer over lowercase ASCII words. Words of
// one or two letters are returned unchanged; non-ASCII input is not stemmed.
std::string porter_stem(std::string_view word);

// Applies porter_stem until the word stops changing.
std::string porter_stem_fixpoint(std::string_view word);

}  // namespace kilogram::text
