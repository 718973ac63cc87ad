#include "kilogram/refgames/template.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "kilogram/text/normalize.hpp"
#include "kilogram/text/porter.hpp"

namespace kilogram::refgames {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

constexpr std::array<std::string_view, 16> kDeterminers = {
    "a", "an", "the", "one", "two", "three", "four", "five", "six", "seven", "some", "his", "her", "its", "their", "my",
};

}  // namespace

bool is_plural_label(std::string_view label) {
    const auto ws = words(label);
    if (ws.empty()) return false;
    std::string last = ws.back();
    while (!last.empty() && !std::isalnum(static_cast<unsigned char>(last.back()))) last.pop_back();
    if (last.size() < 2 || last.back() != 's') return false;
    const std::string stem = text::porter_stem(last);
    return stem.empty() || stem.back() != 's';
}

std::string indefinite_article(std::string_view label) {
    const auto ws = words(label);
    if (ws.empty()) return "";
    for (auto d : kDeterminers) {
        if (ws.front() == d) return "";
    }
    if (std::isdigit(static_cast<unsigned char>(ws.front()[0]))) return "";
    if (is_plural_label(label)) return "";
    switch (ws.front()[0]) {
        case 'a': case 'e': case 'i': case 'o': case 'u': return "an";
        default: return "a";
    }
}

std::string template_text(std::string_view whole, const std::vector<std::string>& partLabels) {
    std::string out = trim(whole);
    if (out.empty()) throw std::invalid_argument("template_text needs a non-empty whole-shape description");
    if (partLabels.empty()) return out;
    std::vector<std::string> phrases;
    for (const auto& raw : partLabels) {
        const std::string label = trim(raw);
        if (label.empty()) throw std::invalid_argument("template_text got an empty part label");
        const std::string article = indefinite_article(label);
        phrases.push_back(article.empty() ? label : article + " " + label);
    }
    out += " with ";
    if (phrases.size() == 1) return out + phrases[0];
    if (phrases.size() == 2) return out + phrases[0] + " and " + phrases[1];
    for (std::size_t i = 0; i + 1 < phrases.size(); ++i) out += phrases[i] + ", ";
    return out + "and " + phrases.back();
}

}  // namespace kilogram::refgames
