#include "kilogram/text/normalize.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "kilogram/rng.hpp"
#include "kilogram/text/porter.hpp"

namespace kilogram::text {

namespace detail {
extern const std::string_view kStopwordResource;
}

namespace {

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_word_char(unsigned char c) { return c >= 0x80 || std::isalnum(c); }

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

TokenList TokenList::from_tokens(std::vector<std::string> tokens) {
    for (const auto& t : tokens) {
        if (t.empty()) throw std::invalid_argument("empty token");
        for (unsigned char c : t) {
            if (is_space(c) || (c < 0x80 && std::isupper(c))) {
                throw std::invalid_argument("token must be lowercase without whitespace: '" + t + "'");
            }
        }
        if (is_stopword(t)) throw std::invalid_argument("token is a stopword: '" + t + "'");
    }
    return TokenList(std::move(tokens));
}

bool TokenList::contains(std::string_view token) const {
    for (const auto& t : tokens_) {
        if (t == token) return true;
    }
    return false;
}

std::string TokenList::joined() const {
    std::string out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (i) out += ' ';
        out += tokens_[i];
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (unsigned char c : text) {
        if (is_word_char(c)) {
            current += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
        } else if (!current.empty()) {
            out.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

TokenList normalize(std::string_view text) {
    std::vector<std::string> out;
    for (auto& surface : tokenize(text)) {
        if (is_stopword(surface)) continue;
        std::string stem = porter_stem_fixpoint(surface);
        if (stem.empty() || is_stopword(stem)) continue;
        out.push_back(std::move(stem));
    }
    return TokenList(std::move(out));
}

TokenList normalize_part_label(std::string_view label) {
    if (trim(label) == kUnknownLabel) return TokenList({"unknown"});
    return normalize(label);
}

TokenList concatenate(const std::vector<TokenList>& lists) {
    std::vector<std::string> out;
    for (const auto& l : lists) out.insert(out.end(), l.tokens_.begin(), l.tokens_.end());
    return TokenList(std::move(out));
}

std::vector<std::string> vocabulary_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : tokenize(text)) out.push_back(porter_stem(t));
    return out;
}

std::size_t whitespace_length(std::string_view text) {
    std::size_t n = 0;
    bool in_run = false;
    for (unsigned char c : text) {
        if (is_space(c)) {
            in_run = false;
        } else if (!in_run) {
            in_run = true;
            ++n;
        }
    }
    return n;
}

const std::set<std::string, std::less<>>& stopwords() {
    static const std::set<std::string, std::less<>> words = [] {
        std::set<std::string, std::less<>> s;
        std::string_view rest = detail::kStopwordResource;
        while (!rest.empty()) {
            const auto nl = rest.find('\n');
            std::string line = trim(rest.substr(0, nl));
            if (!line.empty() && line[0] != '#') s.insert(std::move(line));
            if (nl == std::string_view::npos) break;
            rest.remove_prefix(nl + 1);
        }
        return s;
    }();
    return words;
}

bool is_stopword(std::string_view word) { return stopwords().find(word) != stopwords().end(); }

std::string stopword_hash() {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(detail::kStopwordResource)));
    return buf;
}

std::string pipeline_description() {
    return "lowercase>split-whitespace-and-punctuation>porter-stem>stopwords(" + std::to_string(stopwords().size()) +
           ",fnv1a64=" + stopword_hash() + ")";
}

}  // namespace kilogram::text
