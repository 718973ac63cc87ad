#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kilogram::text {

// Normalized token sequence: lowercase, stemmed, stopwords removed.
class TokenList {
public:
    TokenList() = default;

    // Checks the invariants (non-empty lowercase tokens without whitespace,
    // none of them stopwords). Throws std::invalid_argument otherwise.
    static TokenList from_tokens(std::vector<std::string> tokens);

    const std::vector<std::string>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    bool contains(std::string_view token) const;
    std::string joined() const;

    friend bool operator==(const TokenList&, const TokenList&) = default;

private:
    friend TokenList normalize(std::string_view text);
    friend TokenList normalize_part_label(std::string_view label);
    friend TokenList concatenate(const std::vector<TokenList>& lists);
    explicit TokenList(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

    std::vector<std::string> tokens_;
};

inline constexpr std::string_view kUnknownLabel = "UNKNOWN";

// lowercase -> split on whitespace and punctuation -> Porter stem -> drop
// stopwords. A token is dropped when either its surface form or its stem is
// in the stopword list.
TokenList normalize(std::string_view text);

// As normalize, but the UNKNOWN marker becomes the single token "unknown".
TokenList normalize_part_label(std::string_view label);

TokenList concatenate(const std::vector<TokenList>& lists);

// Lowercased tokens split on whitespace and ASCII punctuation. Bytes outside
// ASCII are kept as word characters.
std::vector<std::string> tokenize(std::string_view text);

// Vocabulary pipeline for dataset statistics: lowercase and stem, no stopword
// removal.
std::vector<std::string> vocabulary_tokens(std::string_view text);

// Number of maximal non-whitespace runs.
std::size_t whitespace_length(std::string_view text);

const std::set<std::string, std::less<>>& stopwords();
bool is_stopword(std::string_view word);

// FNV-1a 64 of the bundled stopword resource, as 16 hex digits.
std::string stopword_hash();

// One-line description of the pipeline for report headers.
std::string pipeline_description();

}  // namespace kilogram::text
