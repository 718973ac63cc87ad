#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kilogram/corpus/annotation.hpp"

namespace kilogram::corpus {

class CorpusFormatError : public std::runtime_error {
public:
    CorpusFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline constexpr std::string_view kCorpusHeader = "# kilogram annotations v1";

// One JSON object per line:
//   {"annotationId", "tangramId", "workerId", "whole",
//    "parts": [{"pieceIds": [..], "label": ".."}], "timestamp", "collection": "sparse"|"dense", "meta": {...}}
// Blank lines and lines starting with '#' are ignored.
Annotation parse_annotation_line(std::string_view line);
std::string write_annotation_line(const Annotation& a);

// Validates every record and rejects repeated (workerId, tangramId) pairs.
std::vector<Annotation> read_corpus(std::istream& in);
std::vector<Annotation> read_corpus_file(const std::string& path);

void write_corpus(std::ostream& out, const std::vector<Annotation>& annotations);

// Plain list of ids, one per line; '#' comments allowed.
std::vector<std::string> read_id_list_file(const std::string& path);

}  // namespace kilogram::corpus
