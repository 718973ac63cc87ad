#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kilogram::corpus {

inline constexpr int kPieceCount = 7;
inline constexpr std::uint8_t kAllPiecesMask = 0x7f;

// Bit (id - 1) set for each piece id in 1..7.
using PieceMask = std::uint8_t;

struct Part {
    std::vector<int> pieceIds;  // sorted, unique
    std::string label;

    PieceMask mask() const;
    friend bool operator==(const Part&, const Part&) = default;
};

enum class Collection { Sparse, Dense };

struct Annotation {
    std::string annotationId;
    std::string tangramId;
    std::string workerId;  // opaque hash
    std::string whole;
    std::vector<Part> parts;  // as submitted
    std::string timestamp;
    Collection collection = Collection::Sparse;
    std::string metadata;  // free-form JSON blob, may be empty

    std::vector<PieceMask> segmentation() const;
    std::vector<std::string> part_labels() const;
    friend bool operator==(const Annotation&, const Annotation&) = default;
};

enum class AnnotationIssue {
    EmptyWhole,
    EmptyPart,
    EmptyLabel,
    PieceOutOfRange,
    OverlappingParts,
    IncompleteSegmentation,
    MissingTangramId,
    MissingWorkerId,
};

std::string to_string(AnnotationIssue issue);

// Returns the first problem found, or nothing for a valid annotation.
std::optional<AnnotationIssue> check_annotation(const Annotation& a);

class AnnotationError : public std::invalid_argument {
public:
    AnnotationError(AnnotationIssue issue, const std::string& what) : std::invalid_argument(what), issue_(issue) {}
    AnnotationIssue issue() const { return issue_; }

private:
    AnnotationIssue issue_;
};

// Builds a Part with sorted, de-duplicated piece ids.
Part make_part(std::vector<int> pieceIds, std::string label);

// Validates and fills a default annotationId ("<tangramId>#<workerId>").
Annotation make_annotation(Annotation a);

class DuplicateAnnotation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Named collection of tangrams with their annotations. Annotations are
// validated on insertion; (workerId, tangramId) is unique.
class AnalysisSet {
public:
    AnalysisSet() = default;
    explicit AnalysisSet(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    const std::map<std::string, std::vector<Annotation>>& members() const { return members_; }

    void add(Annotation a);
    void add_tangram(const std::string& tangramId) { members_[tangramId]; }

    const std::vector<Annotation>& annotations(const std::string& tangramId) const;
    bool contains(const std::string& tangramId) const { return members_.count(tangramId) != 0; }
    std::size_t tangram_count() const { return members_.size(); }
    std::size_t annotation_count() const;
    std::vector<std::string> tangram_ids() const;

private:
    std::string name_;
    std::map<std::string, std::vector<Annotation>> members_;
};

}  // namespace kilogram::corpus
