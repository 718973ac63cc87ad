#include "kilogram/corpus/annotation.hpp"

#include <algorithm>

namespace kilogram::corpus {

namespace {

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c == ' ' || (c >= '\t' && c <= '\r'); });
}

}  // namespace

PieceMask Part::mask() const {
    PieceMask m = 0;
    for (int id : pieceIds) {
        if (id >= 1 && id <= kPieceCount) m |= static_cast<PieceMask>(1u << (id - 1));
    }
    return m;
}

std::vector<PieceMask> Annotation::segmentation() const {
    std::vector<PieceMask> seg;
    seg.reserve(parts.size());
    for (const auto& p : parts) seg.push_back(p.mask());
    return seg;
}

std::vector<std::string> Annotation::part_labels() const {
    std::vector<std::string> labels;
    labels.reserve(parts.size());
    for (const auto& p : parts) labels.push_back(p.label);
    return labels;
}

std::string to_string(AnnotationIssue issue) {
    switch (issue) {
        case AnnotationIssue::EmptyWhole: return "empty whole-shape description";
        case AnnotationIssue::EmptyPart: return "part without pieces";
        case AnnotationIssue::EmptyLabel: return "part without a label";
        case AnnotationIssue::PieceOutOfRange: return "piece id outside 1..7";
        case AnnotationIssue::OverlappingParts: return "a piece belongs to more than one part";
        case AnnotationIssue::IncompleteSegmentation: return "not all pieces are annotated";
        case AnnotationIssue::MissingTangramId: return "missing tangram id";
        case AnnotationIssue::MissingWorkerId: return "missing worker id";
    }
    return "unknown issue";
}

std::optional<AnnotationIssue> check_annotation(const Annotation& a) {
    if (a.tangramId.empty()) return AnnotationIssue::MissingTangramId;
    if (a.workerId.empty()) return AnnotationIssue::MissingWorkerId;
    if (blank(a.whole)) return AnnotationIssue::EmptyWhole;
    PieceMask covered = 0;
    for (const auto& part : a.parts) {
        if (part.pieceIds.empty()) return AnnotationIssue::EmptyPart;
        if (blank(part.label)) return AnnotationIssue::EmptyLabel;
        for (int id : part.pieceIds) {
            if (id < 1 || id > kPieceCount) return AnnotationIssue::PieceOutOfRange;
            const auto bit = static_cast<PieceMask>(1u << (id - 1));
            if (covered & bit) return AnnotationIssue::OverlappingParts;
            covered |= bit;
        }
    }
    if (covered != kAllPiecesMask) return AnnotationIssue::IncompleteSegmentation;
    return std::nullopt;
}

Part make_part(std::vector<int> pieceIds, std::string label) {
    std::sort(pieceIds.begin(), pieceIds.end());
    if (std::adjacent_find(pieceIds.begin(), pieceIds.end()) != pieceIds.end()) {
        throw AnnotationError(AnnotationIssue::OverlappingParts, "piece listed twice within a part");
    }
    return Part{std::move(pieceIds), std::move(label)};
}

Annotation make_annotation(Annotation a) {
    for (auto& part : a.parts) std::sort(part.pieceIds.begin(), part.pieceIds.end());
    if (auto issue = check_annotation(a)) {
        throw AnnotationError(*issue, "invalid annotation of " + a.tangramId + " by " + a.workerId + ": " + to_string(*issue));
    }
    if (a.annotationId.empty()) a.annotationId = a.tangramId + "#" + a.workerId;
    return a;
}

void AnalysisSet::add(Annotation a) {
    a = make_annotation(std::move(a));
    auto& list = members_[a.tangramId];
    for (const auto& existing : list) {
        if (existing.workerId == a.workerId) {
            throw DuplicateAnnotation("worker " + a.workerId + " already annotated " + a.tangramId + " in set " + name_);
        }
    }
    list.push_back(std::move(a));
}

const std::vector<Annotation>& AnalysisSet::annotations(const std::string& tangramId) const {
    const auto it = members_.find(tangramId);
    if (it == members_.end()) throw std::out_of_range("tangram not in set " + name_ + ": " + tangramId);
    return it->second;
}

std::size_t AnalysisSet::annotation_count() const {
    std::size_t n = 0;
    for (const auto& [id, list] : members_) n += list.size();
    return n;
}

std::vector<std::string> AnalysisSet::tangram_ids() const {
    std::vector<std::string> ids;
    ids.reserve(members_.size());
    for (const auto& [id, list] : members_) ids.push_back(id);
    return ids;
}

}  // namespace kilogram::corpus
