#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/rng.hpp"
#include "kilogram/service/store.hpp"

namespace kilogram::service {

inline constexpr std::size_t kWorkerCap = 200;
inline constexpr std::size_t kSparseTarget = 10;
inline constexpr std::size_t kDenseTarget = 50;

struct AnnotationTaskConfig {
    std::vector<std::string> tangramIds;
    std::set<std::string> denseIds;
    std::size_t sparseTarget = kSparseTarget;
    std::size_t denseTarget = kDenseTarget;
    std::size_t workerCap = kWorkerCap;
    std::uint64_t seed = 0;
};

enum class AssignStatus { Assigned, NoTask, Unqualified, AtCap };
std::string to_string(AssignStatus s);

struct AssignResult {
    AssignStatus status = AssignStatus::NoTask;
    std::string tangramId;
};

enum class SubmitStatus { Accepted, Rejected, Duplicate, Unassigned };
std::string to_string(SubmitStatus s);

struct SubmitResult {
    SubmitStatus status = SubmitStatus::Rejected;
    std::string reason;  // annotation issue for rejections
    std::string annotationId;
};

struct PartSubmission {
    std::vector<int> pieceIds;
    std::string label;
};

// Two-stage annotation task backend. Every mutation holds one lock and is
// logged before the in-memory index changes; reservations count toward both
// the per-tangram target and the worker cap, so concurrent requests cannot
// overshoot either.
class AnnotationService {
public:
    AnnotationService(AnnotationTaskConfig config, EventLog& log);

    void set_qualified(const std::string& workerId, bool qualified);
    bool is_qualified(const std::string& workerId) const;

    // Fewest-annotations-first with a random tie-break. A worker holding an
    // unfinished reservation gets the same tangram back.
    AssignResult assign_annotation_task(const std::string& workerId);

    SubmitResult submit_annotation(const std::string& workerId, const std::string& tangramId, const std::string& whole,
                                   const std::vector<PartSubmission>& parts);

    std::size_t target(const std::string& tangramId) const;
    // Accepted plus reserved.
    std::size_t load(const std::string& tangramId) const;
    std::size_t accepted_count(const std::string& tangramId) const;
    std::size_t worker_tangram_count(const std::string& workerId) const;
    std::vector<corpus::Annotation> annotations() const;

    void export_annotations(std::ostream& out) const;

private:
    void apply(const nlohmann::json& record);

    AnnotationTaskConfig config_;
    EventLog& log_;
    mutable std::mutex mu_;
    Rng rng_;
    std::map<std::string, bool> qualified_;
    std::map<std::string, std::set<std::string>> done_;      // worker -> tangrams annotated
    std::map<std::string, std::string> reservations_;        // worker -> tangram
    std::map<std::string, std::size_t> accepted_;            // tangram -> count
    std::map<std::string, std::size_t> reserved_;            // tangram -> count
    std::vector<corpus::Annotation> annotations_;
};

}  // namespace kilogram::service
