#include "kilogram/service/annotation_service.hpp"

#include <algorithm>
#include <ostream>

#include "kilogram/corpus/io.hpp"

namespace kilogram::service {

using nlohmann::json;

std::string to_string(AssignStatus s) {
    switch (s) {
        case AssignStatus::Assigned: return "assigned";
        case AssignStatus::NoTask: return "no-task";
        case AssignStatus::Unqualified: return "unqualified";
        case AssignStatus::AtCap: return "cap-reached";
    }
    return "?";
}

std::string to_string(SubmitStatus s) {
    switch (s) {
        case SubmitStatus::Accepted: return "accepted";
        case SubmitStatus::Rejected: return "rejected";
        case SubmitStatus::Duplicate: return "duplicate";
        case SubmitStatus::Unassigned: return "unassigned";
    }
    return "?";
}

AnnotationService::AnnotationService(AnnotationTaskConfig config, EventLog& log)
    : config_(std::move(config)), log_(log), rng_(config_.seed) {
    std::sort(config_.tangramIds.begin(), config_.tangramIds.end());
    config_.tangramIds.erase(std::unique(config_.tangramIds.begin(), config_.tangramIds.end()), config_.tangramIds.end());
    log_.replay([this](const json& r) { apply(r); });
}

void AnnotationService::apply(const json& r) {
    const std::string type = r.value("type", "");
    if (type == "qualify") {
        qualified_[r.at("workerId").get<std::string>()] = r.at("qualified").get<bool>();
    } else if (type == "reserve") {
        const auto worker = r.at("workerId").get<std::string>();
        const auto tangram = r.at("tangramId").get<std::string>();
        reservations_[worker] = tangram;
        ++reserved_[tangram];
    } else if (type == "annotation") {
        auto a = corpus::parse_annotation_line(r.at("annotation").dump());
        const auto it = reservations_.find(a.workerId);
        if (it != reservations_.end() && it->second == a.tangramId) {
            --reserved_[a.tangramId];
            reservations_.erase(it);
        }
        done_[a.workerId].insert(a.tangramId);
        ++accepted_[a.tangramId];
        annotations_.push_back(std::move(a));
    }
}

void AnnotationService::set_qualified(const std::string& workerId, bool qualified) {
    std::lock_guard lock(mu_);
    const json r = {{"type", "qualify"}, {"workerId", workerId}, {"qualified", qualified}, {"time", utc_timestamp()}};
    log_.append(r);
    apply(r);
}

bool AnnotationService::is_qualified(const std::string& workerId) const {
    std::lock_guard lock(mu_);
    const auto it = qualified_.find(workerId);
    return it != qualified_.end() && it->second;
}

std::size_t AnnotationService::target(const std::string& tangramId) const {
    return config_.denseIds.count(tangramId) ? config_.denseTarget : config_.sparseTarget;
}

namespace {

std::size_t lookup(const std::map<std::string, std::size_t>& m, const std::string& key) {
    const auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

}  // namespace

AssignResult AnnotationService::assign_annotation_task(const std::string& workerId) {
    std::lock_guard lock(mu_);
    const auto q = qualified_.find(workerId);
    if (q == qualified_.end() || !q->second) return {AssignStatus::Unqualified, {}};

    if (const auto it = reservations_.find(workerId); it != reservations_.end()) {
        return {AssignStatus::Assigned, it->second};
    }
    const auto& done = done_[workerId];
    if (done.size() >= config_.workerCap) return {AssignStatus::AtCap, {}};

    std::vector<const std::string*> best;
    std::size_t best_load = SIZE_MAX;
    for (const auto& id : config_.tangramIds) {
        if (done.count(id)) continue;
        const std::size_t l = lookup(accepted_, id) + lookup(reserved_, id);
        if (l >= target(id)) continue;
        if (l < best_load) {
            best_load = l;
            best.clear();
        }
        if (l == best_load) best.push_back(&id);
    }
    if (best.empty()) return {AssignStatus::NoTask, {}};

    const std::string tangram = *best[rng_.uniform_index(best.size())];
    const json r = {{"type", "reserve"}, {"workerId", workerId}, {"tangramId", tangram}, {"time", utc_timestamp()}};
    log_.append(r);
    apply(r);
    return {AssignStatus::Assigned, tangram};
}

SubmitResult AnnotationService::submit_annotation(const std::string& workerId, const std::string& tangramId,
                                                  const std::string& whole, const std::vector<PartSubmission>& parts) {
    std::lock_guard lock(mu_);
    if (const auto d = done_.find(workerId); d != done_.end() && d->second.count(tangramId)) {
        return {SubmitStatus::Duplicate, "tangram already annotated by this worker", {}};
    }
    const auto res = reservations_.find(workerId);
    if (res == reservations_.end() || res->second != tangramId) {
        return {SubmitStatus::Unassigned, "task was not assigned to this worker", {}};
    }

    corpus::Annotation a;
    a.tangramId = tangramId;
    a.workerId = workerId;
    a.whole = whole;
    for (const auto& p : parts) {
        corpus::Part part;
        part.pieceIds = p.pieceIds;
        std::sort(part.pieceIds.begin(), part.pieceIds.end());
        part.label = p.label;
        a.parts.push_back(std::move(part));
    }
    a.timestamp = utc_timestamp();
    a.collection = config_.denseIds.count(tangramId) ? corpus::Collection::Dense : corpus::Collection::Sparse;
    if (const auto issue = corpus::check_annotation(a)) return {SubmitStatus::Rejected, corpus::to_string(*issue), {}};
    a = corpus::make_annotation(std::move(a));

    const json r = {{"type", "annotation"}, {"annotation", json::parse(corpus::write_annotation_line(a))}};
    log_.append(r);
    apply(r);
    return {SubmitStatus::Accepted, {}, a.annotationId};
}

std::size_t AnnotationService::load(const std::string& tangramId) const {
    std::lock_guard lock(mu_);
    return lookup(accepted_, tangramId) + lookup(reserved_, tangramId);
}

std::size_t AnnotationService::accepted_count(const std::string& tangramId) const {
    std::lock_guard lock(mu_);
    return lookup(accepted_, tangramId);
}

std::size_t AnnotationService::worker_tangram_count(const std::string& workerId) const {
    std::lock_guard lock(mu_);
    const auto it = done_.find(workerId);
    return it == done_.end() ? 0 : it->second.size();
}

std::vector<corpus::Annotation> AnnotationService::annotations() const {
    std::lock_guard lock(mu_);
    return annotations_;
}

void AnnotationService::export_annotations(std::ostream& out) const {
    corpus::write_corpus(out, annotations());
}

}  // namespace kilogram::service
