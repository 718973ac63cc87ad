#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "kilogram/geometry/tangram.hpp"
#include "kilogram/service/annotation_service.hpp"
#include "kilogram/service/config.hpp"
#include "kilogram/service/store.hpp"
#include "kilogram/service/trial_service.hpp"

namespace kilogram::service {

// Everything the HTTP layer serves: both task backends plus the stimulus
// compositions. The trial backend is optional; its endpoints answer 503
// without it.
class App {
public:
    App(const std::filesystem::path& dataDir, AnnotationTaskConfig annotation, std::optional<TrialConfig> trials,
        std::map<std::string, geometry::Tangram> compositions);

    AnnotationService& annotations() { return *annotations_; }
    TrialService* trials() { return trials_.get(); }
    const geometry::Tangram* composition(const std::string& id) const;
    std::uint64_t default_seed() const { return seed_; }

private:
    EventLog annotationLog_;
    EventLog trialLog_;
    std::unique_ptr<AnnotationService> annotations_;
    std::unique_ptr<TrialService> trials_;
    std::map<std::string, geometry::Tangram> compositions_;
    std::uint64_t seed_ = 0;
};

// Loads compositions, id lists and game files named by the config.
std::unique_ptr<App> make_app(const ServiceConfig& config);

// JSON over HTTP:
//   GET  /api/annotation-task?workerId=
//   POST /api/annotations                 {workerId, tangramId, whole, parts: [{pieceIds, label}]}
//   POST /api/trial-session               {participantId, seed?}
//   GET  /api/trial-session/{id}/next
//   POST /api/trial-session/{id}/response {trialIndex, chosenItemIndex}
//   GET  /api/export/{annotations|trials}
//   POST /api/admin/qualify               {workerId, qualified}
//   GET  /stimuli/{tangramId}.svg?condition=&colors=1:coral,2:gold
class HttpServer {
public:
    explicit HttpServer(App& app);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    // Port 0 picks a free port. Returns the bound port.
    int bind(const std::string& host, int port);
    // Blocks until stop().
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace kilogram::service
