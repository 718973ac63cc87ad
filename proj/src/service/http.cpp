#include "kilogram/service/http.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "kilogram/corpus/io.hpp"
#include "kilogram/geometry/composition.hpp"
#include "kilogram/geometry/svg.hpp"
#include "kilogram/refgames/io.hpp"

namespace kilogram::service {

using nlohmann::json;

App::App(const std::filesystem::path& dataDir, AnnotationTaskConfig annotation, std::optional<TrialConfig> trials,
         std::map<std::string, geometry::Tangram> compositions)
    : annotationLog_(dataDir / "annotations.log.jsonl"),
      trialLog_(dataDir / "trials.log.jsonl"),
      compositions_(std::move(compositions)),
      seed_(annotation.seed) {
    annotations_ = std::make_unique<AnnotationService>(std::move(annotation), annotationLog_);
    if (trials) {
        if (!compositions_.count(trials->catchTangramId)) {
            compositions_.emplace(trials->catchTangramId, geometry::canonical_square(trials->catchTangramId));
        }
        trials_ = std::make_unique<TrialService>(std::move(*trials), trialLog_);
    }
}

const geometry::Tangram* App::composition(const std::string& id) const {
    const auto it = compositions_.find(id);
    return it == compositions_.end() ? nullptr : &it->second;
}

std::unique_ptr<App> make_app(const ServiceConfig& config) {
    std::map<std::string, geometry::Tangram> compositions;
    if (!std::filesystem::is_directory(config.compositions)) {
        throw ConfigError("compositions directory " + config.compositions.string() + " not found");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(config.compositions)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        auto t = geometry::load_composition_file(f.string());
        const std::string id = t.id;
        if (!compositions.emplace(id, std::move(t)).second) throw ConfigError("duplicate composition id " + id);
    }

    AnnotationTaskConfig ac;
    if (config.tangrams) {
        ac.tangramIds = corpus::read_id_list_file(config.tangrams->string());
    } else {
        for (const auto& [id, t] : compositions) {
            if (id != config.catchTangramId) ac.tangramIds.push_back(id);
        }
    }
    for (const auto& id : ac.tangramIds) {
        if (!compositions.count(id)) throw ConfigError("no composition for tangram " + id);
    }
    if (config.denseIds) {
        for (auto& id : corpus::read_id_list_file(config.denseIds->string())) ac.denseIds.insert(std::move(id));
    }
    ac.sparseTarget = config.sparseTarget;
    ac.denseTarget = config.denseTarget;
    ac.workerCap = config.cap;
    ac.seed = config.seed;

    std::optional<TrialConfig> tc;
    if (!config.gamePools.empty()) {
        tc.emplace();
        tc->catchTangramId = config.catchTangramId;
        const auto load = [&](const std::filesystem::path& p) {
            auto games = refgames::read_games_file(p.string());
            for (const auto& g : games) {
                if (g.k != config.k) throw ConfigError("game " + g.id + " in " + p.string() + " has k=" + std::to_string(g.k));
            }
            return games;
        };
        for (const auto& [cond, p] : config.gamePools) tc->gamePools[cond] = load(p);
        for (const auto& [cond, p] : config.practice) tc->practice[cond] = load(p);
    }
    return std::make_unique<App>(config.dataDir, std::move(ac), std::move(tc), std::move(compositions));
}

namespace {

void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void error(httplib::Response& res, int status, const std::string& message) {
    reply(res, status, {{"error", message}});
}

std::optional<json> body_json(const httplib::Request& req, httplib::Response& res) {
    try {
        json j = json::parse(req.body);
        if (!j.is_object()) throw std::invalid_argument("not an object");
        return j;
    } catch (const std::exception&) {
        error(res, 400, "request body must be a JSON object");
        return std::nullopt;
    }
}

json color_map_json(const refgames::ColorMap& colors) {
    json out = json::object();
    for (const auto& [piece, color] : colors) out[std::to_string(piece)] = color;
    return out;
}

int trial_status(TrialError::Kind kind) {
    switch (kind) {
        case TrialError::Kind::UnknownSession: return 404;
        case TrialError::Kind::BadChoice: return 400;
        default: return 409;
    }
}

// "1:coral,2:gold" -> {1: coral, 2: gold}
std::map<int, std::string> parse_colors(const std::string& text) {
    std::map<int, std::string> out;
    std::stringstream ss(text);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        if (entry.empty()) continue;
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad color entry " + entry);
        const int piece = std::stoi(entry.substr(0, colon));
        std::string color = entry.substr(colon + 1);
        if (!geometry::is_valid_color(color)) throw std::invalid_argument("unsupported color " + color);
        out[piece] = color;
    }
    return out;
}

void register_routes(httplib::Server& srv, App& app) {
    srv.Get("/api/annotation-task", [&app](const httplib::Request& req, httplib::Response& res) {
        const std::string worker = req.get_param_value("workerId");
        if (worker.empty()) return error(res, 400, "workerId is required");
        const AssignResult r = app.annotations().assign_annotation_task(worker);
        switch (r.status) {
            case AssignStatus::Assigned:
                return reply(res, 200, {{"status", "assigned"}, {"tangramId", r.tangramId},
                                        {"stimulus", "/stimuli/" + r.tangramId + ".svg"}});
            case AssignStatus::NoTask: return reply(res, 200, {{"status", "no-task"}});
            case AssignStatus::Unqualified: return reply(res, 403, {{"status", "unqualified"}});
            case AssignStatus::AtCap: return reply(res, 409, {{"status", "cap-reached"}});
        }
    });

    srv.Post("/api/annotations", [&app](const httplib::Request& req, httplib::Response& res) {
        const auto body = body_json(req, res);
        if (!body) return;
        std::vector<PartSubmission> parts;
        std::string worker, tangram, whole;
        try {
            worker = body->at("workerId").get<std::string>();
            tangram = body->at("tangramId").get<std::string>();
            whole = body->value("whole", std::string());
            for (const auto& p : body->at("parts")) {
                parts.push_back({p.at("pieceIds").get<std::vector<int>>(), p.value("label", std::string())});
            }
        } catch (const json::exception& e) {
            return error(res, 400, std::string("malformed submission: ") + e.what());
        }
        const SubmitResult r = app.annotations().submit_annotation(worker, tangram, whole, parts);
        json out = {{"status", to_string(r.status)}};
        if (!r.reason.empty()) out["reason"] = r.reason;
        if (!r.annotationId.empty()) out["annotationId"] = r.annotationId;
        const int status = r.status == SubmitStatus::Accepted ? 201 : r.status == SubmitStatus::Rejected ? 422 : 409;
        reply(res, status, out);
    });

    srv.Post("/api/admin/qualify", [&app](const httplib::Request& req, httplib::Response& res) {
        const auto body = body_json(req, res);
        if (!body) return;
        try {
            const auto worker = body->at("workerId").get<std::string>();
            const bool q = body->value("qualified", true);
            app.annotations().set_qualified(worker, q);
            reply(res, 200, {{"workerId", worker}, {"qualified", q}});
        } catch (const json::exception& e) {
            error(res, 400, e.what());
        }
    });

    srv.Post("/api/trial-session", [&app](const httplib::Request& req, httplib::Response& res) {
        if (!app.trials()) return error(res, 503, "no trial game pool configured");
        const auto body = body_json(req, res);
        if (!body) return;
        try {
            const auto pid = body->at("participantId").get<std::string>();
            const auto seed = body->value("seed", app.default_seed());
            const TrialSession s = app.trials()->start_trial_session(pid, seed);
            std::size_t practice = 0;
            for (const auto& t : s.trials) practice += t.phase == Phase::Practice;
            reply(res, 201, {{"sessionId", s.sessionId}, {"condition", s.condition.str()},
                             {"practiceTrials", practice}, {"testTrials", s.trials.size() - practice}});
        } catch (const json::exception& e) {
            error(res, 400, e.what());
        } catch (const TrialError& e) {
            error(res, trial_status(e.kind()), e.what());
        }
    });

    srv.Get(R"(/api/trial-session/([^/]+)/next)", [&app](const httplib::Request& req, httplib::Response& res) {
        if (!app.trials()) return error(res, 503, "no trial game pool configured");
        try {
            const auto v = app.trials()->next_trial(req.matches[1]);
            if (!v) return reply(res, 200, {{"sessionId", std::string(req.matches[1])}, {"finished", true}});
            json items = json::array();
            for (std::size_t i = 0; i < v->tangramIds.size(); ++i) {
                items.push_back({{"index", i}, {"tangramId", v->tangramIds[i]}, {"colorMap", color_map_json(v->colorMaps[i])}});
            }
            reply(res, 200, {{"sessionId", v->sessionId}, {"finished", false}, {"trialIndex", v->trialIndex},
                             {"phase", v->phase}, {"condition", v->condition}, {"text", v->text}, {"items", items}});
        } catch (const TrialError& e) {
            error(res, trial_status(e.kind()), e.what());
        }
    });

    srv.Post(R"(/api/trial-session/([^/]+)/response)", [&app](const httplib::Request& req, httplib::Response& res) {
        if (!app.trials()) return error(res, 503, "no trial game pool configured");
        const auto body = body_json(req, res);
        if (!body) return;
        try {
            const auto index = body->at("trialIndex").get<std::size_t>();
            const auto chosen = body->at("chosenItemIndex").get<std::size_t>();
            const Feedback f = app.trials()->submit_trial_response(req.matches[1], index, chosen);
            json out = {{"trialIndex", f.trialIndex}, {"phase", f.phase}, {"finished", f.finished}};
            if (f.correct) out["correct"] = *f.correct;
            if (f.correctIndex) out["correctIndex"] = *f.correctIndex;
            reply(res, 200, out);
        } catch (const json::exception& e) {
            error(res, 400, e.what());
        } catch (const TrialError& e) {
            error(res, trial_status(e.kind()), e.what());
        }
    });

    srv.Get(R"(/api/export/([a-z]+))", [&app](const httplib::Request& req, httplib::Response& res) {
        const std::string kind = req.matches[1];
        std::ostringstream out;
        if (kind == "annotations") {
            app.annotations().export_annotations(out);
            res.set_content(out.str(), "application/x-ndjson");
        } else if (kind == "trials") {
            if (app.trials()) {
                app.trials()->export_trials(out);
            } else {
                TrialService::write_trials_header(out);
            }
            res.set_content(out.str(), "text/tab-separated-values");
        } else {
            error(res, 404, "unknown export kind " + kind);
        }
    });

    srv.Get(R"(/stimuli/([^/]+)\.svg)", [&app](const httplib::Request& req, httplib::Response& res) {
        const geometry::Tangram* t = app.composition(req.matches[1]);
        if (!t) return error(res, 404, "unknown tangram " + std::string(req.matches[1]));
        try {
            std::map<int, std::string> colors = geometry::all_black(*t);
            bool black = false;
            if (req.has_param("condition")) {
                black = refgames::Condition::parse(req.get_param_value("condition")).image == refgames::ImageMode::Black;
            }
            if (!black && req.has_param("colors")) {
                for (const auto& [piece, color] : parse_colors(req.get_param_value("colors"))) {
                    if (!colors.count(piece)) throw std::invalid_argument("no piece " + std::to_string(piece));
                    colors[piece] = color;
                }
            }
            res.set_content(geometry::render_svg(*t, colors), "image/svg+xml");
        } catch (const std::exception& e) {
            error(res, 400, e.what());
        }
    });
}

}  // namespace

struct HttpServer::Impl {
    httplib::Server server;
};

HttpServer::HttpServer(App& app) : impl_(std::make_unique<Impl>()) { register_routes(impl_->server, app); }

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    if (!impl_->server.bind_to_port(host, port)) return -1;
    return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace kilogram::service
