#include "kilogram/service/trial_service.hpp"

#include <ostream>
#include <set>

#include "kilogram/geometry/svg.hpp"
#include "kilogram/refgames/io.hpp"

namespace kilogram::service {

using nlohmann::json;
using refgames::Condition;
using refgames::ReferenceGame;

std::string to_string(Phase p) {
    switch (p) {
        case Phase::Practice: return "practice";
        case Phase::Test: return "test";
        case Phase::Catch: return "catch";
    }
    return "?";
}

namespace {

Phase phase_from_string(const std::string& s) {
    if (s == "practice") return Phase::Practice;
    if (s == "catch") return Phase::Catch;
    if (s == "test") return Phase::Test;
    throw StoreError("unknown trial phase " + s);
}

}  // namespace

TrialService::TrialService(TrialConfig config, EventLog& log) : config_(std::move(config)), log_(log) {
    for (const auto& c : refgames::kBaseConditions) {
        const std::string name = c.str();
        const auto pool = config_.gamePools.find(name);
        if (pool == config_.gamePools.end() || pool->second.size() < kTestTrials) {
            throw std::invalid_argument("game pool for " + name + " needs at least " + std::to_string(kTestTrials) +
                                        " games");
        }
        const auto practice = config_.practice.find(name);
        if (practice == config_.practice.end() || practice->second.size() != kPracticeTrials) {
            throw std::invalid_argument("practice set for " + name + " needs exactly " +
                                        std::to_string(kPracticeTrials) + " games");
        }
        for (const auto& g : pool->second) {
            for (const auto& item : g.items) {
                if (item.tangramId == config_.catchTangramId) {
                    throw std::invalid_argument("game " + g.id + " uses the catch tangram " + config_.catchTangramId);
                }
            }
        }
    }
    log_.replay([this](const json& r) { apply(r); });
}

TrialSession TrialService::plan_session(const std::string& participantId, std::uint64_t seed) const {
    Rng rng(fnv1a64(participantId), seed);
    TrialSession s;
    s.participantId = participantId;
    s.seed = seed;
    s.condition = refgames::kBaseConditions[rng.uniform_index(refgames::kBaseConditions.size())];
    const std::string name = s.condition.str();
    const auto& pool = config_.gamePools.at(name);

    for (const auto& g : config_.practice.at(name)) s.trials.push_back({Phase::Practice, g});

    std::vector<Trial> test;
    for (std::size_t i : rng.sample_without_replacement(pool.size(), kTestTrials)) test.push_back({Phase::Test, pool[i]});

    // Catch trial: the distractors of a random pool game around the square.
    const ReferenceGame& base = pool[rng.uniform_index(pool.size())];
    ReferenceGame catch_game;
    catch_game.id = "catch:" + base.id;
    catch_game.condition = s.condition;
    catch_game.k = base.k;
    for (std::size_t i = 0; i < base.items.size(); ++i) {
        if (i != base.targetIndex) catch_game.items.push_back(base.items[i]);
    }
    refgames::GameItem square;
    square.tangramId = config_.catchTangramId;
    square.annotationId = "catch";
    square.renderedText = config_.catchText;
    for (int id = 1; id <= corpus::kPieceCount; ++id) square.colorMap[id] = geometry::kBlack;
    catch_game.targetIndex = rng.uniform_index(catch_game.k);
    catch_game.items.insert(catch_game.items.begin() + static_cast<std::ptrdiff_t>(catch_game.targetIndex), square);

    const std::size_t catch_pos = rng.uniform_index(kTestTrials + 1);
    test.insert(test.begin() + static_cast<std::ptrdiff_t>(catch_pos), {Phase::Catch, catch_game});
    s.catchTrialIndex = kPracticeTrials + catch_pos;
    for (auto& t : test) s.trials.push_back(std::move(t));
    return s;
}

void TrialService::apply(const json& r) {
    const std::string type = r.value("type", "");
    if (type == "session") {
        TrialSession s;
        s.sessionId = r.at("sessionId").get<std::string>();
        s.participantId = r.at("participantId").get<std::string>();
        s.condition = Condition::parse(r.at("condition").get<std::string>());
        s.seed = r.at("seed").get<std::uint64_t>();
        s.catchTrialIndex = r.at("catchTrialIndex").get<std::size_t>();
        for (const auto& t : r.at("trials")) {
            s.trials.push_back({phase_from_string(t.at("phase").get<std::string>()),
                                refgames::parse_game_line(t.at("game").dump())});
        }
        ++started_[s.participantId];
        sessions_[s.sessionId] = std::move(s);
    } else if (type == "response") {
        TrialSession& s = find(r.at("sessionId").get<std::string>());
        TrialResponse resp;
        resp.trialIndex = r.at("trialIndex").get<std::size_t>();
        resp.chosen = r.at("chosen").get<std::size_t>();
        const Trial& trial = s.trials.at(resp.trialIndex);
        resp.correct = resp.chosen == trial.game.targetIndex;
        if (trial.phase == Phase::Catch && !resp.correct) s.excluded = true;
        s.responses.push_back(resp);
    }
}

TrialSession& TrialService::find(const std::string& sessionId) {
    const auto it = sessions_.find(sessionId);
    if (it == sessions_.end()) throw TrialError(TrialError::Kind::UnknownSession, "unknown session " + sessionId);
    return it->second;
}

const TrialSession& TrialService::find(const std::string& sessionId) const {
    return const_cast<TrialService*>(this)->find(sessionId);
}

TrialSession TrialService::start_trial_session(const std::string& participantId, std::uint64_t seed) {
    std::lock_guard lock(mu_);
    for (const auto& [id, s] : sessions_) {
        if (s.participantId == participantId && !s.finished()) {
            throw TrialError(TrialError::Kind::OpenSession, "participant " + participantId + " has an open session");
        }
    }
    TrialSession s = plan_session(participantId, seed);
    s.sessionId = participantId + "." + std::to_string(started_[participantId] + 1);

    json trials = json::array();
    for (const auto& t : s.trials) {
        trials.push_back({{"phase", to_string(t.phase)}, {"game", json::parse(refgames::write_game_line(t.game))}});
    }
    const json r = {{"type", "session"},        {"sessionId", s.sessionId}, {"participantId", participantId},
                    {"condition", s.condition.str()}, {"seed", seed},   {"catchTrialIndex", s.catchTrialIndex},
                    {"trials", std::move(trials)},    {"time", utc_timestamp()}};
    log_.append(r);
    apply(r);
    return sessions_.at(s.sessionId);
}

std::optional<TrialView> TrialService::next_trial(const std::string& sessionId) const {
    std::lock_guard lock(mu_);
    const TrialSession& s = find(sessionId);
    if (s.finished()) return std::nullopt;
    const std::size_t index = s.responses.size();
    const Trial& t = s.trials[index];
    TrialView v;
    v.sessionId = sessionId;
    v.trialIndex = index;
    v.phase = t.phase == Phase::Practice ? "practice" : "test";
    v.condition = s.condition.str();
    v.text = t.game.target().renderedText;
    for (const auto& item : t.game.items) {
        v.tangramIds.push_back(item.tangramId);
        v.colorMaps.push_back(item.colorMap);
    }
    return v;
}

Feedback TrialService::submit_trial_response(const std::string& sessionId, std::size_t trialIndex, std::size_t chosen) {
    std::lock_guard lock(mu_);
    TrialSession& s = find(sessionId);
    if (s.finished()) throw TrialError(TrialError::Kind::Finished, "session " + sessionId + " is finished");
    const std::size_t expected = s.responses.size();
    if (trialIndex < expected) {
        throw TrialError(TrialError::Kind::Duplicate, "trial " + std::to_string(trialIndex) + " already answered");
    }
    if (trialIndex > expected) {
        throw TrialError(TrialError::Kind::OutOfOrder,
                         "trial " + std::to_string(trialIndex) + " answered before trial " + std::to_string(expected));
    }
    const Trial& t = s.trials[trialIndex];
    if (chosen >= t.game.items.size()) {
        throw TrialError(TrialError::Kind::BadChoice, "choice " + std::to_string(chosen) + " out of range");
    }
    const json r = {{"type", "response"}, {"sessionId", sessionId}, {"trialIndex", trialIndex},
                    {"chosen", chosen},   {"time", utc_timestamp()}};
    log_.append(r);
    apply(r);

    Feedback f;
    f.trialIndex = trialIndex;
    f.phase = t.phase == Phase::Practice ? "practice" : "test";
    if (t.phase == Phase::Practice) {
        f.correct = s.responses.back().correct;
        f.correctIndex = t.game.targetIndex;
    }
    f.finished = s.finished();
    return f;
}

TrialSession TrialService::session(const std::string& sessionId) const {
    std::lock_guard lock(mu_);
    return find(sessionId);
}

std::vector<TrialSession> TrialService::sessions() const {
    std::lock_guard lock(mu_);
    std::vector<TrialSession> out;
    for (const auto& [id, s] : sessions_) out.push_back(s);
    return out;
}

void TrialService::write_trials_header(std::ostream& out) {
    out << "sessionId\tparticipantId\tcondition\ttrialIndex\tphase\tgameId\ttargetTangramId\ttargetIndex\t"
           "chosenIndex\tcorrect\tscored\texcluded\n";
}

void TrialService::export_trials(std::ostream& out) const {
    write_trials_header(out);
    for (const auto& s : sessions()) {
        for (const auto& r : s.responses) {
            const Trial& t = s.trials[r.trialIndex];
            out << s.sessionId << '\t' << s.participantId << '\t' << s.condition.str() << '\t' << r.trialIndex << '\t'
                << to_string(t.phase) << '\t' << t.game.id << '\t' << t.game.target().tangramId << '\t'
                << t.game.targetIndex << '\t' << r.chosen << '\t' << (r.correct ? 1 : 0) << '\t'
                << (t.phase == Phase::Test ? 1 : 0) << '\t' << (s.excluded ? 1 : 0) << '\n';
        }
    }
}

}  // namespace kilogram::service
