#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kilogram/refgames/game.hpp"
#include "kilogram/service/store.hpp"

namespace kilogram::service {

inline constexpr std::size_t kPracticeTrials = 10;
inline constexpr std::size_t kTestTrials = 20;

struct TrialConfig {
    // Keyed by Condition::str() of the four base conditions.
    std::map<std::string, std::vector<refgames::ReferenceGame>> gamePools;
    std::map<std::string, std::vector<refgames::ReferenceGame>> practice;
    std::string catchTangramId = "square";
    std::string catchText = "square";
};

enum class Phase { Practice, Test, Catch };
std::string to_string(Phase p);

struct Trial {
    Phase phase = Phase::Test;
    refgames::ReferenceGame game;
};

struct TrialResponse {
    std::size_t trialIndex = 0;
    std::size_t chosen = 0;
    bool correct = false;
};

struct TrialSession {
    std::string sessionId;
    std::string participantId;
    refgames::Condition condition;
    std::uint64_t seed = 0;
    std::vector<Trial> trials;  // practice first, then the test phase with the catch trial inside
    std::size_t catchTrialIndex = 0;  // index into trials
    std::vector<TrialResponse> responses;
    bool excluded = false;

    bool finished() const { return responses.size() == trials.size(); }
};

class TrialError : public std::runtime_error {
public:
    enum class Kind { UnknownSession, OpenSession, PoolExhausted, OutOfOrder, Duplicate, BadChoice, Finished };
    TrialError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// What the client sees for one trial. Never carries the answer.
struct TrialView {
    std::string sessionId;
    std::size_t trialIndex = 0;
    std::string phase;  // "practice" or "test"; catch trials show as "test"
    std::string condition;
    std::string text;
    std::vector<std::string> tangramIds;
    std::vector<refgames::ColorMap> colorMaps;
};

struct Feedback {
    std::size_t trialIndex = 0;
    std::string phase;
    std::optional<bool> correct;            // practice only
    std::optional<std::size_t> correctIndex;  // practice only
    bool finished = false;
};

class TrialService {
public:
    // Throws std::invalid_argument for pools or practice sets that cannot
    // build a session.
    TrialService(TrialConfig config, EventLog& log);

    // Condition and trials are a function of (participantId, seed) alone.
    TrialSession start_trial_session(const std::string& participantId, std::uint64_t seed);

    // Nothing once the session is finished.
    std::optional<TrialView> next_trial(const std::string& sessionId) const;

    Feedback submit_trial_response(const std::string& sessionId, std::size_t trialIndex, std::size_t chosen);

    TrialSession session(const std::string& sessionId) const;
    std::vector<TrialSession> sessions() const;

    // One row per answered trial, tab separated, with a header row.
    void export_trials(std::ostream& out) const;
    static void write_trials_header(std::ostream& out);

    // The draw start_trial_session would make, without storing anything.
    TrialSession plan_session(const std::string& participantId, std::uint64_t seed) const;

private:
    void apply(const nlohmann::json& record);
    TrialSession& find(const std::string& sessionId);
    const TrialSession& find(const std::string& sessionId) const;

    TrialConfig config_;
    EventLog& log_;
    mutable std::mutex mu_;
    std::map<std::string, TrialSession> sessions_;
    std::map<std::string, std::size_t> started_;  // participant -> sessions started
};

}  // namespace kilogram::service
