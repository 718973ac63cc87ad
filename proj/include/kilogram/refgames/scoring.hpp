#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kilogram/refgames/game.hpp"
#include "kilogram/stats/bootstrap.hpp"

namespace kilogram::refgames {

class ScoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Externally supplied similarity scores f(text, image) keyed by
// (gameId, itemIndex). Immutable once built.
class ScoreTable {
public:
    using Key = std::pair<std::string, std::size_t>;

    ScoreTable() = default;
    // Throws ScoreError on non-finite scores.
    ScoreTable(std::map<Key, double> entries, std::string provenance);

    const std::map<Key, double>& entries() const { return entries_; }
    const std::string& provenance() const { return provenance_; }
    std::optional<double> find(const std::string& gameId, std::size_t item) const;
    bool covers(const ReferenceGame& game) const;

    friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

private:
    std::map<Key, double> entries_;
    std::string provenance_;
};

struct GameOutcome {
    std::string gameId;
    std::size_t predicted = 0;
    bool correct = false;
    bool tied = false;               // several items share the top score
    double probabilityCorrect = 0.0; // softmax over the game's raw scores
};

struct EvaluationReport {
    std::vector<GameOutcome> games;
    double accuracy = 0.0;
    double meanProbabilityCorrect = 0.0;
    std::size_t ties = 0;
    std::string scoreScale;  // provenance of the table the probabilities came from
};

// Throws ScoreError when any game is not fully covered.
EvaluationReport score_games(const std::vector<ReferenceGame>& games, const ScoreTable& table);

// Entry-wise product. Tables must cover exactly the same keys and hold
// strictly positive scores.
ScoreTable ensemble_scores(const std::vector<ScoreTable>& tables);

struct CurvePoint {
    std::size_t totalParts = 0;
    std::size_t includedParts = 0;
    std::size_t games = 0;
    stats::BootstrapResult meanProbability;
};

// Mean probability of the correct image per (totalParts, includedParts) with
// percentile bootstrap bands. Games without part metadata are an error.
std::vector<CurvePoint> part_curves(const std::vector<ReferenceGame>& games, const ScoreTable& table,
                                    std::size_t resamples = 1000, std::uint64_t seed = 0);

}  // namespace kilogram::refgames
