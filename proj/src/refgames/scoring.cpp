#include "kilogram/refgames/scoring.hpp"

#include <algorithm>
#include <cmath>

namespace kilogram::refgames {

ScoreTable::ScoreTable(std::map<Key, double> entries, std::string provenance)
    : entries_(std::move(entries)), provenance_(std::move(provenance)) {
    for (const auto& [key, score] : entries_) {
        if (!std::isfinite(score)) {
            throw ScoreError("non-finite score for " + key.first + "/" + std::to_string(key.second));
        }
    }
}

std::optional<double> ScoreTable::find(const std::string& gameId, std::size_t item) const {
    const auto it = entries_.find({gameId, item});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool ScoreTable::covers(const ReferenceGame& game) const {
    for (std::size_t i = 0; i < game.items.size(); ++i) {
        if (!find(game.id, i)) return false;
    }
    return true;
}

namespace {

GameOutcome evaluate(const ReferenceGame& game, const ScoreTable& table) {
    std::vector<double> scores;
    for (std::size_t i = 0; i < game.items.size(); ++i) {
        const auto s = table.find(game.id, i);
        if (!s) throw ScoreError("score table has no entry for " + game.id + "/" + std::to_string(i));
        scores.push_back(*s);
    }
    if (scores.empty()) throw ScoreError("game " + game.id + " has no items");

    GameOutcome out;
    out.gameId = game.id;
    const auto top = std::max_element(scores.begin(), scores.end());  // first maximum
    out.predicted = static_cast<std::size_t>(top - scores.begin());
    out.tied = std::count(scores.begin(), scores.end(), *top) > 1;
    out.correct = out.predicted == game.targetIndex;

    double z = 0.0;
    for (double s : scores) z += std::exp(s - *top);
    out.probabilityCorrect = std::exp(scores.at(game.targetIndex) - *top) / z;
    return out;
}

}  // namespace

EvaluationReport score_games(const std::vector<ReferenceGame>& games, const ScoreTable& table) {
    EvaluationReport report;
    report.scoreScale = table.provenance();
    std::size_t correct = 0;
    double prob = 0.0;
    for (const auto& g : games) {
        report.games.push_back(evaluate(g, table));
        const auto& o = report.games.back();
        correct += o.correct;
        report.ties += o.tied;
        prob += o.probabilityCorrect;
    }
    if (!games.empty()) {
        report.accuracy = static_cast<double>(correct) / static_cast<double>(games.size());
        report.meanProbabilityCorrect = prob / static_cast<double>(games.size());
    }
    return report;
}

ScoreTable ensemble_scores(const std::vector<ScoreTable>& tables) {
    if (tables.empty()) throw ScoreError("nothing to ensemble");
    std::map<ScoreTable::Key, double> product;
    std::string provenance;
    for (std::size_t t = 0; t < tables.size(); ++t) {
        const auto& entries = tables[t].entries();
        if (entries.size() != tables[0].entries().size()) throw ScoreError("score tables cover different entries");
        for (const auto& [key, score] : entries) {
            if (!(score > 0.0)) {
                throw ScoreError("non-positive score " + std::to_string(score) + " for " + key.first + "/" +
                                 std::to_string(key.second));
            }
            if (t == 0) {
                product[key] = score;
                continue;
            }
            const auto it = product.find(key);
            if (it == product.end()) throw ScoreError("score tables cover different entries");
            it->second *= score;
        }
        provenance += (t ? " * " : "") + tables[t].provenance();
    }
    return ScoreTable(std::move(product), provenance);
}

std::vector<CurvePoint> part_curves(const std::vector<ReferenceGame>& games, const ScoreTable& table,
                                    std::size_t resamples, std::uint64_t seed) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> groups;
    for (const auto& g : games) {
        if (!g.includedParts || !g.totalParts) throw ScoreError("game " + g.id + " has no part metadata");
        groups[{*g.totalParts, *g.includedParts}].push_back(evaluate(g, table).probabilityCorrect);
    }
    std::vector<CurvePoint> curve;
    std::uint64_t group = 0;
    for (const auto& [key, probs] : groups) {
        CurvePoint p;
        p.totalParts = key.first;
        p.includedParts = key.second;
        p.games = probs.size();
        p.meanProbability = stats::bootstrap_ci(probs, stats::mean, resamples, 0.95, seed ^ Rng::mix(group++));
        curve.push_back(p);
    }
    return curve;
}

}  // namespace kilogram::refgames
