#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kilogram/refgames/contrastive.hpp"
#include "kilogram/refgames/game.hpp"
#include "kilogram/refgames/scoring.hpp"

namespace kilogram::refgames {

class GamesFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One JSON record per game:
//   {"gameId", "condition", "k", "targetIndex", ["includedParts", "totalParts"],
//    "items": [{"tangramId", "annotationId", "text", "colorMap": {"1": "coral", ...}, "coloredParts": [..]}]}
std::string write_game_line(const ReferenceGame& game);
ReferenceGame parse_game_line(const std::string& line);

void write_games(std::ostream& out, const std::vector<ReferenceGame>& games);
std::vector<ReferenceGame> read_games(std::istream& in);
std::vector<ReferenceGame> read_games_file(const std::string& path);

// Header row naming gameId, itemIndex and score (any column order), then one
// row per entry. Tab or comma separated; the provenance defaults to the path.
ScoreTable read_score_table(std::istream& in, const std::string& provenance);
ScoreTable read_score_table_file(const std::string& path);
void write_score_table(std::ostream& out, const ScoreTable& table);

// One JSON record per batch.
void write_contrastive(std::ostream& out, const std::vector<ContrastiveBatch>& batches);

}  // namespace kilogram::refgames
