#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kilogram/refgames/game.hpp"

namespace kilogram::refgames {

class ContrastiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Direction { TextToImage, ImageToText };
std::string to_string(Direction d);

// One game in one direction: the query is item `query` of the source
// modality, candidates are all k items of the other one, `answer` is the
// index of the matching candidate.
struct DirectionalGame {
    std::string gameId;
    Direction direction = Direction::TextToImage;
    std::size_t query = 0;
    std::size_t answer = 0;
};

struct ContrastiveBatch {
    std::string gameId;
    std::vector<std::string> texts;       // row i
    std::vector<std::string> tangramIds;  // column j
    std::vector<ColorMap> colorMaps;      // column j
    std::vector<std::vector<int>> labels; // k x k, 1 where text i describes image j
    std::vector<DirectionalGame> directions;
};

// Each game becomes one k x k text/image matrix with the identity as its
// label and two directional records (text to image, image to text) anchored
// on the target.
std::vector<ContrastiveBatch> export_contrastive_matrix(const std::vector<ReferenceGame>& games);

}  // namespace kilogram::refgames
