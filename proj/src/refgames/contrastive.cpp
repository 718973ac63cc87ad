#include "kilogram/refgames/contrastive.hpp"

#include <set>

namespace kilogram::refgames {

std::string to_string(Direction d) {
    return d == Direction::TextToImage ? "text-to-image" : "image-to-text";
}

std::vector<ContrastiveBatch> export_contrastive_matrix(const std::vector<ReferenceGame>& games) {
    std::vector<ContrastiveBatch> batches;
    batches.reserve(games.size());
    for (const auto& g : games) {
        const std::size_t k = g.items.size();
        if (k == 0) throw ContrastiveError("game " + g.id + " has no items");
        if (g.targetIndex >= k) throw ContrastiveError("game " + g.id + " target index out of range");

        ContrastiveBatch b;
        b.gameId = g.id;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& item = g.items[i];
            if (item.renderedText.empty()) {
                throw ContrastiveError("game " + g.id + " item " + std::to_string(i) + " has no text");
            }
            if (!seen.insert(item.tangramId).second) {
                throw ContrastiveError("game " + g.id + " repeats tangram " + item.tangramId);
            }
            b.texts.push_back(item.renderedText);
            b.tangramIds.push_back(item.tangramId);
            b.colorMaps.push_back(item.colorMap);
        }
        b.labels.assign(k, std::vector<int>(k, 0));
        for (std::size_t i = 0; i < k; ++i) b.labels[i][i] = 1;
        b.directions.push_back({g.id, Direction::TextToImage, g.targetIndex, g.targetIndex});
        b.directions.push_back({g.id, Direction::ImageToText, g.targetIndex, g.targetIndex});
        batches.push_back(std::move(b));
    }
    return batches;
}

}  // namespace kilogram::refgames
