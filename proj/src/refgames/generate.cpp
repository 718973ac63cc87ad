#include "kilogram/refgames/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kilogram/geometry/svg.hpp"
#include "kilogram/refgames/template.hpp"
#include "kilogram/text/normalize.hpp"

namespace kilogram::refgames {

std::vector<std::string> whole_signature(const corpus::Annotation& a) {
    std::vector<std::string> tokens = text::normalize(a.whole).tokens();
    std::sort(tokens.begin(), tokens.end());
    return tokens;
}

GamePool::GamePool(const corpus::AnalysisSet& set) {
    for (const auto& [id, list] : set.members()) {
        if (list.empty()) continue;
        ids_.push_back(id);
        auto& entries = entries_[id];
        for (const auto& a : list) {
            entries.push_back({&a, whole_signature(a)});
            by_id_[a.annotationId] = &a;
        }
    }
}

const std::vector<GamePool::Entry>& GamePool::entries(const std::string& tangramId) const {
    static const std::vector<Entry> kEmpty;
    const auto it = entries_.find(tangramId);
    return it == entries_.end() ? kEmpty : it->second;
}

const corpus::Annotation* GamePool::find_annotation(const std::string& annotationId) const {
    const auto it = by_id_.find(annotationId);
    return it == by_id_.end() ? nullptr : it->second;
}

GameItem render_item(const corpus::Annotation& a, const Condition& condition, const std::vector<std::size_t>* subset) {
    GameItem item;
    item.tangramId = a.tangramId;
    item.annotationId = a.annotationId;

    std::vector<std::size_t> order;
    if (condition.augmented) {
        if (!subset) throw std::invalid_argument("augmented items need a part subset");
        order = *subset;
    } else {
        order.resize(a.parts.size());
        std::iota(order.begin(), order.end(), 0);
    }
    std::vector<std::string> labels;
    for (std::size_t i : order) labels.push_back(a.parts.at(i).label);

    item.renderedText = condition.text == TextMode::Parts ? template_text(a.whole, labels) : template_text(a.whole, {});
    if (condition.image == ImageMode::Color) {
        item.colorMap = color_parts(a, order);
        item.coloredPartIndexes = order;
    } else {
        for (int id = 1; id <= corpus::kPieceCount; ++id) item.colorMap[id] = geometry::kBlack;
    }
    return item;
}

namespace {

// Uniform choice among augmentations with the requested number of parts.
AugmentedExample pick_augmentation(const corpus::Annotation& a, std::size_t included, Rng& rng) {
    auto examples = augment_annotation(a, rng);
    const std::size_t want = std::min(included, a.parts.size());
    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < examples.size(); ++i) {
        if (examples[i].partSubset.size() == want) matching.push_back(i);
    }
    return examples[matching[rng.uniform_index(matching.size())]];
}

}  // namespace

ReferenceGame generate_game(const std::string& gameId, const corpus::Annotation& target, const GamePool& pool,
                            const Condition& condition, const GenerateOptions& options, Rng& rng) {
    if (!condition.valid()) throw std::invalid_argument("invalid condition " + condition.str());
    if (options.k < 2) throw std::invalid_argument("reference games need k >= 2");

    const auto& ids = pool.tangram_ids();
    const std::size_t others = ids.size() - static_cast<std::size_t>(std::count(ids.begin(), ids.end(), target.tangramId));
    if (others < options.k - 1) {
        throw InsufficientDistractors("pool has " + std::to_string(others) + " other tangrams, need " +
                                      std::to_string(options.k - 1));
    }

    ReferenceGame game;
    game.id = gameId;
    game.condition = condition;
    game.k = options.k;

    std::optional<AugmentedExample> target_aug;
    if (condition.augmented) {
        auto examples = augment_annotation(target, rng);
        target_aug = examples[rng.uniform_index(examples.size())];
        game.includedParts = target_aug->partSubset.size();
        game.totalParts = target.parts.size();
    }

    const std::size_t target_parts = target.parts.size();
    std::set<std::vector<std::string>> used_signatures{whole_signature(target)};

    std::vector<std::string> order;
    for (const auto& id : ids) {
        if (id != target.tangramId) order.push_back(id);
    }
    rng.shuffle(order);

    std::vector<const corpus::Annotation*> distractors;
    for (const auto& id : order) {
        if (distractors.size() == options.k - 1) break;
        std::vector<const GamePool::Entry*> eligible;
        for (const auto& e : pool.entries(id)) {
            if (options.constraints &&
                (e.annotation->parts.size() != target_parts || used_signatures.count(e.signature))) {
                continue;
            }
            eligible.push_back(&e);
        }
        if (eligible.empty()) continue;
        const GamePool::Entry* chosen = eligible[rng.uniform_index(eligible.size())];
        used_signatures.insert(chosen->signature);
        distractors.push_back(chosen->annotation);
    }
    if (distractors.size() < options.k - 1) {
        throw InsufficientDistractors("only " + std::to_string(distractors.size()) + " eligible distractors for " +
                                      target.annotationId + ", need " + std::to_string(options.k - 1));
    }

    game.targetIndex = rng.uniform_index(options.k);
    std::size_t next = 0;
    for (std::size_t i = 0; i < options.k; ++i) {
        const corpus::Annotation& a = i == game.targetIndex ? target : *distractors[next++];
        if (condition.augmented) {
            const AugmentedExample ex = i == game.targetIndex ? *target_aug : pick_augmentation(a, *game.includedParts, rng);
            game.items.push_back(render_item(a, condition, &ex.partSubset));
        } else {
            game.items.push_back(render_item(a, condition));
        }
    }
    return game;
}

std::vector<ReferenceGame> generate_games(const corpus::AnalysisSet& targets, const GamePool& pool,
                                          const Condition& condition, const GenerateOptions& options,
                                          std::uint64_t seed) {
    std::vector<ReferenceGame> games;
    std::size_t index = 0;
    for (const auto& [id, list] : targets.members()) {
        for (const auto& a : list) {
            Rng rng(seed, index);
            games.push_back(generate_game("g" + std::to_string(index), a, pool, condition, options, rng));
            ++index;
        }
    }
    return games;
}

std::vector<std::string> audit_game(const ReferenceGame& game, const GamePool& pool) {
    std::vector<std::string> problems;
    if (game.items.size() != game.k) problems.push_back("game has " + std::to_string(game.items.size()) + " items, k=" + std::to_string(game.k));
    if (game.targetIndex >= game.items.size()) problems.push_back("target index out of range");

    std::vector<const corpus::Annotation*> anns;
    for (const auto& item : game.items) {
        const corpus::Annotation* a = pool.find_annotation(item.annotationId);
        if (!a) {
            problems.push_back("unknown annotation " + item.annotationId);
            continue;
        }
        if (a->tangramId != item.tangramId) problems.push_back("annotation " + item.annotationId + " is not of " + item.tangramId);
        anns.push_back(a);
    }
    for (std::size_t i = 0; i < game.items.size(); ++i) {
        for (std::size_t j = i + 1; j < game.items.size(); ++j) {
            if (game.items[i].tangramId == game.items[j].tangramId) {
                problems.push_back("repeated tangram " + game.items[i].tangramId);
            }
        }
    }
    for (std::size_t i = 0; i < anns.size(); ++i) {
        // Independent re-normalization rather than the pool's cached signatures.
        auto si = text::normalize(anns[i]->whole).tokens();
        std::sort(si.begin(), si.end());
        for (std::size_t j = i + 1; j < anns.size(); ++j) {
            auto sj = text::normalize(anns[j]->whole).tokens();
            std::sort(sj.begin(), sj.end());
            if (si == sj) problems.push_back("identical whole-shape descriptions: " + anns[i]->annotationId + " / " + anns[j]->annotationId);
            if (anns[i]->parts.size() != anns[j]->parts.size()) {
                problems.push_back("part counts differ: " + anns[i]->annotationId + " / " + anns[j]->annotationId);
            }
        }
    }
    return problems;
}

}  // namespace kilogram::refgames
