#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/refgames/augment.hpp"
#include "kilogram/refgames/condition.hpp"
#include "kilogram/rng.hpp"

namespace kilogram::refgames {

inline constexpr std::size_t kDefaultContextSize = 10;

struct GameItem {
    std::string tangramId;
    std::string annotationId;
    std::string renderedText;
    std::vector<std::size_t> coloredPartIndexes;
    ColorMap colorMap;

    friend bool operator==(const GameItem&, const GameItem&) = default;
};

struct ReferenceGame {
    std::string id;
    Condition condition;
    std::size_t k = kDefaultContextSize;
    std::size_t targetIndex = 0;
    std::vector<GameItem> items;
    // Set for augmented games: parts in the target text and in its annotation.
    std::optional<std::size_t> includedParts;
    std::optional<std::size_t> totalParts;

    const GameItem& target() const { return items.at(targetIndex); }
    friend bool operator==(const ReferenceGame&, const ReferenceGame&) = default;
};

// Normalized whole-shape token multiset (sorted tokens); two descriptions
// count as identical when these are equal.
std::vector<std::string> whole_signature(const corpus::Annotation& a);

// Annotations indexed for game generation, with whole-shape signatures
// computed once.
class GamePool {
public:
    // Holds pointers into `set`, which must outlive the pool.
    explicit GamePool(const corpus::AnalysisSet& set);
    explicit GamePool(corpus::AnalysisSet&&) = delete;

    struct Entry {
        const corpus::Annotation* annotation;
        std::vector<std::string> signature;
    };

    const std::vector<std::string>& tangram_ids() const { return ids_; }
    const std::vector<Entry>& entries(const std::string& tangramId) const;
    const corpus::Annotation* find_annotation(const std::string& annotationId) const;

private:
    std::vector<std::string> ids_;
    std::map<std::string, std::vector<Entry>> entries_;
    std::map<std::string, const corpus::Annotation*> by_id_;
};

class InsufficientDistractors : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenerateOptions {
    std::size_t k = kDefaultContextSize;
    // On: equal part counts and no identical whole-shape descriptions.
    // Off: only distinct tangrams.
    bool constraints = true;
};

// Samples k-1 distractor tangrams (each with one uniformly chosen eligible
// annotation) and places the target at a uniformly random index.
ReferenceGame generate_game(const std::string& gameId, const corpus::Annotation& target, const GamePool& pool,
                            const Condition& condition, const GenerateOptions& options, Rng& rng);

// One game per annotation of `targets`, in tangram-id order; game i draws
// from Rng(seed, i).
std::vector<ReferenceGame> generate_games(const corpus::AnalysisSet& targets, const GamePool& pool,
                                          const Condition& condition, const GenerateOptions& options,
                                          std::uint64_t seed);

// Renders one annotation as a game item under a condition. For augmented
// conditions `subset` picks the parts (text order); otherwise it is ignored.
GameItem render_item(const corpus::Annotation& a, const Condition& condition,
                     const std::vector<std::size_t>* subset = nullptr);

// Constraint check independent of the generator: distinct tangrams, pairwise
// distinct whole-shape signatures and equal part counts. Returns the
// violations found.
std::vector<std::string> audit_game(const ReferenceGame& game, const GamePool& pool);

}  // namespace kilogram::refgames
