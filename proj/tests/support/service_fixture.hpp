#pragma once

// Temporary data directories and small trial configurations for service tests.

#include <atomic>
#include <filesystem>
#include <string>
#include <unistd.h>

#include "kilogram/refgames/game.hpp"
#include "kilogram/service/trial_service.hpp"
#include "support/synthetic.hpp"

namespace kgtest {

class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("kilogram-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// Games for every base condition: `poolSize` test games and 10 practice games.
inline kilogram::service::TrialConfig trial_config(std::size_t poolSize = 30, std::uint64_t seed = 1) {
    using namespace kilogram::refgames;
    static const auto corpus = synthetic_corpus(40, 10, 555);
    static const auto set = as_set(corpus);
    static const GamePool pool(set);
    kilogram::service::TrialConfig cfg;
    for (const auto& c : kBaseConditions) {
        kilogram::Rng rng(seed, static_cast<std::uint64_t>(c.text) * 2 + static_cast<std::uint64_t>(c.image));
        auto& games = cfg.gamePools[c.str()];
        for (std::size_t i = 0; i < poolSize; ++i) {
            games.push_back(generate_game(c.str() + "-dev" + std::to_string(i), corpus[i * 13 % corpus.size()], pool, c, {}, rng));
        }
        auto& practice = cfg.practice[c.str()];
        for (std::size_t i = 0; i < kilogram::service::kPracticeTrials; ++i) {
            practice.push_back(generate_game(c.str() + "-practice" + std::to_string(i), corpus[i * 31 % corpus.size()], pool, c, {}, rng));
        }
    }
    return cfg;
}

}  // namespace kgtest
