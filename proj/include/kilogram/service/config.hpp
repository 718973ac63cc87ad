#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kilogram::service {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relative paths are resolved against the config file's directory.
//   {
//     "dataDir": "data",
//     "host": "127.0.0.1", "port": 8080, "seed": 0,
//     "sparseTarget": 10, "denseTarget": 50, "cap": 200, "k": 10,
//     "compositions": "tangrams/",        directory of composition JSON files
//     "tangrams": "ids.txt",              optional; default all compositions
//     "denseIds": "dense.txt",            optional
//     "gamePools": {"whole+black": "dev_whole_black.jsonl", ...},
//     "practice":  {"whole+black": "practice_whole_black.jsonl", ...},
//     "catchTangramId": "square"
//   }
struct ServiceConfig {
    std::filesystem::path dataDir = "data";
    std::string host = "127.0.0.1";
    int port = 8080;
    std::uint64_t seed = 0;
    std::size_t sparseTarget = 10;
    std::size_t denseTarget = 50;
    std::size_t cap = 200;
    std::size_t k = 10;
    std::filesystem::path compositions;
    std::optional<std::filesystem::path> tangrams;
    std::optional<std::filesystem::path> denseIds;
    std::map<std::string, std::filesystem::path> gamePools;
    std::map<std::string, std::filesystem::path> practice;
    std::string catchTangramId = "square";
};

ServiceConfig parse_config(const std::string& document, const std::filesystem::path& baseDir);
ServiceConfig load_config(const std::filesystem::path& path);

}  // namespace kilogram::service
