#include "kilogram/service/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kilogram::service {

using nlohmann::json;

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

std::map<std::string, std::filesystem::path> path_map(const json& j, const std::filesystem::path& base) {
    std::map<std::string, std::filesystem::path> out;
    for (const auto& [k, v] : j.items()) out[k] = resolve(base, v.get<std::string>());
    return out;
}

}  // namespace

ServiceConfig parse_config(const std::string& document, const std::filesystem::path& baseDir) {
    ServiceConfig c;
    try {
        const json j = json::parse(document);
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        c.dataDir = resolve(baseDir, j.value("dataDir", std::string("data")));
        c.host = j.value("host", c.host);
        c.port = j.value("port", c.port);
        c.seed = j.value("seed", c.seed);
        c.sparseTarget = j.value("sparseTarget", c.sparseTarget);
        c.denseTarget = j.value("denseTarget", c.denseTarget);
        c.cap = j.value("cap", c.cap);
        c.k = j.value("k", c.k);
        if (!j.contains("compositions")) throw ConfigError("config needs a compositions directory");
        c.compositions = resolve(baseDir, j["compositions"].get<std::string>());
        if (j.contains("tangrams")) c.tangrams = resolve(baseDir, j["tangrams"].get<std::string>());
        if (j.contains("denseIds")) c.denseIds = resolve(baseDir, j["denseIds"].get<std::string>());
        if (j.contains("gamePools")) c.gamePools = path_map(j["gamePools"], baseDir);
        if (j.contains("practice")) c.practice = path_map(j["practice"], baseDir);
        c.catchTangramId = j.value("catchTangramId", c.catchTangramId);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    if (c.cap == 0 || c.sparseTarget == 0 || c.denseTarget == 0 || c.k < 2) {
        throw ConfigError("targets and cap must be positive and k at least 2");
    }
    return c;
}

ServiceConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.parent_path());
}

}  // namespace kilogram::service
