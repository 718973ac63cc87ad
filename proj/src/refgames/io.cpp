#include "kilogram/refgames/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace kilogram::refgames {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json color_map_json(const ColorMap& colors) {
    ordered_json out = ordered_json::object();
    for (const auto& [piece, color] : colors) out[std::to_string(piece)] = color;
    return out;
}

}  // namespace

std::string write_game_line(const ReferenceGame& game) {
    ordered_json j;
    j["gameId"] = game.id;
    j["condition"] = game.condition.str();
    j["k"] = game.k;
    j["targetIndex"] = game.targetIndex;
    if (game.includedParts) j["includedParts"] = *game.includedParts;
    if (game.totalParts) j["totalParts"] = *game.totalParts;
    ordered_json items = ordered_json::array();
    for (const auto& item : game.items) {
        ordered_json i;
        i["tangramId"] = item.tangramId;
        i["annotationId"] = item.annotationId;
        i["text"] = item.renderedText;
        i["colorMap"] = color_map_json(item.colorMap);
        i["coloredParts"] = item.coloredPartIndexes;
        items.push_back(std::move(i));
    }
    j["items"] = std::move(items);
    return j.dump();
}

ReferenceGame parse_game_line(const std::string& line) {
    try {
        const json j = json::parse(line);
        ReferenceGame g;
        g.id = j.at("gameId").get<std::string>();
        g.condition = Condition::parse(j.at("condition").get<std::string>());
        g.k = j.at("k").get<std::size_t>();
        g.targetIndex = j.at("targetIndex").get<std::size_t>();
        if (j.contains("includedParts")) g.includedParts = j["includedParts"].get<std::size_t>();
        if (j.contains("totalParts")) g.totalParts = j["totalParts"].get<std::size_t>();
        for (const auto& ij : j.at("items")) {
            GameItem item;
            item.tangramId = ij.at("tangramId").get<std::string>();
            item.annotationId = ij.at("annotationId").get<std::string>();
            item.renderedText = ij.at("text").get<std::string>();
            for (const auto& [piece, color] : ij.at("colorMap").items()) {
                item.colorMap[std::stoi(piece)] = color.get<std::string>();
            }
            if (ij.contains("coloredParts")) item.coloredPartIndexes = ij["coloredParts"].get<std::vector<std::size_t>>();
            g.items.push_back(std::move(item));
        }
        if (g.items.size() != g.k) throw GamesFormatError("game " + g.id + " has " + std::to_string(g.items.size()) + " items but k=" + std::to_string(g.k));
        if (g.targetIndex >= g.k) throw GamesFormatError("game " + g.id + " target index out of range");
        return g;
    } catch (const json::exception& e) {
        throw GamesFormatError(e.what());
    } catch (const std::invalid_argument& e) {
        throw GamesFormatError(e.what());
    }
}

void write_games(std::ostream& out, const std::vector<ReferenceGame>& games) {
    for (const auto& g : games) out << write_game_line(g) << '\n';
}

std::vector<ReferenceGame> read_games(std::istream& in) {
    std::vector<ReferenceGame> games;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line[0] == '#') continue;
        try {
            games.push_back(parse_game_line(line));
        } catch (const GamesFormatError& e) {
            throw GamesFormatError("line " + std::to_string(n) + ": " + e.what());
        }
    }
    return games;
}

std::vector<ReferenceGame> read_games_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GamesFormatError("cannot open " + path);
    return read_games(in);
}

namespace {

std::vector<std::string> split_row(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        cells.push_back(cell);
    }
    return cells;
}

}  // namespace

ScoreTable read_score_table(std::istream& in, const std::string& provenance) {
    std::string line;
    std::size_t n = 0;
    char sep = '\t';
    int col_game = -1, col_item = -1, col_score = -1;
    std::map<ScoreTable::Key, double> entries;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line == "\r" || line[0] == '#') continue;
        if (col_game < 0) {
            sep = line.find('\t') != std::string::npos ? '\t' : ',';
            const auto header = split_row(line, sep);
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] == "gameId") col_game = static_cast<int>(i);
                if (header[i] == "itemIndex") col_item = static_cast<int>(i);
                if (header[i] == "score") col_score = static_cast<int>(i);
            }
            if (col_game < 0 || col_item < 0 || col_score < 0) {
                throw GamesFormatError("score table header must name gameId, itemIndex and score");
            }
            continue;
        }
        const auto cells = split_row(line, sep);
        const auto need = static_cast<std::size_t>(std::max({col_game, col_item, col_score}));
        if (cells.size() <= need) throw GamesFormatError("line " + std::to_string(n) + ": missing columns");
        std::size_t item = 0;
        const auto& is = cells[col_item];
        if (auto [p, ec] = std::from_chars(is.data(), is.data() + is.size(), item); ec != std::errc() || p != is.data() + is.size()) {
            throw GamesFormatError("line " + std::to_string(n) + ": bad itemIndex '" + is + "'");
        }
        double score = 0.0;
        try {
            std::size_t used = 0;
            score = std::stod(cells[col_score], &used);
            if (used != cells[col_score].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw GamesFormatError("line " + std::to_string(n) + ": bad score '" + cells[col_score] + "'");
        }
        if (!entries.emplace(ScoreTable::Key{cells[col_game], item}, score).second) {
            throw GamesFormatError("line " + std::to_string(n) + ": duplicate entry");
        }
    }
    try {
        return ScoreTable(std::move(entries), provenance);
    } catch (const ScoreError& e) {
        throw GamesFormatError(e.what());
    }
}

ScoreTable read_score_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GamesFormatError("cannot open " + path);
    return read_score_table(in, path);
}

void write_score_table(std::ostream& out, const ScoreTable& table) {
    out << "gameId\titemIndex\tscore\n";
    out.precision(17);
    for (const auto& [key, score] : table.entries()) out << key.first << '\t' << key.second << '\t' << score << '\n';
}

void write_contrastive(std::ostream& out, const std::vector<ContrastiveBatch>& batches) {
    for (const auto& b : batches) {
        ordered_json j;
        j["gameId"] = b.gameId;
        j["texts"] = b.texts;
        j["tangramIds"] = b.tangramIds;
        ordered_json colors = ordered_json::array();
        for (const auto& c : b.colorMaps) colors.push_back(color_map_json(c));
        j["colorMaps"] = std::move(colors);
        j["labels"] = b.labels;
        ordered_json dirs = ordered_json::array();
        for (const auto& d : b.directions) {
            dirs.push_back({{"direction", to_string(d.direction)}, {"query", d.query}, {"answer", d.answer}});
        }
        j["directions"] = std::move(dirs);
        out << j.dump() << '\n';
    }
}

}  // namespace kilogram::refgames
