#include "kilogram/corpus/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

namespace kilogram::corpus {

namespace {

using Json = nlohmann::ordered_json;

std::string required_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) throw std::invalid_argument(std::string("missing string field '") + key + "'");
    return j.at(key).get<std::string>();
}

bool skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace

Annotation parse_annotation_line(std::string_view line) {
    const Json j = Json::parse(line);
    if (!j.is_object()) throw std::invalid_argument("annotation record must be an object");
    Annotation a;
    a.tangramId = required_string(j, "tangramId");
    a.workerId = required_string(j, "workerId");
    a.whole = required_string(j, "whole");
    if (j.contains("annotationId")) a.annotationId = required_string(j, "annotationId");
    if (j.contains("timestamp")) {
        a.timestamp = j.at("timestamp").is_string() ? j.at("timestamp").get<std::string>() : j.at("timestamp").dump();
    }
    if (j.contains("collection")) {
        const std::string c = required_string(j, "collection");
        if (c == "sparse") {
            a.collection = Collection::Sparse;
        } else if (c == "dense") {
            a.collection = Collection::Dense;
        } else {
            throw std::invalid_argument("collection must be 'sparse' or 'dense'");
        }
    }
    if (j.contains("meta") && !j.at("meta").is_null()) a.metadata = j.at("meta").dump();
    if (!j.contains("parts") || !j.at("parts").is_array()) throw std::invalid_argument("missing 'parts' array");
    for (const auto& pj : j.at("parts")) {
        if (!pj.is_object() || !pj.contains("pieceIds") || !pj.at("pieceIds").is_array()) {
            throw std::invalid_argument("part needs a 'pieceIds' array");
        }
        a.parts.push_back(make_part(pj.at("pieceIds").get<std::vector<int>>(), required_string(pj, "label")));
    }
    return make_annotation(std::move(a));
}

std::string write_annotation_line(const Annotation& a) {
    Json j;
    j["annotationId"] = a.annotationId;
    j["tangramId"] = a.tangramId;
    j["workerId"] = a.workerId;
    j["whole"] = a.whole;
    Json parts = Json::array();
    for (const auto& p : a.parts) parts.push_back(Json{{"pieceIds", p.pieceIds}, {"label", p.label}});
    j["parts"] = std::move(parts);
    j["timestamp"] = a.timestamp;
    j["collection"] = a.collection == Collection::Dense ? "dense" : "sparse";
    if (!a.metadata.empty()) j["meta"] = Json::parse(a.metadata);
    return j.dump();
}

std::vector<Annotation> read_corpus(std::istream& in) {
    std::vector<Annotation> out;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        Annotation a;
        try {
            a = parse_annotation_line(line);
        } catch (const std::exception& e) {
            throw CorpusFormatError(lineno, e.what());
        }
        if (!seen.emplace(a.workerId, a.tangramId).second) {
            throw CorpusFormatError(lineno, "duplicate annotation of " + a.tangramId + " by " + a.workerId);
        }
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Annotation> read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<Annotation>& annotations) {
    out << kCorpusHeader << '\n';
    for (const auto& a : annotations) out << write_annotation_line(a) << '\n';
}

std::vector<std::string> read_id_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open id list: " + path);
    std::vector<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t b = 0;
        while (b < line.size() && (line[b] == ' ' || line[b] == '\t')) ++b;
        line = line.substr(b);
        if (line.empty() || line[0] == '#') continue;
        ids.push_back(line);
    }
    return ids;
}

}  // namespace kilogram::corpus
