#include "kilogram/geometry/composition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kilogram::geometry {

namespace {

using Json = nlohmann::ordered_json;
using Kind = CompositionError::Kind;

Rational parse_fraction(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception&) {
            throw CompositionError(Kind::InexpressibleCoordinate,
                                   where + ": '" + j.get<std::string>() + "' is not an integer fraction");
        }
    }
    if (j.is_number()) {
        throw CompositionError(Kind::InexpressibleCoordinate, where + ": floating value " + j.dump() +
                                                                  " is not an exact a + b*sqrt(2) coordinate");
    }
    throw CompositionError(Kind::Malformed, where + ": expected a fraction");
}

ExactCoord parse_coord(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
        if (j.is_number() && !j.is_number_integer()) {
            throw CompositionError(Kind::InexpressibleCoordinate, where + ": floating coordinate " + j.dump());
        }
        throw CompositionError(Kind::Malformed, where + ": expected {\"a\": ..., \"b\": ...}");
    }
    return {parse_fraction(j.at("a"), where + ".a"), parse_fraction(j.at("b"), where + ".b")};
}

Point parse_point(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw CompositionError(Kind::Malformed, where + ": expected {\"x\": ..., \"y\": ...}");
    }
    return {parse_coord(j.at("x"), where + ".x"), parse_coord(j.at("y"), where + ".y")};
}

Json coord_json(const ExactCoord& c) {
    return Json{{"a", c.rational_part().str()}, {"b", c.sqrt2_part().str()}};
}

Json point_json(const Point& p) { return Json{{"x", coord_json(p.x)}, {"y", coord_json(p.y)}}; }

}  // namespace

Tangram parse_composition(std::string_view document, ParseMode mode) {
    Json doc;
    try {
        doc = Json::parse(document);
    } catch (const Json::parse_error& e) {
        throw CompositionError(Kind::Malformed, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc.at("id").is_string() || !doc.contains("pieces") ||
        !doc.at("pieces").is_array()) {
        throw CompositionError(Kind::Malformed, "composition needs a string 'id' and a 'pieces' array");
    }
    Tangram t;
    t.id = doc.at("id").get<std::string>();
    const Json& pieces = doc.at("pieces");
    if (mode == ParseMode::Strict && pieces.size() != 7) {
        throw CompositionError(Kind::PieceCount, "composition has " + std::to_string(pieces.size()) + " pieces, expected 7");
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Json& pj = pieces[i];
        const std::string where = "pieces[" + std::to_string(i) + "]";
        if (!pj.is_object() || !pj.contains("id") || !pj.at("id").is_number_integer() || !pj.contains("kind") ||
            !pj.at("kind").is_string() || !pj.contains("translation") || !pj.contains("rotation") ||
            !pj.at("rotation").is_number_integer()) {
            throw CompositionError(Kind::Malformed, where + ": needs integer 'id', 'kind', 'translation', integer 'rotation'");
        }
        const auto kind = piece_kind_from_string(pj.at("kind").get<std::string>());
        if (!kind) throw CompositionError(Kind::Malformed, where + ": unknown piece kind " + pj.at("kind").dump());

        PlacedPiece piece;
        piece.pieceId = pj.at("id").get<int>();
        piece.placement.piece = *kind;
        piece.placement.translation = parse_point(pj.at("translation"), where + ".translation");
        piece.placement.rotation = pj.at("rotation").get<int>();
        if (pj.contains("mirrored")) {
            if (!pj.at("mirrored").is_boolean()) throw CompositionError(Kind::Malformed, where + ".mirrored: expected boolean");
            piece.placement.mirrored = pj.at("mirrored").get<bool>();
        }

        if (mode == ParseMode::Strict) {
            const int rot = piece.placement.rotation;
            if (rot < 0 || rot > 315 || rot % 45 != 0) {
                throw CompositionError(Kind::Rotation, where + ": rotation " + std::to_string(rot) +
                                                          " is not a multiple of 45 in [0, 315]");
            }
            if (piece.placement.mirrored && *kind != PieceKind::Parallelogram) {
                throw CompositionError(Kind::NonCanonicalGeometry, where + ": only the parallelogram can be mirrored");
            }
            if (pj.contains("vertices")) {
                const Json& vj = pj.at("vertices");
                if (!vj.is_array()) throw CompositionError(Kind::Malformed, where + ".vertices: expected array");
                Polygon given;
                for (std::size_t v = 0; v < vj.size(); ++v) {
                    given.push_back(parse_point(vj[v], where + ".vertices[" + std::to_string(v) + "]"));
                }
                Polygon expected = place(piece.placement);
                std::sort(given.begin(), given.end());
                std::sort(expected.begin(), expected.end());
                if (given != expected) {
                    throw CompositionError(Kind::NonCanonicalGeometry,
                                           where + ": vertices do not match the canonical " + std::string(to_string(*kind)));
                }
            }
        }
        t.pieces.push_back(piece);
    }
    return t;
}

std::string write_composition(const Tangram& t) {
    Json doc;
    doc["id"] = t.id;
    Json pieces = Json::array();
    for (const auto& piece : t.pieces) {
        Json pj;
        pj["id"] = piece.pieceId;
        pj["kind"] = std::string(to_string(piece.placement.piece));
        pj["translation"] = point_json(piece.placement.translation);
        pj["rotation"] = piece.placement.rotation;
        pj["mirrored"] = piece.placement.mirrored;
        pieces.push_back(std::move(pj));
    }
    doc["pieces"] = std::move(pieces);
    return doc.dump(2) + "\n";
}

Tangram load_composition_file(const std::string& path, ParseMode mode) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open composition file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_composition(ss.str(), mode);
}

}  // namespace kilogram::geometry
