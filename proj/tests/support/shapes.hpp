#pragma once

// Rigid motions and random assemblies of tangram compositions.

#include <stdexcept>

#include "kilogram/geometry/tangram.hpp"
#include "kilogram/rng.hpp"

namespace kgtest {

using kilogram::geometry::ExactCoord;
using kilogram::geometry::Point;
using kilogram::geometry::Polygon;
using kilogram::geometry::Rational;
using kilogram::geometry::Tangram;

inline Point rotate45(const Point& p, int steps) {
    const ExactCoord h(Rational(0), Rational(1, 2));  // sqrt(2)/2
    Point q = p;
    for (int i = 0; i < ((steps % 8) + 8) % 8; ++i) q = {(q.x - q.y) * h, (q.x + q.y) * h};
    return q;
}

// Rotates by steps*45 degrees about the origin, optionally reflects x -> -x
// afterwards, then translates; each piece is refitted to a legal placement.
inline Tangram rigid_motion(const Tangram& t, int steps, bool reflect, const Point& offset) {
    Tangram out;
    out.id = t.id;
    for (const auto& piece : t.pieces) {
        Polygon poly;
        for (const auto& v : kilogram::geometry::place(piece.placement)) {
            Point q = rotate45(v, steps);
            if (reflect) q.x = -q.x;
            poly.push_back(q + offset);
        }
        const auto fit = kilogram::geometry::fit_placement(piece.placement.piece, poly);
        if (!fit) throw std::logic_error("rigid motion left the placement grid");
        out.pieces.push_back({piece.pieceId, *fit});
    }
    return out;
}

// Pieces on well separated cells with random rotations (and a random
// parallelogram flip); never overlapping.
inline Tangram scattered(kilogram::Rng& rng, const std::string& id) {
    Tangram t;
    t.id = id;
    int pieceId = 1;
    for (auto kind : kilogram::geometry::kAllPieceKinds) {
        kilogram::geometry::Placement p;
        p.piece = kind;
        p.rotation = 45 * static_cast<int>(rng.uniform_index(8));
        p.mirrored = kind == kilogram::geometry::PieceKind::Parallelogram && rng.uniform_index(2);
        const auto cell = static_cast<std::int64_t>(pieceId) * 7;
        p.translation = {ExactCoord(Rational(cell), Rational(static_cast<std::int64_t>(rng.uniform_index(3)), 2)),
                         ExactCoord(Rational(static_cast<std::int64_t>(rng.uniform_index(5))), Rational(0))};
        t.pieces.push_back({pieceId++, p});
    }
    return t;
}

}  // namespace kgtest
