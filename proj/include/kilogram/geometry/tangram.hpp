#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kilogram/geometry/exact.hpp"

namespace kilogram::geometry {

enum class PieceKind {
    LargeTriangle1,
    LargeTriangle2,
    MediumTriangle,
    SmallTriangle1,
    SmallTriangle2,
    Square,
    Parallelogram,
};

inline constexpr std::array<PieceKind, 7> kAllPieceKinds = {
    PieceKind::LargeTriangle1, PieceKind::LargeTriangle2, PieceKind::MediumTriangle, PieceKind::SmallTriangle1,
    PieceKind::SmallTriangle2, PieceKind::Square,         PieceKind::Parallelogram,
};

std::string_view to_string(PieceKind kind);
std::optional<PieceKind> piece_kind_from_string(std::string_view name);

using Polygon = std::vector<Point>;

// Counter-clockwise vertex list of the unplaced piece. Unit convention:
// small-triangle legs have length 1, so the full set has area 8.
const Polygon& canonical_vertices(PieceKind kind);
Rational piece_area(PieceKind kind);

struct Placement {
    PieceKind piece = PieceKind::LargeTriangle1;
    Point translation;
    int rotation = 0;  // degrees, multiple of 45 in [0, 315]
    bool mirrored = false;

    friend bool operator==(const Placement&, const Placement&) = default;
};

// Mirror (x -> -x) is applied first, then rotation about the origin, then
// translation. Output is counter-clockwise.
Polygon place(const Placement& p);

struct PlacedPiece {
    int pieceId = 0;  // stable label 1..7
    Placement placement;

    friend bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

struct Tangram {
    std::string id;
    std::vector<PlacedPiece> pieces;

    friend bool operator==(const Tangram&, const Tangram&) = default;

    const PlacedPiece* find_piece(int pieceId) const;
};

Tangram translated(const Tangram& t, const Point& offset);

// Twice the signed area (shoelace), exact.
ExactCoord doubled_signed_area(const Polygon& poly);
ExactCoord polygon_area(const Polygon& poly);

// Convex polygons, counter-clockwise.
bool interiors_overlap(const Polygon& p, const Polygon& q);
bool closed_intersect(const Polygon& p, const Polygon& q);
Polygon clip_convex(const Polygon& subject, const Polygon& clip);
ExactCoord intersection_area(const Polygon& p, const Polygon& q);

// Area of the union of placed pieces. Exact when the interiors are pairwise
// disjoint, which validate_tangram establishes.
ExactCoord silhouette_area(const Tangram& t);

enum class ViolationKind { PieceCount, DuplicatePiece, PieceId, Mirror, Rotation, Overlap };

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    bool connected = true;

    bool ok() const { return violations.empty(); }
    friend bool operator==(const ValidationReport& a, const ValidationReport& b);
};

ValidationReport validate_tangram(const Tangram& t);

// Finds a placement of `kind` whose vertices equal `target` as a set.
std::optional<Placement> fit_placement(PieceKind kind, const Polygon& target);

// The classic arrangement of all seven pieces into a square of side 2*sqrt(2).
Tangram canonical_square(std::string id = "square");

}  // namespace kilogram::geometry
