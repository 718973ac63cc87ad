#include "kilogram/geometry/tangram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kilogram::geometry {

namespace {

// sqrt(2)/2 scaled by an integer: the coordinate n * sqrt(2) / 2.
ExactCoord half_root(std::int64_t n) { return {Rational(0), Rational(n, 2)}; }

Point pt(std::int64_t x, std::int64_t y) { return {ExactCoord(x), ExactCoord(y)}; }

const std::map<PieceKind, Polygon>& canonical_table() {
    static const std::map<PieceKind, Polygon> table = [] {
        const Point r2x{ExactCoord::sqrt2(), ExactCoord(0)};
        const Point r2y{ExactCoord(0), ExactCoord::sqrt2()};
        const Polygon large{pt(0, 0), pt(2, 0), pt(0, 2)};
        const Polygon medium{pt(0, 0), r2x, r2y};
        const Polygon small{pt(0, 0), pt(1, 0), pt(0, 1)};
        const Polygon square{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
        const Polygon parallelogram{pt(0, 0), pt(1, 0), pt(2, 1), pt(1, 1)};
        return std::map<PieceKind, Polygon>{
            {PieceKind::LargeTriangle1, large}, {PieceKind::LargeTriangle2, large},
            {PieceKind::MediumTriangle, medium}, {PieceKind::SmallTriangle1, small},
            {PieceKind::SmallTriangle2, small},  {PieceKind::Square, square},
            {PieceKind::Parallelogram, parallelogram},
        };
    }();
    return table;
}

struct Rotation {
    ExactCoord cos;
    ExactCoord sin;
};

Rotation rotation_for(int degrees) {
    switch (degrees) {
        case 0: return {1, 0};
        case 45: return {half_root(1), half_root(1)};
        case 90: return {0, 1};
        case 135: return {half_root(-1), half_root(1)};
        case 180: return {-1, 0};
        case 225: return {half_root(-1), half_root(-1)};
        case 270: return {0, -1};
        case 315: return {half_root(1), half_root(-1)};
        default: throw std::invalid_argument("rotation must be a multiple of 45 in [0, 315]: " + std::to_string(degrees));
    }
}

bool rotation_on_grid(int degrees) { return degrees >= 0 && degrees <= 315 && degrees % 45 == 0; }

// True when some edge line of `p` has all of `q` on its outer side.
// strict: q must lie strictly outside; otherwise touching counts as outside.
bool edge_separates(const Polygon& p, const Polygon& q, bool strict) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point edge = p[(i + 1) % n] - a;
        bool all_out = true;
        for (const Point& r : q) {
            const int s = cross(edge, r - a).sign();
            if (strict ? s >= 0 : s > 0) {
                all_out = false;
                break;
            }
        }
        if (all_out) return true;
    }
    return false;
}

std::vector<Point> sorted(Polygon poly) {
    std::sort(poly.begin(), poly.end());
    return poly;
}

}  // namespace

std::string_view to_string(PieceKind kind) {
    switch (kind) {
        case PieceKind::LargeTriangle1: return "LargeTriangle1";
        case PieceKind::LargeTriangle2: return "LargeTriangle2";
        case PieceKind::MediumTriangle: return "MediumTriangle";
        case PieceKind::SmallTriangle1: return "SmallTriangle1";
        case PieceKind::SmallTriangle2: return "SmallTriangle2";
        case PieceKind::Square: return "Square";
        case PieceKind::Parallelogram: return "Parallelogram";
    }
    return "?";
}

std::optional<PieceKind> piece_kind_from_string(std::string_view name) {
    for (PieceKind k : kAllPieceKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

const Polygon& canonical_vertices(PieceKind kind) { return canonical_table().at(kind); }

Rational piece_area(PieceKind kind) {
    // Canonical areas are rational by construction.
    return polygon_area(canonical_vertices(kind)).rational_part();
}

Polygon place(const Placement& p) {
    const Rotation rot = rotation_for(p.rotation);
    Polygon out;
    const Polygon& base = canonical_vertices(p.piece);
    out.reserve(base.size());
    for (const Point& v : base) {
        const ExactCoord x = p.mirrored ? -v.x : v.x;
        out.push_back({rot.cos * x - rot.sin * v.y + p.translation.x, rot.sin * x + rot.cos * v.y + p.translation.y});
    }
    if (p.mirrored) std::reverse(out.begin(), out.end());
    return out;
}

const PlacedPiece* Tangram::find_piece(int pieceId) const {
    for (const auto& piece : pieces) {
        if (piece.pieceId == pieceId) return &piece;
    }
    return nullptr;
}

Tangram translated(const Tangram& t, const Point& offset) {
    Tangram out = t;
    for (auto& piece : out.pieces) piece.placement.translation = piece.placement.translation + offset;
    return out;
}

ExactCoord doubled_signed_area(const Polygon& poly) {
    ExactCoord sum;
    for (std::size_t i = 0; i < poly.size(); ++i) sum += cross(poly[i], poly[(i + 1) % poly.size()]);
    return sum;
}

ExactCoord polygon_area(const Polygon& poly) {
    ExactCoord a = doubled_signed_area(poly) / ExactCoord(2);
    return a.sign() < 0 ? -a : a;
}

bool interiors_overlap(const Polygon& p, const Polygon& q) {
    return !edge_separates(p, q, false) && !edge_separates(q, p, false);
}

bool closed_intersect(const Polygon& p, const Polygon& q) {
    return !edge_separates(p, q, true) && !edge_separates(q, p, true);
}

Polygon clip_convex(const Polygon& subject, const Polygon& clip) {
    Polygon out = subject;
    for (std::size_t i = 0; i < clip.size() && !out.empty(); ++i) {
        const Point& a = clip[i];
        const Point edge = clip[(i + 1) % clip.size()] - a;
        Polygon next;
        for (std::size_t j = 0; j < out.size(); ++j) {
            const Point& p = out[j];
            const Point& q = out[(j + 1) % out.size()];
            const ExactCoord cp = cross(edge, p - a);
            const ExactCoord cq = cross(edge, q - a);
            if (cp.sign() >= 0) next.push_back(p);
            if ((cp.sign() > 0 && cq.sign() < 0) || (cp.sign() < 0 && cq.sign() > 0)) {
                const ExactCoord t = cp / (cp - cq);
                next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        out = std::move(next);
    }
    return out;
}

ExactCoord intersection_area(const Polygon& p, const Polygon& q) {
    const Polygon clipped = clip_convex(p, q);
    if (clipped.size() < 3) return ExactCoord(0);
    return polygon_area(clipped);
}

ExactCoord silhouette_area(const Tangram& t) {
    ExactCoord total;
    for (const auto& piece : t.pieces) total += polygon_area(place(piece.placement));
    return total;
}

bool operator==(const ValidationReport& a, const ValidationReport& b) {
    if (a.violations.size() != b.violations.size() || a.warnings != b.warnings || a.connected != b.connected) {
        return false;
    }
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        if (a.violations[i].kind != b.violations[i].kind || a.violations[i].message != b.violations[i].message) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_tangram(const Tangram& t) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::string message) { report.violations.push_back({kind, std::move(message)}); };

    if (t.pieces.size() != 7) {
        add(ViolationKind::PieceCount, "expected 7 pieces, found " + std::to_string(t.pieces.size()));
    }

    std::map<PieceKind, int> kind_counts;
    std::set<int> ids;
    for (const auto& piece : t.pieces) {
        ++kind_counts[piece.placement.piece];
        if (piece.pieceId < 1 || piece.pieceId > 7 || !ids.insert(piece.pieceId).second) {
            add(ViolationKind::PieceId, "piece id " + std::to_string(piece.pieceId) + " is out of range or repeated");
        }
        if (piece.placement.mirrored && piece.placement.piece != PieceKind::Parallelogram) {
            add(ViolationKind::Mirror, "piece " + std::to_string(piece.pieceId) + " (" +
                                           std::string(to_string(piece.placement.piece)) + ") cannot be mirrored");
        }
        if (!rotation_on_grid(piece.placement.rotation)) {
            add(ViolationKind::Rotation, "piece " + std::to_string(piece.pieceId) + " has rotation " +
                                             std::to_string(piece.placement.rotation));
        }
    }
    for (PieceKind k : kAllPieceKinds) {
        const int n = kind_counts.count(k) ? kind_counts[k] : 0;
        if (n > 1) {
            add(ViolationKind::DuplicatePiece, std::string(to_string(k)) + " appears " + std::to_string(n) + " times");
        } else if (n == 0) {
            add(ViolationKind::PieceCount, std::string(to_string(k)) + " is missing");
        }
    }

    // Geometry checks need every rotation on the grid.
    if (std::any_of(t.pieces.begin(), t.pieces.end(),
                    [](const PlacedPiece& p) { return !rotation_on_grid(p.placement.rotation); })) {
        return report;
    }

    std::vector<Polygon> polys;
    polys.reserve(t.pieces.size());
    for (const auto& piece : t.pieces) polys.push_back(place(piece.placement));

    const std::size_t n = polys.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (interiors_overlap(polys[i], polys[j])) {
                add(ViolationKind::Overlap, "pieces " + std::to_string(t.pieces[i].pieceId) + " and " +
                                                std::to_string(t.pieces[j].pieceId) + " overlap");
            }
            if (closed_intersect(polys[i], polys[j])) parent[find(i)] = find(j);
        }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
    if (roots.size() > 1) {
        report.connected = false;
        report.warnings.push_back("silhouette has " + std::to_string(roots.size()) + " disconnected components");
    }
    return report;
}

std::optional<Placement> fit_placement(PieceKind kind, const Polygon& target) {
    const std::vector<Point> want = sorted(target);
    if (want.size() != canonical_vertices(kind).size()) return std::nullopt;
    for (bool mirrored : {false, true}) {
        if (mirrored && kind != PieceKind::Parallelogram) continue;
        for (int rot = 0; rot < 360; rot += 45) {
            Placement p{kind, {}, rot, mirrored};
            const std::vector<Point> have = sorted(place(p));
            p.translation = want.front() - have.front();
            if (sorted(place(p)) == want) return p;
        }
    }
    return std::nullopt;
}

Tangram canonical_square(std::string id) {
    // Classic layout on a 4x4 grid, scaled by sqrt(2)/2 to the unit convention.
    auto g = [](std::initializer_list<std::pair<int, int>> pts) {
        Polygon poly;
        for (auto [x, y] : pts) poly.push_back({half_root(x), half_root(y)});
        return poly;
    };
    const std::vector<std::pair<PieceKind, Polygon>> layout = {
        {PieceKind::LargeTriangle1, g({{0, 0}, {4, 0}, {2, 2}})},
        {PieceKind::LargeTriangle2, g({{0, 0}, {2, 2}, {0, 4}})},
        {PieceKind::MediumTriangle, g({{4, 2}, {4, 4}, {2, 4}})},
        {PieceKind::SmallTriangle1, g({{3, 1}, {4, 0}, {4, 2}})},
        {PieceKind::SmallTriangle2, g({{1, 3}, {2, 2}, {3, 3}})},
        {PieceKind::Square, g({{2, 2}, {3, 1}, {4, 2}, {3, 3}})},
        {PieceKind::Parallelogram, g({{0, 4}, {1, 3}, {3, 3}, {2, 4}})},
    };
    Tangram t;
    t.id = std::move(id);
    int pieceId = 1;
    for (const auto& [kind, poly] : layout) {
        auto placement = fit_placement(kind, poly);
        if (!placement) throw std::logic_error("canonical layout does not fit " + std::string(to_string(kind)));
        t.pieces.push_back({pieceId++, *placement});
    }
    return t;
}

}  // namespace kilogram::geometry
