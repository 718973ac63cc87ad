#include "kilogram/sampling/dense.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "kilogram/metrics/psa.hpp"
#include "kilogram/rng.hpp"

namespace kilogram::sampling {

std::vector<std::string> DenseSample::all() const {
    std::vector<std::string> out = periphery;
    out.insert(out.end(), uniform.begin(), uniform.end());
    out.insert(out.end(), grid.begin(), grid.end());
    return out;
}

Plane build_plane(const corpus::AnalysisSet& set, const metrics::PerplexityParams& params) {
    Plane plane;
    for (const auto& [id, list] : set.members()) {
        try {
            const double lp = metrics::log_perplexity(list, params).value;
            const double psa = metrics::psa(list).value;
            plane.points.push_back({id, lp, psa});
        } catch (const metrics::MetricUndefined&) {
            plane.excluded.push_back(id);
        }
    }
    return plane;
}

std::vector<std::size_t> convex_hull(const std::vector<SamplePlanePoint>& points) {
    std::vector<std::size_t> idx(points.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](std::size_t i) { return std::pair{points[i].logPerplexity, points[i].psa}; };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return key(a) != key(b) ? key(a) < key(b) : points[a].tangramId < points[b].tangramId;
    });
    // Coincident points share one hull vertex; keep the first of each.
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) == key(b); }),
              idx.end());
    if (idx.size() < 3) return idx;

    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (points[a].logPerplexity - points[o].logPerplexity) * (points[b].psa - points[o].psa) -
               (points[a].psa - points[o].psa) * (points[b].logPerplexity - points[o].logPerplexity);
    };
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0) --k;
        hull[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], idx[i - 1]) <= 0) --k;
        hull[k++] = idx[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

int grid_cell(double value, double lo, double hi, int divisions) {
    if (!(hi > lo)) return 0;
    const int c = static_cast<int>(std::floor((value - lo) / (hi - lo) * divisions));
    return std::clamp(c, 0, divisions - 1);
}

DenseSample dense_sample(const std::vector<SamplePlanePoint>& points, const DenseSampleOptions& options) {
    const std::size_t needed = options.periphery + options.uniform + options.grid;
    std::set<std::string> distinct;
    for (const auto& p : points) {
        if (!std::isfinite(p.logPerplexity) || !std::isfinite(p.psa)) {
            throw std::invalid_argument("non-finite plane coordinate for " + p.tangramId);
        }
        distinct.insert(p.tangramId);
    }
    if (distinct.size() != points.size()) throw std::invalid_argument("plane has repeated tangram ids");
    if (points.size() < needed) {
        throw InsufficientPoints("dense sampling needs " + std::to_string(needed) + " points, have " +
                                 std::to_string(points.size()));
    }
    if (options.gridDivisions < 1) throw std::invalid_argument("grid divisions must be positive");

    // Deterministic regardless of input order.
    std::vector<SamplePlanePoint> pts = points;
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.tangramId < b.tangramId; });

    Rng rng(options.seed);
    DenseSample out;
    std::vector<bool> taken(pts.size(), false);

    out.bounds = {pts[0].logPerplexity, pts[0].logPerplexity, pts[0].psa, pts[0].psa};
    for (const auto& p : pts) {
        out.bounds.minX = std::min(out.bounds.minX, p.logPerplexity);
        out.bounds.maxX = std::max(out.bounds.maxX, p.logPerplexity);
        out.bounds.minY = std::min(out.bounds.minY, p.psa);
        out.bounds.maxY = std::max(out.bounds.maxY, p.psa);
    }

    // Periphery: hull vertices, peeling inner layers while more are needed.
    {
        std::vector<std::size_t> remaining(pts.size());
        std::iota(remaining.begin(), remaining.end(), 0);
        std::size_t still = options.periphery;
        while (still > 0) {
            std::vector<SamplePlanePoint> layer_pts;
            for (std::size_t i : remaining) layer_pts.push_back(pts[i]);
            std::vector<std::size_t> hull = convex_hull(layer_pts);
            if (hull.empty()) break;
            if (out.hullLayers == 0) out.hullSize = hull.size();
            ++out.hullLayers;
            const auto picks = rng.sample_without_replacement(hull.size(), std::min(still, hull.size()));
            std::set<std::size_t> removed;
            for (std::size_t h : picks) {
                const std::size_t i = remaining[hull[h]];
                taken[i] = true;
                out.periphery.push_back(pts[i].tangramId);
                --still;
            }
            for (std::size_t h : hull) removed.insert(remaining[h]);
            std::vector<std::size_t> next;
            for (std::size_t i : remaining) {
                if (!removed.count(i)) next.push_back(i);
            }
            // Coincident duplicates of hull vertices stay as candidates for the next layer.
            if (next.size() == remaining.size()) break;
            remaining = std::move(next);
        }
        if (out.periphery.size() < options.periphery) throw InsufficientPoints("not enough points for the periphery draw");
    }

    // Uniform over everything not yet taken.
    {
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!taken[i]) avail.push_back(i);
        }
        for (std::size_t j : rng.sample_without_replacement(avail.size(), options.uniform)) {
            taken[avail[j]] = true;
            out.uniform.push_back(pts[avail[j]].tangramId);
        }
    }

    // Grid: one per occupied cell, cycling if cells run short.
    {
        const int d = options.gridDivisions;
        std::map<int, std::vector<std::size_t>> cells;  // row-major cell index
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (taken[i]) continue;
            const int cx = grid_cell(pts[i].logPerplexity, out.bounds.minX, out.bounds.maxX, d);
            const int cy = grid_cell(pts[i].psa, out.bounds.minY, out.bounds.maxY, d);
            cells[cy * d + cx].push_back(i);
        }
        out.occupiedCells = cells.size();
        std::vector<int> order;
        for (const auto& [c, members] : cells) order.push_back(c);
        if (order.size() > options.grid) {
            // More occupied cells than picks: choose which cells get one.
            std::vector<int> chosen;
            auto sel = rng.sample_without_replacement(order.size(), options.grid);
            std::sort(sel.begin(), sel.end());
            for (std::size_t s : sel) chosen.push_back(order[s]);
            order = std::move(chosen);
        }
        std::size_t still = options.grid;
        while (still > 0) {
            bool progressed = false;
            for (int c : order) {
                if (still == 0) break;
                auto& members = cells[c];
                if (members.empty()) continue;
                const std::size_t j = rng.uniform_index(members.size());
                out.grid.push_back(pts[members[j]].tangramId);
                members.erase(members.begin() + static_cast<std::ptrdiff_t>(j));
                --still;
                progressed = true;
            }
            if (!progressed) throw InsufficientPoints("grid cells exhausted before the grid draw was filled");
        }
    }
    return out;
}

}  // namespace kilogram::sampling
