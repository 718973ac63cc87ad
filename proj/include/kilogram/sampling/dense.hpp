#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/metrics/perplexity.hpp"

namespace kilogram::sampling {

struct SamplePlanePoint {
    std::string tangramId;
    double logPerplexity = 0.0;
    double psa = 0.0;
};

struct Plane {
    std::vector<SamplePlanePoint> points;
    // Tangrams left out because their metrics are undefined.
    std::vector<std::string> excluded;
};

// One point per tangram: mean whole-shape log perplexity against PSA.
Plane build_plane(const corpus::AnalysisSet& set, const metrics::PerplexityParams& params);

struct DenseSampleOptions {
    std::uint64_t seed = 0;
    std::size_t periphery = 12;
    std::size_t uniform = 25;
    std::size_t grid = 25;
    int gridDivisions = 5;
};

struct GridBounds {
    double minX = 0.0, maxX = 0.0, minY = 0.0, maxY = 0.0;
};

struct DenseSample {
    std::vector<std::string> periphery;
    std::vector<std::string> uniform;
    std::vector<std::string> grid;
    GridBounds bounds;
    std::size_t hullSize = 0;      // vertices of the outer hull
    std::size_t hullLayers = 0;    // layers peeled to fill the periphery draw
    std::size_t occupiedCells = 0;

    std::vector<std::string> all() const;
};

class InsufficientPoints : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Indexes of convex hull vertices (counter-clockwise, collinear points
// dropped) of the given points. x = log perplexity, y = PSA.
std::vector<std::size_t> convex_hull(const std::vector<SamplePlanePoint>& points);

// Grid cell of a value on one axis; half-open cells, the maximum edge folds
// into the last cell.
int grid_cell(double value, double lo, double hi, int divisions);

// Periphery picks come from convex hull vertices (further hull layers when
// the outer one is too small); then uniform picks from all remaining
// points; then one random point per occupied grid cell, cycling through
// occupied cells when fewer cells than picks are available. The three
// draws are disjoint.
DenseSample dense_sample(const std::vector<SamplePlanePoint>& points, const DenseSampleOptions& options = {});

}  // namespace kilogram::sampling
