#include "kilogram/geometry/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace kilogram::geometry {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // no "-0.0000"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

std::string fill_for(const std::string& color) { return color == "black" ? kBlack : color; }

}  // namespace

bool is_valid_color(const std::string& color) {
    if (color == kBlack) return true;
    return !color.empty() && std::all_of(color.begin(), color.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

std::map<int, std::string> all_black(const Tangram& t) {
    std::map<int, std::string> colors;
    for (const auto& piece : t.pieces) colors[piece.pieceId] = kBlack;
    return colors;
}

std::string render_svg(const Tangram& t, const std::map<int, std::string>& colors, const std::string& borderColor) {
    if (!is_valid_color(borderColor)) throw RenderError("invalid border color: " + borderColor);

    std::vector<std::vector<std::pair<double, double>>> polys;
    double minx = std::numeric_limits<double>::infinity(), miny = minx;
    double maxx = -minx, maxy = -minx;
    for (const auto& piece : t.pieces) {
        const auto it = colors.find(piece.pieceId);
        if (it == colors.end()) throw RenderError("no color for piece " + std::to_string(piece.pieceId));
        if (!is_valid_color(fill_for(it->second))) throw RenderError("invalid color: " + it->second);
        std::vector<std::pair<double, double>> poly;
        for (const Point& p : place(piece.placement)) {
            const double x = p.x.to_double();
            const double y = -p.y.to_double();  // SVG y axis points down
            poly.emplace_back(x, y);
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
        polys.push_back(std::move(poly));
    }
    if (polys.empty()) minx = miny = maxx = maxy = 0.0;

    const double side = std::max({maxx - minx, maxy - miny, 1.0});
    const double pad = side * kPaddingRatio;
    const double full = side + 2.0 * pad;
    const double ox = minx - pad - (side - (maxx - minx)) / 2.0;
    const double oy = miny - pad - (side - (maxy - miny)) / 2.0;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(ox) + " " + num(oy) + " " + num(full) + " " +
           num(full) + "\" width=\"512\" height=\"512\">\n";
    out += "  <rect x=\"" + num(ox) + "\" y=\"" + num(oy) + "\" width=\"" + num(full) + "\" height=\"" + num(full) +
           "\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const int id = t.pieces[i].pieceId;
        std::string d;
        for (std::size_t v = 0; v < polys[i].size(); ++v) {
            d += (v == 0 ? "M " : " L ") + num(polys[i][v].first) + " " + num(polys[i][v].second);
        }
        d += " Z";
        out += "  <path id=\"piece-" + std::to_string(id) + "\" data-piece=\"" + std::to_string(id) + "\" d=\"" + d +
               "\" fill=\"" + fill_for(colors.at(id)) + "\" stroke=\"" + borderColor + "\" stroke-width=\"" +
               num(kStrokeWidth) + "\" stroke-linejoin=\"round\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace kilogram::geometry
