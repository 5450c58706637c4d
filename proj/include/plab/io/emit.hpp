#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "../classify.hpp"
#include "../tiling.hpp"

namespace plab::io {

namespace detail {

inline std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

inline std::string escape_xml(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace detail

inline std::string emit_dot(const Graph& g, const std::vector<std::string>& tooltips = {})
{
    std::string out = "graph G {\n";
    if (g.order() > 0) out += "  node [shape=circle];\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v + 1) + " [label=\"" + std::to_string(v + 1) + "\"";
        if (v < static_cast<int>(tooltips.size())) out += ", tooltip=\"" + tooltips[v] + "\"";
        out += "];\n";
    }
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) + ";\n";
    return out + "}\n";
}

// Labels are collection indices, tooltips the set lists.
inline std::string emit_dot(const ExchangeGraph& G)
{
    std::vector<std::string> tips;
    for (const auto& W : G.vertices) {
        std::string t;
        for (const auto& s : W.sets()) t += (t.empty() ? "" : " ") + compact(s);
        tips.push_back(t);
    }
    return emit_dot(G.topology, tips);
}

// Faces as filled polygons, corners sorted by angle around the centroid; one labelled dot per set.
inline std::string emit_svg(const Tiling& T)
{
    const double scale = 80, margin = 40;
    const auto& sets = T.collection().sets();
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto& s : sets) {
        auto p = Tiling::embed(s);
        if (first) {
            lo_x = hi_x = p.x;
            lo_y = hi_y = p.y;
            first = false;
        }
        lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
    }
    auto sx = [&](double x) { return margin + (x - lo_x) * scale; };
    auto sy = [&](double y) { return margin + (hi_y - y) * scale; };
    double width = 2 * margin + (hi_x - lo_x) * scale, height = 2 * margin + (hi_y - lo_y) * scale;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(width) + "\" height=\"" +
                      detail::fixed(height) + "\" viewBox=\"0 0 " + detail::fixed(width) + " " +
                      detail::fixed(height) + "\">\n";
    for (const auto& f : T.faces()) {
        std::vector<Point> pts;
        Point c;
        for (const auto& s : f.clique) {
            pts.push_back(Tiling::embed(s));
            c.x += pts.back().x / f.clique.size();
            c.y += pts.back().y / f.clique.size();
        }
        std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
            return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
        });
        std::string corners;
        for (const auto& p : pts) corners += (corners.empty() ? "" : " ") + detail::fixed(sx(p.x)) + "," + detail::fixed(sy(p.y));
        out += std::string("  <polygon class=\"face ") + (f.black ? "black" : "white") + "\" data-label=\"" +
               compact(f.label) + "\" points=\"" + corners + "\" fill=\"" + (f.black ? "#404040" : "#f4f4f4") +
               "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& s : sets) {
        auto p = Tiling::embed(s);
        bool boundary = T.collection().necklace().contains(s);
        out += "  <g class=\"vertex" + std::string(boundary ? " boundary" : "") + "\">\n";
        out += "    <circle cx=\"" + detail::fixed(sx(p.x)) + "\" cy=\"" + detail::fixed(sy(p.y)) +
               "\" r=\"4\" fill=\"#c03030\"/>\n";
        out += "    <text x=\"" + detail::fixed(sx(p.x) + 6) + "\" y=\"" + detail::fixed(sy(p.y) - 6) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + detail::escape_xml(compact(s)) + "</text>\n";
        out += "  </g>\n";
    }
    return out + "</svg>\n";
}

inline std::string emit_csv(const std::vector<ClassRecord>& rows)
{
    std::string out = "Interior Size,Equivalence Class,Exchange Graph Order,Exchange Graph\n";
    for (const auto& r : rows)
        out += std::to_string(r.interior) + "," + detail::csv_field(r.representative.str()) + "," +
               std::to_string(r.order) + "," + detail::csv_field(r.name) + "\n";
    return out;
}

} // namespace plab::io
