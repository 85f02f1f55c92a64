#pragma once

#include <bideal/basic_ideals.hpp>
#include <bideal/bpaths.hpp>
#include <bideal/root_poset.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace bideal {

// Lattice points traced by p on the doubled board, in board coordinates
// (y grows upward). p starts at (-1, 0); r steps right, f steps down.
inline std::vector<std::pair<int, int>> lower_path_points(const BPath& p) {
    std::vector<std::pair<int, int>> pts;
    int x = -1, y = 0;
    pts.emplace_back(x, y);
    for (int pos = 1; pos <= p.length(); ++pos) {
        if (p.f_at(pos)) --y; else ++x;
        pts.emplace_back(x, y);
    }
    return pts;
}

// q starts at (2n, 1); r steps left, f steps up.
inline std::vector<std::pair<int, int>> upper_path_points(const BPath& q) {
    std::vector<std::pair<int, int>> pts;
    int x = 2 * q.rank(), y = 1;
    pts.emplace_back(x, y);
    for (int pos = 1; pos <= q.length(); ++pos) {
        if (q.f_at(pos)) ++y; else --x;
        pts.emplace_back(x, y);
    }
    return pts;
}

namespace detail {

inline std::string fixed1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

// Cells of the decoded pair, as flags aligned with board_cells order.
inline std::vector<char> shaded_flags(int n, const BPath& p, const BPath& q) {
    AffineMask mask = decode_pair_mask(n, p, q);
    std::vector<char> flags(mask.size(), 0);
    for (size_t i = 0; i < mask.size(); ++i) flags[i] = mask.test(i) ? 1 : 0;
    return flags;
}

}  // namespace detail

// SVG 1.1 document. One box is 20 units; the origin sits at the northwest
// corner of the board with y growing downward. With no paths the cover
// relation is drawn as arrows between box centers; with a pair the decoded
// coideal boxes are shaded and both paths drawn.
inline std::string render_svg(int n, const std::optional<BPath>& p,
                              const std::optional<BPath>& q) {
    require_rank(n, 2);
    const int unit = 20;
    auto X = [&](int x) { return unit * x; };
    auto Y = [&](int y) { return unit * (n + 1 - y); };
    const int span = 40 * n + 40;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-30 -10 " +
           std::to_string(span) + " " + std::to_string(span) + "\">\n";

    const auto cells = board_cells(n);
    if (p && q) {
        const auto flags = detail::shaded_flags(n, *p, *q);
        out += "  <g stroke=\"none\">\n";
        for (size_t i = 0; i < cells.size(); ++i) {
            if (!flags[i]) continue;
            const char* fill = cells[i].node.tag == NodeTag::Lower ? "#f8cecc" : "#dae8fc";
            out += "    <rect x=\"" + std::to_string(X(cells[i].x)) + "\" y=\"" +
                   std::to_string(Y(cells[i].y)) + "\" width=\"20\" height=\"20\" fill=\"" +
                   fill + "\"/>\n";
        }
        out += "  </g>\n";
    }

    out += "  <g fill=\"none\" stroke=\"#888888\" stroke-width=\"1\">\n";
    for (const BoardCell& cell : cells)
        out += "    <rect x=\"" + std::to_string(X(cell.x)) + "\" y=\"" +
               std::to_string(Y(cell.y)) + "\" width=\"20\" height=\"20\"/>\n";
    out += "  </g>\n";

    if (!p && !q) {
        out += "  <defs>\n"
               "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\""
               " markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\n"
               "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444444\"/>\n"
               "    </marker>\n"
               "  </defs>\n";
        const auto& poset = affine_poset_cached(n);
        out += "  <g stroke=\"#444444\" stroke-width=\"1\" marker-end=\"url(#arrow)\">\n";
        for (auto [from, to] : poset.cover_edges()) {
            const BoardCell& a = cells[static_cast<size_t>(from)];
            const BoardCell& b = cells[static_cast<size_t>(to)];
            out += "    <line x1=\"" + std::to_string(X(a.x) + 10) + "\" y1=\"" +
                   std::to_string(Y(a.y) + 10) + "\" x2=\"" + std::to_string(X(b.x) + 10) +
                   "\" y2=\"" + std::to_string(Y(b.y) + 10) + "\"/>\n";
        }
        out += "  </g>\n";
    }

    auto polyline = [&](const std::vector<std::pair<int, int>>& pts, const char* color) {
        std::string points;
        for (auto [x, y] : pts) {
            if (!points.empty()) points += ' ';
            points += std::to_string(X(x)) + "," + std::to_string(Y(y));
        }
        return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"3\" points=\"" + points + "\"/>\n";
    };
    if (p) out += polyline(lower_path_points(*p), "#cc0000");
    if (q) out += polyline(upper_path_points(*q), "#0066cc");

    out += "</svg>\n";
    return out;
}

// TikZ fragment with the same content in board coordinates (y grows upward).
inline std::string render_tikz(int n, const std::optional<BPath>& p,
                               const std::optional<BPath>& q) {
    require_rank(n, 2);
    std::string out = "\\begin{tikzpicture}[scale=0.5]\n";
    const auto cells = board_cells(n);

    if (p && q) {
        const auto flags = detail::shaded_flags(n, *p, *q);
        for (size_t i = 0; i < cells.size(); ++i) {
            if (!flags[i]) continue;
            const char* fill = cells[i].node.tag == NodeTag::Lower ? "red!15" : "blue!15";
            out += "  \\fill[" + std::string(fill) + "] (" + std::to_string(cells[i].x) + "," +
                   std::to_string(cells[i].y - 1) + ") rectangle (" +
                   std::to_string(cells[i].x + 1) + "," + std::to_string(cells[i].y) + ");\n";
        }
    }

    for (const BoardCell& cell : cells)
        out += "  \\draw[gray] (" + std::to_string(cell.x) + "," + std::to_string(cell.y - 1) +
               ") rectangle (" + std::to_string(cell.x + 1) + "," + std::to_string(cell.y) +
               ");\n";

    if (!p && !q) {
        const auto& poset = affine_poset_cached(n);
        for (auto [from, to] : poset.cover_edges()) {
            const BoardCell& a = cells[static_cast<size_t>(from)];
            const BoardCell& b = cells[static_cast<size_t>(to)];
            out += "  \\draw[->] (" + detail::fixed1(a.x + 0.5) + "," +
                   detail::fixed1(a.y - 0.5) + ") -- (" + detail::fixed1(b.x + 0.5) + "," +
                   detail::fixed1(b.y - 0.5) + ");\n";
        }
    }

    auto polyline = [&](const std::vector<std::pair<int, int>>& pts, const char* color) {
        std::string line = "  \\draw[very thick," + std::string(color) + "] ";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) line += " -- ";
            line += "(" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")";
        }
        return line + ";\n";
    };
    if (p) out += polyline(lower_path_points(*p), "red");
    if (q) out += polyline(upper_path_points(*q), "blue");

    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace bideal
