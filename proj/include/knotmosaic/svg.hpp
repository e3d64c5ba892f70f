// SVG rendering of mosaic boards: one 64-unit square per tile, circular
// quarter arcs, a gap in the under strand at crossings, and markers on
// mismatched edges of invalid boards.  All coordinates are integers so the
// output is byte-stable.
#pragma once

#include <string>

#include "knotmosaic/mosaic.hpp"

namespace kmos {

// Bump when the drawing style changes; rendered output is golden-filed.
inline constexpr int kSvgStyleVersion = 1;

namespace detail {

inline constexpr int kTilePx = 64;
inline constexpr int kStrandWidth = 8;
inline constexpr int kUnderGap = 11;

inline void append_arc(std::string& s, int corner_x, int corner_y, int from_x, int from_y,
                       int to_x, int to_y, bool sweep) {
    // Quarter circle of radius half a tile centered on a tile corner.
    s += "<path d=\"M " + std::to_string(from_x) + " " + std::to_string(from_y) + " A 32 32 0 0 " +
         (sweep ? "1" : "0") + " " + std::to_string(to_x) + " " + std::to_string(to_y) +
         "\" class=\"s\"/>\n";
    (void)corner_x;
    (void)corner_y;
}

inline void append_line(std::string& s, int x1, int y1, int x2, int y2) {
    s += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
         std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" class=\"s\"/>\n";
}

}  // namespace detail

inline std::string render_svg(const Mosaic& m) {
    using namespace detail;
    const int w = m.cols() * kTilePx, h = m.rows() * kTilePx;
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
    s += "<!-- knotmosaic svg style " + std::to_string(kSvgStyleVersion) + " -->\n";
    s += "<style>.s{stroke:#1a1a1a;stroke-width:" + std::to_string(kStrandWidth) +
         ";fill:none;stroke-linecap:round}.g{stroke:#c8c8c8;stroke-width:1}.bad{fill:#d62728}"
         "</style>\n";
    s += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" fill=\"#ffffff\"/>\n";
    for (int r = 0; r <= m.rows(); ++r)
        s += "<line class=\"g\" x1=\"0\" y1=\"" + std::to_string(r * kTilePx) + "\" x2=\"" +
             std::to_string(w) + "\" y2=\"" + std::to_string(r * kTilePx) + "\"/>\n";
    for (int c = 0; c <= m.cols(); ++c)
        s += "<line class=\"g\" x1=\"" + std::to_string(c * kTilePx) + "\" y1=\"0\" x2=\"" +
             std::to_string(c * kTilePx) + "\" y2=\"" + std::to_string(h) + "\"/>\n";

    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            const int x0 = c * kTilePx, y0 = r * kTilePx;
            const int x1 = x0 + kTilePx, y1 = y0 + kTilePx;
            const int cx = x0 + kTilePx / 2, cy = y0 + kTilePx / 2;
            auto arc_sw = [&] { append_arc(s, x0, y1, cx, y1, x0, cy, false); };
            auto arc_se = [&] { append_arc(s, x1, y1, cx, y1, x1, cy, true); };
            auto arc_ne = [&] { append_arc(s, x1, y0, cx, y0, x1, cy, false); };
            auto arc_nw = [&] { append_arc(s, x0, y0, cx, y0, x0, cy, true); };
            switch (m.at(r, c).code()) {
                case 0: break;
                case 1: arc_sw(); break;
                case 2: arc_se(); break;
                case 3: arc_ne(); break;
                case 4: arc_nw(); break;
                case 5: append_line(s, x0, cy, x1, cy); break;
                case 6: append_line(s, cx, y0, cx, y1); break;
                case 7: arc_nw(); arc_se(); break;
                case 8: arc_ne(); arc_sw(); break;
                case 9:  // vertical over: split the horizontal strand
                    append_line(s, x0, cy, cx - kUnderGap, cy);
                    append_line(s, cx + kUnderGap, cy, x1, cy);
                    append_line(s, cx, y0, cx, y1);
                    break;
                case 10:  // horizontal over: split the vertical strand
                    append_line(s, cx, y0, cx, cy - kUnderGap);
                    append_line(s, cx, cy + kUnderGap, cx, y1);
                    append_line(s, x0, cy, x1, cy);
                    break;
            }
        }
    }

    for (const EdgeRef& e : connection_mismatches(m)) {
        int x = e.c * kTilePx + kTilePx / 2, y = e.r * kTilePx + kTilePx / 2;
        if (e.e == Edge::N) y -= kTilePx / 2;
        if (e.e == Edge::S) y += kTilePx / 2;
        if (e.e == Edge::W) x -= kTilePx / 2;
        if (e.e == Edge::E) x += kTilePx / 2;
        s += "<circle class=\"bad\" cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(y) +
             "\" r=\"7\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace kmos
