// Planar diagram codes extracted from one-component mosaics.
//
// Edges of the diagram (strand segments between crossing passages) are
// numbered 1..2c along the traversal.  Each crossing is recorded as
// X[a,b,c,d]: the incident edge labels counterclockwise from the incoming
// under-strand edge a, in the usual planar orientation (board rows grow
// downward, so counterclockwise on paper is N, W, S, E around a cell).
#pragma once

#include <stdexcept>
#include <vector>

#include "knotmosaic/trace.hpp"

namespace kmos {

struct PdCrossing {
    int a, b, c, d;    // edge labels, CCW from the incoming under edge
    int over_in;       // label of the incoming over edge
    int sign;          // +1 / -1 with both strands oriented by traversal
    int row = -1, col = -1;  // source cell when extracted from a mosaic
};

struct PlanarDiagram {
    std::vector<PdCrossing> crossings;
    int edge_count = 0;  // 2 * crossings; 0 encodes the unknot diagram

    int crossing_count() const { return int(crossings.size()); }
};

struct ComponentCountError : std::invalid_argument {
    explicit ComponentCountError(int count)
        : std::invalid_argument("expected a one-component mosaic, got " +
                                std::to_string(count) + " components"),
          components(count) {}
    int components;
};

namespace detail {

constexpr Edge ccw_next(Edge e) {
    switch (e) {
        case Edge::N: return Edge::W;
        case Edge::W: return Edge::S;
        case Edge::S: return Edge::E;
        case Edge::E: return Edge::N;
    }
    throw std::logic_error("edge");
}

// Travel direction (x right, y up) for a strand entering at `e`.
constexpr std::pair<int, int> travel_dir(Edge e) {
    switch (e) {
        case Edge::S: return {0, 1};
        case Edge::N: return {0, -1};
        case Edge::W: return {1, 0};
        case Edge::E: return {-1, 0};
    }
    throw std::logic_error("edge");
}

}  // namespace detail

// Deterministic extraction: the walk starts at the least (row, col, edge)
// connection point and follows the strand.
inline PlanarDiagram to_planar_diagram(const Mosaic& m) {
    auto loops = trace_components(m);
    if (loops.size() != 1) {
        if (loops.empty()) throw ComponentCountError(0);
        throw ComponentCountError(int(loops.size()));
    }
    const StrandLoop& loop = loops.front();  // begins at the least port

    int c = 0;
    for (const StrandStep& s : loop) c += m.at(s.r, s.c).is_crossing();
    PlanarDiagram pd;
    pd.edge_count = c;  // counted passages; each passage ends one edge
    if (c == 0) return pd;

    struct CellInfo {
        int index = -1;            // crossing index in first-visit order
        int label_at[4] = {0, 0, 0, 0};
        int in_dir[4][2] = {};     // travel direction of the pass entering at e
    };
    std::vector<CellInfo> info(size_t(m.rows()) * m.cols());
    auto cell = [&](int r, int col) -> CellInfo& { return info[size_t(r) * m.cols() + col]; };

    int next_index = 0;
    int label = 1;
    for (const StrandStep& s : loop) {
        Tile t = m.at(s.r, s.c);
        if (!t.is_crossing()) continue;
        CellInfo& ci = cell(s.r, s.c);
        if (ci.index < 0) {
            ci.index = next_index++;
            pd.crossings.push_back({0, 0, 0, 0, 0, 0, s.r, s.c});
        }
        Edge exit = t.pass_through(s.entry);
        int in = static_cast<int>(s.entry);
        ci.label_at[in] = label;
        label = label % pd.edge_count + 1;
        ci.label_at[static_cast<int>(exit)] = label;
        auto [dx, dy] = detail::travel_dir(s.entry);
        ci.in_dir[in][0] = dx;
        ci.in_dir[in][1] = dy;
    }

    for (const StrandStep& s : loop) {
        Tile t = m.at(s.r, s.c);
        if (!t.is_crossing()) continue;
        CellInfo& ci = cell(s.r, s.c);
        PdCrossing& x = pd.crossings[size_t(ci.index)];
        if (x.a != 0) continue;  // already filled on the first revisit
        // The under strand runs along the axis that is not on top.
        bool under_vertical = !t.vertical_over();
        Edge under_in, over_in;
        if (under_vertical) {
            under_in = ci.in_dir[int(Edge::S)][1] == 1 ? Edge::S : Edge::N;
            over_in = ci.in_dir[int(Edge::W)][0] == 1 ? Edge::W : Edge::E;
        } else {
            under_in = ci.in_dir[int(Edge::W)][0] == 1 ? Edge::W : Edge::E;
            over_in = ci.in_dir[int(Edge::S)][1] == 1 ? Edge::S : Edge::N;
        }
        Edge e = under_in;
        x.a = ci.label_at[int(e)];
        e = detail::ccw_next(e);
        x.b = ci.label_at[int(e)];
        e = detail::ccw_next(e);
        x.c = ci.label_at[int(e)];
        e = detail::ccw_next(e);
        x.d = ci.label_at[int(e)];
        x.over_in = ci.label_at[int(over_in)];
        auto o = detail::travel_dir(over_in);
        auto u = detail::travel_dir(under_in);
        x.sign = (o.first * u.second - o.second * u.first) > 0 ? 1 : -1;
    }
    pd.edge_count = 2 * int(pd.crossings.size());
    return pd;
}

inline int writhe(const PlanarDiagram& pd) {
    int w = 0;
    for (const PdCrossing& x : pd.crossings) w += x.sign;
    return w;
}

// True when over/under passes alternate along the strand.  The 0-crossing
// diagram is alternating.
inline bool is_alternating(const PlanarDiagram& pd) {
    if (pd.crossings.empty()) return true;
    // pass_under[e] = the passage terminating edge e goes under.
    std::vector<char> pass_under(size_t(pd.edge_count) + 1, 0);
    for (const PdCrossing& x : pd.crossings) pass_under[size_t(x.a)] = 1;
    for (int e = 1; e <= pd.edge_count; ++e) {
        int next = e % pd.edge_count + 1;
        if (pass_under[size_t(e)] == pass_under[size_t(next)]) return false;
    }
    return true;
}

}  // namespace kmos
