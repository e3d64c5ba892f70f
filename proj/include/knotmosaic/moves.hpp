// Mosaic Reidemeister rewrites and inner-board machinery: type I / II
// moves as 2x2 stencils, the two-fold boundary completion, all-crossing
// inner boards and the odd-parity corner reduction.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "knotmosaic/enumerate.hpp"
#include "knotmosaic/symmetry.hpp"
#include "knotmosaic/trace.hpp"

namespace kmos {

enum class MoveKind { R1, R2, CornerR1 };

struct MoveSite {
    MoveKind kind;
    int r = 0, c = 0;     // anchor: top-left cell of the 2x2 patch
    int variant = 0;      // stencil index
    bool inverse = false; // apply the rewrite patch-to-pattern

    MoveSite inverted() const { return {kind, r, c, variant, !inverse}; }
    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

namespace detail {

struct Stencil {
    MoveKind kind;
    std::array<Tile, 4> before;  // row-major 2x2: the reducible pattern
    std::array<Tile, 4> after;   // the reduced patch, same boundary signature
};

inline std::array<Tile, 4> patch_of(const Mosaic& m) {
    return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

inline Mosaic patch_mosaic(const std::array<Tile, 4>& p) {
    return Mosaic(2, 2, {p[0], p[1], p[2], p[3]});
}

// The pictured moves, closed under the 16 board symmetries.
//
// R1 base: a crossing whose N and E connection points close up through
// three quarter arcs; removing the kink joins its S and W ends.
// R2 base: one strand runs straight through two stacked crossings, the
// other pokes past it and turns back through two arcs.  The clasp is
// removable exactly when the straight strand is on top at both crossings
// (equal tile kinds); opposite kinds make an essential alternating bigon.
// Sliding the strands apart replaces the crossings with double arcs.
inline const std::vector<Stencil>& stencils() {
    static const std::vector<Stencil> all = [] {
        auto tiles = [](int a, int b, int c, int d) {
            return std::array<Tile, 4>{Tile(a), Tile(b), Tile(c), Tile(d)};
        };
        std::vector<Stencil> bases{
            {MoveKind::R1, tiles(2, 1, 9, 4), tiles(0, 0, 1, 0)},
            {MoveKind::R2, tiles(9, 1, 9, 4), tiles(8, 1, 7, 4)},
        };
        std::vector<Stencil> out;
        for (const Stencil& base : bases) {
            for (const Symmetry& s : all_symmetries()) {
                Stencil v{base.kind, patch_of(transform(patch_mosaic(base.before), s)),
                          patch_of(transform(patch_mosaic(base.after), s))};
                bool seen = false;
                for (const Stencil& o : out)
                    if (o.before == v.before && o.after == v.after) { seen = true; break; }
                if (!seen) out.push_back(v);
            }
        }
        return out;
    }();
    return all;
}

inline bool patch_matches(const Mosaic& m, int r, int c, const std::array<Tile, 4>& p) {
    return m.at(r, c) == p[0] && m.at(r, c + 1) == p[1] && m.at(r + 1, c) == p[2] &&
           m.at(r + 1, c + 1) == p[3];
}

inline Mosaic patch_replace(const Mosaic& m, int r, int c, const std::array<Tile, 4>& p) {
    return m.with(r, c, p[0]).with(r, c + 1, p[1]).with(r + 1, c, p[2]).with(r + 1, c + 1, p[3]);
}

}  // namespace detail

// Every reducing type I / II site (pattern present in some orientation).
inline std::vector<MoveSite> find_moves(const Mosaic& m) {
    const auto& st = detail::stencils();
    std::vector<MoveSite> sites;
    for (int r = 0; r + 1 < m.rows(); ++r)
        for (int c = 0; c + 1 < m.cols(); ++c)
            for (int v = 0; v < int(st.size()); ++v)
                if (detail::patch_matches(m, r, c, st[size_t(v)].before))
                    sites.push_back({st[size_t(v)].kind, r, c, v, false});
    return sites;
}

// Rewrites the 2x2 patch at the site; inverse sites re-insert the pattern.
inline Mosaic apply_move(const Mosaic& m, const MoveSite& site) {
    const auto& st = detail::stencils().at(size_t(site.variant));
    const auto& expect = site.inverse ? st.after : st.before;
    const auto& emit = site.inverse ? st.before : st.after;
    if (site.r + 1 >= m.rows() || site.c + 1 >= m.cols() ||
        !detail::patch_matches(m, site.r, site.c, expect))
        throw std::logic_error("move site pattern is not present");
    return detail::patch_replace(m, site.r, site.c, emit);
}

// Row-major greedy reduction to a fixpoint; a cheap simplifier, never a
// correctness dependency.
inline Mosaic reduce_fixpoint(const Mosaic& m, int* applied = nullptr) {
    Mosaic cur = m;
    int count = 0;
    for (;;) {
        auto sites = find_moves(cur);
        if (sites.empty()) break;
        cur = apply_move(cur, sites.front());
        ++count;
    }
    if (applied) *applied = count;
    return cur;
}

// The (n-2)x(n-2) inner board holding only crossing tiles.
inline InnerBoard all_crossing_inner(int n) {
    if (n < 4) throw std::invalid_argument("all-crossing inner board needs n >= 4");
    int k = n - 2;
    return InnerBoard(n, std::vector<Tile>(size_t(k) * k, Tile::crossing_v()));
}

// All suitably connected completions of an inner board; by the two-fold
// rule the result holds 0 or 2 boards.
inline std::vector<Mosaic> complete_boundary(const InnerBoard& inner) {
    int n = inner.parent_size();
    std::vector<int8_t> fixed(size_t(n) * n, -1);
    for (int r = 0; r < inner.size(); ++r)
        for (int c = 0; c < inner.size(); ++c)
            fixed[size_t(r + 1) * n + (c + 1)] = int8_t(inner.at(r, c).code());

    EnumFilter filter;
    filter.require_single_component = false;
    detail::Constraints extra;
    extra.fixed = &fixed;

    std::vector<Mosaic> out;
    std::function<bool(const Mosaic&)> collect = [&](const Mosaic& m) {
        out.push_back(m);
        return true;
    };
    detail::MosaicDfs dfs(n, filter, collect, extra);
    dfs.run();
    return out;
}

// Odd-parity corner reduction: when some side of the inner board has crossing
// tiles in both corners and an odd number of connection points on its
// outer boundary, one corner crossing carries a kink through the boundary
// and a type I move removes it.  Returns the reduced board, or nothing.
inline std::optional<Mosaic> corner_reduce(const Mosaic& m) {
    int n = m.size();
    if (n < 4) return std::nullopt;
    const auto& st = detail::stencils();

    for (int rot = 0; rot < 4; ++rot) {
        Symmetry s = Symmetry::identity();
        for (int i = 0; i < rot; ++i) s = compose(Symmetry::rot90(), s);
        Mosaic b = transform(m, s);

        if (!b.at(1, 1).is_crossing() || !b.at(1, n - 2).is_crossing()) continue;
        int points = 0;
        for (int c = 1; c <= n - 2; ++c) points += b.at(1, c).connects(Edge::N);
        if (points % 2 == 0) continue;

        // The kink sits at whichever corner the odd strand exits; match the
        // type I pattern whose crossing is that corner cell.
        for (auto [ar, ac, cross_idx] : {std::tuple{0, 0, 3}, std::tuple{0, n - 2, 2}}) {
            for (int v = 0; v < int(st.size()); ++v) {
                if (st[size_t(v)].kind != MoveKind::R1) continue;
                if (!st[size_t(v)].before[size_t(cross_idx)].is_crossing()) continue;
                if (!detail::patch_matches(b, ar, ac, st[size_t(v)].before)) continue;
                Mosaic reduced = detail::patch_replace(b, ar, ac, st[size_t(v)].after);
                return transform(reduced, inverse(s));
            }
        }
    }
    return std::nullopt;
}

}  // namespace kmos
