// Board symmetries: the 8 dihedral transforms plus a global over/under
// swap, 16 elements in all.
//
// A dihedral transform moves tiles and re-maps their kinds so that the
// strand geometry follows the board.  Orientation-reversing elements
// (reflections) additionally exchange which strand of a crossing is on
// top: a reflected board is the original knot seen from the other side of
// the plane, so every dihedral transform preserves knot type and
// chirality.  The mirror image is produced by `crossing_swap` alone.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace kmos {

// Coordinate action of a dihedral element on an n x n board:
// (r, c) -> first swap if `swap_rc`, then flip row / column.
struct Dihedral {
    bool swap_rc = false;
    bool flip_r = false;
    bool flip_c = false;

    constexpr int index() const { return swap_rc * 4 + flip_r * 2 + flip_c; }
    static constexpr Dihedral from_index(int i) {
        return Dihedral{(i & 4) != 0, (i & 2) != 0, (i & 1) != 0};
    }

    constexpr bool orientation_reversing() const {
        return (swap_rc ^ flip_r ^ flip_c) != 0;
    }

    // Image of cell (r, c) on an n x n board.
    constexpr std::pair<int, int> apply(int r, int c, int n) const {
        if (swap_rc) std::swap(r, c);
        if (flip_r) r = n - 1 - r;
        if (flip_c) c = n - 1 - c;
        return {r, c};
    }

    // Image of an edge direction.
    constexpr Edge apply(Edge e) const {
        int dr = e == Edge::N ? -1 : e == Edge::S ? 1 : 0;
        int dc = e == Edge::W ? -1 : e == Edge::E ? 1 : 0;
        if (swap_rc) std::swap(dr, dc);
        if (flip_r) dr = -dr;
        if (flip_c) dc = -dc;
        if (dr == -1) return Edge::N;
        if (dr == 1) return Edge::S;
        return dc == 1 ? Edge::E : Edge::W;
    }

    friend constexpr bool operator==(Dihedral, Dihedral);
};

constexpr bool operator==(Dihedral a, Dihedral b) { return a.index() == b.index(); }

namespace detail {

// this-after-other composition on coordinates.
constexpr Dihedral compose(Dihedral a, Dihedral b) {
    // Probe the affine map on a large board; 8 candidates, match two cells.
    constexpr int n = 8;
    for (int i = 0; i < 8; ++i) {
        Dihedral cand = Dihedral::from_index(i);
        bool ok = true;
        for (auto [r, c] : {std::pair{0, 1}, std::pair{2, 5}, std::pair{3, 0}}) {
            auto [br, bc] = b.apply(r, c, n);
            auto [ar, ac] = a.apply(br, bc, n);
            if (cand.apply(r, c, n) != std::pair{ar, ac}) { ok = false; break; }
        }
        if (ok) return cand;
    }
    throw std::logic_error("dihedral composition");
}

// Tile image under a dihedral element: transport the connection points and
// internal pairings; crossings keep their top strand geometrically, then
// swap it if the element reverses orientation.
constexpr Tile map_tile(Dihedral d, Tile t) {
    if (t.is_blank()) return t;
    if (t.is_crossing()) {
        bool vertical_over = t.vertical_over();
        if (d.swap_rc) vertical_over = !vertical_over;           // axes exchanged
        if (d.orientation_reversing()) vertical_over = !vertical_over;
        return vertical_over ? Tile::crossing_v() : Tile::crossing_h();
    }
    // Match against the unique non-crossing tile with the transported
    // pairing.
    for (int code = 0; code < Tile::kCount; ++code) {
        Tile cand{code};
        if (cand.is_crossing()) continue;
        bool ok = true;
        for (Edge e : all_edges) {
            bool want = t.connects(e);
            if (cand.connects(d.apply(e)) != want) { ok = false; break; }
            if (want && cand.pass_through(d.apply(e)) != d.apply(t.pass_through(e))) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw std::logic_error("tile has no dihedral image");
}

}  // namespace detail

struct Symmetry {
    Dihedral elem;
    bool crossing_swap = false;

    static constexpr Symmetry identity() { return {}; }
    static constexpr Symmetry rot90() { return {Dihedral{true, false, true}, false}; }
    static constexpr Symmetry rot180() { return {Dihedral{false, true, true}, false}; }
    static constexpr Symmetry rot270() { return {Dihedral{true, true, false}, false}; }
    static constexpr Symmetry flip_cols() { return {Dihedral{false, false, true}, false}; }
    static constexpr Symmetry flip_rows() { return {Dihedral{false, true, false}, false}; }
    static constexpr Symmetry transpose() { return {Dihedral{true, false, false}, false}; }
    static constexpr Symmetry anti_transpose() { return {Dihedral{true, true, true}, false}; }
    static constexpr Symmetry mirror() { return {Dihedral{}, true}; }

    friend constexpr bool operator==(const Symmetry& a, const Symmetry& b) {
        return a.elem == b.elem && a.crossing_swap == b.crossing_swap;
    }
};

// compose(s2, s1) applies s1 first: transform(m, compose(s2, s1)) ==
// transform(transform(m, s1), s2).
constexpr Symmetry compose(Symmetry s2, Symmetry s1) {
    return {detail::compose(s2.elem, s1.elem), bool(s2.crossing_swap ^ s1.crossing_swap)};
}

constexpr Symmetry inverse(Symmetry s) {
    for (int i = 0; i < 8; ++i) {
        Dihedral cand = Dihedral::from_index(i);
        if (detail::compose(cand, s.elem) == Dihedral{})
            return {cand, s.crossing_swap};
    }
    throw std::logic_error("dihedral inverse");
}

inline const std::array<Symmetry, 16>& all_symmetries() {
    static const std::array<Symmetry, 16> all = [] {
        std::array<Symmetry, 16> a{};
        for (int i = 0; i < 8; ++i) {
            a[i] = Symmetry{Dihedral::from_index(i), false};
            a[8 + i] = Symmetry{Dihedral::from_index(i), true};
        }
        return a;
    }();
    return all;
}

inline Mosaic transform(const Mosaic& m, Symmetry s) {
    int n = m.rows();
    if (m.rows() != m.cols())
        throw std::invalid_argument("symmetries act on square boards");
    std::vector<Tile> out(size_t(n) * n, Tile::blank());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            auto [tr, tc] = s.elem.apply(r, c, n);
            Tile t = detail::map_tile(s.elem, m.at(r, c));
            if (s.crossing_swap) t = t.with_crossing_toggled();
            out[size_t(tr) * n + tc] = t;
        }
    }
    return Mosaic(n, n, std::move(out), m.provenance());
}

// True when m is the least board (by tile-code order) in its symmetry
// orbit; used to deduplicate search output.
inline bool is_canonical(const Mosaic& m) {
    for (const Symmetry& s : all_symmetries()) {
        if (transform(m, s) < m) return false;
    }
    return true;
}

}  // namespace kmos
