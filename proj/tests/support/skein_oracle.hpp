// Test-only bracket oracle: recursive skein expansion with explicit edge
// relabeling.  Shares no code path with the production state sum (which
// iterates smoothing bitmasks over a union-find); agreement between the
// two is asserted across whole enumeration streams.
#pragma once

#include <array>
#include <vector>

#include "knotmosaic/laurent.hpp"
#include "knotmosaic/planar_diagram.hpp"

namespace kmos::testing {

namespace detail {

inline LaurentPoly delta() {
    LaurentPoly d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;
}

using Quad = std::array<int, 4>;

// Joins edge labels p and q across a smoothed corner; a self-join closes
// a circle.
inline void join(std::vector<Quad>& xs, int p, int q, int& circles) {
    if (p == q) {
        ++circles;
        return;
    }
    for (Quad& x : xs)
        for (int& v : x)
            if (v == q) v = p;
}

inline LaurentPoly expand(std::vector<Quad> xs, int circles) {
    if (xs.empty()) {
        LaurentPoly out = LaurentPoly::constant(1);
        for (int i = 1; i < circles; ++i) out *= delta();
        return out;
    }
    Quad x = xs.back();
    xs.pop_back();

    auto smooth = [&](int p1, int q1, int p2, int q2, int exp) {
        std::vector<Quad> copy = xs;
        int c = circles;
        join(copy, p1, q1, c);
        // The first join may have relabeled the second pair.
        int r2 = p2, s2 = q2;
        if (q1 != p1) {
            if (r2 == q1) r2 = p1;
            if (s2 == q1) s2 = p1;
        }
        join(copy, r2, s2, c);
        return expand(std::move(copy), c).shifted(exp);
    };
    // A-smoothing joins a-b and c-d, B joins a-d and b-c.
    return smooth(x[0], x[1], x[2], x[3], 1) + smooth(x[0], x[3], x[1], x[2], -1);
}

}  // namespace detail

inline LaurentPoly skein_bracket(const PlanarDiagram& pd) {
    if (pd.crossings.empty()) return LaurentPoly::constant(1);
    std::vector<detail::Quad> xs;
    for (const PdCrossing& x : pd.crossings) xs.push_back({x.a, x.b, x.c, x.d});
    return detail::expand(std::move(xs), 0);
}

inline LaurentPoly skein_normalized_jones(const PlanarDiagram& pd) {
    LaurentPoly f = skein_bracket(pd).shifted(-3 * writhe(pd));
    return (writhe(pd) % 2 != 0) ? f.scaled(-1) : f;
}

}  // namespace kmos::testing
