// Kauffman bracket state sum and the normalized Jones polynomial.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "knotmosaic/laurent.hpp"
#include "knotmosaic/planar_diagram.hpp"

namespace kmos {

// State-sum bound: 6x6 boards top out at 16 crossing tiles, 20 leaves
// headroom without letting runtime explode.
inline constexpr int kMaxBracketCrossings = 20;

struct CrossingBoundError : std::invalid_argument {
    explicit CrossingBoundError(int count)
        : std::invalid_argument("state sum limited to " +
                                std::to_string(kMaxBracketCrossings) +
                                " crossings, got " + std::to_string(count)) {}
};

namespace detail {

// Union-find over edge labels 1..2c, path-halving, no allocation.
struct LoopCounter {
    std::array<int16_t, 2 * kMaxBracketCrossings + 1> parent;
    int n = 0;

    void reset(int edges) {
        n = edges;
        for (int i = 1; i <= edges; ++i) parent[size_t(i)] = int16_t(i);
    }
    int find(int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    }
    // Returns true when the union closed a loop (roots already equal).
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return true;
        parent[size_t(rx)] = int16_t(ry);
        return false;
    }
};

}  // namespace detail

// <D> = sum over the 2^c smoothings of A^(a-b) * delta^(loops-1) with
// delta = -A^2 - A^-2.  The A-smoothing of X[a,b,c,d] joins a-b and c-d,
// the B-smoothing joins a-d and b-c.  The 0-crossing unknot diagram has
// bracket 1.
inline LaurentPoly kauffman_bracket(const PlanarDiagram& pd) {
    int c = pd.crossing_count();
    if (c > kMaxBracketCrossings) throw CrossingBoundError(c);
    if (c == 0) return LaurentPoly::constant(1);

    // Tally states by (A-count, loop count); assemble the polynomial once.
    std::vector<std::array<long long, 22>> tally(size_t(c) + 1, std::array<long long, 22>{});
    detail::LoopCounter uf;
    const uint32_t states = uint32_t(1) << c;
    for (uint32_t s = 0; s < states; ++s) {
        uf.reset(pd.edge_count);
        int loops = 0;
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            const PdCrossing& x = pd.crossings[size_t(i)];
            if (s >> i & 1) {
                ++a_count;
                loops += uf.unite(x.a, x.b);
                loops += uf.unite(x.c, x.d);
            } else {
                loops += uf.unite(x.a, x.d);
                loops += uf.unite(x.b, x.c);
            }
        }
        // Each union that closes a loop finishes one circle; every circle
        // closes exactly once, so `loops` is the circle count.
        ++tally[size_t(a_count)][size_t(loops)];
    }

    LaurentPoly delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    std::vector<LaurentPoly> delta_pow(size_t(c) + 2);
    delta_pow[0] = LaurentPoly::constant(1);
    for (size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;

    LaurentPoly bracket;
    for (int a_count = 0; a_count <= c; ++a_count) {
        for (int loops = 1; loops <= c + 1; ++loops) {
            long long n = tally[size_t(a_count)][size_t(loops)];
            if (n == 0) continue;
            int exp = 2 * a_count - c;  // A^(a-b)
            bracket += delta_pow[size_t(loops - 1)].scaled(n).shifted(exp);
        }
    }
    return bracket;
}

// f(D) = (-A^3)^(-w) <D>, invariant under the Reidemeister moves.
inline LaurentPoly normalized_jones(const PlanarDiagram& pd) {
    LaurentPoly f = kauffman_bracket(pd).shifted(-3 * writhe(pd));
    return (writhe(pd) % 2 != 0) ? f.scaled(-1) : f;
}

inline LaurentPoly normalized_jones(const Mosaic& m) {
    return normalized_jones(to_planar_diagram(m));
}

// Re-express a normalized Jones value in t via t = A^-4; exact for knots,
// whose exponents in A are multiples of 4.
inline LaurentPoly jones_in_t(const LaurentPoly& jones_in_a) {
    return jones_in_a.exponents_divided(-4);
}

// |V(-1)|, the knot determinant.
inline long long determinant(const PlanarDiagram& pd) {
    long long v = jones_in_t(normalized_jones(pd)).evaluated_at_minus_one();
    return v < 0 ? -v : v;
}

inline long long determinant(const Mosaic& m) {
    return determinant(to_planar_diagram(m));
}

}  // namespace kmos
