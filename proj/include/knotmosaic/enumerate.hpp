// Exhaustive generation of suitably connected mosaics by scanline DFS.
//
// Cells are decided row-major.  The frontier holds one potential stub per
// column (the south edge of the last decided cell in that column) plus one
// carry stub (the east edge of the cell just decided).  Open strands always
// have exactly two ends on the frontier; the pairing is stored directly as
// partner slots.  Crossing tiles leave the pairing untouched, which is why
// crossed (non-planar) pairings never need special handling.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "knotmosaic/planar_diagram.hpp"

namespace kmos {

inline constexpr int kMaxBoard = 8;

struct EnumFilter {
    std::optional<int> max_crossing_tiles;
    std::optional<int> exact_crossing_tiles;
    bool alternating_only = false;      // applied downstream of generation
    bool require_single_component = true;
};

namespace detail {

// Internal generation knobs used by boundary completion and the witness
// search; not part of the public filter surface.
struct Constraints {
    uint16_t allowed_tiles = 0x7ff;      // bitmask over tile codes
    const std::vector<int8_t>* fixed = nullptr;  // per-cell code, -1 = free
    bool dense_first = false;  // try high tile codes first (crossing-heavy)
};

struct Frontier {
    // partner[i]: slot of the other end of the strand whose end sits in
    // slot i, or -1 when slot i holds no stub.  Slots 0..n-1 are column
    // stubs, slot n is the carry.
    std::array<int8_t, kMaxBoard + 1> partner;
    int8_t open = 0;   // live stubs
    int8_t loops = 0;  // loops closed so far

    void clear(int n) {
        for (int i = 0; i <= n; ++i) partner[size_t(i)] = -1;
        open = 0;
        loops = 0;
    }
};

class MosaicDfs {
public:
    MosaicDfs(int n, const EnumFilter& f, const std::function<bool(const Mosaic&)>& emit,
              Constraints extra = {})
        : n_(n), filter_(f), extra_(extra), emit_(emit),
          cells_(size_t(n) * n, Tile::blank()) {
        if (n < 2 || n > kMaxBoard) throw std::invalid_argument("board size out of range");
        max_crossings_ = filter_.exact_crossing_tiles
                             ? *filter_.exact_crossing_tiles
                             : filter_.max_crossing_tiles.value_or(n * n);
        front_.clear(n);
    }

    // Runs the whole search; returns false when the consumer stopped it.
    bool run() { return descend(0, 0); }

    // Enumerates prefixes: assignments of the first `rows` rows together
    // with the frontier state reached, for handing to parallel workers.
    struct Prefix {
        std::vector<Tile> cells;
        Frontier front;
        int crossings;
    };
    std::vector<Prefix> prefixes(int rows) {
        std::vector<Prefix> out;
        prefix_rows_ = rows;
        prefix_sink_ = &out;
        descend(0, 0);
        prefix_sink_ = nullptr;
        return out;
    }

    bool resume(const Prefix& p, int rows) {
        std::copy(p.cells.begin(), p.cells.end(), cells_.begin());
        front_ = p.front;
        crossings_ = p.crossings;
        return descend(rows, 0);
    }

private:
    int n_;
    EnumFilter filter_;
    Constraints extra_;
    const std::function<bool(const Mosaic&)>& emit_;
    std::vector<Tile> cells_;
    Frontier front_;
    int crossings_ = 0;
    int max_crossings_ = 0;
    int prefix_rows_ = -1;
    std::vector<Prefix>* prefix_sink_ = nullptr;

    bool descend(int r, int c) {
        if (c == n_) {
            ++r;
            c = 0;
            if (r == prefix_rows_ && prefix_sink_) {
                prefix_sink_->push_back(
                    {std::vector<Tile>(cells_.begin(), cells_.begin() + ptrdiff_t(r) * n_),
                     front_, crossings_});
                return true;
            }
        }
        if (r == n_) return finish();
        // The carry must be empty at the start of a row and the column stub
        // pattern is whatever the previous row left.
        bool has_n = front_.partner[size_t(c)] >= 0;
        bool has_w = front_.partner[size_t(n_)] >= 0;
        bool last_col = c == n_ - 1;
        bool last_row = r == n_ - 1;

        static constexpr std::array<std::array<int8_t, 5>, 4> kChoices{{
            {0, 2, -1, -1, -1},    // no W, no N
            {3, 6, -1, -1, -1},    // N only
            {1, 5, -1, -1, -1},    // W only
            {4, 7, 8, 9, 10},      // both
        }};
        const auto& choices = kChoices[size_t(has_w) * 2 + size_t(has_n)];

        int fixed_code = extra_.fixed ? (*extra_.fixed)[size_t(r) * n_ + c] : -1;
        int count = 0;
        while (count < 5 && choices[size_t(count)] >= 0) ++count;
        for (int k = 0; k < count; ++k) {
            int8_t code = choices[size_t(extra_.dense_first ? count - 1 - k : k)];
            if (!(extra_.allowed_tiles >> code & 1)) continue;
            if (fixed_code >= 0 && code != fixed_code) continue;
            Tile t{code};
            if (last_col && t.connects(Edge::E)) continue;
            if (last_row && t.connects(Edge::S)) continue;
            if (t.is_crossing() && crossings_ == max_crossings_) continue;

            Frontier saved = front_;
            int saved_crossings = crossings_;
            if (place(code, c)) {
                cells_[size_t(r) * n_ + c] = t;
                if (!descend(r, c + 1)) return false;
            }
            front_ = saved;
            crossings_ = saved_crossings;
        }
        return true;
    }

    // Applies tile `code` at column c; returns false when the placement is
    // pruned.  front_ / crossings_ are only trusted when it returns true.
    bool place(int code, int c) {
        auto& p = front_.partner;
        const int carry = n_;
        switch (code) {
            case 0:  // blank
                return true;
            case 2:  // arc SE: birth, ends at column stub and carry
                if (filter_.require_single_component && front_.loops > 0) return false;
                p[size_t(c)] = int8_t(carry);
                p[size_t(carry)] = int8_t(c);
                front_.open += 2;
                return true;
            case 1: {  // arc SW: carry end moves to the column stub
                int other = p[size_t(carry)];
                p[size_t(carry)] = -1;
                p[size_t(other)] = int8_t(c);
                p[size_t(c)] = int8_t(other);
                return true;
            }
            case 5:  // line H: carry stays the carry
                return true;
            case 3: {  // arc NE: column stub moves to the carry
                int other = p[size_t(c)];
                p[size_t(c)] = -1;
                p[size_t(other)] = int8_t(carry);
                p[size_t(carry)] = int8_t(other);
                return true;
            }
            case 6:  // line V: column stub stays
                return true;
            case 4:  // arc NW: joins the north and west stubs
                return join(c, carry);
            case 7: {  // double arc NWSE: join N-W, then birth S-E
                if (!join(c, carry)) return false;
                if (filter_.require_single_component && front_.loops > 0) return false;
                p[size_t(c)] = int8_t(carry);
                p[size_t(carry)] = int8_t(c);
                front_.open += 2;
                return true;
            }
            case 8: {  // double arc NESW: N moves to E, W moves to S
                int pn = p[size_t(c)];
                int pw = p[size_t(carry)];
                if (pn == carry) {
                    // One strand with ends exactly (N stub, W stub); the
                    // relocated ends still belong to each other.
                    return true;
                }
                p[size_t(c)] = int8_t(pw);
                p[size_t(carry)] = int8_t(pn);
                p[size_t(pn)] = int8_t(carry);
                p[size_t(pw)] = int8_t(c);
                return true;
            }
            case 9:
            case 10:  // crossing: N passes to S, E passes to W
                ++crossings_;
                return true;
        }
        return false;
    }

    // Connect the stubs in slots x and y (both present).
    bool join(int x, int y) {
        auto& p = front_.partner;
        int px = p[size_t(x)], py = p[size_t(y)];
        if (px == y) {  // two ends of the same strand: a loop closes
            if (filter_.require_single_component &&
                (front_.loops > 0 || front_.open != 2))
                return false;
            p[size_t(x)] = p[size_t(y)] = -1;
            front_.open -= 2;
            front_.loops += 1;
            return true;
        }
        p[size_t(x)] = p[size_t(y)] = -1;
        p[size_t(px)] = int8_t(py);
        p[size_t(py)] = int8_t(px);
        front_.open -= 2;
        return true;
    }

    bool finish() {
        if (filter_.exact_crossing_tiles && crossings_ != *filter_.exact_crossing_tiles)
            return true;
        if (filter_.require_single_component && front_.loops != 1) return true;
        Mosaic m(n_, n_, cells_);
        if (filter_.alternating_only && !detail_is_alternating(m)) return true;
        return emit_(m);
    }

    // Defined in planar_diagram.hpp terms below; kept out of line to leave
    // this header's hot path self-contained.
    static bool detail_is_alternating(const Mosaic& m);
};

inline bool MosaicDfs::detail_is_alternating(const Mosaic& m) {
    // Alternation is a strand property; only one-component boards qualify.
    if (trace_components(m).size() != 1) return false;
    return is_alternating(to_planar_diagram(m));
}

}  // namespace detail

// Emits every suitably connected n x n mosaic passing the filter, exactly
// once, in lexicographic tile-code order.  The callback may return false
// to stop the enumeration; enumerate_mosaics returns false in that case.
//
// With require_single_component the stream holds exactly the knot mosaics
// (one loop; the all-blank board is excluded).  Without it, every suitably
// connected board is emitted, the all-blank one included.
inline bool enumerate_mosaics(int n, const EnumFilter& filter,
                              const std::function<bool(const Mosaic&)>& emit) {
    if (n < 2 || n > 6) throw std::invalid_argument("board size must be in [2, 6]");
    detail::MosaicDfs dfs(n, filter, emit);
    return dfs.run();
}

inline std::vector<Mosaic> enumerate_all(int n, const EnumFilter& filter = {}) {
    std::vector<Mosaic> out;
    enumerate_mosaics(n, filter, [&](const Mosaic& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline uint64_t count_mosaics(int n, const EnumFilter& filter = {}) {
    uint64_t count = 0;
    enumerate_mosaics(n, filter, [&](const Mosaic&) {
        ++count;
        return true;
    });
    return count;
}

// Partitioned traversal for scans: the search space is split by fixed
// leading rows, the parts are dealt round-robin to `workers` threads and
// each emitted mosaic is tagged with its worker index.  Workers share
// nothing; any merge the caller performs must be order-independent for the
// results to be partition-invariant.
inline void enumerate_partitioned(int n, const EnumFilter& filter, int workers,
                                  const std::function<void(int, const Mosaic&)>& emit,
                                  detail::Constraints extra = {}) {
    if (n < 2 || n > 6) throw std::invalid_argument("board size must be in [2, 6]");
    if (workers < 1) workers = 1;
    int prefix_rows = n >= 5 ? 2 : 1;

    std::function<bool(const Mosaic&)> no_emit = [](const Mosaic&) { return true; };
    detail::MosaicDfs splitter(n, filter, no_emit, extra);
    auto prefixes = splitter.prefixes(prefix_rows);

    workers = std::min<int>(workers, int(prefixes.size()));
    if (workers <= 1) {
        std::function<bool(const Mosaic&)> cb = [&](const Mosaic& m) {
            emit(0, m);
            return true;
        };
        detail::MosaicDfs dfs(n, filter, cb, extra);
        for (const auto& p : prefixes) dfs.resume(p, prefix_rows);
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(size_t(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::function<bool(const Mosaic&)> cb = [&, w](const Mosaic& m) {
                emit(w, m);
                return true;
            };
            detail::MosaicDfs dfs(n, filter, cb, extra);
            for (size_t i = size_t(w); i < prefixes.size(); i += size_t(workers))
                dfs.resume(prefixes[i], prefix_rows);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace kmos
