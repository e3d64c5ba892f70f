// The tabulation: mosaic number (and tile-count data) for every reference
// knot, from exhaustive scans on small boards plus bundled witnesses for
// the sizes beyond the enumeration ceiling.
#pragma once

#include <map>

#include "knotmosaic/scan.hpp"
#include "knotmosaic/trace.hpp"

namespace kmos {

// Boards are enumerated exhaustively up to this size; larger boards need
// fixture witnesses.
inline constexpr int kExhaustiveCeiling = 5;

struct TabRow {
    std::string knot;
    std::optional<int> mosaic_number;  // set only when the bounds meet
    int lower_bound = 0;
    std::optional<int> upper_bound;
    std::optional<int> min_tile_count;  // over witnesses at the minimal size
    bool tile_count_exact = false;      // from an exhaustive scan
    std::optional<Mosaic> witness;
};

struct FixtureError : std::runtime_error {
    FixtureError(const std::string& which, const std::string& what)
        : std::runtime_error("fixture " + which + ": " + what) {}
};

// Validates and identifies one fixture; the label names it in errors.
inline std::pair<KnotId, Mosaic> check_fixture(const Mosaic& m, const std::string& label) {
    if (m.rows() != m.cols()) throw FixtureError(label, "board is not square");
    if (!is_suitably_connected(m)) throw FixtureError(label, "not suitably connected");
    auto loops = trace_components(m);
    if (loops.size() != 1)
        throw FixtureError(label, "expected 1 component, got " + std::to_string(loops.size()));
    auto id = identify(m);
    if (!id) throw FixtureError(label, "normalized Jones matches no reference knot");
    return {*id, m};
}

// `fixtures` are (label, mosaic) pairs; labels only feed error messages.
// `scans` may carry precomputed exhaustive scans keyed by size; missing
// sizes are scanned here.
inline std::vector<TabRow> tabulate(int max_n,
                                    const std::vector<std::pair<std::string, Mosaic>>& fixtures,
                                    int workers = 1,
                                    std::map<int, BoardScan> scans = {}) {
    if (max_n < 2) throw std::invalid_argument("max board size must be at least 2");
    int scan_ceiling = std::min(max_n, kExhaustiveCeiling);
    for (int n = 2; n <= scan_ceiling; ++n)
        if (!scans.count(n)) scans.emplace(n, scan_board(n, {}, workers));

    // Witness data per knot: smallest size seen, minimal tiles at it.
    struct Best {
        int size = 0;
        int tiles = 0;
        bool exact = false;
        std::optional<Mosaic> witness;
    };
    std::map<std::string, Best> best;

    auto offer = [&](const std::string& name, int size, int tiles, bool exact,
                     const std::optional<Mosaic>& w) {
        auto [it, fresh] = best.try_emplace(name);
        Best& b = it->second;
        if (fresh || size < b.size) {
            b = {size, tiles, exact, w};
        } else if (size == b.size) {
            b.exact = b.exact || exact;
            if (tiles < b.tiles || (tiles == b.tiles && w && b.witness && *w < *b.witness)) {
                b.tiles = tiles;
                b.witness = w;
            }
        }
    };

    for (auto& [n, scan] : scans) {
        if (n > max_n) continue;
        for (const auto& [jones, stats] : scan.profile) {
            auto id = identify(jones);
            if (!id) continue;
            offer(id->name, n, stats.min_nonblank_tiles, true, stats.min_tile_witness);
        }
    }
    for (const auto& [label, m] : fixtures) {
        auto [id, mosaic] = check_fixture(m, label);
        if (mosaic.size() > max_n) continue;
        offer(id.name, mosaic.size(), nonblank_tiles(mosaic), false, mosaic);
    }

    std::vector<TabRow> rows;
    for (const KnotRecord& rec : reference_table()) {
        TabRow row;
        row.knot = rec.name;
        // Exhaustive absence on sizes 2..k pushes the bound to k+1; sizes
        // below 2 cannot hold a knot at all.
        int lower = 2;
        for (int n = 2; n <= scan_ceiling; ++n) {
            auto it = scans.find(n);
            if (it == scans.end() || !absence_proof(it->second, rec.name).absent) break;
            lower = n + 1;
        }
        row.lower_bound = lower;
        auto it = best.find(rec.name);
        if (it != best.end()) {
            const Best& b = it->second;
            row.upper_bound = b.size;
            if (b.size == row.lower_bound) row.mosaic_number = b.size;
            row.min_tile_count = b.tiles;
            row.tile_count_exact = b.exact;
            row.witness = b.witness;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kmos
