// Board scans: enumerate a board size once, profile the normalized Jones
// values seen, and answer realizability, absence and tabulation queries
// from the profile.
#pragma once

#include <chrono>
#include <map>
#include <set>
#include <string>

#include "knotmosaic/enumerate.hpp"
#include "knotmosaic/knot_table.hpp"

namespace kmos {

struct JonesStats {
    uint64_t count = 0;
    int min_crossing_tiles = 0;
    int min_nonblank_tiles = 0;
    std::optional<Mosaic> first_witness;     // least in stream order
    std::optional<Mosaic> min_tile_witness;  // least among minimal-tile boards

    void absorb(const Mosaic& m, int crossings, int nonblank) {
        if (count == 0) {
            min_crossing_tiles = crossings;
            min_nonblank_tiles = nonblank;
            first_witness = m;
            min_tile_witness = m;
        } else {
            min_crossing_tiles = std::min(min_crossing_tiles, crossings);
            if (nonblank < min_nonblank_tiles ||
                (nonblank == min_nonblank_tiles && m < *min_tile_witness)) {
                min_nonblank_tiles = nonblank;
                min_tile_witness = m;
            }
            if (m < *first_witness) first_witness = m;
        }
        ++count;
    }

    void merge(const JonesStats& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        count += o.count;
        min_crossing_tiles = std::min(min_crossing_tiles, o.min_crossing_tiles);
        if (o.min_nonblank_tiles < min_nonblank_tiles ||
            (o.min_nonblank_tiles == min_nonblank_tiles &&
             *o.min_tile_witness < *min_tile_witness)) {
            min_nonblank_tiles = o.min_nonblank_tiles;
            min_tile_witness = o.min_tile_witness;
        }
        if (*o.first_witness < *first_witness) first_witness = o.first_witness;
    }
};

struct BoardScan {
    int n = 0;
    EnumFilter filter;
    int workers = 1;
    uint64_t mosaics = 0;
    double seconds = 0;
    std::map<LaurentPoly, JonesStats> profile;

    const JonesStats* stats_for(const LaurentPoly& jones) const {
        auto it = profile.find(jones);
        return it == profile.end() ? nullptr : &it->second;
    }
};

// Enumerates all one-component mosaics of size n passing the filter and
// profiles their normalized Jones values.  Results are identical for any
// worker count: the merge below is order-independent.
inline BoardScan scan_board(int n, EnumFilter filter = {}, int workers = 1) {
    filter.require_single_component = true;
    auto t0 = std::chrono::steady_clock::now();

    if (workers < 1) workers = 1;
    std::vector<std::map<LaurentPoly, JonesStats>> parts{size_t(workers)};
    std::vector<uint64_t> counts(size_t(workers), 0);
    enumerate_partitioned(n, filter, workers, [&](int w, const Mosaic& m) {
        ++counts[size_t(w)];
        LaurentPoly jones = normalized_jones(m);
        parts[size_t(w)][jones].absorb(m, crossing_tiles(m), nonblank_tiles(m));
    });

    BoardScan scan;
    scan.n = n;
    scan.filter = filter;
    scan.workers = workers;
    for (int w = 0; w < workers; ++w) {
        scan.mosaics += counts[size_t(w)];
        for (auto& [jones, stats] : parts[size_t(w)]) scan.profile[jones].merge(stats);
    }
    scan.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return scan;
}

// --- realizable knots ----------------------------------------------------

struct RealizableReport {
    int n = 0;
    std::set<std::string> knots;
    // Knots whose identification looks inconsistent with the witnesses'
    // crossing-tile counts (a Jones collision would surface here).
    std::set<std::string> suspect;
    uint64_t unidentified_values = 0;   // distinct Jones values outside the table
    uint64_t unidentified_mosaics = 0;  // boards carrying them
};

inline RealizableReport realizable_knots(const BoardScan& scan) {
    RealizableReport rep;
    rep.n = scan.n;
    for (const auto& [jones, stats] : scan.profile) {
        auto id = identify(jones);
        if (!id) {
            ++rep.unidentified_values;
            rep.unidentified_mosaics += stats.count;
            continue;
        }
        rep.knots.insert(id->name);
        const KnotRecord* rec = find_record(id->name);
        if (rec && stats.min_crossing_tiles < rec->crossing_number)
            rep.suspect.insert(id->name);
    }
    return rep;
}

inline RealizableReport realizable_knots(int n, EnumFilter filter = {}, int workers = 1) {
    return realizable_knots(scan_board(n, filter, workers));
}

// --- absence proofs ------------------------------------------------------

struct AbsenceCertificate {
    std::string knot;
    int board_size = 0;
    bool absent = false;
    uint64_t mosaics_enumerated = 0;
    uint64_t distinct_jones_values = 0;
    uint64_t occurrences = 0;
    std::optional<int> max_crossing_tiles;
    std::optional<int> exact_crossing_tiles;
    bool alternating_only = false;
    int workers = 1;
    double seconds = 0;
};

// The reference Jones of `knot` (and its mirror) never occurs over the
// full enumeration of size-n one-component mosaics: the knot cannot be
// presented on that board.
inline AbsenceCertificate absence_proof(const BoardScan& scan, const std::string& knot) {
    const KnotRecord* rec = find_record(knot);
    if (!rec) throw std::invalid_argument("unknown knot name: " + knot);
    AbsenceCertificate cert;
    cert.knot = knot;
    cert.board_size = scan.n;
    cert.mosaics_enumerated = scan.mosaics;
    cert.distinct_jones_values = scan.profile.size();
    cert.max_crossing_tiles = scan.filter.max_crossing_tiles;
    cert.exact_crossing_tiles = scan.filter.exact_crossing_tiles;
    cert.alternating_only = scan.filter.alternating_only;
    cert.workers = scan.workers;
    cert.seconds = scan.seconds;
    if (const JonesStats* s = scan.stats_for(rec->jones)) cert.occurrences += s->count;
    if (!rec->amphichiral)
        if (const JonesStats* s = scan.stats_for(rec->jones.mirrored()))
            cert.occurrences += s->count;
    cert.absent = cert.occurrences == 0;
    return cert;
}

inline AbsenceCertificate absence_proof(int n, const std::string& knot, int workers = 1) {
    return absence_proof(scan_board(n, {}, workers), knot);
}

}  // namespace kmos
