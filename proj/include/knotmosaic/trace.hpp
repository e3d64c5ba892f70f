// Strand tracing: decompose a suitably connected board into closed loops.
#pragma once

#include <stdexcept>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace kmos {

// One step of a strand walk: the strand enters cell (r,c) through `entry`
// and leaves through the tile's internal pairing.
struct StrandStep {
    int r, c;
    Edge entry;
    friend bool operator==(const StrandStep&, const StrandStep&) = default;
};

using StrandLoop = std::vector<StrandStep>;

// Partition all connection-point pairings into closed loops.  Requires a
// suitably connected board; the all-blank board yields no loops.
inline std::vector<StrandLoop> trace_components(const Mosaic& m) {
    if (!is_suitably_connected(m))
        throw std::logic_error("trace_components requires a suitably connected mosaic");

    // Port = (cell, edge with a connection point).  Each port is the entry
    // of exactly one strand step, so loops = cycles of the step relation.
    auto port_id = [&](int r, int c, Edge e) {
        return (size_t(r) * m.cols() + c) * 4 + static_cast<size_t>(e);
    };
    std::vector<char> used(size_t(m.rows()) * m.cols() * 4, 0);
    std::vector<StrandLoop> loops;

    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            for (Edge e : all_edges) {
                if (!m.at(r, c).connects(e) || used[port_id(r, c, e)]) continue;
                StrandLoop loop;
                int cr = r, cc = c;
                Edge entry = e;
                do {
                    used[port_id(cr, cc, entry)] = 1;
                    loop.push_back({cr, cc, entry});
                    Edge exit = m.at(cr, cc).pass_through(entry);
                    // Mark the exit too so the reverse walk is not retraced.
                    used[port_id(cr, cc, exit)] = 1;
                    cr += exit == Edge::S ? 1 : exit == Edge::N ? -1 : 0;
                    cc += exit == Edge::E ? 1 : exit == Edge::W ? -1 : 0;
                    entry = opposite(exit);
                } while (!(cr == r && cc == c && entry == e));
                loops.push_back(std::move(loop));
            }
        }
    }
    return loops;
}

inline int component_count(const Mosaic& m) {
    return int(trace_components(m).size());
}

}  // namespace kmos
