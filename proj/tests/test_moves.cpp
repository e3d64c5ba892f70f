#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotmosaic/bracket.hpp"
#include "knotmosaic/enumerate.hpp"
#include "knotmosaic/knot_table.hpp"
#include "knotmosaic/moves.hpp"

using namespace kmos;

namespace {

Mosaic load(const std::string& rel) {
    std::ifstream in(std::filesystem::path(KNOTMOSAIC_SOURCE_DIR) / rel);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_mosaic(buf.str());
}

// The 2x2 unknot sitting in the top-left of a 4x4 board.
Mosaic unknot_in_4() {
    return parse_mosaic("4 4\n2 1 0 0\n3 4 0 0\n0 0 0 0\n0 0 0 0");
}

// First inverse type-I application that yields a valid one-component board.
std::pair<Mosaic, MoveSite> make_kink(const Mosaic& base) {
    const auto& st = detail::stencils();
    for (int r = 0; r + 1 < base.rows(); ++r)
        for (int c = 0; c + 1 < base.cols(); ++c)
            for (int v = 0; v < int(st.size()); ++v) {
                if (st[size_t(v)].kind != MoveKind::R1) continue;
                MoveSite site{MoveKind::R1, r, c, v, true};
                try {
                    Mosaic kinked = apply_move(base, site);
                    if (is_suitably_connected(kinked) && trace_components(kinked).size() == 1)
                        return {kinked, site};
                } catch (const std::logic_error&) {
                }
            }
    FAIL("no inverse site found");
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("no moves on the plain unknot") {
    REQUIRE(find_moves(parse_mosaic("2 2\n2 1\n3 4")).empty());
    REQUIRE(find_moves(unknot_in_4()).empty());
}

TEST_CASE("kink life cycle: inverse, find, reduce") {
    Mosaic base = unknot_in_4();
    auto [kinked, site] = make_kink(base);
    REQUIRE(crossing_tiles(kinked) == 1);
    REQUIRE(normalized_jones(kinked).is_one());  // still the unknot

    auto sites = find_moves(kinked);
    REQUIRE_FALSE(sites.empty());
    for (const MoveSite& s : sites) REQUIRE(s.kind == MoveKind::R1);
    // One of the found sites is the inverse we applied.
    MoveSite forward{site.kind, site.r, site.c, site.variant, false};
    REQUIRE(std::find(sites.begin(), sites.end(), forward) != sites.end());

    Mosaic reduced = apply_move(kinked, forward);
    REQUIRE(reduced == base);  // involution
    REQUIRE(crossing_tiles(reduced) == 0);
}

TEST_CASE("apply on a stale site is a contract violation") {
    Mosaic u = parse_mosaic("2 2\n2 1\n3 4");
    const auto& st = detail::stencils();
    for (int v = 0; v < int(st.size()); ++v)
        REQUIRE_THROWS_AS(apply_move(u, MoveSite{st[size_t(v)].kind, 0, 0, v, false}),
                          std::logic_error);
}

TEST_CASE("clasp removal on the non-reduced trefoil") {
    Mosaic m = load("fixtures/trefoil_nonreduced5.mosaic");
    REQUIRE(crossing_tiles(m) == 5);
    auto sites = find_moves(m);
    bool reduced_one = false;
    for (const MoveSite& s : sites) {
        if (s.kind != MoveKind::R2) continue;
        Mosaic red = apply_move(m, s);
        REQUIRE(is_suitably_connected(red));
        REQUIRE(crossing_tiles(red) == 3);
        REQUIRE(normalized_jones(red) == normalized_jones(m));
        reduced_one = true;
    }
    REQUIRE(reduced_one);
    // Greedy reduction lands on a reduced trefoil.
    Mosaic fix = reduce_fixpoint(m);
    REQUIRE(crossing_tiles(fix) == 3);
    REQUIRE(identify(fix)->name == "3_1");
}

TEST_CASE("moves preserve structure across the 4x4 stream") {
    int applications = 0, mosaics_with_moves = 0;
    enumerate_mosaics(4, {}, [&](const Mosaic& m) {
        auto sites = find_moves(m);
        mosaics_with_moves += !sites.empty();
        size_t components = trace_components(m).size();
        for (const MoveSite& s : sites) {
            Mosaic red = apply_move(m, s);
            REQUIRE(is_suitably_connected(red));
            REQUIRE(trace_components(red).size() == components);
            int delta = crossing_tiles(m) - crossing_tiles(red);
            REQUIRE(delta == (s.kind == MoveKind::R1 ? 1 : 2));
            // Applying then inverting restores the board.
            REQUIRE(apply_move(red, s.inverted()) == m);
            ++applications;
        }
        return true;
    });
    REQUIRE(applications > 500);
    REQUIRE(mosaics_with_moves > 100);
}

TEST_CASE("all-crossing inner boards") {
    REQUIRE(all_crossing_inner(4).cells().size() == 4);
    REQUIRE(all_crossing_inner(5).cells().size() == 9);
    REQUIRE(all_crossing_inner(6).cells().size() == 16);
    InnerBoard five = all_crossing_inner(5);
    for (Tile t : five.cells()) REQUIRE(t == Tile::crossing_v());
    REQUIRE_THROWS_AS(all_crossing_inner(3), std::invalid_argument);
}

TEST_CASE("two-fold completions of the all-crossing inner boards") {
    // Even n: one (n-2)-component link and one (n-3)-component board;
    // odd n: two knots.
    auto comps4 = complete_boundary(all_crossing_inner(4));
    REQUIRE(comps4.size() == 2);
    std::multiset<size_t> counts4;
    for (const Mosaic& m : comps4) {
        REQUIRE(is_suitably_connected(m));
        REQUIRE(crossing_tiles(m) == 4);
        counts4.insert(trace_components(m).size());
    }
    REQUIRE(counts4 == std::multiset<size_t>{1, 2});

    auto comps5 = complete_boundary(all_crossing_inner(5));
    REQUIRE(comps5.size() == 2);
    for (const Mosaic& m : comps5) REQUIRE(trace_components(m).size() == 1);

    auto comps6 = complete_boundary(all_crossing_inner(6));
    REQUIRE(comps6.size() == 2);
    std::multiset<size_t> counts6;
    for (const Mosaic& m : comps6) counts6.insert(trace_components(m).size());
    REQUIRE(counts6 == std::multiset<size_t>{3, 4});
}

TEST_CASE("uncompletable inner boards") {
    // A lone arc pointing at a blank inner neighbour cannot be fixed by any
    // boundary: interior mismatches are not the boundary's to repair.
    InnerBoard bad(4, {Tile::arc_se(), Tile::blank(), Tile::blank(), Tile::blank()});
    REQUIRE(complete_boundary(bad).empty());
}

TEST_CASE("all-blank inner board completes two ways") {
    InnerBoard blank(4, std::vector<Tile>(4, Tile::blank()));
    auto comps = complete_boundary(blank);
    REQUIRE(comps.size() == 2);  // the empty board and the boundary ring loop
}

TEST_CASE("corner reduction") {
    for (const Mosaic& m : complete_boundary(all_crossing_inner(5))) {
        auto red = corner_reduce(m);
        REQUIRE(red.has_value());
        REQUIRE(is_suitably_connected(*red));
        REQUIRE(crossing_tiles(*red) == 8);
        REQUIRE(normalized_jones(*red) == normalized_jones(m));
    }
    REQUIRE_FALSE(corner_reduce(load("fixtures/7_4_5.mosaic")).has_value());
    REQUIRE_FALSE(corner_reduce(parse_mosaic("2 2\n2 1\n3 4")).has_value());
}
