#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/trace.hpp"

using namespace kmos;
namespace fs = std::filesystem;

namespace {

Mosaic load(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_mosaic(buf.str());
}

std::vector<fs::path> fixture_files() {
    std::vector<fs::path> out;
    for (const char* sub : {"fixtures", "fixtures/links"})
        for (const auto& e : fs::directory_iterator(fs::path(KNOTMOSAIC_SOURCE_DIR) / sub))
            if (e.is_regular_file() && e.path().extension() == ".mosaic")
                out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("parse the 2x2 unknot") {
    Mosaic m = parse_mosaic("2 2\n2 1\n3 4");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    REQUIRE(m.at(0, 0) == Tile::arc_se());
    REQUIRE(m.at(1, 1) == Tile::arc_nw());
    REQUIRE(is_suitably_connected(m));
    REQUIRE(trace_components(m).size() == 1);
}

TEST_CASE("parse a single crossing board") {
    // Parses fine; validity is a separate question.
    Mosaic m = parse_mosaic("1 1\n9");
    REQUIRE(m.at(0, 0) == Tile::crossing_v());
    REQUIRE_FALSE(is_suitably_connected(m));
    REQUIRE(connection_mismatches(m).size() == 4);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_mosaic(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    REQUIRE(line_of("2 2\n2 11\n3 4") == 2);     // code out of range
    REQUIRE(line_of("2 2\n2 1 0\n3 4") == 2);    // row length mismatch
    REQUIRE(line_of("2\n2 1\n3 4") == 1);        // malformed header
    REQUIRE(line_of("2 2\n2 1") == 2);           // missing row
    REQUIRE(line_of("2 2\n2 1\n3 4\n0") == 4);   // trailing content
    REQUIRE(line_of("# note\n2 x\n") == 2);
}

TEST_CASE("comments and provenance") {
    Mosaic m = parse_mosaic("# the little unknot\n2 2\n2 1\n# middle note\n3 4\n");
    REQUIRE(m.provenance() == "the little unknot");
    REQUIRE(m == parse_mosaic("2 2\n2 1\n3 4"));  // label is not content
}

TEST_CASE("serialize round trip") {
    Mosaic u = parse_mosaic("2 2\n2 1\n3 4");
    REQUIRE(serialize_mosaic(u) == "2 2\n2 1\n3 4\n");
    REQUIRE(parse_mosaic(serialize_mosaic(u)) == u);

    // Random grids, valid or not, survive the round trip.
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dim(1, 7), code(0, 10);
    for (int i = 0; i < 200; ++i) {
        int r = dim(rng), c = dim(rng);
        std::vector<Tile> cells;
        for (int k = 0; k < r * c; ++k) cells.push_back(Tile(code(rng)));
        Mosaic m(r, c, cells);
        REQUIRE(parse_mosaic(serialize_mosaic(m)) == m);
    }
}

TEST_CASE("round trip on every bundled fixture") {
    auto files = fixture_files();
    REQUIRE(files.size() >= 40);
    for (const auto& p : files) {
        Mosaic m = load(p);
        REQUIRE(parse_mosaic(serialize_mosaic(m)) == m);
        REQUIRE(is_suitably_connected(m));
    }
}

TEST_CASE("suitable connection counterexamples") {
    Mosaic u = parse_mosaic("2 2\n2 1\n3 4");
    Mosaic broken = u.with(1, 1, Tile::blank());
    REQUIRE_FALSE(is_suitably_connected(broken));
    auto bad = connection_mismatches(broken);
    REQUIRE(bad.size() == 2);  // the two half-edges pointing at the blank
}

TEST_CASE("trace component counts") {
    REQUIRE(trace_components(Mosaic::filled(3, 3)).empty());
    Mosaic hopf = load(fs::path(KNOTMOSAIC_SOURCE_DIR) / "fixtures/links/hopf4.mosaic");
    REQUIRE(trace_components(hopf).size() == 2);
    REQUIRE_THROWS_AS(trace_components(parse_mosaic("1 1\n9")), std::logic_error);
}

TEST_CASE("trace covers every connection point exactly once") {
    auto files = fixture_files();
    for (const auto& p : files) {
        Mosaic m = load(p);
        size_t expected = 0;
        for (Tile t : m.cells())
            for (Edge e : all_edges) expected += t.connects(e);
        size_t steps = 0;
        for (const auto& loop : trace_components(m)) steps += loop.size();
        REQUIRE(2 * steps == expected);  // each step enters one port, exits another
    }
}

TEST_CASE("tile counts") {
    Mosaic u = parse_mosaic("2 2\n2 1\n3 4");
    REQUIRE(crossing_tiles(u) == 0);
    REQUIRE(nonblank_tiles(u) == 4);
    Mosaic trefoil = load(fs::path(KNOTMOSAIC_SOURCE_DIR) / "fixtures/trefoil4.mosaic");
    REQUIRE(crossing_tiles(trefoil) == 3);
}

TEST_CASE("inner board addressing") {
    // 5x5 board whose inner cells hold codes 1..9 in reading order.
    std::vector<Tile> cells(25, Tile::blank());
    for (int k = 1; k <= 9; ++k) cells[size_t(1 + (k - 1) / 3) * 5 + 1 + (k - 1) % 3] = Tile(k);
    Mosaic m(5, 5, cells);
    InnerBoard inner = inner_board(m);
    REQUIRE(inner.size() == 3);
    REQUIRE(inner.parent_size() == 5);
    for (int k = 1; k <= 9; ++k) REQUIRE(inner.inner(k) == Tile(k));
    REQUIRE_THROWS_AS(inner.inner(10), std::out_of_range);
    REQUIRE(inner.at(0, 0) == Tile(1));
    REQUIRE(inner.at(2, 2) == Tile(9));
}
