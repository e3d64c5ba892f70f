#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotmosaic/svg.hpp"

using namespace kmos;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

Mosaic load(const std::string& rel) {
    std::ifstream in(std::filesystem::path(KNOTMOSAIC_SOURCE_DIR) / rel);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_mosaic(buf.str());
}

}  // namespace

TEST_CASE("unknot renders four arc glyphs") {
    std::string svg = render_svg(parse_mosaic("2 2\n2 1\n3 4"));
    REQUIRE(count_occurrences(svg, "<path") == 4);
    REQUIRE(count_occurrences(svg, "class=\"bad\"") == 0);
    REQUIRE(svg.find("<svg") == 0);
}

TEST_CASE("crossings split the under strand") {
    Mosaic m = load("fixtures/7_4_5.mosaic");
    std::string svg = render_svg(m);
    // each crossing: one full strand plus the two segments of the split one
    size_t strand_lines = count_occurrences(svg, "class=\"s\"/>") - count_occurrences(svg, "<path");
    int crossings = crossing_tiles(m);
    REQUIRE(crossings == 7);
    REQUIRE(strand_lines >= size_t(3 * crossings));
}

TEST_CASE("invalid boards still render, with markers") {
    Mosaic broken = parse_mosaic("2 2\n2 1\n3 0");
    std::string svg = render_svg(broken);
    REQUIRE(count_occurrences(svg, "class=\"bad\"") == connection_mismatches(broken).size());
}

TEST_CASE("byte determinism against the golden file") {
    std::string svg = render_svg(parse_mosaic("2 2\n2 1\n3 4"));
    REQUIRE(svg == render_svg(parse_mosaic("2 2\n2 1\n3 4")));
    std::ifstream in(std::filesystem::path(KNOTMOSAIC_SOURCE_DIR) / "tests/golden/unknot2.svg");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    REQUIRE(svg == buf.str());
}
