#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotmosaic/symmetry.hpp"
#include "knotmosaic/trace.hpp"

using namespace kmos;

namespace {

Mosaic load(const std::string& rel) {
    std::ifstream in(std::filesystem::path(KNOTMOSAIC_SOURCE_DIR) / rel);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_mosaic(buf.str());
}

}  // namespace

TEST_CASE("sixteen elements, closed under composition") {
    const auto& all = all_symmetries();
    REQUIRE(all.size() == 16);
    auto index_of = [&](const Symmetry& s) {
        for (size_t i = 0; i < all.size(); ++i)
            if (all[i] == s) return int(i);
        return -1;
    };
    for (const Symmetry& a : all)
        for (const Symmetry& b : all) REQUIRE(index_of(compose(a, b)) >= 0);
    for (const Symmetry& a : all) {
        REQUIRE(compose(a, Symmetry::identity()) == a);
        REQUIRE(compose(Symmetry::identity(), a) == a);
        REQUIRE(compose(inverse(a), a) == Symmetry::identity());
    }
}

TEST_CASE("quarter turn maps tiles as pictured") {
    Mosaic single(1, 1, {Tile::arc_sw()});
    REQUIRE(transform(single, Symmetry::rot90()).at(0, 0) == Tile::arc_nw());
    Mosaic cross(1, 1, {Tile::crossing_v()});
    REQUIRE(transform(cross, Symmetry::rot90()).at(0, 0) == Tile::crossing_h());
    // A transpose exchanges the strands and which one is on top: fixed.
    REQUIRE(transform(cross, Symmetry::transpose()).at(0, 0) == Tile::crossing_v());
    REQUIRE(transform(cross, Symmetry::mirror()).at(0, 0) == Tile::crossing_h());
}

TEST_CASE("the 2x2 unknot is rotation symmetric") {
    Mosaic u = parse_mosaic("2 2\n2 1\n3 4");
    REQUIRE(transform(u, Symmetry::rot90()) == u);
    REQUIRE(transform(u, Symmetry::mirror()) == u);
}

TEST_CASE("group action on boards") {
    Mosaic m = load("fixtures/7_4_5.mosaic");
    const auto& all = all_symmetries();
    for (const Symmetry& s1 : all)
        for (const Symmetry& s2 : all)
            REQUIRE(transform(transform(m, s1), s2) == transform(m, compose(s2, s1)));
    REQUIRE(transform(m, Symmetry::identity()) == m);
}

TEST_CASE("suitable connection and components are invariant") {
    for (const char* rel : {"fixtures/trefoil4.mosaic", "fixtures/7_4_5.mosaic",
                            "fixtures/links/hopf4.mosaic", "fixtures/8_18_6.mosaic"}) {
        Mosaic m = load(rel);
        size_t components = trace_components(m).size();
        for (const Symmetry& s : all_symmetries()) {
            Mosaic t = transform(m, s);
            REQUIRE(is_suitably_connected(t));
            REQUIRE(trace_components(t).size() == components);
        }
    }
}

TEST_CASE("canonical form picks the least orbit element") {
    Mosaic u = parse_mosaic("2 2\n2 1\n3 4");
    REQUIRE(is_canonical(u));  // fixed by everything
    Mosaic trefoil = load("fixtures/trefoil4.mosaic");
    int canonical = 0;
    for (const Symmetry& s : all_symmetries()) canonical += is_canonical(transform(trefoil, s));
    REQUIRE(canonical >= 1);
    // The canonical element is unique per orbit.
    Mosaic least = trefoil;
    for (const Symmetry& s : all_symmetries()) {
        Mosaic t = transform(trefoil, s);
        if (t < least) least = t;
    }
    REQUIRE(is_canonical(least));
}
