#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "knotmosaic/knot_table.hpp"

using namespace kmos;

TEST_CASE("the table holds the 36 tabulated knots") {
    const auto& recs = reference_table();
    REQUIRE(recs.size() == 36);
    std::map<int, int> per_crossing;
    for (const KnotRecord& r : recs) per_crossing[r.crossing_number]++;
    REQUIRE(per_crossing == std::map<int, int>{
                                {0, 1}, {3, 1}, {4, 1}, {5, 2}, {6, 3}, {7, 7}, {8, 21}});
}

TEST_CASE("embedded data matches the versioned file") {
    std::ifstream in(std::filesystem::path(KNOTMOSAIC_SOURCE_DIR) / "data/knots_ref.txt");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string_view embedded = kKnotReferenceData;
    // The raw string literal starts with the newline after the delimiter.
    if (!embedded.empty() && embedded.front() == '\n') embedded.remove_prefix(1);
    REQUIRE(buf.str() == embedded);
}

TEST_CASE("expected mosaic numbers follow the tabulation") {
    std::map<std::string, int> expect{{"0_1", 2}, {"3_1", 4}, {"4_1", 5}, {"5_1", 5},
                                      {"5_2", 5}, {"6_1", 5}, {"6_2", 5}, {"6_3", 6},
                                      {"7_4", 5}};
    for (const KnotRecord& r : reference_table()) {
        int m = expect.count(r.name) ? expect[r.name] : 6;
        REQUIRE(r.expected_mosaic_number == m);
    }
}

TEST_CASE("jones values are pairwise distinct, mirrors included") {
    const auto& recs = reference_table();
    for (size_t i = 0; i < recs.size(); ++i) {
        REQUIRE(recs[i].jones.evaluated_at_one() == 1);  // V(1) = 1 for knots
        for (size_t j = i + 1; j < recs.size(); ++j) {
            REQUIRE(recs[i].jones != recs[j].jones);
            REQUIRE(recs[i].jones != recs[j].jones.mirrored());
        }
    }
}

TEST_CASE("amphichiral entries are exactly the declared ones") {
    std::set<std::string> expect{"0_1", "4_1", "6_3", "8_3", "8_9", "8_12", "8_17", "8_18"};
    std::set<std::string> got;
    for (const KnotRecord& r : reference_table()) {
        REQUIRE(r.jones.mirror_symmetric() == r.amphichiral);
        if (r.amphichiral) got.insert(r.name);
    }
    REQUIRE(got == expect);
}

TEST_CASE("identify is the identity on the table") {
    for (const KnotRecord& r : reference_table()) {
        auto id = identify(r.jones);
        REQUIRE(id.has_value());
        REQUIRE(id->name == r.name);
        REQUIRE(id->chirality ==
                (r.amphichiral ? Chirality::Amphichiral : Chirality::AsTable));
        auto mirror_id = identify(r.jones.mirrored());
        REQUIRE(mirror_id.has_value());
        REQUIRE(mirror_id->name == r.name);
        REQUIRE(mirror_id->chirality ==
                (r.amphichiral ? Chirality::Amphichiral : Chirality::Mirror));
    }
    REQUIRE_FALSE(identify(LaurentPoly::monomial(4, 7)).has_value());
    REQUIRE(identify(LaurentPoly::constant(1))->name == "0_1");
}

TEST_CASE("reference jones values match the independent generator") {
    // tests/golden/reference_jones.tsv is produced by a separate Python
    // bracket implementation over the same PD codes.
    std::ifstream in(std::filesystem::path(KNOTMOSAIC_SOURCE_DIR) /
                     "tests/golden/reference_jones.tsv");
    REQUIRE(in.good());
    std::map<std::string, std::string> golden;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        size_t tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        golden[line.substr(0, tab)] = line.substr(tab + 1);
    }
    REQUIRE(golden.size() == 36);
    for (const KnotRecord& r : reference_table())
        REQUIRE(jones_in_t(r.jones).to_string("t") == golden.at(r.name));
}

TEST_CASE("bound reports") {
    auto report = [](const std::string& name) { return bound_report(*find_record(name)); };

    BoundReport r41 = report("4_1");  // ceil(sqrt(4))+3 = 5 = m; c+1 = 5
    REQUIRE(r41.lower_printed == 5);
    REQUIRE(r41.upper == 5);
    REQUIRE(r41.lower_ok);
    REQUIRE(r41.upper_ok);

    BoundReport r31 = report("3_1");  // printed lower bound exceeds m = 4
    REQUIRE(r31.lower_printed == 5);
    REQUIRE_FALSE(r31.lower_ok);
    REQUIRE(r31.upper_ok);

    BoundReport r51 = report("5_1");
    REQUIRE(r51.lower_printed == 6);
    REQUIRE_FALSE(r51.lower_ok);

    BoundReport r818 = report("8_18");  // upper c+1 = 9 >= 6
    REQUIRE(r818.upper == 9);
    REQUIRE(r818.upper_ok);

    // The unknot row: the published upper bound concerns nontrivial knots.
    BoundReport r01 = report("0_1");
    REQUIRE(r01.upper_ok);
    REQUIRE_FALSE(r01.lower_ok);
}

TEST_CASE("reference pd codes are well formed") {
    for (const KnotRecord& r : reference_table()) {
        const PlanarDiagram& pd = r.reference_pd;
        std::map<int, int> uses;
        for (const PdCrossing& x : pd.crossings)
            for (int label : {x.a, x.b, x.c, x.d}) uses[label]++;
        for (auto [label, count] : uses) {
            REQUIRE(count == 2);
            REQUIRE(label >= 1);
            REQUIRE(label <= pd.edge_count);
        }
        if (r.name != "0_1") REQUIRE(pd.crossing_count() >= r.crossing_number);
    }
}
