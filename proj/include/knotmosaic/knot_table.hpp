// Reference data for the 36 knots of the tabulation (the unknot and
// every nontrivial prime knot with at most 8 crossings): embedded planar
// diagram codes, crossing numbers, the minimal mosaic board sizes being
// reproduced, and identification by normalized Jones polynomial.
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotmosaic/bracket.hpp"
#include "knotmosaic/knot_table_data.hpp"
#include "knotmosaic/laurent.hpp"

namespace kmos {

enum class Chirality { AsTable, Mirror, Amphichiral };

struct KnotId {
    std::string name;
    Chirality chirality = Chirality::AsTable;
    friend bool operator==(const KnotId&, const KnotId&) = default;
};

struct KnotRecord {
    std::string name;
    int crossing_number = 0;
    int expected_mosaic_number = 0;
    PlanarDiagram reference_pd;
    LaurentPoly jones;   // normalized Jones in A, computed at startup
    bool amphichiral = false;
    std::string provenance;
};

struct BoundReport {
    std::string name;
    int lower_printed = 0;  // ceil(sqrt(c)) + 3, as printed in the source
    int upper = 0;          // c + 1
    int m = 0;
    bool lower_ok = false;
    bool upper_ok = false;
};

namespace detail {

inline int parse_reference_pd(const std::string& s, PlanarDiagram& pd) {
    // "[(a,b,c,d),...]" with labels 1..2c; orientation data (over_in, sign)
    // is reconstructed from the label sequence.
    pd = {};
    std::string body = s;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') return -1;
    body = body.substr(1, body.size() - 2);
    if (body.empty()) return 0;
    size_t i = 0;
    while (i < body.size()) {
        if (body[i] == ',') ++i;
        if (body[i] != '(') return -1;
        size_t close = body.find(')', i);
        if (close == std::string::npos) return -1;
        std::istringstream quad(body.substr(i + 1, close - i - 1));
        PdCrossing x{};
        char comma;
        if (!(quad >> x.a >> comma >> x.b >> comma >> x.c >> comma >> x.d)) return -1;
        pd.crossings.push_back(x);
        i = close + 1;
    }
    int edges = 2 * int(pd.crossings.size());
    pd.edge_count = edges;
    for (PdCrossing& x : pd.crossings) {
        // The over strand runs d->b exactly when b follows d along the knot.
        if (x.b == x.d % edges + 1) {
            x.over_in = x.d;
            x.sign = 1;
        } else if (x.d == x.b % edges + 1) {
            x.over_in = x.b;
            x.sign = -1;
        } else {
            return -1;
        }
    }
    return 0;
}

struct KnotTable {
    std::vector<KnotRecord> records;
    std::vector<std::string> amphichiral_names;
};

inline KnotTable load_table(std::string_view text) {
    KnotTable table;
    size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos
                                              ? std::string_view::npos
                                              : nl - pos));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("knot reference data line " +
                                     std::to_string(line_no) + ": " + what);
        };
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string tag = "# amphichiral:";
            if (line.rfind(tag, 0) == 0) {
                std::istringstream in(line.substr(tag.size()));
                std::string name;
                while (in >> name) table.amphichiral_names.push_back(name);
            }
            continue;
        }
        if (size_t hash = line.find("  #"); hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream in(line);
        KnotRecord rec;
        std::string pd_field;
        if (!(in >> rec.name >> rec.crossing_number >> rec.expected_mosaic_number >> pd_field))
            fail("expected \"name c m pd:[...]\"");
        if (pd_field.rfind("pd:", 0) != 0) fail("missing pd: field");
        if (parse_reference_pd(pd_field.substr(3), rec.reference_pd) != 0)
            fail("bad pd code");
        table.records.push_back(std::move(rec));
    }
    return table;
}

inline void self_check(KnotTable& table) {
    auto fail = [](const std::string& what) {
        throw std::runtime_error("knot reference self-check: " + what);
    };
    if (table.records.size() != 36) fail("expected 36 records");
    for (KnotRecord& rec : table.records) {
        rec.jones = normalized_jones(rec.reference_pd);
        rec.amphichiral = rec.jones.mirror_symmetric();
        if (rec.jones.evaluated_at_one() != 1)
            fail(rec.name + ": V(1) != 1");
    }
    for (size_t i = 0; i < table.records.size(); ++i) {
        for (size_t j = i + 1; j < table.records.size(); ++j) {
            const auto& a = table.records[i];
            const auto& b = table.records[j];
            if (a.jones == b.jones || a.jones == b.jones.mirrored())
                fail("Jones collision between " + a.name + " and " + b.name);
        }
    }
    // The mirror-symmetric entries must be exactly the declared
    // amphichiral ones.
    std::vector<std::string> symmetric;
    for (const KnotRecord& rec : table.records)
        if (rec.amphichiral) symmetric.push_back(rec.name);
    auto declared = table.amphichiral_names;
    std::sort(symmetric.begin(), symmetric.end());
    std::sort(declared.begin(), declared.end());
    if (symmetric != declared) fail("amphichiral list does not match the data");
}

}  // namespace detail

// The embedded table, parsed and checked once per process.
inline const std::vector<KnotRecord>& reference_table() {
    static const detail::KnotTable table = [] {
        detail::KnotTable t = detail::load_table(kKnotReferenceData);
        detail::self_check(t);
        return t;
    }();
    return table.records;
}

inline const KnotRecord* find_record(const std::string& name) {
    for (const KnotRecord& rec : reference_table())
        if (rec.name == name) return &rec;
    return nullptr;
}

// Matches a normalized Jones value (in A) against the table and its
// mirrors; empty when nothing (or more than one entry) matches.
inline std::optional<KnotId> identify(const LaurentPoly& jones) {
    for (const KnotRecord& rec : reference_table()) {
        if (jones == rec.jones)
            return KnotId{rec.name,
                          rec.amphichiral ? Chirality::Amphichiral : Chirality::AsTable};
        if (jones == rec.jones.mirrored())
            return KnotId{rec.name,
                          rec.amphichiral ? Chirality::Amphichiral : Chirality::Mirror};
    }
    return std::nullopt;
}

inline std::optional<KnotId> identify(const Mosaic& m) {
    return identify(normalized_jones(m));
}

// Both crossing-number bounds, applied verbatim; the printed lower bound
// is reported with a discrepancy flag rather than asserted.  The upper
// bound's source states it for nontrivial knots, so the unknot row is
// marked not-applicable (upper_ok true).
inline BoundReport bound_report(const KnotRecord& rec) {
    BoundReport r;
    r.name = rec.name;
    int c = rec.crossing_number;
    int root = 0;
    while (root * root < c) ++root;  // ceil(sqrt(c))
    r.lower_printed = root + 3;
    r.upper = c + 1;
    r.m = rec.expected_mosaic_number;
    r.lower_ok = r.lower_printed <= r.m;
    r.upper_ok = c == 0 || r.m <= r.upper;
    return r;
}

}  // namespace kmos
