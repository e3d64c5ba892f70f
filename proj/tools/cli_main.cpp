// knotmosaic command line: validation, tracing, identification, moves,
// enumeration, absence certificates, tabulation and SVG rendering.
//
// Exit codes: 0 success, 1 domain failure (invalid mosaic, unidentified
// knot, bad fixture), 2 usage error.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotmosaic/bracket.hpp"
#include "knotmosaic/knot_table.hpp"
#include "knotmosaic/moves.hpp"
#include "knotmosaic/scan.hpp"
#include "knotmosaic/svg.hpp"
#include "knotmosaic/tabulate.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace kmos;

namespace {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mosaic read_mosaic(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_mosaic(buf.str());
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot open " + out_path);
    out << text;
}

const char* edge_name(Edge e) {
    switch (e) {
        case Edge::N: return "N";
        case Edge::E: return "E";
        case Edge::S: return "S";
        case Edge::W: return "W";
    }
    return "?";
}

const char* chirality_name(Chirality c) {
    switch (c) {
        case Chirality::AsTable: return "as-table";
        case Chirality::Mirror: return "mirror";
        case Chirality::Amphichiral: return "amphichiral";
    }
    return "?";
}

json mosaic_rows(const Mosaic& m) {
    json rows = json::array();
    std::istringstream in(serialize_mosaic(m));
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) rows.push_back(line);
    return rows;
}

// Fixtures: every *.mosaic directly inside the directory, by file name.
std::vector<std::pair<std::string, Mosaic>> load_fixture_dir(const std::string& dir) {
    if (!fs::is_directory(dir)) throw DomainError("not a directory: " + dir);
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mosaic")
            paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    std::vector<std::pair<std::string, Mosaic>> out;
    for (const auto& p : paths) {
        try {
            out.emplace_back(p.filename().string(), read_mosaic(p.string()));
        } catch (const ParseError& e) {
            throw FixtureError(p.filename().string(), e.what());
        }
    }
    return out;
}

json certificate_json(const AbsenceCertificate& c) {
    json j;
    j["knot"] = c.knot;
    j["board_size"] = c.board_size;
    j["absent"] = c.absent;
    j["occurrences"] = c.occurrences;
    j["mosaics_enumerated"] = c.mosaics_enumerated;
    j["distinct_jones_values"] = c.distinct_jones_values;
    j["filter"] = {{"max_crossing_tiles",
                    c.max_crossing_tiles ? json(*c.max_crossing_tiles) : json()},
                   {"exact_crossing_tiles",
                    c.exact_crossing_tiles ? json(*c.exact_crossing_tiles) : json()},
                   {"alternating_only", c.alternating_only},
                   {"require_single_component", true}};
    j["workers"] = c.workers;
    j["wall_seconds"] = c.seconds;
    return j;
}

json tabrow_json(const TabRow& row) {
    const KnotRecord* rec = find_record(row.knot);
    json j;
    j["knot"] = row.knot;
    j["crossing_number"] = rec->crossing_number;
    j["mosaic_number"] = row.mosaic_number ? json(*row.mosaic_number) : json();
    j["lower_bound"] = row.lower_bound;
    j["upper_bound"] = row.upper_bound ? json(*row.upper_bound) : json();
    j["min_tile_count"] = row.min_tile_count ? json(*row.min_tile_count) : json();
    j["tile_count_exact"] = row.tile_count_exact;
    j["witness"] = row.witness ? mosaic_rows(*row.witness) : json();
    return j;
}

std::string tabrows_csv(const std::vector<TabRow>& rows) {
    std::string csv =
        "knot,crossing_number,mosaic_number,lower_bound,upper_bound,min_tile_count,"
        "tile_count_exact\n";
    for (const TabRow& row : rows) {
        const KnotRecord* rec = find_record(row.knot);
        csv += row.knot + "," + std::to_string(rec->crossing_number) + ",";
        csv += (row.mosaic_number ? std::to_string(*row.mosaic_number) : "") + ",";
        csv += std::to_string(row.lower_bound) + ",";
        csv += (row.upper_bound ? std::to_string(*row.upper_bound) : "") + ",";
        csv += (row.min_tile_count ? std::to_string(*row.min_tile_count) : "") + ",";
        csv += row.tile_count_exact ? "true" : "false";
        csv += "\n";
    }
    return csv;
}

int cmd_validate(const std::string& file, bool as_json) {
    Mosaic m = read_mosaic(file);
    auto bad = connection_mismatches(m);
    int components = bad.empty() ? component_count(m) : 0;
    if (as_json) {
        json j;
        j["suitably_connected"] = bad.empty();
        j["components"] = bad.empty() ? json(components) : json();
        json mm = json::array();
        for (const EdgeRef& e : bad)
            mm.push_back({{"row", e.r}, {"col", e.c}, {"edge", edge_name(e.e)}});
        j["mismatched_edges"] = mm;
        std::cout << j.dump(2) << "\n";
    } else if (bad.empty()) {
        std::cout << "suitably connected; " << components
                  << (components == 1 ? " component\n" : " components\n");
    } else {
        std::cout << "not suitably connected; " << bad.size() << " mismatched edge"
                  << (bad.size() == 1 ? "" : "s") << "\n";
        for (const EdgeRef& e : bad)
            std::cout << "  (" << e.r << "," << e.c << ") " << edge_name(e.e) << "\n";
    }
    return bad.empty() ? 0 : 1;
}

int cmd_trace(const std::string& file, bool as_json) {
    Mosaic m = read_mosaic(file);
    if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
    auto loops = trace_components(m);
    if (as_json) {
        json j;
        j["components"] = loops.size();
        json jl = json::array();
        for (const auto& loop : loops) {
            json steps = json::array();
            for (const StrandStep& s : loop)
                steps.push_back({{"row", s.r}, {"col", s.c}, {"entry", edge_name(s.entry)}});
            jl.push_back(steps);
        }
        j["loops"] = jl;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << loops.size() << (loops.size() == 1 ? " component\n" : " components\n");
    for (size_t i = 0; i < loops.size(); ++i) {
        std::cout << "loop " << i + 1 << " (" << loops[i].size() << " steps):";
        for (const StrandStep& s : loops[i])
            std::cout << " (" << s.r << "," << s.c << ")" << edge_name(s.entry);
        std::cout << "\n";
    }
    return 0;
}

int cmd_identify(const std::string& file, bool as_json) {
    Mosaic m = read_mosaic(file);
    LaurentPoly jones = normalized_jones(m);
    auto id = identify(jones);
    if (as_json) {
        json j;
        j["identified"] = bool(id);
        j["name"] = id ? json(id->name) : json();
        j["chirality"] = id ? json(chirality_name(id->chirality)) : json();
        j["jones_a"] = jones.to_string("A");
        j["jones_t"] = jones_in_t(jones).to_string("t");
        std::cout << j.dump(2) << "\n";
    } else if (id) {
        std::cout << id->name << " (" << chirality_name(id->chirality) << ")\n";
        std::cout << "jones(t): " << jones_in_t(jones).to_string("t") << "\n";
    } else {
        std::cout << "unidentified\n";
        std::cout << "jones(t): " << jones_in_t(jones).to_string("t") << "\n";
    }
    return id ? 0 : 1;
}

int cmd_jones(const std::string& file, bool as_json) {
    Mosaic m = read_mosaic(file);
    PlanarDiagram pd = to_planar_diagram(m);
    LaurentPoly bracket = kauffman_bracket(pd);
    LaurentPoly jones = normalized_jones(pd);
    if (as_json) {
        json j;
        j["crossings"] = pd.crossing_count();
        j["writhe"] = writhe(pd);
        j["alternating"] = is_alternating(pd);
        j["bracket_a"] = bracket.to_string("A");
        j["jones_a"] = jones.to_string("A");
        j["jones_t"] = jones_in_t(jones).to_string("t");
        j["determinant"] = determinant(pd);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "crossings: " << pd.crossing_count() << "\n";
    std::cout << "writhe: " << writhe(pd) << "\n";
    std::cout << "alternating: " << (is_alternating(pd) ? "yes" : "no") << "\n";
    std::cout << "bracket(A): " << bracket.to_string("A") << "\n";
    std::cout << "jones(A): " << jones.to_string("A") << "\n";
    std::cout << "jones(t): " << jones_in_t(jones).to_string("t") << "\n";
    std::cout << "determinant: " << determinant(pd) << "\n";
    return 0;
}

int cmd_moves(const std::string& file, bool as_json) {
    Mosaic m = read_mosaic(file);
    if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
    auto sites = find_moves(m);
    if (as_json) {
        json j = json::array();
        for (const MoveSite& s : sites)
            j.push_back({{"kind", s.kind == MoveKind::R1 ? "R1" : "R2"},
                         {"row", s.r},
                         {"col", s.c},
                         {"variant", s.variant}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << sites.size() << " reducing site" << (sites.size() == 1 ? "" : "s") << "\n";
    for (const MoveSite& s : sites)
        std::cout << (s.kind == MoveKind::R1 ? "R1" : "R2") << " at (" << s.r << "," << s.c
                  << ") variant " << s.variant << "\n";
    return 0;
}

int cmd_reduce(const std::string& file, bool as_json, const std::string& out) {
    Mosaic m = read_mosaic(file);
    if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
    int applied = 0;
    Mosaic reduced = reduce_fixpoint(m, &applied);
    if (as_json) {
        json j;
        j["moves_applied"] = applied;
        j["crossing_tiles"] = crossing_tiles(reduced);
        j["mosaic"] = mosaic_rows(reduced);
        write_output(out, j.dump(2) + "\n");
        return 0;
    }
    std::string text = serialize_mosaic(reduced);
    if (out.empty())
        std::cout << "applied " << applied << " move" << (applied == 1 ? "" : "s") << "\n"
                  << text;
    else
        write_output(out, text);
    return 0;
}

int cmd_complete(const std::string& file, bool as_json, const std::string& out) {
    // The file holds the inner board itself: a k x k grid, parent (k+2).
    Mosaic inner_grid = read_mosaic(file);
    if (inner_grid.rows() != inner_grid.cols())
        throw DomainError("inner board must be square");
    InnerBoard inner(inner_grid.rows() + 2, inner_grid.cells());
    auto completions = complete_boundary(inner);
    if (as_json) {
        json j = json::array();
        for (const Mosaic& m : completions) j.push_back(mosaic_rows(m));
        write_output(out, j.dump(2) + "\n");
        return 0;
    }
    std::string text = std::to_string(completions.size()) + " completion" +
                       (completions.size() == 1 ? "" : "s") + "\n";
    for (const Mosaic& m : completions) text += "\n" + serialize_mosaic(m);
    write_output(out, text);
    return 0;
}

int cmd_enumerate(int size, std::optional<int> max_crossings, std::optional<int> exact_crossings,
                  bool alternating, long limit, bool as_json, const std::string& out_path) {
    EnumFilter f;
    f.max_crossing_tiles = max_crossings;
    f.exact_crossing_tiles = exact_crossings;
    f.alternating_only = alternating;
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw DomainError("cannot open " + out_path);
        out = &out_file;
    }
    uint64_t count = 0;
    enumerate_mosaics(size, f, [&](const Mosaic& m) {
        ++count;
        if (as_json)
            *out << json(mosaic_rows(m)).dump() << "\n";
        else
            *out << serialize_mosaic(m) << "\n";
        return limit == 0 || long(count) < limit;
    });
    if (as_json)
        *out << json{{"count", count}}.dump() << "\n";
    else
        std::cerr << "count: " << count << "\n";
    return 0;
}

int cmd_absence(int size, const std::vector<std::string>& knots, int workers, bool as_json,
                const std::string& out) {
    for (const std::string& k : knots)
        if (!find_record(k)) throw DomainError("unknown knot name: " + k);
    BoardScan scan = scan_board(size, {}, workers);
    json all = json::array();
    std::string text;
    for (const std::string& k : knots) {
        AbsenceCertificate cert = absence_proof(scan, k);
        all.push_back(certificate_json(cert));
        text += cert.knot + " on " + std::to_string(cert.board_size) + "x" +
                std::to_string(cert.board_size) + ": " +
                (cert.absent ? "absent" : "present (" + std::to_string(cert.occurrences) +
                                              " mosaics)") +
                "; enumerated " + std::to_string(cert.mosaics_enumerated) + " mosaics\n";
    }
    if (!out.empty()) write_output(out, all.dump(2) + "\n");
    if (as_json)
        std::cout << all.dump(2) << "\n";
    else
        std::cout << text;
    return 0;
}

int cmd_tabulate(int max_size, const std::string& fixtures_dir, int workers, bool as_json,
                 const std::string& out) {
    std::vector<std::pair<std::string, Mosaic>> fixtures;
    if (!fixtures_dir.empty()) fixtures = load_fixture_dir(fixtures_dir);
    auto rows = tabulate(max_size, fixtures, workers);
    json jrows = json::array();
    for (const TabRow& row : rows) jrows.push_back(tabrow_json(row));
    if (!out.empty()) {
        write_output(out, jrows.dump(2) + "\n");
        fs::path csv_path = fs::path(out).replace_extension(".csv");
        write_output(csv_path.string(), tabrows_csv(rows));
    }
    if (as_json) {
        std::cout << jrows.dump(2) << "\n";
        return 0;
    }
    std::cout << "knot  m(K)  tiles\n";
    for (const TabRow& row : rows) {
        std::string m = row.mosaic_number ? std::to_string(*row.mosaic_number)
                                          : ">=" + std::to_string(row.lower_bound);
        std::string tiles = row.min_tile_count
                                ? std::to_string(*row.min_tile_count) +
                                      (row.tile_count_exact ? "" : " (upper bound)")
                                : "";
        std::cout << row.knot << "\t" << m << "\t" << tiles << "\n";
    }
    return 0;
}

int cmd_bounds(bool as_json) {
    json j = json::array();
    std::string text = "knot  c  m  lower(ceil(sqrt(c))+3)  ok  upper(c+1)  ok\n";
    for (const KnotRecord& rec : reference_table()) {
        BoundReport r = bound_report(rec);
        j.push_back({{"knot", r.name},
                     {"crossing_number", rec.crossing_number},
                     {"m", r.m},
                     {"lower_printed", r.lower_printed},
                     {"lower_ok", r.lower_ok},
                     {"upper", r.upper},
                     {"upper_ok", r.upper_ok}});
        text += r.name + "\t" + std::to_string(rec.crossing_number) + "\t" + std::to_string(r.m) +
                "\t" + std::to_string(r.lower_printed) + "\t" + (r.lower_ok ? "ok" : "FLAG") +
                "\t" + std::to_string(r.upper) + "\t" + (r.upper_ok ? "ok" : "FLAG") + "\n";
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return 0;
}

int cmd_render(const std::string& file, const std::string& out) {
    Mosaic m = read_mosaic(file);
    write_output(out, render_svg(m));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot mosaic toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, out, fixtures_dir;
    int size = 4, max_size = 6, workers = 1;
    long limit = 0;
    std::optional<int> crossings, exact_crossings;
    bool alternating = false;
    std::vector<std::string> knots;

    auto* validate = app.add_subcommand("validate", "check suitable connection");
    validate->add_option("file", file)->required();
    auto* trace = app.add_subcommand("trace", "list strand loops");
    trace->add_option("file", file)->required();
    auto* identify_cmd = app.add_subcommand("identify", "name the knot by its Jones polynomial");
    identify_cmd->add_option("file", file)->required();
    auto* jones = app.add_subcommand("jones", "bracket and normalized Jones polynomial");
    jones->add_option("file", file)->required();
    auto* moves = app.add_subcommand("moves", "list reducing move sites");
    moves->add_option("file", file)->required();
    auto* reduce = app.add_subcommand("reduce", "greedy move reduction to a fixpoint");
    reduce->add_option("file", file)->required();
    reduce->add_option("--out", out, "write the reduced mosaic here");
    auto* complete = app.add_subcommand("complete", "complete an inner board");
    complete->add_option("file", file)->required();
    complete->add_option("--out", out);
    auto* enumerate = app.add_subcommand("enumerate", "stream suitably connected mosaics");
    enumerate->add_option("--size", size)->required();
    enumerate->add_option("--crossings", crossings, "max crossing tiles");
    enumerate->add_option("--exact-crossings", exact_crossings);
    enumerate->add_flag("--alternating", alternating);
    enumerate->add_option("--limit", limit, "stop after this many mosaics");
    enumerate->add_option("--out", out);
    auto* absence = app.add_subcommand("absence", "absence certificates from a full scan");
    absence->add_option("--size", size)->required();
    absence->add_option("knots", knots, "knot names")->required();
    absence->add_option("--workers", workers);
    absence->add_option("--out", out, "write certificates (JSON) here");
    auto* tabulate_cmd = app.add_subcommand("tabulate", "mosaic numbers for the reference knots");
    tabulate_cmd->add_option("--max-size", max_size);
    tabulate_cmd->add_option("--fixtures", fixtures_dir, "witness directory");
    tabulate_cmd->add_option("--workers", workers);
    tabulate_cmd->add_option("--out", out, "write JSON here (CSV mirror alongside)");
    auto* bounds = app.add_subcommand("bounds", "crossing-number bounds per knot");
    auto* render = app.add_subcommand("render", "render a mosaic as SVG");
    render->add_option("file", file)->required();
    render->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, as_json);
        if (trace->parsed()) return cmd_trace(file, as_json);
        if (identify_cmd->parsed()) return cmd_identify(file, as_json);
        if (jones->parsed()) return cmd_jones(file, as_json);
        if (moves->parsed()) return cmd_moves(file, as_json);
        if (reduce->parsed()) return cmd_reduce(file, as_json, out);
        if (complete->parsed()) return cmd_complete(file, as_json, out);
        if (enumerate->parsed())
            return cmd_enumerate(size, crossings, exact_crossings, alternating, limit, as_json,
                                 out);
        if (absence->parsed()) return cmd_absence(size, knots, workers, as_json, out);
        if (tabulate_cmd->parsed())
            return cmd_tabulate(max_size, fixtures_dir, workers, as_json, out);
        if (bounds->parsed()) return cmd_bounds(as_json);
        if (render->parsed()) return cmd_render(file, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
