// Mosaic boards: an immutable grid of tiles, the ".mosaic" text format,
// suitable-connection validation and the inner board.
#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/tile.hpp"

namespace kmos {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

class Mosaic {
public:
    Mosaic(int rows, int cols, std::vector<Tile> cells,
           std::optional<std::string> provenance = std::nullopt)
        : rows_(rows), cols_(cols), cells_(std::move(cells)),
          provenance_(std::move(provenance)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("board dimensions");
        if (cells_.size() != size_t(rows) * size_t(cols))
            throw std::invalid_argument("cell count does not match dimensions");
    }

    static Mosaic filled(int rows, int cols, Tile t = Tile::blank()) {
        return Mosaic(rows, cols, std::vector<Tile>(size_t(rows) * size_t(cols), t));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    // Board size n for square boards.
    int size() const {
        if (!is_square()) throw std::logic_error("rectangular board has no single size");
        return rows_;
    }

    Tile at(int r, int c) const { return cells_[size_t(r) * cols_ + c]; }
    const std::vector<Tile>& cells() const { return cells_; }
    const std::optional<std::string>& provenance() const { return provenance_; }

    bool in_bounds(int r, int c) const {
        return r >= 0 && r < rows_ && c >= 0 && c < cols_;
    }

    // Functional update; the board itself never mutates.
    Mosaic with(int r, int c, Tile t) const {
        std::vector<Tile> copy = cells_;
        copy[size_t(r) * cols_ + c] = t;
        return Mosaic(rows_, cols_, std::move(copy), provenance_);
    }

    Mosaic with_provenance(std::string p) const {
        return Mosaic(rows_, cols_, cells_, std::move(p));
    }

    // Equality is grid equality; provenance is a label, not content.
    friend bool operator==(const Mosaic& a, const Mosaic& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

    // Lexicographic by shape then row-major tile codes.
    friend bool operator<(const Mosaic& a, const Mosaic& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.cells_ < b.cells_;
    }

private:
    int rows_, cols_;
    std::vector<Tile> cells_;
    std::optional<std::string> provenance_;
};

// --- .mosaic format ---------------------------------------------------
//
// Line 1: "ROWS COLS"; then ROWS lines of COLS tile codes 0..10 separated
// by single spaces.  Lines starting with '#' are ignored; the first such
// comment becomes the provenance label.  Trailing newline optional.

inline Mosaic parse_mosaic(std::string_view text) {
    std::optional<std::string> provenance;
    int line_no = 0;
    size_t pos = 0;

    auto next_line = [&](std::string_view& out) -> bool {
        while (pos < text.size()) {
            size_t nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : nl - pos);
            pos = nl == std::string_view::npos ? text.size() : nl + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty() && line.front() == '#') {
                if (!provenance) {
                    std::string_view body = line.substr(1);
                    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
                    provenance = std::string(body);
                }
                continue;
            }
            // Skip blank lines only before the header.
            if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
            out = line;
            return true;
        }
        return false;
    };

    auto parse_ints = [&](std::string_view line, std::vector<int>& out) {
        out.clear();
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            int value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc())
                throw ParseError(line_no, "expected an integer");
            i = size_t(ptr - line.data());
            if (i < line.size() && line[i] != ' ' && line[i] != '\t')
                throw ParseError(line_no, "unexpected character");
            out.push_back(value);
        }
    };

    std::string_view header;
    if (!next_line(header)) throw ParseError(line_no, "missing header");
    std::vector<int> dims;
    parse_ints(header, dims);
    if (dims.size() != 2) throw ParseError(line_no, "header must be \"ROWS COLS\"");
    int rows = dims[0], cols = dims[1];
    if (rows < 1 || cols < 1) throw ParseError(line_no, "dimensions must be positive");

    std::vector<Tile> cells;
    cells.reserve(size_t(rows) * cols);
    std::vector<int> codes;
    for (int r = 0; r < rows; ++r) {
        std::string_view line;
        if (!next_line(line)) throw ParseError(line_no, "missing row " + std::to_string(r + 1));
        parse_ints(line, codes);
        if (int(codes.size()) != cols)
            throw ParseError(line_no, "expected " + std::to_string(cols) + " codes, got " +
                                          std::to_string(codes.size()));
        for (int code : codes) {
            if (code < 0 || code >= Tile::kCount)
                throw ParseError(line_no, "tile code out of range: " + std::to_string(code));
            cells.push_back(Tile(code));
        }
    }
    std::string_view extra;
    if (next_line(extra)) throw ParseError(line_no, "trailing content after grid");
    return Mosaic(rows, cols, std::move(cells), std::move(provenance));
}

inline std::string serialize_mosaic(const Mosaic& m) {
    std::string out;
    out += std::to_string(m.rows());
    out += ' ';
    out += std::to_string(m.cols());
    out += '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += std::to_string(m.at(r, c).code());
        }
        out += '\n';
    }
    return out;
}

// --- suitable connection ----------------------------------------------

struct EdgeRef {
    int r, c;
    Edge e;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// Every interior edge must agree on presence of a connection point and no
// connection point may lie on the outer boundary.  Returns the offending
// half-edges (from the cell with the connection) when not.
inline std::vector<EdgeRef> connection_mismatches(const Mosaic& m) {
    std::vector<EdgeRef> bad;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            Tile t = m.at(r, c);
            for (Edge e : all_edges) {
                if (!t.connects(e)) continue;
                int dr = e == Edge::N ? -1 : e == Edge::S ? 1 : 0;
                int dc = e == Edge::W ? -1 : e == Edge::E ? 1 : 0;
                int nr = r + dr, nc = c + dc;
                if (!m.in_bounds(nr, nc) || !m.at(nr, nc).connects(opposite(e)))
                    bad.push_back({r, c, e});
            }
        }
    }
    return bad;
}

inline bool is_suitably_connected(const Mosaic& m) {
    return connection_mismatches(m).empty();
}

// --- inner board --------------------------------------------------------

// The (n-2)x(n-2) block of non-boundary tiles of an n x n board.  For n=5
// the cells are addressable as I1..I9 in reading order.
class InnerBoard {
public:
    InnerBoard(int parent_size, std::vector<Tile> cells)
        : parent_(parent_size), cells_(std::move(cells)) {
        if (parent_ < 3) throw std::invalid_argument("inner board needs n >= 3");
        int k = parent_ - 2;
        if (cells_.size() != size_t(k) * k)
            throw std::invalid_argument("inner cell count");
    }

    int parent_size() const { return parent_; }
    int size() const { return parent_ - 2; }
    Tile at(int r, int c) const { return cells_[size_t(r) * size() + c]; }
    const std::vector<Tile>& cells() const { return cells_; }

    // I-number addressing per the 5x5 labelling, I1 top-left .. I9
    // bottom-right; valid for any parent size, k in [1, size()^2].
    Tile inner(int k) const {
        int s = size();
        if (k < 1 || k > s * s) throw std::out_of_range("inner index");
        return cells_[size_t(k - 1)];
    }

    InnerBoard with(int r, int c, Tile t) const {
        std::vector<Tile> copy = cells_;
        copy[size_t(r) * size() + c] = t;
        return InnerBoard(parent_, std::move(copy));
    }

    friend bool operator==(const InnerBoard&, const InnerBoard&) = default;

private:
    int parent_;
    std::vector<Tile> cells_;
};

inline InnerBoard inner_board(const Mosaic& m) {
    int n = m.size();
    if (n < 3) throw std::invalid_argument("board too small for an inner board");
    std::vector<Tile> cells;
    cells.reserve(size_t(n - 2) * (n - 2));
    for (int r = 1; r < n - 1; ++r)
        for (int c = 1; c < n - 1; ++c) cells.push_back(m.at(r, c));
    return InnerBoard(n, std::move(cells));
}

// --- simple counts -------------------------------------------------------

inline int crossing_tiles(const Mosaic& m) {
    int n = 0;
    for (Tile t : m.cells()) n += t.is_crossing();
    return n;
}

inline int nonblank_tiles(const Mosaic& m) {
    int n = 0;
    for (Tile t : m.cells()) n += !t.is_blank();
    return n;
}

}  // namespace kmos
