// Tile model: the 11 mosaic tiles, their connection points and internal
// strand pairings.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace kmos {

// Board-edge directions, clockwise from north.
enum class Edge : uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr std::array<Edge, 4> all_edges{Edge::N, Edge::E, Edge::S, Edge::W};

constexpr Edge opposite(Edge e) {
    return static_cast<Edge>((static_cast<int>(e) + 2) & 3);
}

constexpr uint8_t edge_bit(Edge e) { return uint8_t(1u << static_cast<int>(e)); }

// A tile is one of 11 values, indexed by its wire code 0..10:
//   0 blank
//   1..4 quarter arcs hugging the SW, SE, NE, NW corner
//   5 horizontal line, 6 vertical line
//   7 double arc on the NW+SE corners, 8 double arc on the NE+SW corners
//   9 crossing with the vertical strand on top, 10 with the horizontal
class Tile {
public:
    static constexpr int kCount = 11;

    constexpr Tile() : code_(0) {}
    constexpr explicit Tile(int code) : code_(static_cast<uint8_t>(code)) {
        if (code < 0 || code >= kCount) throw std::out_of_range("tile code");
    }

    static constexpr Tile blank() { return Tile(0); }
    static constexpr Tile arc_sw() { return Tile(1); }
    static constexpr Tile arc_se() { return Tile(2); }
    static constexpr Tile arc_ne() { return Tile(3); }
    static constexpr Tile arc_nw() { return Tile(4); }
    static constexpr Tile line_h() { return Tile(5); }
    static constexpr Tile line_v() { return Tile(6); }
    static constexpr Tile double_arc_nwse() { return Tile(7); }
    static constexpr Tile double_arc_nesw() { return Tile(8); }
    static constexpr Tile crossing_v() { return Tile(9); }
    static constexpr Tile crossing_h() { return Tile(10); }

    constexpr int code() const { return code_; }

    // Bitmask over Edge of this tile's connection points.
    constexpr uint8_t connection_mask() const { return kMasks[code_]; }

    constexpr bool connects(Edge e) const {
        return (connection_mask() & edge_bit(e)) != 0;
    }

    constexpr bool is_blank() const { return code_ == 0; }
    constexpr bool is_crossing() const { return code_ == 9 || code_ == 10; }
    constexpr bool is_double_arc() const { return code_ == 7 || code_ == 8; }

    // For crossings: true when the vertical (N-S) strand passes over.
    constexpr bool vertical_over() const { return code_ == 9; }

    // Swap which strand of a crossing is on top; identity on other tiles.
    constexpr Tile with_crossing_toggled() const {
        if (code_ == 9) return Tile(10);
        if (code_ == 10) return Tile(9);
        return *this;
    }

    // The strand entering at `e` leaves through pass_through(e).
    // Requires connects(e).
    constexpr Edge pass_through(Edge e) const {
        int8_t out = kPairs[code_][static_cast<int>(e)];
        if (out < 0) throw std::logic_error("no connection point at edge");
        return static_cast<Edge>(out);
    }

    constexpr std::string_view name() const { return kNames[code_]; }

    friend constexpr bool operator==(Tile a, Tile b) { return a.code_ == b.code_; }
    friend constexpr auto operator<=>(Tile a, Tile b) { return a.code_ <=> b.code_; }

private:
    uint8_t code_;

    // Connection masks, N=1 E=2 S=4 W=8.
    static constexpr std::array<uint8_t, kCount> kMasks{
        0b0000,  // blank
        0b1100,  // arc SW  {S,W}
        0b0110,  // arc SE  {S,E}
        0b0011,  // arc NE  {N,E}
        0b1001,  // arc NW  {N,W}
        0b1010,  // line H  {E,W}
        0b0101,  // line V  {N,S}
        0b1111,  // double arc NW+SE
        0b1111,  // double arc NE+SW
        0b1111,  // crossing, vertical over
        0b1111,  // crossing, horizontal over
    };

    // kPairs[code][edge] = exit edge for a strand entering at `edge`, -1 if
    // no connection point there.  Indexed N,E,S,W.
    static constexpr std::array<std::array<int8_t, 4>, kCount> kPairs{{
        {-1, -1, -1, -1},  // blank
        {-1, -1, 3, 2},    // arc SW: S<->W
        {-1, 2, 1, -1},    // arc SE: S<->E
        {1, 0, -1, -1},    // arc NE: N<->E
        {3, -1, -1, 0},    // arc NW: N<->W
        {-1, 3, -1, 1},    // line H: E<->W
        {2, -1, 0, -1},    // line V: N<->S
        {3, 2, 1, 0},      // double arc NWSE: N<->W, S<->E
        {1, 0, 3, 2},      // double arc NESW: N<->E, S<->W
        {2, 3, 0, 1},      // crossing: N<->S, E<->W
        {2, 3, 0, 1},      // crossing: N<->S, E<->W
    }};

    static constexpr std::array<std::string_view, kCount> kNames{
        "blank",     "arc-sw",     "arc-se",     "arc-ne",
        "arc-nw",    "line-h",     "line-v",     "double-arc-nwse",
        "double-arc-nesw", "crossing-v", "crossing-h",
    };
};

}  // namespace kmos
