// Embedded copy of data/knots_ref.txt (generated by
// scripts/make_reference_data.py; keep the two in sync -- the unit
// tests compare them).
#pragma once

#include <string_view>

namespace kmos {

inline constexpr std::string_view kKnotReferenceData = R"KREF(
# Reference table: the 36 tabulated knots (the unknot and every
# nontrivial prime knot with at most 8 crossings).  One record per line:
#   name c m pd:[(a,b,c,d),...]
# with c the crossing number, m the minimal mosaic board size, and the
# planar diagram code listing each crossing counterclockwise from the
# incoming under-strand edge.
#
# PD codes constructed from the standard classification data of the
# Rolfsen table (Conway notation / braid words, noted per entry) and
# verified against the classical determinant, Jones span and chirality
# data; see scripts/make_reference_data.py.
#
# amphichiral: 0_1 4_1 6_3 8_3 8_9 8_12 8_17 8_18
0_1 0 2 pd:[]  # unknot
3_1 3 4 pd:[(4,2,5,1),(2,6,3,5),(6,4,1,3)]  # rational, Conway C(3), det 3
4_1 4 5 pd:[(1,7,2,6),(5,3,6,2),(3,8,4,1),(7,4,8,5)]  # rational, Conway C(2 2), det 5
5_1 5 5 pd:[(6,2,7,1),(2,8,3,7),(8,4,9,3),(4,10,5,9),(10,6,1,5)]  # rational, Conway C(5), det 5
5_2 5 5 pd:[(1,9,2,8),(7,3,8,2),(3,7,4,6),(5,1,6,10),(9,5,10,4)]  # rational, Conway C(3 2), det 7
6_1 6 5 pd:[(1,11,2,10),(9,3,10,2),(3,9,4,8),(7,5,8,4),(5,12,6,1),(11,6,12,7)]  # rational, Conway C(4 2), det 9
6_2 6 5 pd:[(8,2,9,1),(2,10,3,9),(10,4,11,3),(4,8,5,7),(6,11,7,12),(12,5,1,6)]  # rational, Conway C(3 1 2), det 11
6_3 6 6 pd:[(1,6,2,7),(7,2,8,3),(3,12,4,1),(11,9,12,8),(9,5,10,4),(5,11,6,10)]  # rational, Conway C(2 1 1 2), det 13
7_1 7 6 pd:[(8,2,9,1),(2,10,3,9),(10,4,11,3),(4,12,5,11),(12,6,13,5),(6,14,7,13),(14,8,1,7)]  # rational, Conway C(7), det 7
7_2 7 6 pd:[(1,13,2,12),(11,3,12,2),(3,11,4,10),(9,5,10,4),(5,9,6,8),(7,1,8,14),(13,7,14,6)]  # rational, Conway C(5 2), det 11
7_3 7 6 pd:[(1,8,2,9),(9,2,10,3),(3,10,4,11),(11,4,12,5),(5,14,6,1),(13,6,14,7),(7,12,8,13)]  # rational, Conway C(4 3), det 13
7_4 7 5 pd:[(10,1,11,2),(2,9,3,10),(8,3,9,4),(4,11,5,12),(12,7,13,8),(6,13,7,14),(14,5,1,6)]  # rational, Conway C(3 1 3), det 15
7_5 7 6 pd:[(10,2,11,1),(2,12,3,11),(12,4,13,3),(4,10,5,9),(8,6,9,5),(6,14,7,13),(14,8,1,7)]  # rational, Conway C(3 2 2), det 17
7_6 7 6 pd:[(1,11,2,10),(9,3,10,2),(3,14,4,1),(13,4,14,5),(5,9,6,8),(7,13,8,12),(11,7,12,6)]  # rational, Conway C(2 2 1 2), det 19
7_7 7 6 pd:[(10,1,11,2),(2,9,3,10),(8,12,9,11),(12,4,13,3),(4,8,5,7),(6,13,7,14),(14,5,1,6)]  # rational, Conway C(2 1 1 1 2), det 21
8_1 8 6 pd:[(1,15,2,14),(13,3,14,2),(3,13,4,12),(11,5,12,4),(5,11,6,10),(9,7,10,6),(7,16,8,1),(15,8,16,9)]  # rational, Conway C(6 2), det 13
8_2 8 6 pd:[(10,2,11,1),(2,12,3,11),(12,4,13,3),(4,14,5,13),(14,6,15,5),(6,10,7,9),(8,15,9,16),(16,7,1,8)]  # rational, Conway C(5 1 2), det 17
8_3 8 6 pd:[(1,13,2,12),(11,3,12,2),(3,11,4,10),(9,5,10,4),(5,16,6,1),(15,6,16,7),(7,14,8,15),(13,8,14,9)]  # rational, Conway C(4 4), det 17
8_4 8 6 pd:[(12,1,13,2),(2,11,3,12),(10,3,11,4),(4,9,5,10),(8,14,9,13),(14,6,15,5),(6,16,7,15),(16,8,1,7)]  # rational, Conway C(4 1 3), det 19
8_5 8 6 pd:[(1,6,2,7),(7,2,8,3),(3,8,4,9),(11,16,12,1),(15,10,16,11),(9,14,10,15),(5,13,6,12),(13,5,14,4)]  # Montesinos, Conway 3,3,2
8_6 8 6 pd:[(12,2,13,1),(2,14,3,13),(14,4,15,3),(4,12,5,11),(10,6,11,5),(6,10,7,9),(8,15,9,16),(16,7,1,8)]  # rational, Conway C(3 3 2), det 23
8_7 8 6 pd:[(1,8,2,9),(9,2,10,3),(3,10,4,11),(11,4,12,5),(5,16,6,1),(15,13,16,12),(13,7,14,6),(7,15,8,14)]  # rational, Conway C(4 1 1 2), det 23
8_8 8 6 pd:[(1,8,2,9),(9,2,10,3),(3,16,4,1),(15,4,16,5),(5,14,6,15),(13,11,14,10),(11,7,12,6),(7,13,8,12)]  # rational, Conway C(2 3 1 2), det 25
8_9 8 6 pd:[(1,8,2,9),(9,2,10,3),(3,10,4,11),(11,16,12,1),(15,5,16,4),(5,13,6,12),(13,7,14,6),(7,15,8,14)]  # rational, Conway C(3 1 1 3), det 25
8_10 8 6 pd:[(12,2,13,1),(2,14,3,13),(14,12,15,11),(8,3,9,4),(4,9,5,10),(10,5,11,6),(16,7,1,8),(6,15,7,16)]  # Montesinos, Conway 21,3,2
8_11 8 6 pd:[(1,13,2,12),(11,3,12,2),(3,11,4,10),(9,1,10,16),(15,9,16,8),(7,5,8,4),(5,14,6,15),(13,6,14,7)]  # rational, Conway C(3 2 1 2), det 27
8_12 8 6 pd:[(1,13,2,12),(11,3,12,2),(3,16,4,1),(15,4,16,5),(5,11,6,10),(9,7,10,6),(7,14,8,15),(13,8,14,9)]  # rational, Conway C(2 2 2 2), det 29
8_13 8 6 pd:[(12,1,13,2),(2,11,3,12),(10,3,11,4),(4,13,5,14),(14,9,15,10),(8,6,9,5),(6,16,7,15),(16,8,1,7)]  # rational, Conway C(3 1 1 1 2), det 29
8_14 8 6 pd:[(10,2,11,1),(2,12,3,11),(12,10,13,9),(8,14,9,13),(14,4,15,3),(4,8,5,7),(6,15,7,16),(16,5,1,6)]  # rational, Conway C(2 2 1 1 2), det 31
8_15 8 6 pd:[(12,2,13,1),(2,14,3,13),(14,12,15,11),(8,4,9,3),(4,10,5,9),(10,8,11,7),(16,6,1,5),(6,16,7,15)]  # Montesinos, Conway 21,21,2
8_16 8 6 pd:[(1,13,2,12),(7,2,8,3),(3,10,4,11),(15,5,16,4),(5,1,6,16),(11,6,12,7),(13,9,14,8),(9,15,10,14)]  # 6x6 mosaic witness (alternating shadow scan)
8_17 8 6 pd:[(1,9,2,8),(13,2,14,3),(3,10,4,11),(15,5,16,4),(5,1,6,16),(11,6,12,7),(7,12,8,13),(9,15,10,14)]  # 6x6 mosaic witness (alternating shadow scan)
8_18 8 6 pd:[(1,13,2,12),(7,2,8,3),(3,14,4,15),(9,5,10,4),(5,1,6,16),(11,6,12,7),(13,9,14,8),(15,10,16,11)]  # 6x6 mosaic witness (alternating shadow scan)
8_19 8 6 pd:[(12,2,13,1),(7,3,8,2),(8,14,9,13),(3,15,4,14),(4,10,5,9),(15,11,16,10),(16,6,1,5),(11,7,12,6)]  # braid closure 1 2 1 2 1 2 1 2
8_20 8 6 pd:[(6,2,7,1),(2,8,3,7),(8,4,9,3),(4,13,5,14),(9,14,10,15),(15,10,16,11),(11,16,12,1),(12,5,13,6)]  # braid closure 1 1 1 -2 -1 -1 -1 -2
8_21 8 6 pd:[(12,2,13,1),(2,14,3,13),(14,12,15,11),(8,4,9,3),(4,10,5,9),(10,8,11,7),(5,16,6,1),(15,6,16,7)]  # Montesinos, Conway 21,21,2-
)KREF";

}  // namespace kmos
