#!/usr/bin/env python3
"""Turns find-witnesses TSV output (name<TAB>size<TAB>semicolon-grid rows)
into the fixtures/ tree; run via scripts/make_fixtures.sh."""

import sys
from pathlib import Path

NOTES = {
    "unknot2": "the 2x2 unknot, the smallest knot mosaic",
    "trefoil4": "trefoil on a 4x4 board, first in search order",
    "hopf4": "Hopf link on a 4x4 board; two components",
    "trefoil_nonreduced5": "trefoil with a removable clasp: five crossing tiles",
    "nonalt_7tiles_5": "seven-tile 5x5 with the center crossing flipped out of alternation",
    "7_4_5": "the irreducible alternating seven-tile placement on 5x5",
}


def main(out_root, tsv_paths):
    out_root = Path(out_root)
    (out_root / "links").mkdir(parents=True, exist_ok=True)
    written = {}
    for tsv in tsv_paths:
        for line in Path(tsv).read_text().splitlines():
            if not line.strip():
                continue
            name, size, grid = line.split("\t")
            grid = grid.replace(";", "\n") + "\n"
            if name == "hopf":
                fname, sub = "hopf4", "links"
            elif name == "trefoil_nonreduced":
                fname, sub = "trefoil_nonreduced5", ""
            elif name.startswith("nonalt_7tiles"):
                fname, sub = "nonalt_7tiles_5", ""
            elif name == "0_1":
                continue  # unknot2 is written below
            elif name == "3_1" and size == "4":
                fname, sub = "trefoil4", ""
            elif name == "3_1":
                continue
            else:
                fname, sub = f"{name}_{size}", ""
            if fname in written:
                continue
            note = NOTES.get(fname, f"{name} on a {size}x{size} board, found by exhaustive search")
            path = out_root / sub / f"{fname}.mosaic"
            path.write_text(f"# {note}\n{grid}")
            written[fname] = path
    unknot = out_root / "unknot2.mosaic"
    unknot.write_text(f"# {NOTES['unknot2']}\n2 2\n2 1\n3 4\n")
    written["unknot2"] = unknot
    print(f"wrote {len(written)} fixtures under {out_root}")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2:])
