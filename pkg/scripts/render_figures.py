#!/usr/bin/env python3
"""Write the standard pictures: the first rows, a decomposed stealth
configuration and a haystack, each as SVG plus a plain PBM."""
import argparse
from pathlib import Path

from rhombus.render import RenderSpec, render

FIGURES = [
    ("rows64", RenderSpec("rows", 64)),
    ("stealth5", RenderSpec("stealth", 5, frozenset({"octagon", "decomposition", "exceptional"}))),
    ("stealth6", RenderSpec("stealth", 6, frozenset({"octagon", "decomposition"}))),
    ("haystack4", RenderSpec("haystack", 4)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, nargs="?", default=Path("figures"))
    parser.add_argument("--cell-size", type=int, default=4)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for stem, spec in FIGURES:
        for fmt, ext in (("svg", "svg"), ("pbm", "pbm")):
            spec_fmt = RenderSpec(spec.source, spec.size, spec.overlays if fmt == "svg" else frozenset(),
                                  fmt, cell_size=args.cell_size)
            path = args.outdir / f"{stem}.{ext}"
            path.write_bytes(render(spec_fmt))
            print(path)


if __name__ == "__main__":
    main()
