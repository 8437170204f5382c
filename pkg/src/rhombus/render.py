"""PBM and SVG renderings of rhombus rows, stealth configurations and haystacks.

Odd cells are black. Columns run left to right over increasing ``k``; the
top row is written first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .grid import Cell, RowGrid, ensure_grid
from .haystack import haystack, haystack_pieces
from .stealth import (
    BitPattern,
    Placement,
    build_stealth,
    decompose,
    exceptional_cells,
    outline_vertices,
)

OVERLAYS = ("decomposition", "exceptional", "octagon")
FORMATS = ("pbm", "p4", "svg")
DEFAULT_MAX_WIDTH = 1 << 16


class RenderSizeError(ValueError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    source: str
    size: int
    overlays: frozenset[str] = frozenset()
    format: str = "pbm"
    cell_size: int = 4
    stroke: int = 1
    max_width: int = DEFAULT_MAX_WIDTH

    def __post_init__(self) -> None:
        if self.source not in ("rows", "stealth", "haystack"):
            raise ValueError(f"unknown source {self.source!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        unknown = set(self.overlays) - set(OVERLAYS)
        if unknown:
            raise ValueError(f"unknown overlays {sorted(unknown)}")

    @classmethod
    def parse(cls, source: str, **kw) -> "RenderSpec":
        """Build from ``"rows:32"``-style source strings."""
        name, _, value = source.partition(":")
        if not value.isdigit():
            raise ValueError(f"source must look like rows:M, stealth:N or haystack:N, got {source!r}")
        return cls(name, int(value), **kw)


@dataclass
class Raster:
    top: int
    left: int
    bits: list[list[int]] = field(repr=False)
    pattern: BitPattern | None = field(default=None, repr=False)

    @property
    def height(self) -> int:
        return len(self.bits)

    @property
    def width(self) -> int:
        return len(self.bits[0]) if self.bits else 0

    def black(self) -> int:
        return sum(map(sum, self.bits))


def raster(spec: RenderSpec, grid: RowGrid | None = None) -> Raster:
    if spec.source == "rows":
        m = spec.size
        if 2 * m - 1 > spec.max_width:
            raise RenderSizeError(f"width {2 * m - 1} exceeds cap {spec.max_width}")
        grid = ensure_grid(grid, m)
        width = 2 * m - 1
        bits = []
        for n in range(1, m + 1):
            row = grid.rows[n] << (m - n)
            bits.append([(row >> j) & 1 for j in range(width)])
        return Raster(1, -(m - 1), bits)
    pattern = build_stealth(spec.size, grid) if spec.source == "stealth" else haystack(spec.size, grid)
    n0, n1, k0, k1 = pattern.bounds()
    if k1 - k0 + 1 > spec.max_width:
        raise RenderSizeError(f"width {k1 - k0 + 1} exceeds cap {spec.max_width}")
    bits = [[pattern[(n, k)] for k in range(k0, k1 + 1)] for n in range(n0, n1 + 1)]
    return Raster(n0, k0, bits, pattern)


def render_pbm(spec: RenderSpec, grid: RowGrid | None = None) -> bytes:
    img = raster(spec, grid)
    if spec.format == "p4":
        return encode_p4(img.bits)
    return encode_p1(img.bits)


def encode_p1(bits: Sequence[Sequence[int]]) -> bytes:
    height = len(bits)
    width = len(bits[0]) if height else 0
    lines = [f"P1\n{width} {height}"]
    lines.extend(" ".join(map(str, row)) for row in bits)
    return ("\n".join(lines) + "\n").encode("ascii")


def encode_p4(bits: Sequence[Sequence[int]]) -> bytes:
    height = len(bits)
    width = len(bits[0]) if height else 0
    out = bytearray(f"P4\n{width} {height}\n".encode("ascii"))
    for row in bits:
        for i in range(0, width, 8):
            byte = 0
            for j, b in enumerate(row[i : i + 8]):
                byte |= (b & 1) << (7 - j)
            out.append(byte)
    return bytes(out)


def parse_pbm(data: bytes) -> list[list[int]]:
    """Decode plain (P1) or packed (P4) PBM back to a bit matrix."""
    magic = data[:2]
    if magic == b"P1":
        text = re.sub(r"#[^\n]*", "", data[2:].decode("ascii"))
        tokens = text.split()
        width, height = int(tokens[0]), int(tokens[1])
        digits = "".join(tokens[2:])
        if len(digits) != width * height:
            raise ValueError("pixel count does not match header")
        return [[int(c) for c in digits[r * width : (r + 1) * width]] for r in range(height)]
    if magic == b"P4":
        match = re.match(rb"P4\s+(?:#[^\n]*\n\s*)*(\d+)\s+(\d+)\s", data)
        if not match:
            raise ValueError("bad P4 header")
        width, height = int(match.group(1)), int(match.group(2))
        body = data[match.end():]
        stride = (width + 7) // 8
        rows = []
        for r in range(height):
            chunk = body[r * stride : (r + 1) * stride]
            rows.append([(chunk[j // 8] >> (7 - j % 8)) & 1 for j in range(width)])
        return rows
    raise ValueError("not a PBM file")


# -- SVG ----------------------------------------------------------------------

def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:g}"


def _outline(order: int, placement: Placement) -> list[tuple[float, float]]:
    return [placement.apply(v) for v in outline_vertices(order)]


def _overlay_shapes(spec: RenderSpec, img: Raster) -> dict[str, list]:
    shapes: dict[str, list] = {}
    if "octagon" in spec.overlays:
        if spec.source != "stealth":
            raise ValueError("octagon overlay needs a stealth source")
        shapes["octagon"] = [("octagon", _outline(spec.size, Placement()))]
    if "decomposition" in spec.overlays:
        if spec.source == "stealth" and spec.size >= 2:
            shapes["decomposition"] = [(c.role, _outline(c.order, c.placement)) for c in decompose(spec.size)]
        elif spec.source == "haystack" and spec.size >= 2:
            polys = []
            for piece in haystack_pieces(spec.size):
                if piece.role == "centre":
                    # the centre diamond's corners, shifted into place
                    half = 1 << piece.order
                    off = piece.placement.anchor[0]
                    pts = [(0, 0), (half, -half), (2 * half, 0), (half, half)]
                    polys.append((piece.role, [(off + a, b) for a, b in pts]))
                else:
                    polys.append((piece.role, _outline(piece.order, piece.placement)))
            shapes["decomposition"] = polys
        else:
            raise ValueError("decomposition overlay needs stealth:N or haystack:N with N >= 2")
    if "exceptional" in spec.overlays:
        pattern = img.pattern
        if pattern is None:
            pattern = BitPattern(frozenset(
                Cell(img.top + r, img.left + c)
                for r, row in enumerate(img.bits) for c, v in enumerate(row) if v))
        shapes["exceptional"] = sorted(exceptional_cells(pattern))
    return shapes


def render_svg(spec: RenderSpec, grid: RowGrid | None = None) -> bytes:
    img = raster(spec, grid)
    shapes = _overlay_shapes(spec, img)
    cs = spec.cell_size

    pts: list[tuple[float, float]] = [(img.top, img.left), (img.top + img.height - 1, img.left + img.width - 1)]
    for key in ("octagon", "decomposition"):
        for _, poly in shapes.get(key, []):
            pts.extend(poly)
    pts.extend(shapes.get("exceptional", []))
    n0 = min(p[0] for p in pts)
    n1 = max(p[0] for p in pts)
    k0 = min(p[1] for p in pts)
    k1 = max(p[1] for p in pts)
    width = (k1 - k0 + 1) * cs
    height = (n1 - n0 + 1) * cs

    def centre(n: float, k: float) -> tuple[str, str]:
        return _fmt((k - k0) * cs + cs / 2), _fmt((n - n0) * cs + cs / 2)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<g id="cells" stroke="none" data-source="{spec.source}:{spec.size}">',
    ]
    window = img.pattern.window if img.pattern is not None else None
    for r, row in enumerate(img.bits):
        n = img.top + r
        for c, v in enumerate(row):
            k = img.left + c
            if window is not None and (n, k) not in window:
                continue
            if spec.source == "rows" and abs(k) >= n:
                continue
            x, y = _fmt((k - k0) * cs), _fmt((n - n0) * cs)
            fill = "black" if v else "white"
            out.append(f'<rect x="{x}" y="{y}" width="{cs}" height="{cs}" fill="{fill}"/>')
    out.append("</g>")

    for key in ("octagon", "decomposition"):
        if key not in shapes:
            continue
        colour = "red" if key == "octagon" else "blue"
        out.append(f'<g id="{key}" fill="none" stroke="{colour}" stroke-width="{spec.stroke}">')
        for role, poly in shapes[key]:
            coords = " ".join(",".join(centre(n, k)) for n, k in poly)
            cells = " ".join(f"{_fmt(n)},{_fmt(k)}" for n, k in poly)
            out.append(f'<polygon class="{role}" points="{coords}" data-cells="{cells}"/>')
        out.append("</g>")
    if "exceptional" in shapes:
        out.append(f'<g id="exceptional" fill="none" stroke="red" stroke-width="{spec.stroke}">')
        for n, k in shapes["exceptional"]:
            cx, cy = centre(n, k)
            out.append(f'<circle class="exceptional" cx="{cx}" cy="{cy}" r="{_fmt(cs)}" data-cell="{n},{k}"/>')
        out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def render(spec: RenderSpec, grid: RowGrid | None = None) -> bytes:
    return render_svg(spec, grid) if spec.format == "svg" else render_pbm(spec, grid)
