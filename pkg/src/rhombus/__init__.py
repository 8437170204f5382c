"""Pascal rhombus (mod 2): bit-parallel generation, stealth configurations,
and finite checks of the rhombus conjectures."""
from .grid import BitRow, Cell, RowGrid, cell_value, cumulative_ones, generate, generate_integer, next_row, row_ones
from .sequences import SequenceTable, sequence
from .stealth import (
    BitPattern,
    Orientation,
    Placement,
    StealthRegion,
    build_pseudo_stealth,
    build_stealth,
    contains,
    decompose,
    exceptional_cells,
    octagon_vertices,
    region_cells,
    transform_cell,
)
from .haystack import haystack
from .verify import VerificationReport

__all__ = [
    "BitPattern", "BitRow", "Cell", "Orientation", "Placement", "RowGrid", "SequenceTable",
    "StealthRegion", "VerificationReport", "build_pseudo_stealth", "build_stealth", "cell_value",
    "contains", "cumulative_ones", "decompose", "exceptional_cells", "generate", "generate_integer",
    "haystack", "next_row", "octagon_vertices", "region_cells", "row_ones", "sequence",
    "transform_cell",
]
