"""Counting invariants of virtual knots and links via region colorings.

The pieces:

- :mod:`tribrackets.tables`: ternary operation pairs and their axioms.
- :mod:`tribrackets.search`: exhaustive enumeration of small structures.
- :mod:`tribrackets.gauss`: signed Gauss codes.
- :mod:`tribrackets.diagram`: planar realization, faces, crossing roles.
- :mod:`tribrackets.coloring`: the counting invariant, three ways.
- :mod:`tribrackets.knotdata`: bundled knot table and batch runs.
- :mod:`tribrackets.report`: figure rendering for batch results.
- :mod:`tribrackets.cli`: the command line front end.
"""

from .tables import (
    AlexanderParams,
    InverseTables,
    NotThreeDetermined,
    TableError,
    TernaryTable,
    VirtualTribracket,
    alexander_classical,
    check_classical_axioms,
    check_virtual_axioms,
    format_structure,
    format_tables,
    invert,
    is_three_determined,
    load_structure,
    parse_structure,
    parse_tables,
    verify,
    virtual_alexander,
)
from .gauss import GaussCode, GaussCodeError, Passage, format_gauss, parse_gauss
from .diagram import (
    Diagram,
    DiagramError,
    FaceData,
    draw,
    faces,
    format_diagram,
    parse_diagram,
    realize,
    reverse_component,
    traverse,
)
from .coloring import (
    ColoringCount,
    ModularSystem,
    SearchSpaceTooLarge,
    brute_force_count,
    build_modular_system,
    count_alexander,
    count_colorings,
    kernel_size,
)
from .search import enumerate_classical_tables, enumerate_virtual_tribrackets
from .knotdata import (
    KnotEntry,
    KnotTable,
    KnotTableError,
    InvariantRow,
    batch_invariants,
    bundled_table,
    csv_text,
    load_table,
    parse_table,
    write_csv,
)

__all__ = [
    "AlexanderParams",
    "ColoringCount",
    "Diagram",
    "DiagramError",
    "FaceData",
    "GaussCode",
    "GaussCodeError",
    "InvariantRow",
    "InverseTables",
    "KnotEntry",
    "KnotTable",
    "KnotTableError",
    "ModularSystem",
    "NotThreeDetermined",
    "Passage",
    "SearchSpaceTooLarge",
    "TableError",
    "TernaryTable",
    "VirtualTribracket",
    "alexander_classical",
    "batch_invariants",
    "brute_force_count",
    "build_modular_system",
    "bundled_table",
    "check_classical_axioms",
    "check_virtual_axioms",
    "count_alexander",
    "count_colorings",
    "csv_text",
    "draw",
    "enumerate_classical_tables",
    "enumerate_virtual_tribrackets",
    "faces",
    "format_diagram",
    "format_gauss",
    "format_structure",
    "format_tables",
    "invert",
    "is_three_determined",
    "kernel_size",
    "load_structure",
    "load_table",
    "parse_diagram",
    "parse_gauss",
    "parse_structure",
    "parse_table",
    "parse_tables",
    "realize",
    "reverse_component",
    "traverse",
    "verify",
    "virtual_alexander",
    "write_csv",
]

__version__ = "0.1.0"
