"""Exact counting, optimal coding and uniform sampling of Catalan structures.

Everything is driven by one triangular table of counts ``a[n][m]``
(:func:`build_table`).  A code in ``[0, a[n][m])`` selects a root-to-leaf path
of the binary tree the table describes; the path is then read off as a
triangulation of a convex polygon (optionally missing consecutive ears) or as
a Dyck word.
"""

from .estimators import DyckCoder, TriangulationCoder
from .exceptions import (
    BitSourceExhausted,
    CatalanCodeError,
    EmptyClassError,
    InvalidPathError,
    InvalidStructureError,
    InvariantError,
    TableSizeError,
    ValidationError,
)
from .mountain import (
    decode_dyck,
    dyck_to_lattice_path,
    dyck_to_parentheses,
    encode_dyck,
    rank_dyck,
    sample_dyck,
    unrank_dyck,
)
from .randomness import BitSource, ReplayBitSource, SeededBitSource, uniform_below
from .series import verify_generating_function
from .table import BCTable, ballot, build_table, catalan, code_width, lookup
from .triangulation import (
    Triangulation,
    count_triangulations,
    decode,
    encode,
    rank_triangulation,
    sample_triangulation,
    unrank_triangulation,
    validate,
)
from .walker import NodeState, bits_to_code, code_to_bits, left_child, rank, right_child, sample_path, unrank

__version__ = "0.1.0"
