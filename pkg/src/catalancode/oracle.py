"""Brute-force enumerators used as ground truth for the coded paths.

These share nothing with the table or the tree walk.  They are guarded by
hard size limits; pass ``limit=None`` to override.
"""

from ._validation import check_index
from .exceptions import ValidationError
from .triangulation import Triangulation, ear

TRIANGULATION_LIMIT = 13
DYCK_LIMIT = 14


def _guard(value, limit, name):
    if limit is not None and value > limit:
        raise ValidationError(f"{name}={value} exceeds the enumeration guard of {limit}")


def _split(lo, hi):
    """All triangulations of the sub-polygon ``lo..hi`` as lists of chords.

    The triangle on edge ``(lo, hi)`` picks an apex ``k``; the chords
    ``(lo, k)`` and ``(k, hi)`` are recorded unless they are polygon edges.
    """
    if hi - lo < 2:
        return [[]]
    out = []
    for k in range(lo + 1, hi):
        left = _split(lo, k)
        right = _split(k, hi)
        own = [c for c in ((lo, k), (k, hi)) if c[1] - c[0] >= 2]
        for a in left:
            for b in right:
                out.append(own + a + b)
    return out


def enumerate_triangulations(n_vertices, limit=TRIANGULATION_LIMIT):
    """Every triangulation of the convex ``N``-gon, sorted by diagonal list."""
    n_vertices = check_index(n_vertices, "N", minimum=3)
    _guard(n_vertices, limit, "N")
    tris = [Triangulation(n_vertices, chords) for chords in _split(0, n_vertices - 1)]
    return sorted(tris, key=Triangulation.sorted_diagonals)


def count_avoiding(n_vertices, forbidden, limit=TRIANGULATION_LIMIT):
    """Number of triangulations using none of the ``forbidden`` chords."""
    forbidden = {tuple(sorted(d)) for d in forbidden}
    return sum(1 for t in enumerate_triangulations(n_vertices, limit) if not (t.diagonals & forbidden))


def consecutive_ears(n_vertices, missing):
    """The ears ``e_0 .. e_{missing-1}`` as chords.

    For a triangle these are sides rather than diagonals; every triangulation
    of a triangle would need them, so :func:`count_avoiding_ears` treats a
    non-empty set as fatal there.
    """
    return [ear(i, n_vertices) for i in range(missing)]


def count_avoiding_ears(n_vertices, missing, limit=TRIANGULATION_LIMIT):
    if n_vertices == 3 and missing:
        return 0
    return count_avoiding(n_vertices, consecutive_ears(n_vertices, missing), limit)


def enumerate_dyck(n, limit=DYCK_LIMIT):
    """All Dyck words of semilength ``n`` in lexicographic order (``D < U``)."""
    n = check_index(n, "n")
    _guard(n, limit, "n")
    words = []
    buf = []

    def extend(ups, downs):
        if downs == n:
            words.append("".join(buf))
            return
        if downs < ups:
            buf.append("D")
            extend(ups, downs + 1)
            buf.pop()
        if ups < n:
            buf.append("U")
            extend(ups + 1, downs)
            buf.pop()

    extend(0, 0)
    return words
