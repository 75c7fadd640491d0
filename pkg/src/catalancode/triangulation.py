"""Triangulations of a convex polygon, optionally missing consecutive ears.

Vertices ``0 .. N-1`` are labelled in cyclic order.  The ear ``e_i`` is the
span-2 chord ``{i-1, i+1}`` (indices mod N).  The context ``(N, m0)`` forbids
the ears ``e_0 .. e_{m0-1}``; its triangulations are counted by
``a[N-2][m0]`` and coded by walking the tree from node ``(N-2, m0)``.

The tree walk mirrors a vertex-deletion reduction.  The state is the list of
surviving original vertices ``labels`` (current label ``k`` is original vertex
``labels[k]``) and the number ``m`` of missing ears, which always sit at
``e_0 .. e_{m-1}`` in current labels.  At each node the pivot is vertex ``m``:

* ``L`` keeps ear ``e_m``, records its chord, deletes vertex ``m`` and
  decrements ``m`` (not below zero).  Deleting by list removal shifts later
  labels down by one, which is exactly the relabelling that keeps the
  remaining missing ears first.
* ``R`` drops ear ``e_m``: ``m`` grows by one.

The final ``L`` from a triangle records nothing.
"""

import json
from dataclasses import dataclass

from ._validation import check_index
from .exceptions import EmptyClassError, InvalidPathError, InvalidStructureError, ValidationError
from .walker import rank, sample_path, unrank


def _norm(i, j):
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Triangulation:
    """A set of normalized diagonals ``(i, j)``, ``i < j``, of a convex ``n``-gon."""

    n: int
    diagonals: frozenset

    def __init__(self, n, diagonals=()):
        object.__setattr__(self, "n", check_index(n, "N", minimum=3))
        object.__setattr__(self, "diagonals", frozenset(_norm(int(i), int(j)) for i, j in diagonals))

    def sorted_diagonals(self):
        return sorted(self.diagonals)

    def ears(self):
        """Vertices ``i`` whose ear ``{i-1, i+1}`` is one of the diagonals."""
        n = self.n
        return [i for i in range(n) if _norm((i - 1) % n, (i + 1) % n) in self.diagonals]

    def to_dict(self, forbidden=0):
        return {"n": self.n, "forbidden": forbidden, "diagonals": [list(d) for d in self.sorted_diagonals()]}

    def to_json(self, forbidden=0):
        return json.dumps(self.to_dict(forbidden))

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["n"], [tuple(d) for d in data["diagonals"]]), int(data.get("forbidden", 0))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed triangulation record: {exc}") from None

    @classmethod
    def from_json(cls, text):
        """Parse the JSON record; returns ``(triangulation, forbidden)``."""
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise ValidationError(f"malformed triangulation JSON: {exc}") from None
        return cls.from_dict(data)

    def __repr__(self):
        return f"Triangulation(n={self.n}, diagonals={self.sorted_diagonals()})"


def ear(i, n):
    """The span-2 chord ``e_i = {i-1, i+1}`` of an ``n``-gon."""
    return _norm((i - 1) % n, (i + 1) % n)


def check_context(n_vertices, missing):
    n_vertices = check_index(n_vertices, "N", minimum=3)
    missing = check_index(missing, "m", maximum=n_vertices)
    return n_vertices, missing


def count_triangulations(n_vertices, missing, table):
    """Number of triangulations of the ``N``-gon avoiding ears ``e_0 .. e_{m-1}``."""
    n_vertices, missing = check_context(n_vertices, missing)
    if missing > n_vertices - 2:
        return 0
    return table.lookup(n_vertices - 2, missing)


def crosses(d1, d2):
    """Whether two chords of a convex polygon cross in their interiors."""
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def first_crossing(diagonals):
    """Some crossing pair among normalized chords, or ``None`` if they are non-crossing.

    Chords sorted by left end ascending, right end descending must nest like
    parentheses; a stack finds the first chord that escapes its enclosure.
    """
    stack = []
    for i, j in sorted(diagonals, key=lambda d: (d[0], -d[1])):
        while stack and stack[-1][1] <= i:
            stack.pop()
        if stack and j > stack[-1][1]:
            return stack[-1], (i, j)
        stack.append((i, j))
    return None


def validate(n_vertices, missing, tri):
    """Return ``None`` if ``tri`` is a triangulation of context ``(N, m)``,
    otherwise a ``(rule, message)`` pair for the first violated rule."""
    try:
        n_vertices, missing = check_context(n_vertices, missing)
    except ValidationError as exc:
        return "context", str(exc)
    if tri.n != n_vertices:
        return "size", f"triangulation is for a {tri.n}-gon, context has N={n_vertices}"
    n = n_vertices
    diags = tri.sorted_diagonals()
    for i, j in diags:
        if not (0 <= i < j < n) or j - i < 2 or (i, j) == (0, n - 1):
            return "diagonal", f"({i}, {j}) is not a diagonal of the {n}-gon"
    if len(diags) != n - 3:
        return "cardinality", f"need {n - 3} diagonals, got {len(diags)}"
    pair = first_crossing(diags)
    if pair is not None:
        return "crossing", f"{pair[0]} crosses {pair[1]}"
    if n == 3 and missing:
        return "forbidden", "a triangle has no span-2 diagonals to drop; its only triangle uses a missing edge"
    for i in range(missing):
        if ear(i, n) in tri.diagonals:
            return "forbidden", f"uses forbidden ear e_{i} = {ear(i, n)}"
    if n >= 5 and len(tri.ears()) < 2:
        return "ears", "fewer than two ears"
    return None


def is_valid(n_vertices, missing, tri):
    return validate(n_vertices, missing, tri) is None


def _root(n_vertices, missing, table):
    n_vertices, missing = _check_nonempty(n_vertices, missing)
    return n_vertices, missing, (n_vertices - 2, missing)


def _check_nonempty(n_vertices, missing):
    n_vertices, missing = check_context(n_vertices, missing)
    # a[N-2][m] > 0 exactly when m <= N-3
    if missing > n_vertices - 3:
        raise EmptyClassError(
            f"K_({n_vertices},-{missing}) has no triangulations: empty structure class"
        )
    return n_vertices, missing


def decode(n_vertices, missing, path, counters=None):
    """Triangulation reached by replaying ``path`` from the root ``(N-2, m)``.

    ``counters`` (optional mapping) accumulates ``transitions`` and
    ``label_updates`` (label-list entries shifted by deletions).
    """
    n_vertices, missing = _check_nonempty(n_vertices, missing)
    labels = list(range(n_vertices))
    m = missing
    diagonals = []
    shifts = 0
    for i, step in enumerate(path):
        r = len(labels)
        if r < 3:
            raise InvalidPathError(f"step {i}: path continues past the leaf", step=i)
        if step == "L":
            if r == 3:
                if m:
                    raise InvalidPathError(f"step {i}: triangle with a missing edge has no triangulation", step=i)
                labels = []
                continue
            diagonals.append(_norm(labels[(m - 1) % r], labels[(m + 1) % r]))
            shifts += r - m - 1
            del labels[m]
            m = max(m - 1, 0)
        elif step == "R":
            if m + 1 > r - 3:
                raise InvalidPathError(f"step {i}: R leads to an empty class at ({r - 2}, {m + 1})", step=i)
            m += 1
        else:
            raise InvalidPathError(f"step {i}: {step!r} is not L or R", step=i)
    if labels:
        raise InvalidPathError(f"path ends with {len(labels)} vertices left", step=len(path))
    if counters is not None:
        counters["transitions"] = counters.get("transitions", 0) + len(path)
        counters["label_updates"] = counters.get("label_updates", 0) + shifts
    return Triangulation(n_vertices, diagonals)


def encode(n_vertices, missing, tri):
    """Branch path of ``tri``: take ``L`` exactly when the pivot's ear is a diagonal."""
    n_vertices, missing = _check_nonempty(n_vertices, missing)
    problem = validate(n_vertices, missing, tri)
    if problem is not None:
        rule, message = problem
        raise InvalidStructureError(f"invalid triangulation ({rule}): {message}", rule=rule)
    labels = list(range(n_vertices))
    m = missing
    steps = []
    while len(labels) > 3:
        r = len(labels)
        if _norm(labels[(m - 1) % r], labels[(m + 1) % r]) in tri.diagonals:
            steps.append("L")
            del labels[m]
            m = max(m - 1, 0)
        else:
            steps.append("R")
            m += 1
            if m > r - 3:
                raise InvalidStructureError("triangulation leaves the counted family", rule="forbidden")
    steps.append("L")
    return "".join(steps)


def unrank_triangulation(n_vertices, missing, code, table, counters=None):
    n_vertices, missing, root = _root(n_vertices, missing, table)
    return decode(n_vertices, missing, unrank(table, root, code), counters)


def rank_triangulation(n_vertices, missing, tri, table):
    n_vertices, missing, root = _root(n_vertices, missing, table)
    return rank(table, root, encode(n_vertices, missing, tri))


def sample_triangulation(n_vertices, missing, table, src, counters=None):
    """Exactly uniform triangulation of the context; bits are drawn from ``src``."""
    n_vertices, missing, root = _root(n_vertices, missing, table)
    _, path = sample_path(table, root, src)
    return decode(n_vertices, missing, path, counters)
