"""The ballot/Catalan count table and its closed forms.

``a[n][m]`` counts the leaves below node ``(n, m)`` of the branching tree.  It
obeys

    a[0][0] = 1,      a[n][n] = 0                        (n >= 1)
    a[n][0] = a[n-1][0] + a[n][1]                        (n >= 1)
    a[n][m] = a[n-1][m-1] + a[n][m+1]                    (1 <= m <= n-1)

so ``a[n][0]`` is the n-th Catalan number and ``a[n][m]`` equals the ballot
number ``N(n, n-1-m)``.  All arithmetic is on Python ints; nothing here ever
touches floating point.
"""

import csv
import io
import json
import math

from ._validation import check_index
from .exceptions import InvariantError, TableSizeError, ValidationError

#: Largest ``n_max`` built without an explicit override.  Storage grows
#: roughly as n**3 / 8 bytes, so 2000 is about a gigabyte of integers.
DEFAULT_MAX_N = 2000


def _offset(n, m):
    return n * (n + 1) // 2 + m


class BCTable:
    """Immutable triangular table of counts ``a[n][m]`` for ``0 <= m <= n <= n_max``.

    Rows are stored back to back in a single flat list.  Build one with
    :func:`build_table` or load one with :meth:`from_csv` / :meth:`from_json`.
    """

    __slots__ = ("_n_max", "_cells")

    def __init__(self, n_max, cells):
        n_max = check_index(n_max, "n_max")
        cells = tuple(cells)
        if len(cells) != _offset(n_max + 1, 0):
            raise ValidationError(
                f"a table with n_max={n_max} needs {_offset(n_max + 1, 0)} cells, got {len(cells)}"
            )
        self._n_max = n_max
        self._cells = cells

    @property
    def n_max(self):
        return self._n_max

    @property
    def cells(self):
        """Flat row-major storage: ``a[n][m]`` is ``cells[n*(n+1)//2 + m]``."""
        return self._cells

    def __getitem__(self, key):
        n, m = key
        return self.lookup(n, m)

    def lookup(self, n, m):
        """Return ``a[n][m]``; raises for indices outside the stored triangle."""
        if not (0 <= n <= self._n_max and 0 <= m <= n):
            raise ValidationError(
                f"cell ({n}, {m}) is outside the table (need 0 <= m <= n <= {self._n_max})"
            )
        return self._cells[_offset(n, m)]

    def row(self, n):
        check_index(n, "n", maximum=self._n_max)
        return list(self._cells[_offset(n, 0):_offset(n + 1, 0)])

    def rows(self):
        return [self.row(n) for n in range(self._n_max + 1)]

    def __eq__(self, other):
        if not isinstance(other, BCTable):
            return NotImplemented
        return self._n_max == other._n_max and self._cells == other._cells

    def __hash__(self):
        return hash((self._n_max, self._cells))

    def __repr__(self):
        return f"BCTable(n_max={self._n_max})"

    def check_recursion(self):
        """Re-evaluate the defining recursion on every stored cell.

        Returns a list of ``(n, m)`` cells that disagree; empty when consistent.
        """
        bad = []
        a = self.lookup
        if a(0, 0) != 1:
            bad.append((0, 0))
        for n in range(1, self._n_max + 1):
            if a(n, n) != 0:
                bad.append((n, n))
            if a(n, 0) != a(n - 1, 0) + a(n, 1):
                bad.append((n, 0))
            for m in range(1, n):
                if a(n, m) != a(n - 1, m - 1) + a(n, m + 1):
                    bad.append((n, m))
        return bad

    # -- serialization -------------------------------------------------------

    def to_csv(self):
        """Rows ``n``, columns ``m``; cells with ``m > n`` are left empty."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = self._n_max + 1
        writer.writerow(["n"] + [str(m) for m in range(width)])
        for n in range(width):
            values = [str(v) for v in self.row(n)]
            writer.writerow([str(n)] + values + [""] * (width - len(values)))
        return buf.getvalue()

    def to_json(self):
        """Array of rows, each an array of decimal strings."""
        return json.dumps([[str(v) for v in self.row(n)] for n in range(self._n_max + 1)])

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            raise ValidationError("a table needs at least row 0")
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValidationError(f"row {n} has {len(r)} cells, expected {n + 1}")
        table = cls(len(rows) - 1, (v for r in rows for v in r))
        bad = table.check_recursion()
        if bad:
            raise ValidationError(f"loaded table violates the recursion at cell {bad[0]}")
        return table

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
            rows = [[int(v) for v in r] for r in data]
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"malformed table JSON: {exc}") from None
        return cls.from_rows(rows)

    @classmethod
    def from_csv(cls, text):
        reader = csv.reader(io.StringIO(text))
        try:
            next(reader)
            rows = []
            for n, record in enumerate(reader):
                if int(record[0]) != n:
                    raise ValueError(f"row label {record[0]} out of order")
                rows.append([int(v) for v in record[1:n + 2]])
                if any(v.strip() for v in record[n + 2:]):
                    raise ValueError(f"row {n} has values past the diagonal")
        except (StopIteration, IndexError, ValueError) as exc:
            raise ValidationError(f"malformed table CSV: {exc}") from None
        return cls.from_rows(rows)


def build_table(n_max, max_n=DEFAULT_MAX_N):
    """Fill ``a[n][m]`` for ``0 <= m <= n <= n_max`` bottom-up.

    Each row is filled right to left: ``a[n][n] = 0``, then ``m = n-1 .. 1``,
    then ``a[n][0]``.  Every cell costs one big-integer addition.  Pass
    ``max_n=None`` to lift the memory cap.
    """
    n_max = check_index(n_max, "n_max")
    if max_n is not None and n_max > max_n:
        raise TableSizeError(
            f"n_max={n_max} exceeds the cap of {max_n} (about {n_max ** 3 // 8:,} bytes); "
            "raise the cap explicitly to build it"
        )
    cells = [1]
    prev = [1]
    for n in range(1, n_max + 1):
        row = [0] * (n + 1)
        for m in range(n - 1, 0, -1):
            row[m] = prev[m - 1] + row[m + 1]
        row[0] = prev[0] + row[1]
        cells.extend(row)
        prev = row
    return BCTable(n_max, cells)


def lookup(table, n, m):
    return table.lookup(n, m)


def catalan(n):
    """``binom(2n, n) / (n + 1)``, computed without the table."""
    n = check_index(n, "n")
    return math.comb(2 * n, n) // (n + 1)


def ballot(i, j):
    """Ballot number ``N(i, j) = (i+1-j)/(i+1+j) * binom(i+1+j, j)``.

    ``N(i, -1)`` is defined as 0.  Only ``-1 <= j <= i`` is accepted.
    """
    i = check_index(i, "i")
    j = check_index(j, "j", minimum=-1, maximum=i)
    if j == -1:
        return 0
    num = (i + 1 - j) * math.comb(i + 1 + j, j)
    q, r = divmod(num, i + 1 + j)
    if r:
        raise InvariantError(f"ballot({i}, {j}) is not integral")
    return q


def code_width(count):
    """Bits needed to write any integer in ``[0, count)``: ``ceil(log2(count))``."""
    if count < 1:
        raise ValidationError(f"count must be positive, got {count}")
    return (count - 1).bit_length()
