"""Truncated bivariate integer power series, used to check the table's generating function.

A series is a ``(d+1) x (d+1)`` list of lists ``c`` where ``c[i][j]`` is the
coefficient of ``x**i * y**j``; every term of degree above ``d`` in either
variable is dropped.
"""

from dataclasses import dataclass, field

from ._validation import check_index
from .exceptions import ValidationError
from .table import build_table, catalan


class Series2:
    """Integer power series in ``x`` and ``y`` truncated at degree ``d`` in each."""

    __slots__ = ("d", "c")

    def __init__(self, d, coeffs=None):
        self.d = d
        self.c = [[0] * (d + 1) for _ in range(d + 1)]
        if coeffs:
            for (i, j), v in coeffs.items():
                if i <= d and j <= d:
                    self.c[i][j] = v

    @classmethod
    def from_x(cls, d, values):
        """Series depending on ``x`` only, with ``values[i]`` as the ``x**i`` coefficient."""
        s = cls(d)
        for i, v in enumerate(values[:d + 1]):
            s.c[i][0] = v
        return s

    def __getitem__(self, key):
        i, j = key
        return self.c[i][j]

    def __add__(self, other):
        out = Series2(self.d)
        for i in range(self.d + 1):
            out.c[i] = [a + b for a, b in zip(self.c[i], other.c[i])]
        return out

    def __neg__(self):
        out = Series2(self.d)
        out.c = [[-v for v in row] for row in self.c]
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d = self.d
        out = Series2(d)
        oc = out.c
        for i1, row1 in enumerate(self.c):
            for j1, v1 in enumerate(row1):
                if not v1:
                    continue
                for i2 in range(d + 1 - i1):
                    row2 = other.c[i2]
                    dst = oc[i1 + i2]
                    for j2 in range(d + 1 - j1):
                        if row2[j2]:
                            dst[j1 + j2] += v1 * row2[j2]
        return out

    def inverse(self):
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.c[0][0]
        if c0 not in (1, -1):
            raise ValidationError("only series with a unit constant term have an integral inverse")
        d = self.d
        inv = Series2(d)
        # Solve (self * inv)[i][j] = [i == j == 0] in graded order.
        for i in range(d + 1):
            for j in range(d + 1):
                acc = 1 if i == j == 0 else 0
                for i1 in range(i + 1):
                    row = self.c[i1]
                    inv_row = inv.c[i - i1]
                    for j1 in range(j + 1):
                        if (i1 or j1) and row[j1]:
                            acc -= row[j1] * inv_row[j - j1]
                inv.c[i][j] = acc * c0
        return inv

    def __truediv__(self, other):
        return self * other.inverse()


@dataclass
class GFReport:
    """Coefficient-by-coefficient comparison of the generating function with the table."""

    degree: int
    coefficients: list
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def coefficient(self, i, j):
        return self.coefficients[i][j]


def table_generating_function(d):
    """Expand ``(1 - xy)(Cat(x) - y) / (1 - y + x y^2)`` to degree ``d``.

    This is the closed form with the square root eliminated through
    ``1 - sqrt(1 - 4x) = 2x Cat(x)``, which keeps every coefficient integral.
    """
    x = Series2(d, {(1, 0): 1})
    y = Series2(d, {(0, 1): 1})
    one = Series2(d, {(0, 0): 1})
    cat = Series2.from_x(d, [catalan(k) for k in range(d + 1)])
    numerator = (one - x * y) * (cat - y)
    denominator = one - y + x * y * y
    return numerator / denominator


def verify_generating_function(d, table=None):
    """Compare every ``x**i y**j`` coefficient (``i, j <= d``) with ``a[i][j]``.

    Cells with ``j > i`` are expected to be zero.
    """
    d = check_index(d, "d")
    if table is None or table.n_max < d:
        table = build_table(d)
    g = table_generating_function(d)
    report = GFReport(degree=d, coefficients=[row[:] for row in g.c])
    for i in range(d + 1):
        for j in range(d + 1):
            expected = table.lookup(i, j) if j <= i else 0
            if g[i, j] != expected:
                report.mismatches.append((i, j, g[i, j], expected))
    return report
