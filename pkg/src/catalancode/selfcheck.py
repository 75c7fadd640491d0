"""Invariant suite behind ``catalancode selftest``."""

import random

from . import mountain, oracle, triangulation
from .series import verify_generating_function
from .table import ballot, build_table, catalan


def _table_recursion(table, **_):
    bad = table.check_recursion()
    return not bad, f"recursion re-check over n <= {table.n_max}" + (f", first bad cell {bad[0]}" if bad else "")


def _closed_forms(table, **_):
    bad = [
        (n, m)
        for n in range(1, table.n_max + 1)
        for m in range(n + 1)
        if table.lookup(n, m) != ballot(n, n - 1 - m)
    ]
    bad += [(n, 0) for n in range(table.n_max + 1) if table.lookup(n, 0) != catalan(n)]
    return not bad, f"ballot (n >= 1) and Catalan closed forms over n <= {table.n_max}" + (
        f", first bad cell {bad[0]}" if bad else ""
    )


def _generating_function(table, degree, **_):
    report = verify_generating_function(degree)
    return report.ok, f"generating function to degree {degree}: {len(report.mismatches)} mismatches"


def _triangulations(table, **_):
    top = min(table.n_max + 2, 9)
    for n_vertices in range(3, top + 1):
        count = table.lookup(n_vertices - 2, 0)
        decoded = {triangulation.unrank_triangulation(n_vertices, 0, c, table) for c in range(count)}
        if decoded != set(oracle.enumerate_triangulations(n_vertices)):
            return False, f"triangulation bijection fails at N={n_vertices}"
        for m in range(n_vertices + 1):
            if triangulation.count_triangulations(n_vertices, m, table) != oracle.count_avoiding_ears(n_vertices, m):
                return False, f"forbidden-ear count fails at N={n_vertices}, m={m}"
    return True, f"triangulation bijection and forbidden-ear counts for N <= {top}"


def _dyck(table, **_):
    top = min(table.n_max, 10)
    for n in range(top + 1):
        words = [mountain.unrank_dyck(n, c, table) for c in range(table.lookup(n, 0))]
        if words != oracle.enumerate_dyck(n):
            return False, f"Dyck bijection fails at n={n}"
    return True, f"Dyck bijection for n <= {top}"


def _round_trips(table, seed=0, trials=200, **_):
    rng = random.Random(seed)
    n = table.n_max
    if n < 1:
        return True, "round trips skipped (n_max < 1)"
    for _ in range(trials):
        code = rng.randrange(table.lookup(n, 0))
        word = mountain.unrank_dyck(n, code, table)
        if mountain.rank_dyck(word, table) != code:
            return False, f"Dyck round trip fails for code {code}"
        tri = triangulation.unrank_triangulation(n + 2, 0, code, table)
        if triangulation.rank_triangulation(n + 2, 0, tri, table) != code:
            return False, f"triangulation round trip fails for code {code}"
    return True, f"{trials} random round trips at n={n}"


CHECKS = [
    ("table-recursion", _table_recursion),
    ("closed-forms", _closed_forms),
    ("verify-gf", _generating_function),
    ("triangulations", _triangulations),
    ("dyck", _dyck),
    ("round-trips", _round_trips),
]


def run_selftest(n_max=60, degree=8, table=None):
    """Run every check; returns a list of ``(name, passed, detail)``."""
    if table is None or table.n_max != n_max:
        table = build_table(n_max)
    return [(name, *check(table, degree=degree)) for name, check in CHECKS]
