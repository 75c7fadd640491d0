import json

import pytest
from hypothesis import given, strategies as st

from catalancode import BCTable, TableSizeError, ValidationError, ballot, build_table, catalan, code_width, lookup
from catalancode.exceptions import InvariantError

# Published rows 0..8 of the count table.
FIGURE_ROWS = [
    [1],
    [1, 0],
    [2, 1, 0],
    [5, 3, 1, 0],
    [14, 9, 4, 1, 0],
    [42, 28, 14, 5, 1, 0],
    [132, 90, 48, 20, 6, 1, 0],
    [429, 297, 165, 75, 27, 7, 1, 0],
    [1430, 1001, 572, 275, 110, 35, 8, 1, 0],
]


def test_base_case():
    assert build_table(0).rows() == [[1]]


def test_published_rows():
    t = build_table(8)
    assert t.rows() == FIGURE_ROWS
    assert t.row(4) == [14, 9, 4, 1, 0]


@pytest.mark.parametrize("n, m, expected", [(8, 3, 275), (5, 5, 0), (5, 1, 28)])
def test_lookup(n, m, expected):
    t = build_table(8)
    assert lookup(t, n, m) == expected
    assert t[n, m] == expected


@pytest.mark.parametrize("n, m", [(9, 0), (3, 4), (-1, 0), (2, -1)])
def test_lookup_out_of_range(n, m):
    with pytest.raises(ValidationError):
        build_table(8).lookup(n, m)


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 5), (8, 1430)])
def test_catalan(n, expected):
    assert catalan(n) == expected


def test_catalan_against_convolution():
    # C_{n+1} = sum_k C_k C_{n-k}, independent of the binomial closed form
    cs = [1]
    for n in range(60):
        cs.append(sum(cs[k] * cs[n - k] for k in range(n + 1)))
    assert [catalan(n) for n in range(61)] == cs


def test_ballot_examples():
    assert ballot(6, 3) == 48
    assert ballot(8, 7) == 1430
    assert [ballot(i, -1) for i in range(6)] == [0] * 6


@pytest.mark.parametrize("i, j", [(3, -2), (3, 4), (-1, 0)])
def test_ballot_rejects(i, j):
    with pytest.raises(ValidationError):
        ballot(i, j)


def test_table_matches_ballot_above_base_case(table):
    for n in range(1, table.n_max + 1):
        for m in range(n + 1):
            assert table.lookup(n, m) == ballot(n, n - 1 - m), (n, m)


def test_base_cell_is_not_a_ballot_number():
    # a[0][0] = 1 is a boundary condition; the ballot family defines N(0, -1) = 0.
    assert build_table(0).lookup(0, 0) == 1
    assert ballot(0, -1) == 0


def test_invariants(table):
    assert table.check_recursion() == []
    for n in range(1, table.n_max + 1):
        row = table.row(n)
        assert row[n] == 0 and row[n - 1] == 1
        assert row[0] == catalan(n)
        assert all(row[m] > row[m + 1] for m in range(n))


@given(st.integers(0, 120))
def test_row_zero_is_catalan(n):
    assert build_table(n).lookup(n, 0) == catalan(n)


def test_exceeds_native_width(table):
    assert table.lookup(40, 0) > 2 ** 63
    assert table.lookup(40, 0) == catalan(40)


def test_size_cap():
    with pytest.raises(TableSizeError):
        build_table(11, max_n=10)
    assert build_table(11, max_n=None).n_max == 11


def test_csv_export():
    text = build_table(2).to_csv()
    assert text == "n,0,1,2\n0,1,,\n1,1,0,\n2,2,1,0\n"


def test_json_export():
    assert json.loads(build_table(2).to_json()) == [["1"], ["1", "0"], ["2", "1", "0"]]


def test_serialization_round_trip(table):
    assert BCTable.from_csv(table.to_csv()) == table
    assert BCTable.from_json(table.to_json()) == table


def test_load_rejects_corrupt_table():
    rows = [list(r) for r in FIGURE_ROWS]
    rows[5][2] += 1
    with pytest.raises(ValidationError, match="recursion"):
        BCTable.from_rows(rows)
    with pytest.raises(ValidationError):
        BCTable.from_json('[["1"], ["1"]]')
    with pytest.raises(ValidationError):
        BCTable.from_csv("n,0\nx,1\n")


@pytest.mark.parametrize("count, width", [(1, 0), (2, 1), (4, 2), (5, 3), (1430, 11)])
def test_code_width(count, width):
    assert code_width(count) == width


def test_code_width_rejects_zero():
    with pytest.raises(ValidationError):
        code_width(0)


def test_invariant_error_is_assertion():
    assert issubclass(InvariantError, AssertionError)
