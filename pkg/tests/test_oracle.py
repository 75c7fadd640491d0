import pytest

from catalancode import ValidationError
from catalancode.oracle import (
    consecutive_ears,
    count_avoiding,
    count_avoiding_ears,
    enumerate_dyck,
    enumerate_triangulations,
)
from catalancode.table import catalan
from catalancode.triangulation import Triangulation, is_valid


def test_triangle():
    assert enumerate_triangulations(3) == [Triangulation(3)]


def test_sizes():
    for n in range(3, 11):
        tris = enumerate_triangulations(n)
        assert len(tris) == len(set(tris)) == catalan(n - 2)
    assert len(enumerate_triangulations(5)) == 5


def test_all_valid():
    assert all(is_valid(10, 0, t) for t in enumerate_triangulations(10))


def test_count_avoiding():
    assert count_avoiding(8, consecutive_ears(8, 1)) == 90
    assert count_avoiding(7, consecutive_ears(7, 5)) == 0
    assert count_avoiding(5, []) == 5
    assert count_avoiding_ears(3, 1) == 0


def test_consecutive_ears():
    assert consecutive_ears(6, 3) == [(1, 5), (0, 2), (1, 3)]


def test_dyck():
    assert enumerate_dyck(0) == [""]
    assert enumerate_dyck(3) == ["UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD"]
    assert len(enumerate_dyck(8)) == 1430
    assert enumerate_dyck(6) == sorted(enumerate_dyck(6), key=lambda w: w.replace("D", "0"))


def test_guards():
    with pytest.raises(ValidationError):
        enumerate_triangulations(14)
    with pytest.raises(ValidationError):
        enumerate_dyck(15)
    with pytest.raises(ValidationError):
        enumerate_triangulations(2)
    with pytest.raises(ValidationError):
        enumerate_dyck(3, limit=2)
    assert len(enumerate_dyck(3, limit=None)) == 5
    assert len(enumerate_triangulations(6, limit=None)) == 14
