import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from catalancode import DyckCoder, EmptyClassError, ReplayBitSource, TriangulationCoder, ValidationError
from catalancode.oracle import enumerate_dyck, enumerate_triangulations
from catalancode.table import build_table


def test_get_params_and_clone():
    coder = TriangulationCoder(n_vertices=7, missing=1)
    assert coder.get_params() == {"n_vertices": 7, "missing": 1, "max_n": 2000, "table": None}
    twin = clone(coder)
    assert twin.get_params() == coder.get_params()
    assert DyckCoder(n=4).set_params(n=5).n == 5


def test_fit_attributes():
    coder = TriangulationCoder(n_vertices=10).fit()
    assert coder.n_codes_ == 1430
    assert coder.code_width_ == 11
    assert coder.root_ == (8, 0)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        DyckCoder(n=3).inverse_transform([0])


def test_dyck_transform_round_trip():
    coder = DyckCoder(n=4).fit()
    words = enumerate_dyck(4)
    codes = coder.transform(words)
    assert codes.dtype == object
    assert codes.tolist() == list(range(14))
    assert coder.inverse_transform(codes) == words
    assert coder.fit_transform(words).tolist() == list(range(14))


def test_triangulation_transform_round_trip():
    coder = TriangulationCoder(n_vertices=7).fit()
    tris = coder.inverse_transform(np.arange(42))
    assert set(tris) == set(enumerate_triangulations(7))
    assert coder.transform(tris).tolist() == list(range(42))


def test_pipeline_composes():
    pipe = make_pipeline(DyckCoder(n=3))
    assert pipe.fit_transform(["UUUDDD"]).tolist() == [4]


def test_sample_stats():
    coder = TriangulationCoder(n_vertices=5).fit()
    out = coder.sample(2, random_state=ReplayBitSource("010111001"))
    assert coder.sample_stats_ == [
        {"code": 2, "bits": 3, "path_length": 4},
        {"code": 1, "bits": 6, "path_length": 4},
    ]
    assert coder.bits_consumed_ == 9
    assert out == coder.inverse_transform([2, 1])


def test_seeded_sample_is_deterministic():
    a = DyckCoder(n=20).fit().sample(5, random_state=42)
    b = DyckCoder(n=20).fit().sample(5, random_state=42)
    assert a == b


def test_codewords():
    coder = TriangulationCoder(n_vertices=10).fit()
    assert coder.to_codeword(1429) == "10110010101"
    assert coder.from_codeword("10110010101") == 1429


def test_empty_class():
    coder = TriangulationCoder(n_vertices=6, missing=4).fit()
    assert coder.n_codes_ == 0
    with pytest.raises(EmptyClassError):
        coder.sample()
    assert TriangulationCoder(n_vertices=6, missing=6).fit().n_codes_ == 0


def test_adopts_table():
    table = build_table(10)
    coder = DyckCoder(n=10, table=table).fit()
    assert coder.table_ is table
    with pytest.raises(ValidationError):
        DyckCoder(n=11, table=table).fit()


def test_bad_params():
    with pytest.raises(ValidationError):
        TriangulationCoder(n_vertices=2).fit()
    with pytest.raises(ValidationError):
        DyckCoder(n=-1).fit()
    with pytest.raises(ValidationError):
        DyckCoder(n=3).fit().transform(["UD"])
