"""scikit-learn style front end.

``fit`` builds (or adopts) the count table, ``transform`` maps structures to
their codes, ``inverse_transform`` maps codes back, and ``sample`` draws
exactly uniform structures.  Codes are arbitrary-precision ints, so arrays
returned here have ``dtype=object``.

>>> coder = DyckCoder(n=3).fit()
>>> coder.inverse_transform([0, 4])
['UDUDUD', 'UUUDDD']
>>> coder.transform(["UUDDUD"]).tolist()
[2]
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import mountain, triangulation
from ._validation import check_index
from .randomness import as_bit_source
from .table import DEFAULT_MAX_N, BCTable, build_table, code_width
from .walker import bits_to_code, code_to_bits, sample_path, unrank
from .exceptions import EmptyClassError, ValidationError


class _CatalanCoder(TransformerMixin, BaseEstimator):
    def _root(self):
        raise NotImplementedError

    def _decode(self, path):
        raise NotImplementedError

    def _fit_table(self, n_needed):
        table = self.table
        if table is not None:
            if not isinstance(table, BCTable):
                raise ValidationError("table must be a BCTable")
            if table.n_max < n_needed:
                raise ValidationError(f"supplied table stops at n={table.n_max}, need {n_needed}")
            return table
        return build_table(n_needed, max_n=self.max_n)

    def fit(self, X=None, y=None):
        """Build the count table.  ``X`` and ``y`` are ignored."""
        root = self._root()
        self.table_ = self._fit_table(root[0])
        self.root_ = root
        self.n_codes_ = self.table_.lookup(*root)
        self.code_width_ = code_width(self.n_codes_) if self.n_codes_ else 0
        return self

    def _check_nonempty(self):
        check_is_fitted(self, "table_")
        if not self.n_codes_:
            raise EmptyClassError(f"node {self.root_} has no leaves: empty structure class")

    def inverse_transform(self, X):
        """Decode each code in ``X`` to its structure."""
        self._check_nonempty()
        return [self._decode(unrank(self.table_, self.root_, int(c))) for c in np.ravel(np.asarray(X, dtype=object))]

    def sample(self, n_samples=1, random_state=None):
        """Draw ``n_samples`` structures uniformly at random.

        ``random_state`` is ``None``, an int seed or a ``BitSource``.  Per-sample
        ``code``, ``bits`` consumed and ``path_length`` land in ``sample_stats_``.
        """
        self._check_nonempty()
        n_samples = check_index(n_samples, "n_samples")
        src = as_bit_source(random_state)
        out, stats = [], []
        for _ in range(n_samples):
            before = src.bits_consumed
            code, path = sample_path(self.table_, self.root_, src)
            out.append(self._decode(path))
            stats.append({"code": code, "bits": src.bits_consumed - before, "path_length": len(path)})
        self.sample_stats_ = stats
        self.bits_consumed_ = sum(s["bits"] for s in stats)
        return out

    def to_codeword(self, code):
        check_is_fitted(self, "table_")
        return code_to_bits(code, self.n_codes_)

    def from_codeword(self, bits):
        check_is_fitted(self, "table_")
        return bits_to_code(bits, self.n_codes_)


class TriangulationCoder(_CatalanCoder):
    """Optimal codes for triangulations of a convex ``n_vertices``-gon missing
    the ears ``e_0 .. e_{missing-1}``.

    Parameters
    ----------
    n_vertices : int
        Polygon size, at least 3.
    missing : int
        Number of consecutive forbidden ears.
    max_n : int or None
        Memory cap passed to :func:`~catalancode.table.build_table`.
    table : BCTable or None
        Precomputed table to adopt instead of building one.
    """

    def __init__(self, n_vertices=5, missing=0, max_n=DEFAULT_MAX_N, table=None):
        self.n_vertices = n_vertices
        self.missing = missing
        self.max_n = max_n
        self.table = table

    def _root(self):
        n_vertices, missing = triangulation.check_context(self.n_vertices, self.missing)
        # m > N-2 is a valid (empty) class but lies outside the table's triangle
        return n_vertices - 2, min(missing, n_vertices - 2)

    def fit(self, X=None, y=None):
        super().fit(X, y)
        if self.missing > self.n_vertices - 2:
            self.n_codes_ = 0
        return self

    def transform(self, X):
        """Codes of the triangulations in ``X`` as an object array."""
        self._check_nonempty()
        codes = [
            triangulation.rank_triangulation(self.n_vertices, self.missing, t, self.table_) for t in X
        ]
        return np.array(codes, dtype=object)

    def _decode(self, path):
        return triangulation.decode(self.n_vertices, self.missing, path)


class DyckCoder(_CatalanCoder):
    """Optimal codes for Dyck words (mountain ranges) of semilength ``n``."""

    def __init__(self, n=3, max_n=DEFAULT_MAX_N, table=None):
        self.n = n
        self.max_n = max_n
        self.table = table

    def _root(self):
        return check_index(self.n, "n"), 0

    def transform(self, X):
        check_is_fitted(self, "table_")
        codes = []
        for word in X:
            mountain.check_dyck(word)
            if len(word) != 2 * self.n:
                raise ValidationError(f"expected a word of length {2 * self.n}, got {len(word)}")
            codes.append(mountain.rank_dyck(word, self.table_))
        return np.array(codes, dtype=object)

    def _decode(self, path):
        return mountain.decode_dyck(self.n, path)
