"""Mountain ranges (Dyck words over ``U``/``D``) coded through the same tree.

A walk from root ``(n, 0)`` emits strokes as follows.  The word opens with
the forced ``U``.  Tree node ``(k, m)`` then stands for height ``m + 1`` with
``k`` downstrokes still to come:

* ``R`` climbs: emit ``U``.
* ``L`` from ``(k, m)`` with ``m >= 1`` descends: emit ``D``.
* ``L`` from ``(k, 0)`` touches the horizon and must climb again: emit
  ``DU``, or a bare ``D`` when it reaches the leaf and the word is complete.

Each decode emits exactly ``2n`` strokes and reads at most ``2n`` table cells.
"""

from ._validation import check_index
from .exceptions import InvalidPathError, InvalidStructureError
from .walker import rank, sample_path, unrank


def check_dyck(word):
    """Raise :class:`InvalidStructureError` at the first offending stroke."""
    if not isinstance(word, str):
        raise InvalidStructureError(f"a Dyck word must be a string, got {word!r}")
    height = 0
    for i, ch in enumerate(word):
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
            if height < 0:
                raise InvalidStructureError(f"position {i}: word dips below the horizon", position=i)
        else:
            raise InvalidStructureError(f"position {i}: {ch!r} is not U or D", position=i)
    if height:
        raise InvalidStructureError(
            f"position {len(word)}: word ends at height {height}", position=len(word)
        )
    return word


def is_dyck(word):
    try:
        check_dyck(word)
    except InvalidStructureError:
        return False
    return True


def decode_dyck(n, path, counters=None):
    """Dyck word of semilength ``n`` for the branch ``path`` from ``(n, 0)``."""
    n = check_index(n, "n")
    if n == 0:
        if path:
            raise InvalidPathError("step 0: path continues past the leaf", step=0)
        return ""
    out = ["U"]
    k, m = n, 0
    for i, step in enumerate(path):
        if k == 0:
            raise InvalidPathError(f"step {i}: path continues past the leaf", step=i)
        if step == "R":
            if m + 1 >= k:
                raise InvalidPathError(f"step {i}: R leads to an empty class at ({k}, {m + 1})", step=i)
            out.append("U")
            m += 1
        elif step == "L":
            if m:
                out.append("D")
                m -= 1
            else:
                out.append("D" if k == 1 else "DU")
            k -= 1
        else:
            raise InvalidPathError(f"step {i}: {step!r} is not L or R", step=i)
    if k:
        raise InvalidPathError(f"path ends at ({k}, {m}) instead of the leaf", step=len(path))
    word = "".join(out)
    if counters is not None:
        counters["strokes"] = counters.get("strokes", 0) + len(word)
    return word


def encode_dyck(word):
    """Branch path of a Dyck word; inverse of :func:`decode_dyck`."""
    check_dyck(word)
    if not word:
        return ""
    steps = []
    height = 1
    i = 1
    while i < len(word):
        if word[i] == "U":
            steps.append("R")
            height += 1
        else:
            steps.append("L")
            height -= 1
            if height == 0 and i + 1 < len(word):
                # the next stroke is the forced climb folded into this L
                i += 1
                height = 1
        i += 1
    return "".join(steps)


def unrank_dyck(n, code, table, counters=None):
    n = check_index(n, "n")
    return decode_dyck(n, unrank(table, (n, 0), code, counters), counters)


def rank_dyck(word, table):
    check_dyck(word)
    return rank(table, (len(word) // 2, 0), encode_dyck(word))


def sample_dyck(n, table, src, counters=None):
    """Exactly uniform Dyck word of semilength ``n``."""
    n = check_index(n, "n")
    _, path = sample_path(table, (n, 0), src, counters)
    return decode_dyck(n, path, counters)


def dyck_to_lattice_path(word):
    """``U`` becomes a step ``RIGHT``, ``D`` a step ``UP``; the path stays below the diagonal."""
    check_dyck(word)
    return ["RIGHT" if ch == "U" else "UP" for ch in word]


def lattice_path_to_dyck(steps):
    table = {"RIGHT": "U", "UP": "D"}
    try:
        word = "".join(table[s] for s in steps)
    except KeyError as exc:
        raise InvalidStructureError(f"unknown lattice step {exc.args[0]!r}") from None
    return check_dyck(word)


def dyck_to_parentheses(word):
    check_dyck(word)
    return word.replace("U", "(").replace("D", ")")


def parentheses_to_dyck(text):
    if any(ch not in "()" for ch in text):
        raise InvalidStructureError("only '(' and ')' are allowed")
    return check_dyck(text.replace("(", "U").replace(")", "D"))
