"""Rank, unrank and sample root-to-leaf paths of the binary tree the table describes.

Node ``(n, m)`` has ``a[n][m]`` leaves below it.  Its left child is
``(n-1, 0)`` when ``m == 0`` and ``(n-1, m-1)`` otherwise; its right child is
``(n, m+1)``.  The single leaf is ``(0, 0)``.  A path is a string over
``"LR"``.  Codes order paths lexicographically with ``L < R``: the left
subtree owns the low interval ``[0, a[left])`` and the right subtree the rest.
"""

from typing import NamedTuple

from ._validation import check_bitstring, check_index
from .exceptions import EmptyClassError, InvalidPathError, ValidationError
from .randomness import uniform_below
from .table import code_width

LEAF = (0, 0)


class NodeState(NamedTuple):
    n: int
    m: int


def node(n, m):
    n = check_index(n, "n")
    m = check_index(m, "m", maximum=n)
    return NodeState(n, m)


def left_child(s):
    n, m = s
    if (n, m) == LEAF:
        raise ValidationError("the leaf (0, 0) has no children")
    return NodeState(n - 1, m - 1 if m else 0)


def right_child(s):
    n, m = s
    if (n, m) == LEAF:
        raise ValidationError("the leaf (0, 0) has no children")
    if m + 1 > n:
        raise ValidationError(f"({n}, {m}) has no right child")
    return NodeState(n, m + 1)


def root_count(table, root):
    n, m = root
    return table.lookup(n, m)


def _check_root(table, root):
    root = node(*root)
    count = table.lookup(*root)
    if count == 0:
        raise EmptyClassError(f"node {tuple(root)} has no leaves: empty structure class")
    return root, count


def unrank(table, root, code, counters=None):
    """Path from ``root`` to the leaf whose code is ``code``.

    ``counters`` (any mutable mapping) collects ``transitions`` and
    ``lookups`` when given.
    """
    root, count = _check_root(table, root)
    code = check_index(code, "code", maximum=count - 1)
    n, m = root
    r = code
    steps = []
    lookups = 0
    cells = table.cells  # every visited cell lies inside the root's triangle
    while n:
        ln, lm = n - 1, (m - 1 if m else 0)
        lc = cells[ln * n // 2 + lm]
        lookups += 1
        if r < lc:
            steps.append("L")
            n, m = ln, lm
        else:
            steps.append("R")
            r -= lc
            m += 1
    if counters is not None:
        counters["transitions"] = counters.get("transitions", 0) + len(steps)
        counters["lookups"] = counters.get("lookups", 0) + lookups
    return "".join(steps)


def rank(table, root, path):
    """Code of ``path``; the inverse of :func:`unrank`.

    Invalid paths raise :class:`InvalidPathError` carrying the failing step.
    """
    root, _ = _check_root(table, root)
    n, m = root
    code = 0
    cells = table.cells
    for i, step in enumerate(path):
        if (n, m) == LEAF:
            raise InvalidPathError(f"step {i}: path continues past the leaf", step=i)
        ln, lm = n - 1, (m - 1 if m else 0)
        if step == "L":
            n, m = ln, lm
        elif step == "R":
            if m + 1 >= n:  # a[n][n] = 0 and a[n][n+1] does not exist
                raise InvalidPathError(f"step {i}: R leads to an empty subtree at ({n}, {m + 1})", step=i)
            code += cells[ln * n // 2 + lm]
            m += 1
        else:
            raise InvalidPathError(f"step {i}: {step!r} is not L or R", step=i)
    if (n, m) != LEAF:
        raise InvalidPathError(f"path ends at ({n}, {m}) instead of the leaf", step=len(path))
    return code


def code_to_bits(code, count):
    """Fixed-width big-endian bit string of ``code``; width is ``ceil(log2(count))``."""
    width = code_width(count)
    code = check_index(code, "code", maximum=count - 1)
    return format(code, "b").zfill(width) if width else ""


def bits_to_code(bits, count):
    check_bitstring(bits)
    width = code_width(count)
    if len(bits) != width:
        raise ValidationError(f"codeword must have exactly {width} bits, got {len(bits)}")
    code = int(bits, 2) if bits else 0
    if code >= count:
        raise ValidationError(f"codeword {bits} decodes to {code}, outside [0, {count})")
    return code


def pack_bits(bits):
    """Pack a bit string MSB-first into bytes, zero-padding the last byte on the right."""
    check_bitstring(bits)
    padded = bits + "0" * (-len(bits) % 8)
    return bytes(int(padded[i:i + 8], 2) for i in range(0, len(padded), 8))


def unpack_bits(data, width):
    """Inverse of :func:`pack_bits` for a codeword of known ``width``."""
    if len(data) != (width + 7) // 8:
        raise ValidationError(f"{width}-bit codeword needs {(width + 7) // 8} bytes, got {len(data)}")
    bits = "".join(format(b, "08b") for b in data)
    if "1" in bits[width:]:
        raise ValidationError("padding bits must be zero")
    return bits[:width]


def sample_path(table, root, src, counters=None):
    """Draw one code uniformly and return ``(code, path)``."""
    _, count = _check_root(table, root)
    code = uniform_below(count, src)
    return code, unrank(table, root, code, counters)
