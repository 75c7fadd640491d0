"""Bit sources with consumption accounting, and exact uniform integers from fair bits."""

import random

from ._validation import check_bitstring, check_index
from .exceptions import BitSourceExhausted, ValidationError
from .table import code_width

_U64 = (1 << 64) - 1


class BitSource:
    """Supplier of fair bits.  Subclasses implement :meth:`_next_bit`.

    ``bits_consumed`` goes up by exactly one per bit handed out, whether it
    is requested through :meth:`next_bit` or :meth:`read_bits`.
    """

    def __init__(self):
        self.bits_consumed = 0

    def _next_bit(self):
        raise NotImplementedError

    def next_bit(self):
        bit = self._next_bit()
        self.bits_consumed += 1
        return bit

    def read_bits(self, k):
        """Read ``k`` bits and return them as an integer, first bit most significant."""
        v = 0
        for _ in range(k):
            v = (v << 1) | self.next_bit()
        return v


class SeededBitSource(BitSource):
    """Deterministic bits from a 64-bit seed.

    The stream is Python's Mersenne Twister (``random.Random(seed)``), read
    32 bits at a time through ``getrandbits(32)`` and emitted most significant
    bit first.  CPython documents MT19937 and its seeding from an int as
    stable, so a given seed reproduces the same stream on every platform.
    """

    def __init__(self, seed):
        super().__init__()
        self.seed = check_index(seed, "seed", maximum=_U64)
        self._rng = random.Random(self.seed)
        self._word = 0
        self._left = 0

    def _refill(self):
        self._word = self._rng.getrandbits(32)
        self._left = 32

    def _next_bit(self):
        if not self._left:
            self._refill()
        self._left -= 1
        return (self._word >> self._left) & 1

    def read_bits(self, k):
        # Same stream as k calls to next_bit, a word at a time.
        v = 0
        need = k
        while need:
            if not self._left:
                self._refill()
            take = min(need, self._left)
            self._left -= take
            v = (v << take) | ((self._word >> self._left) & ((1 << take) - 1))
            need -= take
        self.bits_consumed += k
        return v


class ReplayBitSource(BitSource):
    """Replays an explicit finite bit string; raises when it runs dry."""

    def __init__(self, bits):
        super().__init__()
        self.bits = check_bitstring(bits)
        self._pos = 0

    @classmethod
    def from_hex(cls, hexstring):
        """Bits of a hex string, four per digit, most significant first."""
        text = hexstring[2:] if hexstring.lower().startswith("0x") else hexstring
        try:
            bits = "".join(format(int(ch, 16), "04b") for ch in text)
        except ValueError:
            raise ValidationError(f"not a hex string: {hexstring!r}") from None
        return cls(bits)

    @property
    def remaining(self):
        return len(self.bits) - self._pos

    def _next_bit(self):
        if self._pos >= len(self.bits):
            raise BitSourceExhausted(f"replay source exhausted after {self._pos} bits")
        bit = self.bits[self._pos] == "1"
        self._pos += 1
        return int(bit)


def uniform_below(k, src):
    """Uniform integer in ``[0, k)`` by rejection.

    Draws ``ceil(log2 k)`` bits at a time and keeps the first draw below
    ``k``.  ``k == 1`` reads nothing.  Fewer than two attempts are needed on
    average for every ``k``.
    """
    k = check_index(k, "K", minimum=1)
    width = code_width(k)
    if width == 0:
        return 0
    while True:
        v = src.read_bits(width)
        if v < k:
            return v


def as_bit_source(random_state):
    """Coerce ``None``, an int seed or an existing :class:`BitSource`."""
    if isinstance(random_state, BitSource):
        return random_state
    if random_state is None:
        return SeededBitSource(random.SystemRandom().getrandbits(64))
    return SeededBitSource(random_state)
