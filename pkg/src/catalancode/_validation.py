"""Small argument checkers shared by the public functions and estimators."""

import numbers

from .exceptions import ValidationError


def check_index(value, name, minimum=0, maximum=None):
    """Return ``value`` as an ``int`` after checking it is an integer in range."""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise ValidationError(f"{name} must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise ValidationError(f"{name} must be <= {maximum}, got {value}")
    return value


def check_bitstring(bits, name="bits"):
    if not isinstance(bits, str) or any(c not in "01" for c in bits):
        raise ValidationError(f"{name} must be a string over {{0,1}}, got {bits!r}")
    return bits
