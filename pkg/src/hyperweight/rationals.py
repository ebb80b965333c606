"""Exact rational values and the "p/q" wire format.

All arithmetic in this package is exact: integers are Python big ints and
non-integer values are ``fractions.Fraction``. Floats are rejected at every
parse boundary so no rounding can sneak in through a JSON file.
"""

from __future__ import annotations

from fractions import Fraction

# Canonical exact rational type (normalized p/q, q > 0, gcd(p, q) = 1).
Rational = Fraction

# Values flowing through weights/lists: plain ints are kept as ints where
# possible because integer arithmetic is much cheaper than Fraction.
Rat = int | Fraction


def parse_rational(value: object) -> Rat:
    """Parse an int or a "p/q" / "n" string into an exact rational.

    Floats (and bools) are rejected: the wire format is exact by contract.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        try:
            frac = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
        return int(frac) if frac.denominator == 1 else frac
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Rat) -> int | str:
    """Render integers as JSON numbers and proper fractions as "p/q"."""
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"
