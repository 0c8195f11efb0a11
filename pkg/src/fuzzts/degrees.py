"""Exact truth degrees in [0, 1].

A degree is a decimal number with at most nine fractional digits, stored as an
integer numerator over 10^9.  The whole toolkit only ever takes max, min, and
comparisons of degrees, and those are closed over the input values, so no
rounding happens anywhere: inputs with more than nine fractional digits are
rejected, never rounded.

Degrees are totally ordered, so the built-in ``max``/``min`` serve as the
lattice join/meet.
"""

from __future__ import annotations

import re
from functools import total_ordering

from .errors import DegreeError

#: Fixed denominator of every degree.
SCALE = 10**9

_DECIMAL_RE = re.compile(r"(\d+)(?:\.(\d+))?")


@total_ordering
class Degree:
    """An exact number in [0, 1], canonically ``numerator / 10^9``."""

    __slots__ = ("numerator",)

    def __init__(self, numerator: int):
        if not isinstance(numerator, int) or isinstance(numerator, bool):
            raise DegreeError(f"degree numerator must be an int, got {numerator!r}")
        if not 0 <= numerator <= SCALE:
            raise DegreeError(f"degree out of range: {numerator}/{SCALE}")
        object.__setattr__(self, "numerator", numerator)

    @classmethod
    def parse(cls, text: str) -> "Degree":
        """Parse a decimal literal like ``0``, ``1``, ``0.8`` exactly.

        Rejects anything outside [0, 1] and literals with more than nine
        fractional digits (no silent rounding).
        """
        m = _DECIMAL_RE.fullmatch(text.strip())
        if m is None:
            raise DegreeError(f"not a decimal degree literal: {text!r}")
        whole, frac = m.group(1), m.group(2) or ""
        if len(frac) > 9:
            raise DegreeError(
                f"degree precision: {text!r} has more than 9 fractional digits"
            )
        numerator = int(whole) * SCALE + int(frac.ljust(9, "0"))
        if numerator > SCALE:
            raise DegreeError(f"degree out of range: {text!r}")
        return cls(numerator)

    def __setattr__(self, name, value):
        raise AttributeError("Degree is immutable")

    def __eq__(self, other):
        if isinstance(other, Degree):
            return self.numerator == other.numerator
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Degree):
            return self.numerator < other.numerator
        return NotImplemented

    def __hash__(self):
        return hash(self.numerator)

    def __bool__(self):
        return self.numerator != 0

    def __repr__(self):
        return f"Degree({str(self)!r})"

    def __str__(self):
        """Minimal decimal form: ``0``, ``1``, ``0.8``."""
        if self.numerator == 0:
            return "0"
        if self.numerator == SCALE:
            return "1"
        return "0." + str(self.numerator).rjust(9, "0").rstrip("0")


#: The lattice bottom and top.
ZERO = Degree(0)
ONE = Degree(SCALE)


def as_degree(value: "Degree | str | int") -> Degree:
    """Coerce a degree literal, 0/1 int, or Degree to a Degree."""
    if isinstance(value, Degree):
        return value
    if isinstance(value, str):
        return Degree.parse(value)
    if isinstance(value, int) and not isinstance(value, bool):
        if value == 0:
            return ZERO
        if value == 1:
            return ONE
        raise DegreeError(f"integer degree must be 0 or 1, got {value}")
    raise DegreeError(f"cannot interpret {value!r} as a degree")
