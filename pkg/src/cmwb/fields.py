"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain ``fractions.Fraction`` (always stored in lowest terms
with positive denominator by construction).  Prime-field elements are a thin
wrapper around canonical representatives in [0, p).
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class ModP:
    """An element of GF(p), reduced to its canonical representative."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def __add__(self, other):
        return ModP(self.value + other.value, self.p)

    def __sub__(self, other):
        return ModP(self.value - other.value, self.p)

    def __mul__(self, other):
        return ModP(self.value * other.value, self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return ModP(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, ModP) and self.value == other.value and self.p == other.p

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.value, self.p)


class RationalField:
    """The field of rational numbers, with exact Fraction arithmetic."""

    name = "q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def fraction(self, num, den):
        return Fraction(num, den)

    def coeff_str(self, c):
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a user-chosen prime p < 2**31."""

    def __init__(self, p):
        if p < 2 or p >= 2**31:
            raise ValueError("prime out of range: %d" % p)
        if any(p % d == 0 for d in range(2, min(p, 1 + int(p**0.5) + 1))):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.name = "p:%d" % p

    def zero(self):
        return ModP(0, self.p)

    def one(self):
        return ModP(1, self.p)

    def from_int(self, n):
        return ModP(n, self.p)

    def fraction(self, num, den):
        return ModP(num, self.p) / ModP(den, self.p)

    def coeff_str(self, c):
        return str(c.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def parse_field(text):
    """Parse a field spec: ``q`` for the rationals, ``p`` or ``p:<prime>`` for GF(p)."""
    text = text.strip().lower()
    if text in ("q", "qq", "rational", "rationals"):
        return QQ
    if text == "p":
        return PrimeField(DEFAULT_PRIME)
    if text.startswith("p:"):
        return PrimeField(int(text[2:]))
    raise ValueError("unknown field spec: %r" % text)
