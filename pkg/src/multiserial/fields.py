"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

All linear algebra in this package runs over one of these; ranks must be
exact, so floating point is never used.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def __repr__(self) -> str:
        return "RationalField()"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Integers modulo a prime, elements normalized to 0..p-1."""

    def __init__(self, p: int) -> None:
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


RATIONALS = RationalField()


def field_by_name(spec: str):
    """Resolve a field description: ``rational`` or ``fp:P`` for a prime P."""
    if spec == "rational":
        return RATIONALS
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad prime field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {spec!r} (expected 'rational' or 'fp:P')")
