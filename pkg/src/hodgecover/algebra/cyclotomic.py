"""Elements of cyclotomic fields in the power basis modulo the cyclotomic polynomial."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from hodgecover.algebra.numbers import euler_phi, format_rational, parse_rational


def _poly_divmod_monic(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (low degree first) by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for shift in range(len(num) - 1 - dd, -1, -1):
        c = num[shift + dd]
        quot[shift] = c
        if c:
            for i, dc in enumerate(den):
                num[shift + i] -= c * dc
    return quot, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
            assert not any(rem), "x^n - 1 not divisible by a cyclotomic factor"
    return tuple(poly)


def _reduce(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            base = top - deg
            for i, pc in enumerate(phi):
                c[base + i] -= lead * pc
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


class Cyclotomic:
    """An element of Q(zeta_N), stored as phi(N) rational coefficients."""

    __slots__ = ("conductor", "coefficients")

    def __init__(self, conductor: int, coefficients: Iterable = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coefficients = _reduce(list(coefficients), conductor)

    @classmethod
    def rational(cls, q, conductor: int = 1) -> "Cyclotomic":
        return cls(conductor, [Fraction(q)])

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "Cyclotomic":
        power %= conductor
        return cls(conductor, [0] * power + [1])

    def lift(self, conductor: int) -> "Cyclotomic":
        """Re-express in Q(zeta_M) for a multiple M of the conductor."""
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        step = conductor // self.conductor
        spread = [Fraction(0)] * (step * (len(self.coefficients) - 1) + 1)
        for k, c in enumerate(self.coefficients):
            spread[k * step] = c
        return Cyclotomic(conductor, spread)

    def _common(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")
        n = math.lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    def __add__(self, other) -> "Cyclotomic":
        a, b = self._common(other)
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coefficients, b.coefficients)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, [-x for x in self.coefficients])

    def __sub__(self, other) -> "Cyclotomic":
        a, b = self._common(other)
        return a + (-b)

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        a, b = self._common(other)
        prod = [Fraction(0)] * (len(a.coefficients) + len(b.coefficients) - 1)
        for i, x in enumerate(a.coefficients):
            if x:
                for j, y in enumerate(b.coefficients):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.conductor, prod)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coefficients == b.coefficients

    def __hash__(self) -> int:
        # equal elements may live in different conductors; only rationals hash finely
        if self.is_rational():
            return hash(self.coefficients[0])
        return hash(("cyclotomic", len(self.coefficients) > 1))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coefficients[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coefficients[0]

    def conjugate(self) -> "Cyclotomic":
        return galois_conjugate(self, -1)

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coefficients": [format_rational(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, obj) -> "Cyclotomic":
        if isinstance(obj, (str, int)) and not isinstance(obj, bool):
            return cls.rational(parse_rational(obj))
        conductor = obj["conductor"]
        coeffs = [parse_rational(c) for c in obj["coefficients"]]
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"conductor {conductor} needs {euler_phi(conductor)} coefficients, got {len(coeffs)}"
            )
        return cls(conductor, coeffs)

    def __repr__(self) -> str:
        terms = [
            f"{format_rational(c)}*z{self.conductor}^{k}" if k else format_rational(c)
            for k, c in enumerate(self.coefficients)
            if c
        ]
        return f"Cyclotomic({' + '.join(terms) or '0'})"


def galois_conjugate(x: Cyclotomic, t: int) -> Cyclotomic:
    """Apply the automorphism ``zeta_N -> zeta_N**t`` of Q(zeta_N)."""
    n = x.conductor
    if math.gcd(t, n) != 1:
        raise ValueError(f"galois_conjugate: {t} is not coprime to the conductor {n}")
    out = [Fraction(0)] * n
    for k, c in enumerate(x.coefficients):
        if c:
            out[(k * t) % n] += c
    return Cyclotomic(n, out)
