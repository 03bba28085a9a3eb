"""Integer helpers and the string form of rationals used in JSON."""

from __future__ import annotations

import math
import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient ``n(n-1)...(n-k+1)/k!``.

    ``n`` may be any integer; ``k`` must be nonnegative.
    """
    if k < 0:
        raise ValueError(f"binomial: k must be nonnegative, got {k}")
    if n >= 0:
        return math.comb(n, k)
    # upper negation: C(n, k) = (-1)^k C(k - n - 1, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def euler_phi(d: int) -> int:
    if d <= 0:
        raise ValueError(f"euler_phi: argument must be positive, got {d}")
    result = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % p for p in range(2, math.isqrt(d) + 1))


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an ``int`` into a Fraction.

    Floats are rejected: the JSON interfaces carry rationals as strings.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"rationals must be strings like 'p/q', got {value!r}")
    match = _RATIONAL_RE.match(value)
    if match is None:
        raise ValueError(f"malformed rational {value!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
