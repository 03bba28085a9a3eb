"""Slow, independent reference computations used to freeze expected values.

None of these import the code under test beyond plain data types.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache


def chi_line(n: int, a: int) -> int:
    """chi(P^n, O(a)) as the polynomial C(a + n, n), valid for every integer a."""
    num = 1
    for j in range(1, n + 1):
        num *= a + j
    return num // math.factorial(n)


@lru_cache(maxsize=None)
def chi_twisted_forms(n: int, k: int, t: int) -> int:
    """chi(P^n, Omega^k(t)) from the Euler sequence, one exterior power at a time."""
    if k < 0 or k > n:
        return 0
    if k == 0:
        return chi_line(n, t)
    return math.comb(n + 1, k) * chi_line(n, t - k) - chi_twisted_forms(n, k - 1, t)


def hodge_cyclic_generic(n: int, d: int, i: int) -> list[int]:
    """h^{k, n-k} of the eps^i part for d hyperplanes in general position, monodromy 1.

    Residue sequence for log forms, then the sign that makes the entries
    nonnegative once everything is concentrated in degree n.
    """
    out = []
    for k in range(n + 1):
        chi = sum(math.comb(d, r) * chi_twisted_forms(n - r, k - r, -i) for r in range(k + 1))
        out.append((-1) ** (n - k) * chi)
    return out


def euler_phi(d: int) -> int:
    return sum(1 for t in range(1, d + 1) if math.gcd(t, d) == 1)


def riemann_hurwitz_euler(d: int, monodromy: list[int]) -> int:
    """Euler characteristic of the cyclic degree-d cover of P^1 with the given local monodromies."""
    return d * (2 - len(monodromy)) + sum(math.gcd(m, d) for m in monodromy)


def minors_gcd(m: list[list[int]], k: int) -> int:
    rows, cols = len(m), len(m[0])
    g = 0
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            g = math.gcd(g, round(_det([[Fraction(m[i][j]) for j in c] for i in r])))
    return g


def _det(a: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in a]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    return det


def elementary_divisors(m: list[list[int]]) -> list[int]:
    """Invariant factors d_k = D_k / D_(k-1) from determinantal divisors; stops at the rank."""
    out = []
    prev = 1
    for k in range(1, min(len(m), len(m[0])) + 1):
        dk = minors_gcd(m, k)
        if dk == 0:
            break
        out.append(dk // prev)
        prev = dk
    return out


def hilbert_basis_brute(a: tuple[int, ...], d: int) -> set[tuple[int, ...]]:
    """Irreducible nonzero points of {x >= 0 : x = k a mod d} in a box twice the needed size."""
    n = len(a)

    def in_lattice(x):
        return any(all((xi - k * ai) % d == 0 for xi, ai in zip(x, a)) for k in range(d))

    pts = [p for p in itertools.product(range(2 * d + 1), repeat=n) if any(p) and in_lattice(p)]
    pset = set(pts)
    out = set()
    for p in pts:
        if not any(
            q != p and all(x <= y for x, y in zip(q, p)) and tuple(y - x for x, y in zip(q, p)) in pset
            for q in pts
        ):
            out.add(p)
    return out


def rational_span_brute(mult: dict, orders: tuple[int, ...]) -> int:
    """Smallest sum of r over integer vectors r >= mult constant on Galois orbits.

    Orbits come from multiplying exponent vectors by units modulo the exponent.
    """
    e = math.lcm(*orders)
    units = [t for t in range(1, e) if math.gcd(t, e) == 1] or [1]
    chars = list(itertools.product(*(range(o) for o in orders)))
    orbits, seen = [], set()
    for c in chars:
        if c in seen:
            continue
        orb = {tuple((t * x) % o for x, o in zip(c, orders)) for t in units}
        seen |= orb
        orbits.append(sorted(orb))
    top = max(mult.values(), default=0)
    best = math.inf
    for levels in itertools.product(range(top + 1), repeat=len(orbits)):
        if all(mult.get(c, 0) <= s for orb, s in zip(orbits, levels) for c in orb):
            best = min(best, sum(s * len(orb) for orb, s in zip(orbits, levels)))
    return int(best)
