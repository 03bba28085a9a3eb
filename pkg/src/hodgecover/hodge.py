"""Eigenspace Hodge numbers of abelian covers.

Two independent routes are provided. The generating-function route reads
Euler characteristics of twisted log forms off the truncated series
``(1+yz)^(t-1) / (1-z)^(t+1)``. The HRR route integrates Chern characters
against Todd classes on every stratum of the arrangement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Mapping, Sequence

from hodgecover.algebra.numbers import binomial, euler_phi
from hodgecover.algebra.series import series_expand_binomial
from hodgecover.arrangement import build_poset, is_normal_crossing
from hodgecover.cover import (
    Character,
    CoverError,
    CoverSpec,
    InvariantViolation,
    ProductP1Base,
    ProjectiveSpaceBase,
    factor_twists,
    log_support,
    residues,
    twist_integer,
)


class HodgeUnavailable(Exception):
    """Raised when the hypotheses for exact Hodge numbers fail.

    Only Euler characteristics can be reported for such covers.
    """

    def __init__(self, failures: Sequence[str]):
        self.failures = list(failures)
        super().__init__(
            "exact Hodge computation unavailable; only Euler characteristics returned: "
            + "; ".join(self.failures)
        )


# ---------------------------------------------------------------------------
# generating-function route


@lru_cache(maxsize=None)
def chi_omega_pn(n: int, k: int, t: int) -> int:
    """chi(P^n, Omega^k(t)): the y^k z^n coefficient of (1+yz)^(t-1) / (1-z)^(t+1)."""
    if n < 0 or k < 0 or k > n:
        return 0
    series = series_expand_binomial("1+yz", t - 1, k, n) * series_expand_binomial("1-z", -(t + 1), k, n)
    value = series.coefficient(k, n)
    if value.denominator != 1:
        raise InvariantViolation(f"non-integral Euler characteristic {value}")
    return int(value)


def chi_log(n: int, k: int, s: int, t: int) -> int:
    """chi(P^n, Omega^k(log D)(t)) for s hyperplanes D in general position.

    The residue filtration has graded pieces Omega^(k-r) on the C(s, r)
    codimension-r strata, each a copy of P^(n-r).
    """
    if k < 0:
        return 0
    return sum(binomial(s, r) * chi_omega_pn(n - r, k - r, t) for r in range(min(k, n) + 1))


# ---------------------------------------------------------------------------
# tables


Label = Hashable


@dataclass(frozen=True, eq=False)
class EigenHodgeTable:
    """Hodge numbers h^{p,q}_chi for every character chi.

    ``entries[chi][p][q]`` is a nonnegative integer; ``provenance[chi]``
    names the route that produced that character's block.
    """

    n: int
    characters: tuple[Label, ...]
    entries: Mapping[Label, tuple[tuple[int, ...], ...]]
    provenance: Mapping[Label, str]
    trivial: Label
    conjugates: Mapping[Label, Label] = field(default_factory=dict)

    def h(self, p: int, q: int, chi: Label) -> int:
        if not (0 <= p <= self.n and 0 <= q <= self.n):
            return 0
        return self.entries[chi][p][q]

    @property
    def nontrivial(self) -> list[Label]:
        return [c for c in self.characters if c != self.trivial]

    def degree_dimension(self, i: int, chi: Label) -> int:
        return sum(self.h(p, i - p, chi) for p in range(i + 1))

    def nontrivial_dimension(self, i: int | None = None) -> int:
        i = self.n if i is None else i
        return sum(self.degree_dimension(i, c) for c in self.nontrivial)

    def antidiagonal_totals(self) -> list[int]:
        """sum over nontrivial chi of h^{k, n-k}_chi, for k = 0..n."""
        return [sum(self.h(k, self.n - k, c) for c in self.nontrivial) for k in range(self.n + 1)]

    def concentrated(self) -> bool:
        """Nontrivial entries vanish off p + q = n (the weak Lefschetz shape)."""
        return all(
            self.h(p, q, c) == 0
            for c in self.nontrivial
            for p in range(self.n + 1)
            for q in range(self.n + 1)
            if p + q != self.n
        )

    def same_numbers(self, other: "EigenHodgeTable") -> bool:
        return (
            self.n == other.n
            and set(self.characters) == set(other.characters)
            and all(self.entries[c] == other.entries[c] for c in self.characters)
        )

    def to_json(self) -> list[dict]:
        return [
            {
                "character": list(c) if isinstance(c, tuple) else c,
                "h": [list(row) for row in self.entries[c]],
                "provenance": self.provenance[c],
            }
            for c in self.characters
        ]


def _grid(n: int, values: Mapping[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(values.get((p, q), 0) for q in range(n + 1)) for p in range(n + 1))


def _base_grid(n: int, product: bool = False) -> tuple[tuple[int, ...], ...]:
    """Hodge diamond of P^n, or of (P^1)^n when ``product`` is set."""
    return _grid(n, {(p, p): math.comb(n, p) if product else 1 for p in range(n + 1)})


def exact_hodge_failures(spec: CoverSpec) -> list[str]:
    """Reasons the eigensheaf cohomology may fail to be concentrated in degree n (empty if fine)."""
    failures: list[str] = []
    if isinstance(spec.base, ProjectiveSpaceBase):
        ok, bad = is_normal_crossing(spec.base.arrangement)
        if not ok:
            failures.append(
                f"reduced arrangement is not in general position ({len(bad)} non-normal-crossing flats)"
            )
        for chi in spec.characters():
            if chi.is_trivial:
                continue
            support = log_support(spec, chi)
            t = twist_integer(spec, chi)
            if t <= 0 or t >= len(support):
                failures.append(f"eigensheaf of {chi} is not anti-ample (twist {t}, support {len(support)})")
    else:
        for chi in spec.characters():
            if chi.is_trivial:
                continue
            twists = factor_twists(spec, chi)
            res = residues(spec, chi)
            for f, t in enumerate(twists):
                s = sum(1 for c in spec.factor_components(f) if res[c.index] != 0)
                if t <= 0 or t >= s:
                    failures.append(f"{chi} has no ramification on factor {f}")
                    break
    return failures


def _labels(spec: CoverSpec) -> tuple[list[Label], dict[Label, Label]]:
    chars = spec.characters()
    return [c.label for c in chars], {c.label: c.conjugate().label for c in chars}


def eigen_hodge(spec: CoverSpec) -> EigenHodgeTable:
    """Eigenspace Hodge numbers by the generating-function route (Kunneth on product bases)."""
    labels, conj = _labels(spec)
    n = spec.dim
    entries: dict[Label, tuple[tuple[int, ...], ...]] = {}
    provenance: dict[Label, str] = {}
    if isinstance(spec.base, ProductP1Base):
        for chi in spec.characters():
            entries[chi.label] = _kunneth_grid(spec, chi)
            provenance[chi.label] = "Kunneth"
    else:
        failures = exact_hodge_failures(spec)
        if failures:
            raise HodgeUnavailable(failures)
        for chi in spec.characters():
            if chi.is_trivial:
                entries[chi.label] = _base_grid(n)
                provenance[chi.label] = "base"
                continue
            s = len(log_support(spec, chi))
            t = twist_integer(spec, chi)
            values = {}
            for k in range(n + 1):
                h = (-1) ** (n - k) * chi_log(n, k, s, -t)
                if h < 0:
                    raise InvariantViolation(f"negative Hodge number h^({k},{n - k}) = {h} for {chi}")
                values[(k, n - k)] = h
            entries[chi.label] = _grid(n, values)
            provenance[chi.label] = "generating-function"
    return EigenHodgeTable(n, tuple(labels), entries, provenance, spec.group.zero, conj)


def _h_line_p1(a: int) -> tuple[int, int]:
    """(h^0, h^1) of O(a) on P^1."""
    return max(a + 1, 0), max(-a - 1, 0)


def _kunneth_grid(spec: CoverSpec, chi: Character) -> tuple[tuple[int, ...], ...]:
    res = residues(spec, chi)
    twists = factor_twists(spec, chi)
    diamonds = []
    for f, t in enumerate(twists):
        s = sum(1 for c in spec.factor_components(f) if res[c.index] != 0)
        # p = 0: O(-t); p = 1: Omega^1(log S)(-t) = O(s - 2 - t)
        diamonds.append((_h_line_p1(-t), _h_line_p1(s - 2 - t)))
    n = spec.dim
    values: dict[tuple[int, int], int] = {}
    pairs = [(p, q) for p in (0, 1) for q in (0, 1)]
    for choice in itertools.product(pairs, repeat=n):
        prod = math.prod(diamonds[f][p][q] for f, (p, q) in enumerate(choice))
        if prod:
            key = (sum(p for p, _ in choice), sum(q for _, q in choice))
            values[key] = values.get(key, 0) + prod
    return _grid(n, values)


def hodge_product_p1(n: int, d: int) -> EigenHodgeTable:
    """Cyclic degree-d cover of (P^1)^n branched at d points per factor.

    Uses chi_{n,i}(y) = (1 - i + (d - i - 1) y)^n and reads
    h^{k,n-k}_{eps^i} = (-1)^(n-k) [y^k] chi_{n,i}(y).
    """
    if d < 2 or n < 1:
        raise ValueError("hodge_product_p1 needs d >= 2 and n >= 1")
    entries = {(0,): _base_grid(n, product=True)}
    provenance = {(0,): "base"}
    for i in range(1, d):
        values = {
            (k, n - k): (-1) ** (n - k) * binomial(n, k) * (1 - i) ** (n - k) * (d - i - 1) ** k
            for k in range(n + 1)
        }
        entries[(i,)] = _grid(n, {key: v for key, v in values.items() if v > 0})
        provenance[(i,)] = "Kunneth"
    labels = tuple((i,) for i in range(d))
    conj = {(i,): ((-i) % d,) for i in range(d)}
    return EigenHodgeTable(n, labels, entries, provenance, (0,), conj)


# ---------------------------------------------------------------------------
# HRR route


class CohomologyClassPn:
    """Element of Q[h] / (h^(n+1)), h the hyperplane class of P^n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence = ()):
        c = [Fraction(x) for x in coeffs[: n + 1]]
        self.n = n
        self.coeffs = tuple(c + [Fraction(0)] * (n + 1 - len(c)))

    @classmethod
    def hyperplane(cls, n: int) -> "CohomologyClassPn":
        return cls(n, [0, 1])

    @classmethod
    def constant(cls, n: int, c) -> "CohomologyClassPn":
        return cls(n, [c])

    def __add__(self, other: "CohomologyClassPn") -> "CohomologyClassPn":
        return CohomologyClassPn(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CohomologyClassPn") -> "CohomologyClassPn":
        return CohomologyClassPn(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> "CohomologyClassPn":
        if isinstance(other, (int, Fraction)):
            return CohomologyClassPn(self.n, [a * other for a in self.coeffs])
        out = [Fraction(0)] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return CohomologyClassPn(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CohomologyClassPn":
        result = CohomologyClassPn.constant(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def exp(self) -> "CohomologyClassPn":
        if self.coeffs[0] != 0:
            raise ValueError("exp is only taken of nilpotent classes")
        result = CohomologyClassPn.constant(self.n, 1)
        term = CohomologyClassPn.constant(self.n, 1)
        for k in range(1, self.n + 1):
            term = term * self * Fraction(1, k)
            result = result + term
        return result

    def inverse(self) -> "CohomologyClassPn":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("class with zero constant term is not invertible")
        inv = [Fraction(0)] * (self.n + 1)
        inv[0] = 1 / a0
        for k in range(1, self.n + 1):
            inv[k] = -sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1)) / a0
        return CohomologyClassPn(self.n, inv)

    def integrate(self) -> Fraction:
        """Degree of the top-dimensional part (h^n integrates to 1)."""
        return self.coeffs[self.n]

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomologyClassPn) and (self.n, self.coeffs) == (other.n, other.coeffs)

    def __repr__(self) -> str:
        return f"CohomologyClassPn({self.n}, {[str(c) for c in self.coeffs]})"


@lru_cache(maxsize=None)
def todd_pn(m: int) -> CohomologyClassPn:
    """td(P^m): the total Chern class (1+h)^(m+1) has m+1 roots equal to h."""
    # (1 - e^{-h}) / h = sum (-1)^k h^k / (k+1)!
    quotient = CohomologyClassPn(m, [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(m + 1)])
    return quotient.inverse() ** (m + 1)


@lru_cache(maxsize=None)
def ch_omega_pn(m: int, p: int) -> CohomologyClassPn:
    """ch(Omega^p) on P^m from the Euler sequence: sum_j (-1)^(p-j) C(m+1, j) e^(-j h)."""
    h = CohomologyClassPn.hyperplane(m)
    total = CohomologyClassPn(m)
    for j in range(p + 1):
        total = total + (h * (-j)).exp() * ((-1) ** (p - j) * math.comb(m + 1, j))
    return total


@lru_cache(maxsize=None)
def hrr_euler(m: int, p: int, c1: Fraction) -> Fraction:
    """chi(P^m, Omega^p ⊗ V) for a line bundle V with ch(V) = exp(c1 * h)."""
    if m < 0 or p < 0 or p > m:
        return Fraction(0)
    line = (CohomologyClassPn.hyperplane(m) * Fraction(c1)).exp()
    return (ch_omega_pn(m, p) * line * todd_pn(m)).integrate()


def w0_kclass(spec: CoverSpec, chi: Character, p: int) -> dict[tuple[frozenset[int], int], int]:
    """K-class of W_0(Omega^p(log D) ⊗ V_chi) as a combination of [Omega^j_F ⊗ V|F].

    Expands sum_I (-1)^|I| Omega^{p-|I|}_{D_I}(log D_I'') ⊗ V_I, where V_I
    survives only when every residue on I vanishes, and then resolves each
    log sheaf on D_I through its residue filtration over the strata
    D_{I u J}. Keys are (containing set of the stratum, form degree); the
    empty set stands for the ambient space.
    """
    arr = spec.base.arrangement
    poset = build_poset(arr)
    zero = {j for j, r in enumerate(residues(spec, chi)) if r == 0}
    out: dict[tuple[frozenset[int], int], int] = {}
    strata = [frozenset()] + [f.containing for f in poset.flats]
    for s_k in strata:
        removable = sorted(s_k & zero)
        for size in range(len(removable) + 1):
            for i_set in itertools.combinations(removable, size):
                j_set = s_k - set(i_set)
                degree = p - len(i_set) - len(j_set)
                if degree < 0:
                    continue
                key = (s_k, degree)
                out[key] = out.get(key, 0) + (-1) ** len(i_set)
    return {k: v for k, v in out.items() if v}


def hodge_via_hrr(spec: CoverSpec, chi: Character, p: int) -> int:
    """h^{p, n-p}_chi as (-1)^(n-p) times an HRR integral, computed stratum by stratum."""
    n = spec.dim
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in [0, {n}]")
    if chi.is_trivial:
        if 2 * p != n:
            return 0
        # the base has only (p, p) classes, so h^{p,p} = (-1)^p chi(Omega^p)
        if isinstance(spec.base, ProductP1Base):
            return math.comb(n, p)
        return int((-1) ** p * hrr_euler(n, p, Fraction(0)))
    failures = exact_hodge_failures(spec)
    if failures:
        raise HodgeUnavailable(failures)
    res = residues(spec, chi)
    if isinstance(spec.base, ProductP1Base):
        poly = [Fraction(1)]
        for f, _ in enumerate(spec.base.points_per_factor):
            comps = spec.factor_components(f)
            c1 = -sum(res[c.index] for c in comps)
            s = sum(1 for c in comps if res[c.index] != 0)
            a0 = hrr_euler(1, 0, c1)
            a1 = hrr_euler(1, 1, c1) + s * hrr_euler(0, 0, c1)
            poly = [
                sum((poly[k - e] if 0 <= k - e < len(poly) else 0) * a for e, a in enumerate((a0, a1)))
                for k in range(len(poly) + 1)
            ]
        value = poly[p]
    else:
        arr = spec.base.arrangement
        poset = build_poset(arr)
        c1 = -sum(r * c.degree for r, c in zip(res, spec.components))
        value = Fraction(0)
        for (stratum, degree), coeff in w0_kclass(spec, chi, p).items():
            dim = n if not stratum else poset.flat(stratum).dim
            value += coeff * hrr_euler(dim, degree, c1)
    result = (-1) ** (n - p) * value
    if result.denominator != 1:
        raise InvariantViolation(f"HRR integral {result} is not an integer")
    return int(result)


def hrr_table(spec: CoverSpec) -> EigenHodgeTable:
    labels, conj = _labels(spec)
    n = spec.dim
    entries = {}
    provenance = {}
    for chi in spec.characters():
        if chi.is_trivial:
            entries[chi.label] = _base_grid(n, isinstance(spec.base, ProductP1Base))
            provenance[chi.label] = "base"
            continue
        entries[chi.label] = _grid(n, {(p, n - p): hodge_via_hrr(spec, chi, p) for p in range(n + 1)})
        provenance[chi.label] = "HRR"
    return EigenHodgeTable(n, tuple(labels), entries, provenance, spec.group.zero, conj)


# ---------------------------------------------------------------------------
# condition (b)


@dataclass(frozen=True)
class ConditionB:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds, "equality": self.equality}


def condition_b_check(spec: CoverSpec, r: int | None = None, table: EigenHodgeTable | None = None) -> ConditionB:
    """Compare phi(d) h^{0,r}_{eps^(d-1)} with dim H^r_nt for a cyclic cover."""
    if not spec.is_cyclic:
        raise CoverError("condition (b) is stated for cyclic covers")
    r = spec.dim if r is None else r
    table = table or eigen_hodge(spec)
    d = spec.degree
    lhs = euler_phi(d) * table.h(0, r, (d - 1,))
    rhs = table.nontrivial_dimension(r)
    return ConditionB(lhs, rhs)
