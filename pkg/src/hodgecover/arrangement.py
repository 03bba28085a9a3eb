"""Weighted hyperplane arrangements in projective space and their intersection posets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from hodgecover.algebra.numbers import format_rational, parse_rational


class ArrangementError(ValueError):
    pass


def _normalize(normal: Sequence) -> tuple[Fraction, ...]:
    vec = tuple(Fraction(x) for x in normal)
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise ArrangementError("hyperplane normal vector is zero")
    return tuple(x / lead for x in vec)


def _primitive_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * den) for x in vec]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[Fraction, ...]
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "normal", _normalize(self.normal))
        if int(self.multiplicity) != self.multiplicity or self.multiplicity < 1:
            raise ArrangementError(f"multiplicity must be a positive integer, got {self.multiplicity}")
        object.__setattr__(self, "multiplicity", int(self.multiplicity))


@dataclass(frozen=True)
class Arrangement:
    """Distinct hyperplanes in P^dim, each carrying a multiplicity."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ArrangementError(f"ambient dimension must be >= 1, got {self.dim}")
        hs = tuple(
            h if isinstance(h, Hyperplane) else Hyperplane(*h) for h in self.hyperplanes
        )
        object.__setattr__(self, "hyperplanes", hs)
        seen: dict[tuple[Fraction, ...], int] = {}
        for j, h in enumerate(hs):
            if len(h.normal) != self.dim + 1:
                raise ArrangementError(
                    f"hyperplane {j} has {len(h.normal)} coordinates, expected {self.dim + 1}"
                )
            if h.normal in seen:
                raise ArrangementError(f"hyperplanes {seen[h.normal]} and {j} coincide")
            seen[h.normal] = j

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(h.multiplicity for h in self.hyperplanes)

    @property
    def is_reduced(self) -> bool:
        return all(a == 1 for a in self.multiplicities)

    def reduced(self) -> "Arrangement":
        return Arrangement(self.dim, tuple(Hyperplane(h.normal, 1) for h in self.hyperplanes))

    def with_multiplicities(self, multiplicities: Sequence[int]) -> "Arrangement":
        if len(multiplicities) != len(self):
            raise ArrangementError("one multiplicity per hyperplane is required")
        return Arrangement(
            self.dim, tuple(Hyperplane(h.normal, a) for h, a in zip(self.hyperplanes, multiplicities))
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "hyperplanes": [
                {"normal": [format_rational(x) for x in h.normal], "multiplicity": h.multiplicity}
                for h in self.hyperplanes
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Arrangement":
        hyperplanes = []
        for j, h in enumerate(obj["hyperplanes"]):
            try:
                normal = tuple(parse_rational(x) for x in h["normal"])
            except ValueError as exc:
                raise ArrangementError(f"hyperplanes[{j}].normal: {exc}") from None
            hyperplanes.append(Hyperplane(normal, h.get("multiplicity", 1)))
        return cls(int(obj["dim"]), tuple(hyperplanes))


def generic_arrangement(dim: int, count: int, multiplicities: Sequence[int] | None = None) -> Arrangement:
    """``count`` hyperplanes in general position, with normals on the moment curve.

    Any ``dim + 1`` of the normals ``(1, x, ..., x^dim)`` form a Vandermonde
    matrix with distinct nodes, hence are independent.
    """
    mults = multiplicities or [1] * count
    return Arrangement(
        dim,
        tuple(
            Hyperplane(tuple(Fraction(x) ** e for e in range(dim + 1)), a)
            for x, a in zip(range(1, count + 1), mults)
        ),
    )


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes.

    ``generators`` is the lexicographically first independent subset cutting
    out the flat; ``containing`` lists every hyperplane that contains it.
    """

    generators: tuple[int, ...]
    dim: int
    containing: frozenset[int]

    @property
    def codim(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Flat(dim={self.dim}, containing={sorted(self.containing)})"


@dataclass(frozen=True, eq=False)
class IntersectionPoset:
    """All distinct nonempty intersections of the arrangement's hyperplanes.

    Ordered by reverse inclusion: ``F <= G`` iff ``G`` is a subspace of ``F``.
    The ambient space itself is not a member.
    """

    arrangement: Arrangement
    flats: tuple[Flat, ...]
    _index: dict[frozenset[int], Flat] = field(repr=False)

    def flat(self, containing: Iterable[int]) -> Flat:
        return self._index[frozenset(containing)]

    def get(self, containing: Iterable[int]) -> Flat | None:
        return self._index.get(frozenset(containing))

    def contains(self, outer: Flat, inner: Flat) -> bool:
        """True iff ``inner`` is a subspace of ``outer``."""
        return outer.containing <= inner.containing

    def subflats(self, f: Flat) -> list[Flat]:
        return [g for g in self.flats if f.containing <= g.containing]

    def leq(self, f: Flat, g: Flat) -> bool:
        return self.contains(f, g)

    @cached_property
    def _mobius_cache(self) -> dict:
        return {}

    def mobius(self, f: Flat, g: Flat) -> int:
        """Mobius function mu(F, G) of the reverse-inclusion order (0 unless G is inside F)."""
        if not self.contains(f, g):
            return 0
        key = (f.containing, g.containing)
        cache = self._mobius_cache
        if key not in cache:
            if f.containing == g.containing:
                cache[key] = 1
            else:
                cache[key] = -sum(
                    self.mobius(f, k)
                    for k in self.flats
                    if f.containing <= k.containing < g.containing
                )
        return cache[key]

    @cached_property
    def open_euler(self) -> dict[frozenset[int], int]:
        """Euler characteristic of each open stratum, by peeling off smaller flats."""
        result: dict[frozenset[int], int] = {}
        for f in sorted(self.flats, key=lambda x: x.dim):
            below = sum(
                result[g.containing]
                for g in self.flats
                if g.dim < f.dim and f.containing <= g.containing
            )
            result[f.containing] = f.dim + 1 - below
        return result

    def to_json(self) -> list[dict]:
        return [
            {"dim": f.dim, "containing": sorted(f.containing), "generators": list(f.generators)}
            for f in self.flats
        ]


@lru_cache(maxsize=256)
def build_poset(arr: Arrangement) -> IntersectionPoset:
    """Enumerate every nonempty intersection subspace exactly once.

    Each flat carries an integer basis of its underlying linear subspace of
    C^(n+1); cutting by one more hyperplane is a single integer elimination
    step and containment is a dot-product test.
    """
    n = arr.dim
    normals = [_primitive_integer(h.normal) for h in arr.hyperplanes]
    count = len(normals)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    def containing_of(basis, start: frozenset[int]) -> frozenset[int]:
        extra = {
            k
            for k in range(count)
            if k not in start and all(dot(normals[k], v) == 0 for v in basis)
        }
        return start | extra

    ambient = [tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1)]
    index: dict[frozenset[int], Flat] = {}
    bases: dict[frozenset[int], list[tuple[int, ...]]] = {}
    frontier: list[tuple[tuple[int, ...], frozenset[int], list[tuple[int, ...]]]] = [
        ((), frozenset(), ambient)
    ]
    while frontier:
        nxt = []
        for gens, contained, basis in frontier:
            if len(basis) == 1:
                continue  # a point: cutting further gives the empty set
            last = gens[-1] if gens else -1
            for j in range(last + 1, count):
                if j in contained:
                    continue
                w = [dot(normals[j], v) for v in basis]
                piv = next(i for i, x in enumerate(w) if x != 0)
                new_basis = []
                for i, v in enumerate(basis):
                    if i == piv:
                        continue
                    vec = tuple(w[piv] * a - w[i] * b for a, b in zip(v, basis[piv]))
                    g = math.gcd(*vec)
                    new_basis.append(tuple(a // g for a in vec) if g > 1 else vec)
                key = containing_of(new_basis, contained | {j})
                if key in index:
                    continue
                flat = Flat(gens + (j,), len(new_basis) - 1, key)
                index[key] = flat
                bases[key] = new_basis
                nxt.append((flat.generators, key, new_basis))
        frontier = nxt
    flats = tuple(sorted(index.values(), key=lambda f: (-f.dim, sorted(f.containing))))
    return IntersectionPoset(arr, flats, index)


def is_normal_crossing(arr: Arrangement) -> tuple[bool, list[Flat]]:
    """Normal crossings of the reduced arrangement: every flat lies on exactly codim-many hyperplanes."""
    poset = build_poset(arr)
    bad = [f for f in poset.flats if len(f.containing) != f.codim]
    return not bad, bad


def incidence_number(arr: Arrangement, f: Flat) -> int:
    return sum(arr.hyperplanes[j].multiplicity for j in f.containing)


def essential_incidence_numbers(arr: Arrangement) -> set[int]:
    _, bad = is_normal_crossing(arr)
    return {incidence_number(arr, f) for f in bad}


@dataclass(frozen=True)
class CoverHypotheses:
    degree: int
    multiplicities_coprime: bool
    essential_incidence_coprime: bool
    arrangement_type: bool
    offending_multiplicities: tuple[int, ...]
    offending_incidences: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.multiplicities_coprime and self.essential_incidence_coprime and self.arrangement_type

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "multiplicities_coprime": self.multiplicities_coprime,
            "essential_incidence_coprime": self.essential_incidence_coprime,
            "arrangement_type": self.arrangement_type,
            "offending_multiplicities": list(self.offending_multiplicities),
            "offending_incidences": list(self.offending_incidences),
            "passed": self.passed,
        }


def check_cover_hypotheses(arr: Arrangement, d: int) -> CoverHypotheses:
    """Coprimality of multiplicities and essential incidence numbers with the degree."""
    if d < 2:
        raise ValueError(f"cover degree must be >= 2, got {d}")
    bad_mult = sorted({a for a in arr.multiplicities if math.gcd(a, d) != 1})
    bad_inc = sorted(x for x in essential_incidence_numbers(arr) if math.gcd(x, d) != 1)
    return CoverHypotheses(
        degree=d,
        multiplicities_coprime=not bad_mult,
        essential_incidence_coprime=not bad_inc,
        arrangement_type=True,
        offending_multiplicities=tuple(bad_mult),
        offending_incidences=tuple(bad_inc),
    )


def resolution_pullback_coefficients(arr: Arrangement) -> list[tuple[Flat, int]]:
    """Blow-up centres (non-normal-crossing flats by increasing dimension) and exceptional multiplicities."""
    _, bad = is_normal_crossing(arr)
    ordered = sorted(bad, key=lambda f: (f.dim, sorted(f.containing)))
    return [(f, incidence_number(arr, f)) for f in ordered]


def stratum_euler(poset: IntersectionPoset, f: Flat) -> int:
    """Euler characteristic of the open stratum of ``f`` via Mobius inversion.

    Closed flats are projective spaces, so e(G) = dim G + 1.
    """
    return sum(poset.mobius(f, g) * (g.dim + 1) for g in poset.subflats(f))


def complement_euler(arr: Arrangement) -> int:
    poset = build_poset(arr)
    return arr.dim + 1 - sum(poset.open_euler.values())
