"""Character tables, Galois orbits and the rational span of a representation.

Abelian tables are generated; symmetric groups and the quaternion group are
built in; anything else is loaded from JSON with its Schur indices supplied.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Hashable, Mapping

from hodgecover.algebra.cyclotomic import Cyclotomic, galois_conjugate
from hodgecover.cover import AbelianGroup


class CharTableError(ValueError):
    pass


Label = Hashable


@dataclass(frozen=True, eq=False)
class CharTable:
    """Irreducible characters of a finite group; class 0 must be the identity."""

    order: int
    class_labels: tuple[str, ...]
    class_sizes: tuple[int, ...]
    labels: tuple[Label, ...]
    values: tuple[tuple[Cyclotomic, ...], ...]
    schur_indices: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        self.validate()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(row[0].to_rational()) for row in self.values)

    def index(self, label: Label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise CharTableError(f"no character labelled {label!r}") from None

    def degree(self, label: Label) -> int:
        return self.degrees[self.index(label)]

    def schur_index(self, label: Label) -> int:
        return self.schur_indices[self.index(label)]

    def conductor(self, label: Label) -> int:
        return math.lcm(*(v.conductor for v in self.values[self.index(label)]))

    @property
    def trivial(self) -> Label:
        one = Cyclotomic.rational(1)
        for label, row in zip(self.labels, self.values):
            if all(v == one for v in row):
                return label
        raise CharTableError("table has no trivial character")

    def conjugate_label(self, label: Label, t: int) -> Label:
        """Label of the row obtained by applying zeta -> zeta^t to every value."""
        i = self.index(label)
        n = self.conductor(label)
        row = tuple(galois_conjugate(v.lift(n), t % n) for v in self.values[i])
        for other, candidate in zip(self.labels, self.values):
            if candidate == row:
                return other
        raise CharTableError(f"table is not closed under Galois conjugation (row {label!r}, t={t})")

    def validate(self) -> None:
        k = len(self.class_labels)
        if len(self.class_sizes) != k or any(len(row) != k for row in self.values):
            raise CharTableError("class count does not match the value matrix")
        if len(self.labels) != len(self.values) or len(self.schur_indices) != len(self.values):
            raise CharTableError("labels, characters and Schur indices must have equal length")
        if len(self.values) != k:
            raise CharTableError(f"{len(self.values)} characters for {k} classes")
        if len(set(self.labels)) != len(self.labels):
            raise CharTableError("character labels must be distinct")
        if sum(self.class_sizes) != self.order or self.class_sizes[0] != 1:
            raise CharTableError("class sizes must sum to the group order with the identity class first")
        if any(m < 1 for m in self.schur_indices):
            raise CharTableError("Schur indices must be positive")
        for row in self.values:
            if not row[0].is_rational() or row[0].to_rational().denominator != 1 or row[0].to_rational() < 1:
                raise CharTableError("character degree at the identity class must be a positive integer")
        if sum(d * d for d in self.degrees) != self.order:
            raise CharTableError("sum of squared degrees differs from the group order")
        if all(v.is_rational() for row in self.values for v in row):
            rows = [[v.to_rational() for v in row] for row in self.values]
            zero, conj, const = Fraction(0), (lambda x: x), Fraction
        else:
            rows = self.values
            zero, conj, const = Cyclotomic.rational(0), Cyclotomic.conjugate, Cyclotomic.rational
        for a, ra in enumerate(rows):
            for b, rb in enumerate(rows):
                inner = zero
                for size, x, y in zip(self.class_sizes, ra, rb):
                    inner = inner + const(size) * x * conj(y)
                if inner != const(self.order if a == b else 0):
                    raise CharTableError(f"row orthogonality fails for characters {a} and {b}")
        for c in range(k):
            for c2 in range(k):
                total = zero
                for row in rows:
                    total = total + row[c] * conj(row[c2])
                expected = Fraction(self.order, self.class_sizes[c]) if c == c2 else 0
                if total != const(expected):
                    raise CharTableError(f"column orthogonality fails for classes {c} and {c2}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "classes": [{"label": l, "size": s} for l, s in zip(self.class_labels, self.class_sizes)],
            "characters": [
                {
                    "label": list(l) if isinstance(l, tuple) else l,
                    "values": [v.to_json() for v in row],
                    "schur_index": m,
                }
                for l, row, m in zip(self.labels, self.values, self.schur_indices)
            ],
        }


@dataclass(frozen=True)
class GaloisOrbit:
    members: tuple[Label, ...]
    conductor: int
    degree: int
    schur_index: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def sigma(self) -> int:
        """Dimension of the smallest rational representation containing one member."""
        return self.size * self.schur_index * self.degree

    def to_json(self) -> dict:
        return {
            "members": [list(m) if isinstance(m, tuple) else m for m in self.members],
            "conductor": self.conductor,
            "degree": self.degree,
            "schur_index": self.schur_index,
            "sigma": self.sigma,
        }


@lru_cache(maxsize=None)
def characters_abelian(group: AbelianGroup) -> CharTable:
    elements = group.elements()
    chars = group.characters()
    return CharTable(
        order=group.order,
        class_labels=tuple(",".join(map(str, g)) for g in elements),
        class_sizes=(1,) * len(elements),
        labels=tuple(c.label for c in chars),
        values=tuple(tuple(c.value(g) for g in elements) for c in chars),
        schur_indices=(1,) * len(chars),
        name="x".join(f"Z/{o}" for o in group.orders),
    )


@lru_cache(maxsize=None)
def galois_orbits(table: CharTable) -> tuple[GaloisOrbit, ...]:
    seen: set = set()
    orbits = []
    for label in table.labels:
        if label in seen:
            continue
        n = table.conductor(label)
        members = []
        for t in range(1, n + 1):
            if math.gcd(t, n) == 1:
                other = table.conjugate_label(label, t)
                if other not in members:
                    members.append(other)
        members.sort(key=table.index)
        ms = {table.schur_index(m) for m in members}
        if len(ms) != 1:
            raise CharTableError(f"Galois-conjugate characters {members} have different Schur indices")
        seen.update(members)
        orbits.append(GaloisOrbit(tuple(members), n, table.degree(label), ms.pop()))
    return tuple(orbits)


def orbit_of(label: Label, table: CharTable) -> GaloisOrbit:
    for orbit in galois_orbits(table):
        if label in orbit.members:
            return orbit
    raise CharTableError(f"no character labelled {label!r}")


def phi_invariant(label: Label, table: CharTable) -> int:
    """m(chi) times the degree of the character field Q(chi) over Q."""
    orbit = orbit_of(label, table)
    return orbit.schur_index * orbit.size


def span_contributions(multiplicities: Mapping[Label, int], table: CharTable) -> list[tuple[GaloisOrbit, int]]:
    """Per-orbit terms sigma(orbit) * max ceil(n_chi / m) of the rational span."""
    for label, n in multiplicities.items():
        table.index(label)
        if not isinstance(n, int) or n < 0:
            raise CharTableError(f"multiplicity of {label!r} must be a nonnegative integer, got {n!r}")
    out = []
    for orbit in galois_orbits(table):
        need = max(-(-multiplicities.get(c, 0) // orbit.schur_index) for c in orbit.members)
        out.append((orbit, orbit.sigma * need))
    return out


def rational_span(multiplicities: Mapping[Label, int], table: CharTable) -> int:
    return sum(c for _, c in span_contributions(multiplicities, table))


# ---------------------------------------------------------------------------
# built-in tables


def _partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return out


@lru_cache(maxsize=None)
def _mn_character(beta: frozenset[int], mu: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on a beta-set: strip rim hooks of sizes mu in turn."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beta:
            height = sum(1 for x in beta if b - r < x < b)
            total += (-1) ** height * _mn_character(beta - {b} | {b - r}, rest)
    return total


def _centralizer_order(mu: tuple[int, ...]) -> int:
    out = 1
    for part in set(mu):
        count = mu.count(part)
        out *= part**count * math.factorial(count)
    return out


def symmetric_group_table(n: int) -> CharTable:
    if not 1 <= n <= 10:
        raise CharTableError("built-in symmetric group tables cover 1 <= N <= 10")
    parts = _partitions(n)
    classes = sorted(parts, key=lambda mu: (-mu.count(1), mu))  # identity class first
    order = math.factorial(n)
    rows = []
    for lam in parts:
        length = len(lam)
        beta = frozenset(lam[i] + length - 1 - i for i in range(length))
        rows.append(tuple(Cyclotomic.rational(_mn_character(beta, mu)) for mu in classes))
    return CharTable(
        order=order,
        class_labels=tuple("".join(map(str, mu)) for mu in classes),
        class_sizes=tuple(order // _centralizer_order(mu) for mu in classes),
        labels=tuple("".join(map(str, lam)) for lam in parts),
        values=tuple(rows),
        schur_indices=(1,) * len(parts),
        name=f"S{n}",
    )


def quaternion_table() -> CharTable:
    r = Cyclotomic.rational
    rows = [
        (1, 1, 1, 1, 1),
        (1, 1, 1, -1, -1),
        (1, 1, -1, 1, -1),
        (1, 1, -1, -1, 1),
        (2, -2, 0, 0, 0),
    ]
    return CharTable(
        order=8,
        class_labels=("1", "-1", "i", "j", "k"),
        class_sizes=(1, 1, 2, 2, 2),
        labels=("trivial", "sign_i", "sign_j", "sign_k", "rho"),
        values=tuple(tuple(r(x) for x in row) for row in rows),
        schur_indices=(1, 1, 1, 1, 2),
        name="Q8",
    )


def table_from_json(obj: dict) -> CharTable:
    try:
        classes = obj["classes"]
        chars = obj["characters"]
        values = tuple(tuple(Cyclotomic.from_json(v) for v in c["values"]) for c in chars)
        return CharTable(
            order=int(obj.get("order", sum(int(c["size"]) for c in classes))),
            class_labels=tuple(str(c["label"]) for c in classes),
            class_sizes=tuple(int(c["size"]) for c in classes),
            labels=tuple(tuple(c["label"]) if isinstance(c["label"], list) else c["label"] for c in chars),
            values=values,
            schur_indices=tuple(int(c.get("schur_index", 1)) for c in chars),
            name=str(obj.get("name", "")),
        )
    except CharTableError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise CharTableError(f"malformed character table: {exc}") from exc


def load_char_table(source: str | Path | dict) -> CharTable:
    """Load a table from a JSON file or an already-parsed document; orthogonality is checked."""
    if isinstance(source, dict):
        return table_from_json(source)
    return table_from_json(json.loads(Path(source).read_text()))


def multiplicities_from_dimensions(dims: Mapping[Label, int], table: CharTable) -> dict[Label, int]:
    """Isotypic dimensions divided by chi(1); the division must be exact."""
    out = {}
    for label, dim in dims.items():
        q, r = divmod(dim, table.degree(label))
        if r:
            raise CharTableError(f"isotypic dimension {dim} of {label!r} is not a multiple of its degree")
        out[label] = q
    return out


def builtin_table(name: str) -> CharTable:
    """Tables by name: Q8, S<N>, Z/<d> or Z/<a>xZ/<b>..."""
    if name == "Q8":
        return quaternion_table()
    if name.startswith("S") and name[1:].isdigit():
        return symmetric_group_table(int(name[1:]))
    if name.startswith("Z/"):
        try:
            orders = tuple(int(p.removeprefix("Z/")) for p in name.split("x"))
        except ValueError:
            raise CharTableError(f"unknown table {name!r}") from None
        return characters_abelian(AbelianGroup(orders))
    raise CharTableError(f"unknown table {name!r}")


__all__ = [
    "CharTable",
    "CharTableError",
    "GaloisOrbit",
    "builtin_table",
    "characters_abelian",
    "galois_orbits",
    "load_char_table",
    "multiplicities_from_dimensions",
    "orbit_of",
    "phi_invariant",
    "quaternion_table",
    "rational_span",
    "span_contributions",
    "symmetric_group_table",
    "table_from_json",
]

