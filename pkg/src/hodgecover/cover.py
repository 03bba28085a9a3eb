"""Branching data of finite abelian covers, character residues and eigensheaf twists."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from hodgecover.algebra.cyclotomic import Cyclotomic
from hodgecover.arrangement import Arrangement


class CoverError(ValueError):
    """Branching data that does not define a connected cover of the stated base."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; a bad spec slipped past validation."""


Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(o) for o in self.orders)
        if not orders or any(o < 1 for o in orders):
            raise CoverError(f"cyclic orders must be a nonempty list of integers >= 1, got {self.orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, d: int) -> "AbelianGroup":
        return cls((d,))

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def is_cyclic_presentation(self) -> bool:
        return len(self.orders) == 1

    def element(self, g: Sequence[int] | int) -> Element:
        if isinstance(g, int):
            g = (g,)
        if len(g) != len(self.orders):
            raise CoverError(f"group element {list(g)} needs {len(self.orders)} coordinates")
        return tuple(int(x) % o for x, o in zip(g, self.orders))

    def elements(self) -> list[Element]:
        return [tuple(e) for e in itertools.product(*(range(o) for o in self.orders))]

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % o for a, b, o in zip(g, h, self.orders))

    def scale(self, k: int, g: Element) -> Element:
        return tuple((k * a) % o for a, o in zip(g, self.orders))

    @property
    def zero(self) -> Element:
        return tuple(0 for _ in self.orders)

    def subgroup_order(self, gens: Sequence[Element]) -> int:
        """Order of the subgroup generated by ``gens`` (closure by breadth-first search)."""
        gens = [g for g in gens if any(g)]
        seen = {self.zero}
        frontier = [self.zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)

    def characters(self) -> list["Character"]:
        return [Character(self, c) for c in self.elements()]

    def trivial_character(self) -> "Character":
        return Character(self, self.zero)

    def to_json(self) -> dict:
        if self.is_cyclic_presentation:
            return {"type": "cyclic", "degree": self.orders[0]}
        return {"type": "abelian", "orders": list(self.orders)}


@dataclass(frozen=True)
class Character:
    """chi(g) = exp(2 pi i * sum_k c_k g_k / o_k) for exponent vector ``c``."""

    group: AbelianGroup
    exponents: Element

    def __post_init__(self):
        object.__setattr__(self, "exponents", self.group.element(self.exponents))

    @property
    def order(self) -> int:
        return math.lcm(*(o // math.gcd(c, o) for c, o in zip(self.exponents, self.group.orders)))

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def conjugate(self) -> "Character":
        return Character(self.group, tuple(-c for c in self.exponents))

    def phase(self, g: Element) -> Fraction:
        """The c in [0, 1) with chi(g) = exp(2 pi i c)."""
        total = sum(Fraction(c * x, o) for c, x, o in zip(self.exponents, g, self.group.orders))
        return total - math.floor(total)

    def value(self, g: Element) -> Cyclotomic:
        """chi(g) in the cyclotomic field of conductor ``order``."""
        ph = self.phase(g)
        n = self.order
        return Cyclotomic.zeta(n, int(ph * n))

    @property
    def label(self) -> Element:
        return self.exponents

    def __repr__(self) -> str:
        return f"Character{list(self.exponents)}"


@dataclass(frozen=True)
class ProjectiveSpaceBase:
    dim: int
    arrangement: Arrangement

    def to_json(self) -> dict:
        return {"type": "projective_space", "dim": self.dim}


@dataclass(frozen=True)
class ProductP1Base:
    """(P^1)^n with a number of distinct branch points on each factor."""

    points_per_factor: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.points_per_factor)

    def to_json(self) -> dict:
        return {"type": "product_p1", "points_per_factor": list(self.points_per_factor)}


Base = Union[ProjectiveSpaceBase, ProductP1Base]


@dataclass(frozen=True)
class Component:
    index: int
    degree: int  # degree as a hyperplane (P^n) or 1 on its factor (product)
    multiplicity: int
    factor: int | None = None  # only for product bases


@dataclass(frozen=True)
class CoverSpec:
    base: Base
    group: AbelianGroup
    monodromy: tuple[Element, ...]

    def __post_init__(self):
        mono = tuple(self.group.element(g) for g in self.monodromy)
        object.__setattr__(self, "monodromy", mono)
        if len(mono) != len(self.components):
            raise CoverError(
                f"{len(mono)} monodromy elements given for {len(self.components)} branch components"
            )

    @cached_property
    def components(self) -> tuple[Component, ...]:
        if isinstance(self.base, ProjectiveSpaceBase):
            return tuple(
                Component(j, 1, h.multiplicity) for j, h in enumerate(self.base.arrangement.hyperplanes)
            )
        comps = []
        for f, count in enumerate(self.base.points_per_factor):
            for _ in range(count):
                comps.append(Component(len(comps), 1, 1, f))
        return tuple(comps)

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def is_cyclic(self) -> bool:
        return self.group.is_cyclic_presentation

    @property
    def degree(self) -> int:
        return self.group.order

    @property
    def arrangement(self) -> Arrangement | None:
        return self.base.arrangement if isinstance(self.base, ProjectiveSpaceBase) else None

    def factor_components(self, f: int) -> list[Component]:
        return [c for c in self.components if c.factor == f]

    def characters(self) -> list[Character]:
        return self.group.characters()

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "cover": self.group.to_json(),
            "monodromy": [list(g) for g in self.monodromy],
        }


def cyclic_cover(arrangement: Arrangement, d: int, monodromy: Sequence[int] | None = None) -> CoverSpec:
    """Cyclic degree-d cover of P^n; monodromy defaults to the multiplicities mod d."""
    group = AbelianGroup.cyclic(d)
    mono = monodromy if monodromy is not None else [a % d for a in arrangement.multiplicities]
    return CoverSpec(ProjectiveSpaceBase(arrangement.dim, arrangement), group, tuple((m,) for m in mono))


def abelian_cover(arrangement: Arrangement, orders: Sequence[int], monodromy: Sequence[Sequence[int]]) -> CoverSpec:
    return CoverSpec(
        ProjectiveSpaceBase(arrangement.dim, arrangement), AbelianGroup(tuple(orders)), tuple(map(tuple, monodromy))
    )


def product_cover(
    points_per_factor: Sequence[int], d: int, monodromy: Sequence[int] | None = None
) -> CoverSpec:
    """Cyclic cover of (P^1)^n branched at the given points, each with monodromy 1 by default."""
    base = ProductP1Base(tuple(int(p) for p in points_per_factor))
    total = sum(base.points_per_factor)
    mono = monodromy if monodromy is not None else [1] * total
    return CoverSpec(base, AbelianGroup.cyclic(d), tuple((m,) for m in mono))


def validate_cover(spec: CoverSpec) -> CoverSpec:
    """Check the fundamental-group relation and connectedness; return the spec unchanged."""
    g = spec.group
    if isinstance(spec.base, ProjectiveSpaceBase):
        if spec.base.dim != spec.base.arrangement.dim:
            raise CoverError("base dimension does not match the arrangement")
        total = g.zero
        for comp, rho in zip(spec.components, spec.monodromy):
            total = g.add(total, g.scale(comp.degree, rho))
        if any(total):
            raise CoverError(
                "not a cover of the stated base: the weighted sum of monodromies "
                f"is {list(total)}, not the identity"
            )
    else:
        if spec.base.dim < 1:
            raise CoverError("product base needs at least one factor")
        for f in range(spec.base.dim):
            total = g.zero
            for comp in spec.factor_components(f):
                total = g.add(total, spec.monodromy[comp.index])
            if any(total):
                raise CoverError(
                    f"not a cover of the stated base: monodromies on factor {f} sum to {list(total)}"
                )
    if g.subgroup_order(spec.monodromy) != g.order:
        raise CoverError("cover disconnected; pass the image subgroup instead")
    return spec


def residues(spec: CoverSpec, chi: Character) -> tuple[Fraction, ...]:
    """r_j in [0, 1) with chi(rho(gamma_j)) = exp(2 pi i r_j)."""
    return tuple(chi.phase(rho) for rho in spec.monodromy)


def twist_integer(spec: CoverSpec, chi: Character) -> int:
    """Minus the degree of the chi-eigensheaf line bundle on P^n."""
    if not isinstance(spec.base, ProjectiveSpaceBase):
        raise CoverError("twist_integer needs a projective-space base; use factor_twists")
    total = sum(r * c.degree for r, c in zip(residues(spec, chi), spec.components))
    if total.denominator != 1:
        raise InvariantViolation(f"twist for {chi} is {total}, not an integer")
    return int(total)


def factor_twists(spec: CoverSpec, chi: Character) -> tuple[int, ...]:
    """Per-factor twists on (P^1)^n; the eigensheaf is O(-t_1, ..., -t_n)."""
    if not isinstance(spec.base, ProductP1Base):
        raise CoverError("factor_twists needs a product base")
    res = residues(spec, chi)
    out = []
    for f in range(spec.base.dim):
        total = sum(res[c.index] for c in spec.factor_components(f))
        if Fraction(total).denominator != 1:
            raise InvariantViolation(f"twist on factor {f} for {chi} is {total}, not an integer")
        out.append(int(total))
    return tuple(out)


def log_support(spec: CoverSpec, chi: Character) -> frozenset[int]:
    return frozenset(j for j, r in enumerate(residues(spec, chi)) if r != 0)
