"""Euler characteristics of covers, the Hodge-cycle bound and applicability reports."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any

from hodgecover.algebra.numbers import is_prime
from hodgecover.arrangement import (
    CoverHypotheses,
    build_poset,
    check_cover_hypotheses,
    complement_euler,
    is_normal_crossing,
)
from hodgecover.characters import (
    CharTable,
    characters_abelian,
    multiplicities_from_dimensions,
    rational_span,
    span_contributions,
)
from hodgecover.cover import CoverSpec, ProductP1Base, ProjectiveSpaceBase
from hodgecover.hodge import (
    ConditionB,
    EigenHodgeTable,
    HodgeUnavailable,
    condition_b_check,
    eigen_hodge,
    exact_hodge_failures,
)


class HypothesisFailure(Exception):
    """A computation whose hypotheses do not hold for the given cover."""


def _sheets(spec: CoverSpec, containing) -> int:
    g = spec.group
    return g.order // g.subgroup_order([spec.monodromy[j] for j in containing])


def euler_cover(spec: CoverSpec) -> int:
    """Topological Euler characteristic of the cover, summed over open strata.

    A stratum whose points lie on the components J has |G| / |G(J)|
    preimages over each point, G(J) being generated by the monodromies of J.
    """
    g = spec.group
    if isinstance(spec.base, ProjectiveSpaceBase):
        arr = spec.base.arrangement
        total = g.order * complement_euler(arr)
        for containing, e in build_poset(arr).open_euler.items():
            total += _sheets(spec, containing) * e
        return total
    per_factor = []
    for f, count in enumerate(spec.base.points_per_factor):
        options = [((), 2 - count)]  # the punctured line
        options += [((c.index,), 1) for c in spec.factor_components(f)]
        per_factor.append(options)
    total = 0
    for choice in itertools.product(*per_factor):
        containing = [j for comps, _ in choice for j in comps]
        total += _sheets(spec, containing) * math.prod(e for _, e in choice)
    return total


def base_euler(spec: CoverSpec) -> int:
    n = spec.dim
    return 2**n if isinstance(spec.base, ProductP1Base) else n + 1


def weak_lefschetz(spec: CoverSpec) -> tuple[bool, str]:
    """Whether cover and base share rational cohomology outside the middle degree."""
    if spec.degree == 1:
        return True, "trivial cover"
    if not exact_hodge_failures(spec):
        return True, "every nontrivial eigensheaf has cohomology only in the middle degree"
    return False, "some nontrivial eigensheaf may have cohomology off the middle degree"


def dim_h_nt(spec: CoverSpec) -> int:
    """dim H^n_nt as (-1)^n (e(Y) - e(base)); requires weak Lefschetz."""
    ok, why = weak_lefschetz(spec)
    if not ok:
        raise HypothesisFailure(f"weak Lefschetz not established ({why})")
    value = (-1) ** spec.dim * (euler_cover(spec) - base_euler(spec))
    if value < 0:
        raise HypothesisFailure(f"negative middle nontrivial dimension {value}")
    return value


def default_level(i: int) -> int:
    """Largest level whose band leaves the middle pieces out: i/2 - 1 for even i, (i - 3)/2 for odd i."""
    if i < 1:
        raise ValueError("degree must be at least 1")
    return i // 2 - 1 if i % 2 == 0 else max(0, (i - 3) // 2)


@dataclass(frozen=True)
class BoundReport:
    degree: int
    level: int
    dim_nt: int
    sigma: int
    raw: int
    contributions: tuple[dict, ...]
    per_piece_value: int

    @property
    def bound(self) -> int:
        return max(self.raw, 0)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "level": self.level,
            "dim_nt": self.dim_nt,
            "sigma": self.sigma,
            "bound": self.bound,
            "raw": self.raw,
            "contributions": list(self.contributions),
            "per_piece_value": self.per_piece_value,
        }


def _band_dims(table: EigenHodgeTable, i: int, k: int) -> dict:
    dims = {}
    for chi in table.nontrivial:
        low = sum(table.h(p, i - p, chi) for p in range(k + 1))
        high = sum(table.h(i - q, q, chi) for q in range(k + 1))
        dims[chi] = low + high
    return dims


def hodge_cycle_bound(table: EigenHodgeTable, char_table: CharTable, i: int, k: int) -> BoundReport:
    """dim H^i_nt minus the rational span of the band p <= k and its conjugate."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    if 2 * k >= i:
        raise ValueError(f"band overlaps its conjugate: need k < i/2, got i={i}, k={k}")
    dims = _band_dims(table, i, k)
    mult = multiplicities_from_dimensions(dims, char_table)
    contributions = tuple(
        {**orbit.to_json(), "multiplicities": [mult.get(c, 0) for c in orbit.members], "contribution": c}
        for orbit, c in span_contributions(mult, char_table)
        if any(mult.get(m, 0) for m in orbit.members)
    )
    sigma = sum(c["contribution"] for c in contributions)
    dim_nt = table.nontrivial_dimension(i)
    per_piece = 0
    for p in range(i + 1):
        q = i - p
        if p - q >= k:
            piece = {chi: table.h(p, q, chi) for chi in table.nontrivial}
            per_piece += rational_span(multiplicities_from_dimensions(piece, char_table), char_table)
    return BoundReport(i, k, dim_nt, sigma, dim_nt - sigma, contributions, dim_nt - per_piece)


@dataclass(frozen=True)
class Verdict:
    licensed: bool
    reason: str

    def __str__(self) -> str:
        return f"{'licensed' if self.licensed else 'not licensed'} ({self.reason})"

    def to_json(self) -> dict:
        return {"licensed": self.licensed, "reason": self.reason}


@dataclass(frozen=True)
class TheoremReport:
    dim: int
    group_order: int
    euler: int
    dim_nt: int | None
    normal_crossings: bool
    cover_hypotheses: CoverHypotheses | None
    degree_prime: bool | None
    condition_b: ConditionB | None
    weak_lefschetz: tuple[bool, str]
    hodge_failures: tuple[str, ...]
    beilinson_hodge: Verdict
    ghc: Verdict
    bound: BoundReport | None
    notes: tuple[str, ...] = field(default=())

    @property
    def hypotheses_failed(self) -> bool:
        cover_bad = self.cover_hypotheses is not None and not self.cover_hypotheses.passed
        return cover_bad or bool(self.hodge_failures)

    def to_json(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "group_order": self.group_order,
            "euler_characteristic": self.euler,
            "dim_h_nt": self.dim_nt,
            "hypotheses": {
                "normal_crossings": self.normal_crossings,
                "cover": self.cover_hypotheses.to_json() if self.cover_hypotheses else None,
                "degree_prime": self.degree_prime,
                "condition_b": self.condition_b.to_json() if self.condition_b else None,
                "weak_lefschetz": {"holds": self.weak_lefschetz[0], "note": self.weak_lefschetz[1]},
                "exact_hodge_failures": list(self.hodge_failures),
            },
            "conclusions": {
                "beilinson_hodge": self.beilinson_hodge.to_json(),
                "ghc_toroidal_resolution": self.ghc.to_json(),
                "hodge_cycle_bound": self.bound.to_json() if self.bound else None,
            },
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [
            f"dimension: {self.dim}",
            f"group order: {self.group_order}",
            f"Euler characteristic e(Y): {self.euler}",
            f"dim H^n_nt: {self.dim_nt if self.dim_nt is not None else 'unavailable'}",
            f"normal crossings: {'yes' if self.normal_crossings else 'no'}",
        ]
        if self.cover_hypotheses is not None:
            h = self.cover_hypotheses
            lines.append(
                f"multiplicities coprime to d: {'yes' if h.multiplicities_coprime else 'no'}"
                + (f" (offending {list(h.offending_multiplicities)})" if h.offending_multiplicities else "")
            )
            lines.append(
                f"essential incidences coprime to d: {'yes' if h.essential_incidence_coprime else 'no'}"
                + (f" (offending incidence {list(h.offending_incidences)})" if h.offending_incidences else "")
            )
        if self.degree_prime is not None:
            lines.append(f"d prime: {'yes' if self.degree_prime else 'no'}")
        if self.condition_b is not None:
            b = self.condition_b
            state = "equality" if b.equality else ("holds" if b.holds else "fails")
            lines.append(f"condition (b): {state} ({b.lhs} vs {b.rhs})")
        lines.append(f"weak Lefschetz: {'yes' if self.weak_lefschetz[0] else 'no'} ({self.weak_lefschetz[1]})")
        for failure in self.hodge_failures:
            lines.append(f"exact Hodge numbers unavailable: {failure}")
        lines.append(f"Beilinson-Hodge for U: {self.beilinson_hodge}")
        lines.append(f"GHC: {self.ghc}")
        if self.bound is not None:
            lines.append(
                f"Hodge-cycle bound (i={self.bound.degree}, k={self.bound.level}): {self.bound.bound}"
            )
        lines.extend(self.notes)
        return "\n".join(lines)


def _cyclic_hypotheses(spec: CoverSpec) -> CoverHypotheses:
    d = spec.degree
    arr = spec.base.arrangement.with_multiplicities([rho[0] or d for rho in spec.monodromy])
    return check_cover_hypotheses(arr, d)


def theorem_report(spec: CoverSpec, char_table: CharTable | None = None) -> TheoremReport:
    n = spec.dim
    euler = euler_cover(spec)
    wl = weak_lefschetz(spec)
    try:
        dim_nt = dim_h_nt(spec)
    except HypothesisFailure:
        dim_nt = None
    failures = tuple(exact_hodge_failures(spec))
    projective = isinstance(spec.base, ProjectiveSpaceBase)
    normal = is_normal_crossing(spec.base.arrangement)[0] if projective else True
    cyclic = spec.is_cyclic
    hyp = _cyclic_hypotheses(spec) if projective and cyclic and spec.degree >= 2 else None
    prime = is_prime(spec.degree) if cyclic else None

    table = None
    if not failures:
        try:
            table = eigen_hodge(spec)
        except HodgeUnavailable:
            table = None
    cond_b = condition_b_check(spec, table=table) if cyclic and table is not None else None

    if hyp is None:
        bh = Verdict(False, "stated for cyclic covers of projective space")
    elif hyp.passed:
        bh = Verdict(True, "multiplicities and essential incidences coprime to d")
    else:
        bh = Verdict(False, "coprimality to d fails")

    bound = None
    level0 = None
    if table is not None and n >= 1:
        char_table = char_table or characters_abelian(spec.group)
        level0 = hodge_cycle_bound(table, char_table, n, 0)
        bound = hodge_cycle_bound(table, char_table, n, default_level(n))

    if spec.degree < 2:
        ghc = Verdict(False, "trivial cover")
    elif not normal:
        ghc = Verdict(False, "branch arrangement is not in general position")
    elif not wl[0]:
        ghc = Verdict(False, "weak Lefschetz not established")
    elif table is None:
        ghc = Verdict(False, "exact Hodge numbers unavailable")
    elif cond_b is not None and cond_b.holds:
        if prime and cond_b.equality:
            ghc = Verdict(True, "d prime, condition (b) equality")
        else:
            ghc = Verdict(True, "condition (b) holds")
    elif level0 is not None and level0.raw <= 0:
        ghc = Verdict(True, "no sub-Hodge structure avoids the outer Hodge pieces")
    else:
        ghc = Verdict(False, "condition (b) fails" if cond_b is not None else "condition (b) not applicable")

    attach = bound if (cond_b is None or not cond_b.holds) else None
    return TheoremReport(
        dim=n,
        group_order=spec.degree,
        euler=euler,
        dim_nt=dim_nt,
        normal_crossings=normal,
        cover_hypotheses=hyp,
        degree_prime=prime,
        condition_b=cond_b,
        weak_lefschetz=wl,
        hodge_failures=failures,
        beilinson_hodge=bh,
        ghc=ghc,
        bound=attach,
    )
