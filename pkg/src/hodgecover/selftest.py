"""Identity suites run by ``hodgecover selftest``."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable

from hodgecover.algebra.numbers import euler_phi, is_prime
from hodgecover.algebra.smith import determinant, is_smith_normal_form, matmul, smith_normal_form
from hodgecover.arrangement import generic_arrangement
from hodgecover.bounds import dim_h_nt, euler_cover, hodge_cycle_bound
from hodgecover.characters import characters_abelian, phi_invariant, quaternion_table, rational_span
from hodgecover.cover import AbelianGroup, cyclic_cover, product_cover
from hodgecover.hodge import condition_b_check, eigen_hodge, hodge_via_hrr, hrr_table
from hodgecover.toric import ExponentData, reduce_exponents, saturation_hilbert_basis


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


SMALL_ABELIAN = [
    (1,), (2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4), (2, 2, 2),
    (9,), (3, 3), (10,), (11,), (12,), (2, 6),
]


def generic_cyclic(n: int, d: int):
    return cyclic_cover(generic_arrangement(n, d), d)


def binomial_identity(rng: random.Random) -> Check:
    for d in range(2, 13):
        for n in range(1, 6):
            totals = eigen_hodge(generic_cyclic(n, d)).antidiagonal_totals()
            if totals != [math.comb(d - 1, n + 1)] * (n + 1):
                return Check("binomial identity", False, f"d={d}, n={n}: {totals}")
    return Check("binomial identity", True, "2 <= d <= 12, 1 <= n <= 5")


def product_formula(rng: random.Random) -> Check:
    for d in range(2, 8):
        for n in range(1, 5):
            got = eigen_hodge(product_cover([d] * n, d)).nontrivial_dimension()
            if got != (d - 1) * (d - 2) ** n:
                return Check("product formula", False, f"d={d}, n={n}: {got}")
    return Check("product formula", True, "2 <= d <= 7, 1 <= n <= 4")


def condition_b_dichotomy(rng: random.Random) -> Check:
    for d in range(2, 14):
        for n in range(1, 6):
            b = condition_b_check(generic_cyclic(n, d))
            if is_prime(d) and not b.equality:
                return Check("condition (b) dichotomy", False, f"prime d={d}, n={n}: {b}")
            if not is_prime(d) and math.comb(d - 1, n + 1) > 0 and b.holds:
                return Check("condition (b) dichotomy", False, f"composite d={d}, n={n}: {b}")
    return Check("condition (b) dichotomy", True, "2 <= d <= 13, 1 <= n <= 5")


def euler_hodge(rng: random.Random) -> Check:
    fixed = {3: 3, 4: 6}
    for d, e in fixed.items():
        if euler_cover(generic_cyclic(2, d)) != e:
            return Check("Euler-Hodge cross-check", False, f"e(Y) for d={d} lines")
    for d in range(2, 8):
        for n in (2, 3):
            spec = generic_cyclic(n, d)
            if dim_h_nt(spec) != eigen_hodge(spec).nontrivial_dimension():
                return Check("Euler-Hodge cross-check", False, f"d={d}, n={n}")
    return Check("Euler-Hodge cross-check", True, "d <= 7, n in {2, 3}")


def hrr_agreement(rng: random.Random) -> Check:
    for d in range(2, 13):
        for n in range(1, 4):
            spec = generic_cyclic(n, d)
            if not eigen_hodge(spec).same_numbers(hrr_table(spec)):
                return Check("HRR cross-oracle", False, f"d={d}, n={n}")
    genus_one = cyclic_cover(generic_arrangement(1, 4), 2)
    eps = genus_one.characters()[1]
    if hodge_via_hrr(genus_one, eps, 1) != 1:
        return Check("HRR cross-oracle", False, "genus-1 fixture")
    return Check("HRR cross-oracle", True, "d <= 12, n <= 3 and the genus-1 curve")


def brute_force_span(mult: dict, group: AbelianGroup) -> int:
    """Minimum of sum r_chi over Galois-stable r >= mult, orbits found by scaling exponents."""
    e = group.exponent
    units = [t for t in range(1, e + 1) if math.gcd(t, e) == 1]
    orbits: list[list] = []
    seen = set()
    for chi in group.elements():
        if chi not in seen:
            orbit = sorted({group.scale(t, chi) for t in units})
            seen.update(orbit)
            orbits.append(orbit)
    top = max(mult.values(), default=0)
    best = None
    for levels in itertools.product(range(top + 1), repeat=len(orbits)):
        if all(mult.get(c, 0) <= s for orbit, s in zip(orbits, levels) for c in orbit):
            size = sum(s * len(orbit) for orbit, s in zip(orbits, levels))
            best = size if best is None else min(best, size)
    return best


def rational_span_suite(rng: random.Random, samples: int = 100) -> Check:
    for orders in SMALL_ABELIAN:
        group = AbelianGroup(orders)
        table = characters_abelian(group)
        for _ in range(samples):
            mult = {c: rng.randint(0, 2) for c in group.elements()}
            if rational_span(mult, table) != brute_force_span(mult, group):
                return Check("rational span", False, f"group {orders}, multiplicities {mult}")
    for d in range(1, 13):
        table = characters_abelian(AbelianGroup.cyclic(d))
        for i in range(d):
            if phi_invariant((i,), table) != euler_phi(d // math.gcd(i, d)):
                return Check("rational span", False, f"Phi(eps^{i}) for d={d}")
    q8 = quaternion_table()
    if phi_invariant("rho", q8) != 2 or rational_span({"rho": 1}, q8) != 4:
        return Check("rational span", False, "quaternion group")
    return Check("rational span", True, f"{len(SMALL_ABELIAN)} groups x {samples} vectors, Phi examples")


def bound_values(rng: random.Random) -> Check:
    for d in (2, 3, 5, 7, 11, 13):
        spec = generic_cyclic(2, d)
        report = hodge_cycle_bound(eigen_hodge(spec), characters_abelian(spec.group), 2, 0)
        if report.bound != 0:
            return Check("Hodge-cycle bound", False, f"prime d={d}: {report.bound}")
    spec = generic_cyclic(2, 4)
    report = hodge_cycle_bound(eigen_hodge(spec), characters_abelian(spec.group), 2, 0)
    if report.bound != 1:
        return Check("Hodge-cycle bound", False, f"d=4: {report.bound}")
    return Check("Hodge-cycle bound", True, "prime d <= 13 give 0, d = 4 gives 1")


def random_matrix(rng: random.Random) -> list[list[int]]:
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    return [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]


def toric_fixtures(rng: random.Random, samples: int = 500) -> Check:
    for d in range(1, 13):
        for n in range(1, 5):
            data = reduce_exponents(ExponentData((1,) * n, d)).reduced
            if not saturation_hilbert_basis(data).saturated:
                return Check("toric fixtures", False, f"all-ones d={d}, n={n} not saturated")
    cusp = saturation_hilbert_basis(ExponentData((2,), 3))
    if cusp.saturated or cusp.hilbert_basis != ((1,),):
        return Check("toric fixtures", False, "cusp y^3 = x^2")
    for _ in range(samples):
        m = random_matrix(rng)
        D, U, V = smith_normal_form(m)
        if abs(determinant(U)) != 1 or abs(determinant(V)) != 1:
            return Check("toric fixtures", False, f"non-unimodular transform for {m}")
        if matmul(matmul(U, tuple(map(tuple, m))), V) != D or not is_smith_normal_form(D):
            return Check("toric fixtures", False, f"bad Smith form for {m}")
    return Check("toric fixtures", True, f"saturation fixtures, {samples} random Smith forms")


SUITE: list[Callable[[random.Random], Check]] = [
    binomial_identity,
    product_formula,
    condition_b_dichotomy,
    euler_hodge,
    hrr_agreement,
    rational_span_suite,
    bound_values,
    toric_fixtures,
]


def run_selftest(seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    results = []
    for suite in SUITE:
        try:
            results.append(suite(rng))
        except Exception as exc:  # a crash is a failed identity, reported by name
            results.append(Check(suite.__name__, False, f"{type(exc).__name__}: {exc}"))
    return results


__all__ = ["Check", "SUITE", "brute_force_span", "run_selftest"]
