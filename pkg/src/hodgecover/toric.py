"""Local models y^d = x_1^a_1 ... x_n^a_n and diagonal forms of abelian local covers."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from hodgecover.algebra.smith import IntMatrix, as_int_matrix, smith_normal_form

MAX_DEGREE = 12
MAX_VARIABLES = 4


class ToricError(ValueError):
    pass


@dataclass(frozen=True)
class ExponentData:
    exponents: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if self.degree < 1:
            raise ToricError(f"degree must be >= 1, got {self.degree}")
        if any(a < 0 for a in self.exponents):
            raise ToricError("exponents must be nonnegative")

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "degree": self.degree}


@dataclass(frozen=True)
class Reduction:
    reduced: ExponentData
    components: int
    smooth_factors: int

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced.to_json(),
            "components": self.components,
            "smooth_factors": self.smooth_factors,
        }


def reduce_exponents(e: ExponentData) -> Reduction:
    """Split off the g = gcd(a, d) isomorphic components and the variables with a_i = 0."""
    g = math.gcd(e.degree, *e.exponents)
    kept = tuple(a // g for a in e.exponents if a)
    return Reduction(ExponentData(kept, e.degree // g), g, len(e.exponents) - len(kept))


@dataclass(frozen=True)
class SemigroupData:
    """Semigroup generated by d e_1, ..., d e_n and (a_1, ..., a_n), with its saturation."""

    data: ExponentData
    generators: tuple[tuple[int, ...], ...]
    cone_rays: tuple[tuple[int, ...], ...]
    lattice_index: int
    hilbert_basis: tuple[tuple[int, ...], ...]
    saturated: bool

    @property
    def smooth(self) -> bool:
        """The saturation is a polynomial ring exactly when the Hilbert basis has n elements."""
        return len(self.hilbert_basis) == len(self.data.exponents)

    def to_json(self) -> dict:
        return {
            "exponents": list(self.data.exponents),
            "degree": self.data.degree,
            "generators": [list(v) for v in self.generators],
            "cone_rays": [list(v) for v in self.cone_rays],
            "lattice_index": self.lattice_index,
            "hilbert_basis": [list(v) for v in self.hilbert_basis],
            "saturated": self.saturated,
            "smooth": self.smooth,
        }


def _in_semigroup(x: Sequence[int], a: Sequence[int], d: int) -> bool:
    """x = sum c_i d e_i + m a with c, m >= 0."""
    m = 0
    while all(m * ai <= xi for ai, xi in zip(a, x)):
        if all((xi - m * ai) % d == 0 for ai, xi in zip(a, x)):
            return True
        m += 1
    return False


def saturation_hilbert_basis(e: ExponentData) -> SemigroupData:
    a, d = e.exponents, e.degree
    n = len(a)
    if n == 0 or any(x == 0 for x in a):
        raise ToricError("exponents must be positive; run reduce_exponents first")
    if math.gcd(d, *a) != 1:
        raise ToricError("gcd(a, d) must be 1; run reduce_exponents first")
    if d > MAX_DEGREE or n > MAX_VARIABLES:
        raise ToricError(
            f"model too large for enumeration: need d <= {MAX_DEGREE} and n <= {MAX_VARIABLES}, got d={d}, n={n}"
        )
    residues = {tuple(k * x % d for x in a) for k in range(d)}
    # every minimal generator of the saturated cone lies in the box [0, d]^n
    box = sorted(
        p
        for p in itertools.product(range(d + 1), repeat=n)
        if any(p) and tuple(x % d for x in p) in residues
    )
    points = set(box)
    basis = []
    for p in box:
        reducible = any(
            q != p and all(qi <= pi for qi, pi in zip(q, p)) and tuple(pi - qi for pi, qi in zip(p, q)) in points
            for q in box
        )
        if not reducible:
            basis.append(p)
    basis.sort(key=lambda v: (sum(v), [-x for x in v]))
    rays = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = tuple(tuple(d * x for x in r) for r in rays) + (tuple(a),)
    return SemigroupData(
        data=e,
        generators=gens,
        cone_rays=rays,
        lattice_index=d**n // len(residues),
        hilbert_basis=tuple(basis),
        saturated=all(_in_semigroup(v, a, d) for v in basis),
    )


@dataclass(frozen=True)
class LocalModel:
    """Equations y_i^(d_i) = prod_j x_j^(a_ij), with U * gamma * V = D."""

    factors: tuple[tuple[int, tuple[int, ...]], ...]
    U: IntMatrix
    V: IntMatrix
    D: IntMatrix

    @property
    def index(self) -> int:
        return math.prod(d for d, _ in self.factors)

    @property
    def nontrivial_factors(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        return tuple(f for f in self.factors if f[0] > 1)

    def to_json(self) -> dict:
        return {
            "factors": [{"order": d, "exponents": list(row)} for d, row in self.factors],
            "index": self.index,
            "U": [list(r) for r in self.U],
            "V": [list(r) for r in self.V],
            "D": [list(r) for r in self.D],
        }


def local_abelian_model(gamma: Sequence[Sequence[int]]) -> LocalModel:
    """Diagonalize a finite-index sublattice of Z^k given by generating columns."""
    m = as_int_matrix(gamma)
    k = len(m)
    D, U, V = smith_normal_form(m)
    diag = [D[i][i] if i < len(D[0]) else 0 for i in range(k)]
    if any(x == 0 for x in diag):
        raise ToricError("columns do not generate a finite-index subgroup")
    factors = tuple((di, tuple(U[i][j] % di for j in range(k))) for i, di in enumerate(diag))
    return LocalModel(factors, U, V, D)
