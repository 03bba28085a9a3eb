"""Truncated bivariate power series in ``y`` and ``z`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from hodgecover.algebra.numbers import binomial


class BiSeries:
    """Dense truncated series ``sum c[i][j] y^i z^j`` with ``i <= max_y``, ``j <= max_z``.

    Instances are immutable. Arithmetic between two series requires equal
    truncation orders and keeps them.
    """

    __slots__ = ("max_y", "max_z", "_coeffs")

    def __init__(self, max_y: int, max_z: int, coeffs: Iterable[Iterable] | None = None):
        if max_y < 0 or max_z < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.max_y = max_y
        self.max_z = max_z
        if coeffs is None:
            grid = tuple(tuple(Fraction(0) for _ in range(max_z + 1)) for _ in range(max_y + 1))
        else:
            grid = tuple(tuple(Fraction(c) for c in row) for row in coeffs)
            if len(grid) != max_y + 1 or any(len(row) != max_z + 1 for row in grid):
                raise ValueError("coefficient grid does not match truncation orders")
        self._coeffs = grid

    @classmethod
    def from_dict(cls, max_y: int, max_z: int, terms: dict[tuple[int, int], object]) -> "BiSeries":
        grid = [[Fraction(0)] * (max_z + 1) for _ in range(max_y + 1)]
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in series term")
            if i <= max_y and j <= max_z:
                grid[i][j] += Fraction(c)
        return cls(max_y, max_z, grid)

    @classmethod
    def one(cls, max_y: int, max_z: int) -> "BiSeries":
        return cls.from_dict(max_y, max_z, {(0, 0): 1})

    def coefficient(self, i: int, j: int) -> Fraction:
        if not (0 <= i <= self.max_y and 0 <= j <= self.max_z):
            raise IndexError(f"y^{i} z^{j} is outside the truncation ({self.max_y}, {self.max_z})")
        return self._coeffs[i][j]

    def _check(self, other: "BiSeries") -> None:
        if (self.max_y, self.max_z) != (other.max_y, other.max_z):
            raise ValueError("series have different truncation orders")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        return BiSeries(
            self.max_y,
            self.max_z,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._coeffs, other._coeffs)],
        )

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.max_y, self.max_z, [[-a for a in row] for row in self._coeffs])

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiSeries(self.max_y, self.max_z, [[a * other for a in row] for row in self._coeffs])
        self._check(other)
        my, mz = self.max_y, self.max_z
        out = [[Fraction(0)] * (mz + 1) for _ in range(my + 1)]
        a, b = self._coeffs, other._coeffs
        for i1 in range(my + 1):
            for j1 in range(mz + 1):
                c1 = a[i1][j1]
                if not c1:
                    continue
                for i2 in range(my + 1 - i1):
                    row_b = b[i2]
                    row_out = out[i1 + i2]
                    for j2 in range(mz + 1 - j1):
                        c2 = row_b[j2]
                        if c2:
                            row_out[j1 + j2] += c1 * c2
        return BiSeries(my, mz, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiSeries":
        if exponent < 0:
            raise ValueError("use series_expand_binomial for negative powers")
        result = BiSeries.one(self.max_y, self.max_z)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.max_y, self.max_z) == (other.max_y, other.max_z) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.max_y, self.max_z, self._coeffs))

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {
            (i, j): c
            for i, row in enumerate(self._coeffs)
            for j, c in enumerate(row)
            if c
        }

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*y^{i}*z^{j}" for (i, j), c in sorted(self.terms().items())) or "0"
        return f"BiSeries({self.max_y}, {self.max_z}: {body})"


def series_expand_binomial(base: str, exponent: int, max_y: int, max_z: int) -> BiSeries:
    """Expand ``(1+yz)**exponent`` or ``(1-z)**exponent`` for any integer exponent."""
    terms: dict[tuple[int, int], int] = {}
    if base == "1+yz":
        for j in range(min(max_y, max_z) + 1):
            terms[(j, j)] = binomial(exponent, j)
    elif base == "1-z":
        for j in range(max_z + 1):
            terms[(0, j)] = (-1) ** j * binomial(exponent, j)
    else:
        raise ValueError(f"unsupported series base {base!r}; expected '1+yz' or '1-z'")
    return BiSeries.from_dict(max_y, max_z, terms)
