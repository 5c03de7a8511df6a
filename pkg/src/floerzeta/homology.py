"""Lefschetz numbers and the Lefschetz zeta function of a graded homology action.

For a monotone symplectomorphism the first symplectic zeta function (built
from Floer Euler characteristics) coincides with the Lefschetz zeta function,
so :func:`euler_symplectic_zeta` is the same computation under that name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact_algebra import (
    IntegerMatrix,
    Polynomial,
    RationalFunction,
    as_matrix,
    matrix_powers,
    reversed_char_poly,
    trace,
)


class HomologyInputError(ValueError):
    pass


@dataclass(frozen=True)
class GradedHomologyAction:
    """Integer matrices of ``phi_*`` on ``H_k(M; Q)`` for ``k = 0..D``.

    ``surface=True`` additionally demands 1x1 matrices in the extreme degrees,
    as for a closed connected oriented surface.
    """

    matrices: tuple[IntegerMatrix, ...]
    surface: bool = False

    def __init__(self, matrices: Iterable[Iterable[Iterable[int]]], surface: bool = False):
        mats = tuple(as_matrix(m) for m in matrices)
        if not mats:
            raise HomologyInputError("a graded action needs at least one degree")
        if surface and (len(mats[0]) != 1 or len(mats[-1]) != 1):
            raise HomologyInputError("surface action must be 1x1 in degrees 0 and top")
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "surface", bool(surface))

    @property
    def top_degree(self) -> int:
        return len(self.matrices) - 1

    @classmethod
    def torus(cls, matrix: Sequence[Sequence[int]]) -> GradedHomologyAction:
        return cls([[[1]], matrix, [[1]]], surface=True)

    @classmethod
    def identity_surface(cls, genus: int) -> GradedHomologyAction:
        n = 2 * genus
        eye = [[int(i == j) for j in range(n)] for i in range(n)]
        mats = [[[1]], eye, [[1]]] if genus else [[[1]], [[1]]]
        return cls(mats, surface=True)

    def direct_sum(self, other: GradedHomologyAction) -> GradedHomologyAction:
        """Degree-wise block-diagonal sum (missing degrees treated as zero-dimensional)."""
        out = []
        for k in range(max(len(self.matrices), len(other.matrices))):
            blocks = [m[k] for m in (self.matrices, other.matrices) if k < len(m)]
            size = sum(len(b) for b in blocks)
            rows = [[0] * size for _ in range(size)]
            off = 0
            for b in blocks:
                for i, row in enumerate(b):
                    rows[off + i][off : off + len(row)] = row
                off += len(b)
            out.append(rows)
        return GradedHomologyAction(out)


def lefschetz_number(a: GradedHomologyAction, n: int) -> int:
    """``L(phi^n) = sum_k (-1)^k tr(phi_{*k}^n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return lefschetz_numbers(a, n)[-1]


def lefschetz_numbers(a: GradedHomologyAction, count: int) -> list[int]:
    """``[L(phi), ..., L(phi^count)]`` sharing the matrix powers."""
    totals = [0] * count
    for k, m in enumerate(a.matrices):
        sign = -1 if k % 2 else 1
        for i, p in enumerate(matrix_powers(m, count)):
            totals[i] += sign * trace(p)
    return totals


def lefschetz_zeta(a: GradedHomologyAction) -> RationalFunction:
    """``prod_k det(I - phi_{*k} z)^{(-1)^{k+1}}`` in reduced form."""
    num = Polynomial.constant(1)
    den = Polynomial.constant(1)
    for k, m in enumerate(a.matrices):
        if k % 2:
            num = num * reversed_char_poly(m)
        else:
            den = den * reversed_char_poly(m)
    return RationalFunction(num, den)


def euler_symplectic_zeta(a: GradedHomologyAction) -> RationalFunction:
    return lefschetz_zeta(a)
