"""Hyperbolic linear maps of the 2-torus.

Nielsen numbers, Floer dimensions and the sign rule that turns the Lefschetz
zeta function into the Nielsen (= second symplectic) zeta function. The
eigenvalues ``(t +- sqrt(t^2 - 4)) / 2`` are never evaluated in floating
point here; comparisons against +-1 are decided in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .exact_algebra import IntegerMatrix, RationalFunction, as_matrix, matpow, trace
from .homology import GradedHomologyAction, lefschetz_zeta


class TorusInputError(ValueError):
    """The matrix is not a 2x2 integer matrix of determinant 1."""


class NotHyperbolicError(ValueError):
    """The map has an eigenvalue of modulus one."""


def _det2(m: IntegerMatrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _checked(m) -> IntegerMatrix:
    m = as_matrix(m)
    if len(m) != 2:
        raise TorusInputError(f"torus map must be 2x2, got {len(m)}x{len(m)}")
    if _det2(m) != 1:
        raise TorusInputError(f"torus map must have determinant 1 (symplectic), got det = {_det2(m)}")
    return m


def is_hyperbolic(m) -> bool:
    m = _checked(m)
    return abs(trace(m)) > 2


@dataclass(frozen=True)
class TorusMap:
    matrix: IntegerMatrix
    hyperbolic: bool

    def __init__(self, matrix):
        m = _checked(matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "hyperbolic", abs(trace(m)) > 2)

    @property
    def trace(self) -> int:
        return trace(self.matrix)

    def homology_action(self) -> GradedHomologyAction:
        return GradedHomologyAction.torus(self.matrix)

    def require_hyperbolic(self) -> None:
        if not self.hyperbolic:
            raise NotHyperbolicError(
                f"torus map with trace {self.trace} is not hyperbolic (need |trace| > 2)"
            )


def _as_torus(t) -> TorusMap:
    return t if isinstance(t, TorusMap) else TorusMap(t)


def nielsen_number(t, n: int) -> int:
    """``N(phi^n) = |det(I - A^n)| = |2 - tr A^n|``."""
    t = _as_torus(t)
    t.require_hyperbolic()
    if n < 1:
        raise ValueError("n must be >= 1")
    p = matpow(t.matrix, n)
    return abs((1 - p[0][0]) * (1 - p[1][1]) - p[0][1] * p[1][0])


def floer_dimension(t, n: int) -> int:
    """Total dimension of ``HF_*(phi^n)``; equal to the Nielsen number on the torus."""
    return nielsen_number(t, n)


@dataclass(frozen=True)
class SignData:
    r: int  # eigenvalues with |lambda| > 1
    p: int  # eigenvalues < -1
    sigma: int


def _surd_sign(a: int, s: int, disc: int) -> int:
    """Sign of ``a + s*sqrt(disc)`` for ``s in {+1, -1}``, ``disc >= 0``."""
    if s > 0:
        if a >= 0:
            return 1 if (a > 0 or disc > 0) else 0
        # sqrt(disc) vs -a > 0
        diff = disc - a * a
    else:
        if a <= 0:
            return -1 if (a < 0 or disc > 0) else 0
        diff = a * a - disc
    return (diff > 0) - (diff < 0)


def sign_data(t) -> SignData:
    t = _as_torus(t)
    t.require_hyperbolic()
    tr = t.trace
    disc = tr * tr - 4
    r = p = 0
    for s in (1, -1):
        # lambda = (tr + s sqrt(disc)) / 2; lambda - c has the sign of (tr - 2c) + s sqrt(disc)
        gt_one = _surd_sign(tr - 2, s, disc) > 0
        lt_minus_one = _surd_sign(tr + 2, s, disc) < 0
        r += gt_one or lt_minus_one
        p += lt_minus_one
    return SignData(r=r, p=p, sigma=(-1) ** p)


def eigenvalues_float(t) -> tuple[float, float]:
    """Floating eigenvalues, for reporting only."""
    t = _as_torus(t)
    tr = t.trace
    disc = tr * tr - 4
    root = math.sqrt(disc) if disc >= 0 else complex(0, math.sqrt(-disc))
    return ((tr + root) / 2, (tr - root) / 2)


def torus_zeta(t) -> RationalFunction:
    """Nielsen zeta ``(L_phi(sigma z))^{(-1)^r}``."""
    t = _as_torus(t)
    sd = sign_data(t)
    lz = lefschetz_zeta(t.homology_action()).scale_variable(sd.sigma)
    return lz if sd.r % 2 == 0 else lz.inverse()


def lattice_fixed_point_count(t, n: int, max_box: int = 4_000_000) -> int:
    """Count fixed points of ``A^n`` on ``R^2/Z^2`` by enumeration.

    ``x`` is fixed iff ``M x = k`` with ``M = A^n - I`` and ``k`` integral, so the
    fixed points in ``[0,1)^2`` correspond one-to-one to integer points ``k``
    of the half-open parallelogram ``M [0,1)^2``. Those are enumerated over
    its bounding box and tested with integer arithmetic via ``adj(M)``.
    """
    t = _as_torus(t)
    p = matpow(t.matrix, n)
    a, b, c, d = p[0][0] - 1, p[0][1], p[1][0], p[1][1] - 1
    det = a * d - b * c
    if det == 0:
        raise NotHyperbolicError("A^n - I is singular: fixed points are not isolated")
    xs = [0, a, b, a + b]
    ys = [0, c, d, c + d]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if (x1 - x0 + 1) * (y1 - y0 + 1) > max_box:
        raise OverflowError(f"bounding box of {(x1 - x0 + 1) * (y1 - y0 + 1)} points exceeds cap {max_box}")
    if max(abs(v) for v in (a, b, c, d, x0, x1, y0, y1)) > 2**20:
        raise OverflowError("entries too large for the vectorized oracle")
    kx = np.arange(x0, x1 + 1, dtype=np.int64)[:, None]
    ky = np.arange(y0, y1 + 1, dtype=np.int64)[None, :]
    # adj(M) k = det * x, need 0 <= x < 1 componentwise
    u = d * kx - b * ky
    v = -c * kx + a * ky
    if det > 0:
        inside = (u >= 0) & (u < det) & (v >= 0) & (v < det)
    else:
        inside = (u <= 0) & (u > det) & (v <= 0) & (v > det)
    return int(np.count_nonzero(inside))
