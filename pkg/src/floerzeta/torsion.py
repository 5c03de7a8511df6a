"""Reidemeister torsion of a mapping torus twisted by a unit scalar holonomy.

Two independent routes: the product of determinant moduli over the degrees
(:func:`torsion_direct`, complex LU determinants) and the reciprocal modulus of
the reduced Lefschetz zeta function at the holonomy (:func:`torsion_via_zeta`).
Moduli of ``det(I - lambda M)`` and ``det(I - lambda M^T)`` agree, so the
homology matrices stand in for the cohomology action.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .homology import GradedHomologyAction, lefschetz_zeta

UNIT_TOL = 1e-9
SINGULAR_TOL = 1e-9


class TorsionDomainError(ValueError):
    pass


@dataclass(frozen=True)
class UnitHolonomy:
    re: float
    im: float

    def __post_init__(self):
        r = float(self.re) ** 2 + float(self.im) ** 2
        if abs(r - 1.0) > UNIT_TOL:
            raise TorsionDomainError(f"holonomy must have modulus one, got |lambda|^2 = {r!r}")

    @classmethod
    def from_angle(cls, theta: float) -> UnitHolonomy:
        z = cmath.exp(1j * theta)
        return cls(z.real, z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def conjugate(self) -> UnitHolonomy:
        return UnitHolonomy(self.re, -self.im)


def torsion_direct(a: GradedHomologyAction, lam: UnitHolonomy) -> float:
    """``prod_i |det(I - lambda M_i)|^{(-1)^i}``."""
    z = lam.value
    tau = 1.0
    for i, m in enumerate(a.matrices):
        mat = np.asarray(m, dtype=complex)
        det = np.linalg.det(np.eye(len(m)) - z * mat)
        mod = abs(det)
        if mod < SINGULAR_TOL:
            raise TorsionDomainError(
                f"det(I - lambda M_{i}) vanishes at lambda={z}: twisted degree-{i} complex is not acyclic"
            )
        tau = tau / mod if i % 2 else tau * mod
    return float(tau)


def torsion_via_zeta(a: GradedHomologyAction, lam: UnitHolonomy) -> float:
    """``|L_phi(lambda)|^{-1}`` from the reduced rational function."""
    zeta = lefschetz_zeta(a)
    z = lam.value
    num = abs(zeta.numerator.evaluate_complex(z))
    den = abs(zeta.denominator.evaluate_complex(z))
    if num < SINGULAR_TOL:
        raise TorsionDomainError(f"zeta function vanishes at lambda={z}")
    if den < SINGULAR_TOL:
        raise TorsionDomainError(f"lambda={z} is a pole of the zeta function")
    return den / num
