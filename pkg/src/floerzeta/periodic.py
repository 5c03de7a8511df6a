"""Second symplectic zeta function of a periodic surface diffeomorphism.

The input is the Floer dimension ``N_d`` for every divisor ``d`` of the least
period ``m``; all other ``N_k`` follow from ``N_k = N_gcd(k, m)``. The zeta
function is then the finite product ``prod_{d | m} (1 - z^d)^(-P(d)/d)`` with
``P`` the Moebius inverse of ``N`` over the divisor lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .exact_algebra import FormalPowerSeries


class PeriodicInputError(ValueError):
    pass


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return (-1) ** len(f)


@dataclass(frozen=True)
class NielsenData:
    """``counts[d] = N_d`` for every divisor ``d`` of ``period``."""

    period: int
    counts: tuple[tuple[int, int], ...]

    def __init__(self, period: int, counts: Mapping[int, int]):
        if int(period) < 1:
            raise PeriodicInputError(f"period must be positive, got {period}")
        period = int(period)
        c = {int(k): int(v) for k, v in counts.items()}
        divs = divisors(period)
        extra = sorted(set(c) - set(divs))
        if extra:
            raise PeriodicInputError(f"counts given for non-divisors {extra} of period {period}")
        missing = [d for d in divs if d not in c]
        if missing:
            raise PeriodicInputError(f"missing counts for divisors {missing} of period {period}")
        neg = [d for d in divs if c[d] < 0]
        if neg:
            raise PeriodicInputError(f"negative counts at divisors {neg}")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "counts", tuple((d, c[d]) for d in divs))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __getitem__(self, d: int) -> int:
        return self.as_dict()[d]


def expand_counts(data: NielsenData, horizon: int) -> list[int]:
    """``[N_1, ..., N_horizon]`` via ``N_k = N_gcd(k, m)``."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    c = data.as_dict()
    return [c[gcd(k, data.period)] for k in range(1, horizon + 1)]


def p_coefficients_recursive(data: NielsenData) -> dict[int, int]:
    """``P(d) = N_d - sum_{d1 | d, d1 != d} P(d1)``."""
    c = data.as_dict()
    P: dict[int, int] = {}
    for d in divisors(data.period):
        P[d] = c[d] - sum(P[d1] for d1 in divisors(d) if d1 != d)
    return P


def p_coefficients_moebius(data: NielsenData) -> dict[int, int]:
    """``P(d) = sum_{d1 | d} mu(d1) N_{d/d1}``."""
    c = data.as_dict()
    return {d: sum(moebius(d1) * c[d // d1] for d1 in divisors(d)) for d in divisors(data.period)}


def p_coefficients(data: NielsenData) -> dict[int, int]:
    P = p_coefficients_recursive(data)
    explicit = p_coefficients_moebius(data)
    if P != explicit:  # pragma: no cover - would mean a broken divisor routine
        raise ArithmeticError(f"Moebius recursion {P} disagrees with explicit sum {explicit}")
    return P


@dataclass(frozen=True)
class CyclotomicProduct:
    """Formal product ``prod_d (1 - z^d)^{e_d}`` with rational exponents."""

    period: int
    factors: tuple[tuple[int, Fraction], ...]

    def __init__(self, period: int, factors: Mapping[int, Fraction]):
        fs = []
        for d in sorted(factors):
            e = Fraction(factors[d])
            if e == 0:
                continue
            if period % d:
                raise PeriodicInputError(f"factor index {d} does not divide period {period}")
            fs.append((int(d), e))
        object.__setattr__(self, "period", int(period))
        object.__setattr__(self, "factors", tuple(fs))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.factors)


def periodic_zeta(data: NielsenData) -> CyclotomicProduct:
    P = p_coefficients(data)
    return CyclotomicProduct(data.period, {d: Fraction(-p, d) for d, p in P.items() if p})


def prime_period_form(data: NielsenData) -> CyclotomicProduct:
    """``(1-z)^{-N_1} (1-z^m)^{(N_1 - N_m)/m}``, valid when ``m`` is prime."""
    m = data.period
    if not is_prime(m):
        raise PeriodicInputError(f"period {m} is not prime")
    n1, nm = data[1], data[m]
    return CyclotomicProduct(m, {1: Fraction(-n1), m: Fraction(n1 - nm, m)})


def binomial_series(exponent: Fraction, step: int, order: int) -> FormalPowerSeries:
    """``(1 - z^step)^exponent`` via the generalized binomial theorem."""
    out = [Fraction(0)] * (order + 1)
    coeff = Fraction(1)
    j = 0
    while j * step <= order:
        out[j * step] = coeff
        # binom(e, j+1)(-1)^{j+1} = binom(e, j)(-1)^j * (j - e)/(j + 1)
        coeff = coeff * (j - exponent) / (j + 1)
        j += 1
    return FormalPowerSeries(out, order)


def expand_cyclotomic(c: CyclotomicProduct, order: int) -> FormalPowerSeries:
    result = FormalPowerSeries.one(order)
    for d, e in c.factors:
        result = result * binomial_series(e, d, order)
    return result
