"""Exact polynomial, rational-function and truncated power-series arithmetic.

Every coefficient is a :class:`fractions.Fraction`; nothing in this module
touches floating point. Integer matrices are plain tuples of tuples of
``int`` and are handled by the small helpers at the top of the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

DEFAULT_ORDER = 32

IntegerMatrix = tuple[tuple[int, ...], ...]


class DimensionError(ValueError):
    """Raised for non-square or mismatched matrices."""


class SeriesDomainError(ValueError):
    """Raised when exp/log is applied outside its formal domain."""


# -- integer matrices --------------------------------------------------------


def as_matrix(rows: Iterable[Iterable[int]]) -> IntegerMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or any(len(row) != len(m) for row in m):
        raise DimensionError(f"matrix must be square and nonempty, got shape {[len(r) for r in m]}")
    return m


def identity(n: int) -> IntegerMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if len(a[0]) != len(b):
        raise DimensionError("inner dimensions differ")
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matpow(a: IntegerMatrix, n: int) -> IntegerMatrix:
    if n < 0:
        raise ValueError("negative matrix power")
    result = identity(len(a))
    base = a
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def trace(a: IntegerMatrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


def matrix_powers(a: IntegerMatrix, count: int) -> list[IntegerMatrix]:
    """Return ``[a, a**2, ..., a**count]`` by repeated multiplication."""
    out = []
    p = a
    for _ in range(count):
        out.append(p)
        p = matmul(p, a)
    return out


# -- polynomials -------------------------------------------------------------


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial over Q; ``coefficients[k]`` multiplies ``z**k``.

    The zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = ()):
        object.__setattr__(self, "coefficients", _strip(coefficients))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(c * Fraction(other) for c in self.coefficients)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power; use RationalFunction")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coefficients):
                    rem[k - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else ())

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def scale_variable(self, c) -> Polynomial:
        """Return ``p(c*z)``."""
        c = Fraction(c)
        return Polynomial(a * c**k for k, a in enumerate(self.coefficients))

    def __call__(self, z):
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * z + a
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        acc = 0j
        for a in reversed(self.coefficients):
            acc = acc * z + float(a)
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coefficients]})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (zero if both inputs are zero)."""
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, _primitive(r)
    return a.monic()


def _primitive(p: Polynomial) -> Polynomial:
    # Content stripping keeps Euclid's remainders from blowing up.
    if p.is_zero():
        return p
    den = lcm(*(c.denominator for c in p.coefficients))
    ints = [int(c * den) for c in p.coefficients]
    g = gcd(*ints)
    return Polynomial(Fraction(x, g) for x in ints)


# -- rational functions ------------------------------------------------------


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient ``numerator/denominator`` with ``denominator(0) == 1``."""

    numerator: Polynomial
    denominator: Polynomial

    def __init__(self, numerator: Polynomial, denominator: Polynomial | None = None):
        if denominator is None:
            denominator = Polynomial.constant(1)
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(numerator, denominator)
        if numerator.is_zero():
            num, den = Polynomial(), Polynomial.constant(1)
        else:
            num, _ = numerator.divmod(g)
            den, _ = denominator.divmod(g)
        c0 = den[0]
        if c0 == 0:
            raise SeriesDomainError("denominator vanishes at z=0; no power-series expansion")
        object.__setattr__(self, "numerator", num * (1 / c0))
        object.__setattr__(self, "denominator", den * (1 / c0))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> RationalFunction:
        return cls(p)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.numerator * other.denominator, self.denominator * other.numerator)

    def inverse(self) -> RationalFunction:
        return RationalFunction(self.denominator, self.numerator)

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return RationalFunction(self.denominator**-n, self.numerator**-n)
        return RationalFunction(self.numerator**n, self.denominator**n)

    def scale_variable(self, c) -> RationalFunction:
        """Return ``f(c*z)``."""
        return RationalFunction(self.numerator.scale_variable(c), self.denominator.scale_variable(c))

    def evaluate_complex(self, z: complex) -> complex:
        return self.numerator.evaluate_complex(z) / self.denominator.evaluate_complex(z)

    def is_one(self) -> bool:
        return self.numerator == Polynomial.constant(1) and self.denominator == Polynomial.constant(1)


def reversed_char_poly(a: IntegerMatrix) -> Polynomial:
    """``det(I - A z)`` with integer coefficients, via Faddeev-LeVerrier.

    If ``det(xI - A) = x^n + c_1 x^(n-1) + ... + c_n`` then
    ``det(I - Az) = 1 + c_1 z + ... + c_n z^n``.
    """
    a = as_matrix(a)
    n = len(a)
    coeffs = [Fraction(1)]
    m = identity(n)
    for k in range(1, n + 1):
        am = matmul(a, m)
        ck = Fraction(-trace(am), k)
        coeffs.append(ck)
        # M_{k+1} = A M_k + c_k I, exact: every c_k is an integer.
        ck_int = int(ck)
        m = tuple(tuple(am[i][j] + (ck_int if i == j else 0) for j in range(n)) for i in range(n))
    return Polynomial(coeffs)


# -- truncated power series --------------------------------------------------


@dataclass(frozen=True)
class FormalPowerSeries:
    """Power series truncated after degree ``order`` (``order + 1`` coefficients)."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable, order: int | None = None):
        c = [Fraction(x) for x in coefficients]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def zero(cls, order: int) -> FormalPowerSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> FormalPowerSeries:
        return cls((1,), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def _check(self, other: FormalPowerSeries) -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: FormalPowerSeries) -> FormalPowerSeries:
        self._check(other)
        return FormalPowerSeries((a + b for a, b in zip(self.coefficients, other.coefficients)), self.order)

    def __sub__(self, other: FormalPowerSeries) -> FormalPowerSeries:
        self._check(other)
        return FormalPowerSeries((a - b for a, b in zip(self.coefficients, other.coefficients)), self.order)

    def __mul__(self, other) -> FormalPowerSeries:
        if not isinstance(other, FormalPowerSeries):
            return FormalPowerSeries((c * Fraction(other) for c in self.coefficients), self.order)
        self._check(other)
        K = self.order
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (K + 1)
        for i in range(K + 1):
            if a[i]:
                ai = a[i]
                for j in range(K + 1 - i):
                    out[i + j] += ai * b[j]
        return FormalPowerSeries(out, K)

    __rmul__ = __mul__

    def derivative_times_z(self) -> list[Fraction]:
        return [k * c for k, c in enumerate(self.coefficients)]

    def __repr__(self) -> str:
        return f"FormalPowerSeries({[str(c) for c in self.coefficients]})"


def series_exp(s: FormalPowerSeries) -> FormalPowerSeries:
    """``exp(s)`` to the same order, from ``n b_n = sum_k k s_k b_{n-k}``."""
    if s[0] != 0:
        raise SeriesDomainError(f"exp needs zero constant term, got {s[0]}")
    K = s.order
    ks = s.derivative_times_z()
    b = [Fraction(1)] + [Fraction(0)] * K
    for n in range(1, K + 1):
        b[n] = sum((ks[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return FormalPowerSeries(b, K)


def series_log(s: FormalPowerSeries) -> FormalPowerSeries:
    """``log(s)`` for ``s(0) == 1``, from ``z (log s)' * s = z s'``."""
    if s[0] != 1:
        raise SeriesDomainError(f"log needs constant term 1, got {s[0]}")
    K = s.order
    # m_n := n * l_n satisfies m_n = n s_n - sum_{k=1}^{n-1} m_k s_{n-k}
    m = [Fraction(0)] * (K + 1)
    for n in range(1, K + 1):
        m[n] = n * s[n] - sum((m[k] * s[n - k] for k in range(1, n)), Fraction(0))
    return FormalPowerSeries([Fraction(0)] + [m[n] / n for n in range(1, K + 1)], K)


def series_inverse(s: FormalPowerSeries) -> FormalPowerSeries:
    if s[0] == 0:
        raise SeriesDomainError("series with zero constant term is not invertible")
    K = s.order
    inv0 = 1 / s[0]
    b = [inv0] + [Fraction(0)] * K
    for n in range(1, K + 1):
        b[n] = -inv0 * sum((s[k] * b[n - k] for k in range(1, n + 1)), Fraction(0))
    return FormalPowerSeries(b, K)


def expand_polynomial(p: Polynomial, order: int) -> FormalPowerSeries:
    return FormalPowerSeries(p.coefficients[: order + 1], order)


def expand_rational(r: RationalFunction, order: int = DEFAULT_ORDER) -> FormalPowerSeries:
    """Taylor expansion at 0 by long division against ``denominator(0) == 1``."""
    if order < 1:
        raise ValueError("order must be positive")
    num, den = r.numerator, r.denominator
    out = [Fraction(0)] * (order + 1)
    for n in range(order + 1):
        out[n] = num[n] - sum((den[k] * out[n - k] for k in range(1, min(n, den.degree) + 1)), Fraction(0))
    return FormalPowerSeries(out, order)


def zeta_series_from_counts(counts: Sequence[int]) -> FormalPowerSeries:
    """``exp(sum_{n=1}^K a_n z^n / n)`` truncated at ``K = len(counts)``."""
    K = len(counts)
    if K < 1:
        raise ValueError("need at least one count")
    a = [0] + [int(x) for x in counts]
    b = [Fraction(1)] + [Fraction(0)] * K
    for n in range(1, K + 1):
        b[n] = sum((a[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return FormalPowerSeries(b, K)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
