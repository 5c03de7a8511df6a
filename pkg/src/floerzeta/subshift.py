"""Subshifts of finite type and signed families of them.

A signed family ``(A_i, eps_i)`` encodes the Nielsen numbers of a
pseudo-Anosov map through ``N(f^n) = sum_i eps_i tr(A_i^n)``; its zeta
function is ``prod_i det(I - A_i z)^(-eps_i)``. Reading that product as the
second symplectic zeta function is conjectural; the identity between the
product and the trace sequence is plain linear algebra and is what gets
checked here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .exact_algebra import (
    IntegerMatrix,
    Polynomial,
    RationalFunction,
    as_matrix,
    matpow,
    matrix_powers,
    reversed_char_poly,
    trace,
)

ENUMERATION_MAX_N = 12
ENUMERATION_MAX_ALPHABET = 6
_CHUNK = 1 << 20


class SubshiftInputError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class Subshift:
    transition: IntegerMatrix

    def __init__(self, transition):
        m = as_matrix(transition)
        bad = {x for row in m for x in row} - {0, 1}
        if bad:
            raise SubshiftInputError(f"transition entries must be 0 or 1, found {sorted(bad)}")
        object.__setattr__(self, "transition", m)

    @property
    def alphabet_size(self) -> int:
        return len(self.transition)


@dataclass(frozen=True)
class SignedSubshiftFamily:
    pieces: tuple[tuple[Subshift, int], ...]

    def __init__(self, pieces: Iterable[tuple]):
        ps = []
        for shift, sign in pieces:
            if sign not in (1, -1):
                raise SubshiftInputError(f"sign must be +1 or -1, got {sign}")
            ps.append((shift if isinstance(shift, Subshift) else Subshift(shift), int(sign)))
        if not ps:
            raise SubshiftInputError("a family needs at least one piece")
        object.__setattr__(self, "pieces", tuple(ps))


def trace_count(s: Subshift, n: int) -> int:
    """Number of fixed points of ``sigma^n``: ``tr A^n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return trace(matpow(s.transition, n))


def brute_force_count(
    s: Subshift,
    n: int,
    max_n: int = ENUMERATION_MAX_N,
    max_alphabet: int = ENUMERATION_MAX_ALPHABET,
) -> int:
    """Count admissible cyclic words ``x_0 .. x_{n-1}`` by enumerating them.

    Words are grown symbol by symbol along allowed transitions; every row of
    the frontier is one distinct admissible open word, of which only the
    first and last symbols are kept. Frontiers above ``_CHUNK`` rows are split
    and processed depth-first so memory stays bounded.
    """
    k = s.alphabet_size
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n or k > max_alphabet:
        raise EnumerationLimitError(
            f"enumeration of {k}^{n} words exceeds cap (n <= {max_n}, alphabet <= {max_alphabet})"
        )
    a = np.asarray(s.transition, dtype=bool)
    out_deg = a.sum(axis=1)
    # succ[i, j] = j-th allowed successor of symbol i (padded)
    succ = np.zeros((k, k), dtype=np.int8)
    for i in range(k):
        row = np.flatnonzero(a[i])
        succ[i, : len(row)] = row
    start = np.arange(k, dtype=np.int8)
    stack = [(start, start.copy(), 1)]
    total = 0
    while stack:
        first, last, length = stack.pop()
        if length == n:
            total += int(np.count_nonzero(a[last, first]))
            continue
        reps = out_deg[last]
        new_first = np.repeat(first, reps)
        parent = np.repeat(last, reps)
        offsets = np.repeat(np.cumsum(reps) - reps, reps)
        new_last = succ[parent, np.arange(len(parent)) - offsets]
        if len(new_first) > _CHUNK:
            for lo in range(0, len(new_first), _CHUNK):
                stack.append((new_first[lo : lo + _CHUNK], new_last[lo : lo + _CHUNK], length + 1))
        else:
            stack.append((new_first, new_last, length + 1))
    return total


def naive_count(s: Subshift, n: int) -> int:
    """Pure itertools enumeration over all ``k^n`` words; tiny inputs only."""
    k = s.alphabet_size
    a = s.transition
    return sum(
        all(a[w[i]][w[(i + 1) % n]] for i in range(n)) for w in itertools.product(range(k), repeat=n)
    )


def trace_formula(f: SignedSubshiftFamily, n: int) -> int:
    return sum(sign * trace_count(s, n) for s, sign in f.pieces)


def trace_formula_sequence(f: SignedSubshiftFamily, count: int) -> list[int]:
    out = [0] * count
    for s, sign in f.pieces:
        for i, p in enumerate(matrix_powers(s.transition, count)):
            out[i] += sign * trace(p)
    return out


def subshift_zeta(f: SignedSubshiftFamily) -> RationalFunction:
    num = Polynomial.constant(1)
    den = Polynomial.constant(1)
    for s, sign in f.pieces:
        if sign > 0:
            den = den * reversed_char_poly(s.transition)
        else:
            num = num * reversed_char_poly(s.transition)
    return RationalFunction(num, den)
