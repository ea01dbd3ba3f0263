"""Hermite and pseudo-Hermite polynomials and their product expansions.

``hermite(k)`` is the physicists' H_k (2x H_k = H_{k+1} + 2k H_{k-1}).
``pseudo_hermite(p)`` is H_p under x -> ix with the phase removed,
equivalently e^{-x^2} d^p/dx^p e^{x^2}; every coefficient is nonnegative.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exactalg import Polynomial


class HermiteKind(enum.Enum):
    STANDARD = "standard"
    PSEUDO = "pseudo"


@dataclass(frozen=True)
class ExpansionTerm:
    """One summand ``coeff * H_{hermite_index}`` of a Hermite-basis expansion."""

    i: int
    coeff: Fraction
    hermite_index: int


class _RecurrenceCache:
    """Append-only memo of a three-term polynomial sequence.

    ``sign`` selects P_{k+1} = 2x P_k + sign * 2k P_{k-1}; reads never lock,
    appends are serialized.
    """

    def __init__(self, sign: int):
        self._sign = sign
        self._seq: list[Polynomial] = [Polynomial.constant(1), Polynomial((0, 2))]
        self._lock = threading.Lock()

    def get(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError(f"index must be nonnegative, got {k}")
        seq = self._seq
        if k < len(seq):
            return seq[k]
        with self._lock:
            seq = self._seq
            two_x = Polynomial((0, 2))
            while len(seq) <= k:
                j = len(seq) - 1
                seq.append(two_x * seq[j] + seq[j - 1] * (self._sign * 2 * j))
            return seq[k]


_HERMITE = _RecurrenceCache(-1)
_PSEUDO = _RecurrenceCache(+1)


def hermite(k: int) -> Polynomial:
    return _HERMITE.get(k)


def pseudo_hermite(p: int) -> Polynomial:
    return _PSEUDO.get(p)


def polynomial(kind: HermiteKind, k: int) -> Polynomial:
    return hermite(k) if kind is HermiteKind.STANDARD else pseudo_hermite(k)


def rodrigues_hermite(k: int) -> Polynomial:
    """H_k from (-1)^k e^{x^2} d^k/dx^k e^{-x^2}, tracking the polynomial prefactor.

    If d^j/dx^j e^{-x^2} = q_j e^{-x^2}, then q_{j+1} = q_j' - 2x q_j.
    Independent of the recurrence; used as a test oracle.
    """
    q = Polynomial.constant(1)
    two_x = Polynomial((0, 2))
    for _ in range(k):
        q = q.derivative() - two_x * q
    return q * (-1) ** k


def rodrigues_pseudo_hermite(p: int) -> Polynomial:
    """𝓗_p from e^{-x^2} d^p/dx^p e^{x^2}: q_{j+1} = q_j' + 2x q_j."""
    q = Polynomial.constant(1)
    two_x = Polynomial((0, 2))
    for _ in range(p):
        q = q.derivative() + two_x * q
    return q


def pseudo_hermite_at_zero(m: int) -> Fraction:
    """𝓗_{2m}(0) = (2m)!/m!."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return Fraction(factorial(2 * m), factorial(m))


def _falling_ratio(top: int, bottom: int) -> int:
    """top!/bottom! for top >= bottom >= 0."""
    out = 1
    for j in range(bottom + 1, top + 1):
        out *= j
    return out


def product_expansion(p: int, k: int) -> list[ExpansionTerm]:
    """Hermite-basis expansion of 𝓗_p(x) H_k(x).

    Coefficient of H_{k+p-2i} is 2^i C(p, i) (k+p-i)!/(k+p-2i)!. Summands
    whose Hermite index would be negative carry 1/(negative)! = 0 and are
    dropped.
    """
    terms = []
    for i in range(p + 1):
        idx = k + p - 2 * i
        if idx < 0:
            break
        c = 2 ** i * comb(p, i) * _falling_ratio(k + p - i, idx)
        terms.append(ExpansionTerm(i, Fraction(c), idx))
    return terms


def susy_sum_expansion(p: int, k: int) -> list[ExpansionTerm]:
    """Hermite-basis expansion of 𝓗_p H_{k+1} + 𝓗_p' H_k.

    With n = k+p+1 the coefficient of H_{n-2i} is
    2^i C(p, i) n (n-1-i)!/(n-2i)!; the i = 0 summand is exactly H_n.
    """
    n = k + p + 1
    terms = [ExpansionTerm(0, Fraction(1), n)]
    for i in range(1, p + 1):
        idx = n - 2 * i
        if idx < 0:
            break
        c = 2 ** i * comb(p, i) * n * _falling_ratio(n - 1 - i, idx)
        terms.append(ExpansionTerm(i, Fraction(c), idx))
    return terms


def instantiate(terms: list[ExpansionTerm]) -> Polynomial:
    """Sum coeff * H_index over the terms."""
    out = Polynomial()
    for t in terms:
        out = out + hermite(t.hermite_index) * t.coeff
    return out

