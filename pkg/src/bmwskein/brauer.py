"""The classical specialization: Brauer diagrams acting on (Q^N)^{tensor n}.

Matrices use the row-vector convention (rows = bottom basis vector, columns =
top basis vector) so that ``phi(x * y) == phi(x) @ phi(y)`` with ``x`` below ``y``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from math import lcm

import numpy as np

from . import coeff as C
from .bmw import AlgElem
from .coeff import Specialization
from .errors import SizeBound, StrandMismatch
from .young import StdTableau

__all__ = [
    "BrauerElem",
    "DenseMatrix",
    "brauer_specialize",
    "phi",
    "matching_matrix",
    "integer_trace_check",
]


def _max_dim():
    return int(os.environ.get("BMW_MAX_PHI_DIM", "1024"))


class BrauerElem:
    """Rational combination of Brauer matchings in Hom(nb, nt)."""

    __slots__ = ("nb", "nt", "terms")

    def __init__(self, nb, nt=None, terms=None):
        self.nb = nb
        self.nt = nb if nt is None else nt
        self.terms = {tuple(m): Fraction(c) for m, c in (terms or {}).items() if c}

    @property
    def n(self):
        if self.nb != self.nt:
            raise StrandMismatch("rectangular element")
        return self.nb

    def __eq__(self, other):
        if not isinstance(other, BrauerElem):
            return NotImplemented
        return (self.nb, self.nt, self.terms) == (other.nb, other.nt, other.terms)

    def __hash__(self):
        return hash((self.nb, self.nt, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"BrauerElem({self.nb}, {self.nt}, {self.terms})"


def brauer_specialize(a: AlgElem, N) -> BrauerElem:
    """Specialize every coefficient at alpha = s^(N-1), s = 1."""
    sp = Specialization("brauer", N)
    terms = {}
    for m, c in a.terms.items():
        val = C.specialize(c, sp)
        terms[m] = val.constant_value()
    return BrauerElem(a.nb, a.nt, terms)


class DenseMatrix:
    """Exact rational matrix stored as an integer array over a common denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = np.asarray(num, dtype=object)
        self.den = int(den)

    @property
    def shape(self):
        return self.num.shape

    def __matmul__(self, other):
        return DenseMatrix(self.num.dot(other.num), self.den * other.den)._reduced()

    def __mul__(self, c):
        c = Fraction(c)
        return DenseMatrix(self.num * c.numerator, self.den * c.denominator)._reduced()

    __rmul__ = __mul__

    def _reduced(self):
        from math import gcd

        g = self.den
        for x in self.num.flat:
            if g == 1:
                break
            g = gcd(g, int(x))
        if g > 1:
            return DenseMatrix(self.num // g, self.den // g)
        return self

    def trace(self):
        return Fraction(int(np.trace(self.num)), self.den)

    def to_fractions(self):
        return [[Fraction(int(x), self.den) for x in row] for row in self.num]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.all(self.num * other.den == other.num * self.den)
        )


def _digits(k, N, n):
    out = [0] * n
    for p in range(n - 1, -1, -1):
        k, out[p] = divmod(k, N)
    return out


def _index(digits, N):
    k = 0
    for d in digits:
        k = k * N + d
    return k


def matching_matrix(nb, nt, m, N):
    """0/1 integer matrix of one Brauer matching, rows indexed by bottom labels."""
    if N ** max(nb, nt) > _max_dim():
        raise SizeBound(f"N^n = {N ** max(nb, nt)} exceeds {_max_dim()}")
    out = np.zeros((N**nb, N**nt), dtype=np.int64)
    top_pairs = [(p - nb, q - nb) for p, q in enumerate(m) if p >= nb and q > p]
    for J in range(N**nb):
        j = _digits(J, N, nb)
        top = [None] * nt
        ok = True
        for p in range(nb):
            q = m[p]
            if q < nb:
                if q > p and j[p] != j[q]:
                    ok = False
                    break
            else:
                top[q - nb] = j[p]
        if not ok:
            continue
        for vals in product(range(N), repeat=len(top_pairs)):
            for (p, q), v in zip(top_pairs, vals):
                top[p] = v
                top[q] = v
            out[J, _index(top, N)] += 1
    return out


def phi(x: BrauerElem, N) -> DenseMatrix:
    """Matrix of x acting on (Q^N)^{tensor n}."""
    if N < 1:
        raise ValueError("N must be positive")
    if N ** max(x.nb, x.nt) > _max_dim():
        raise SizeBound(f"N^n = {N ** max(x.nb, x.nt)} exceeds {_max_dim()}")
    den = 1
    for c in x.terms.values():
        den = lcm(den, c.denominator)
    acc = np.zeros((N**x.nb, N**x.nt), dtype=object)
    for m, c in x.terms.items():
        acc = acc + matching_matrix(x.nb, x.nt, m, N).astype(object) * (c.numerator * (den // c.denominator))
    return DenseMatrix(acc, den)._reduced()


def integer_trace_check(t: StdTableau, N) -> int:
    """trace(phi(p~_t)) at N; checked to be a positive integer equal to <shape(t)>."""
    from .idem import ptilde, qdim

    lam = t.shape
    if N < lam.size:
        raise ValueError(f"N = {N} is smaller than |{lam}|")
    tr = phi(brauer_specialize(ptilde(t), N), N).trace()
    expected = C.specialize(qdim(lam), Specialization("brauer", N)).constant_value()
    if tr.denominator != 1 or tr <= 0:
        raise ArithmeticError(f"trace {tr} for {t} is not a positive integer")
    if tr != expected:
        raise ArithmeticError(f"trace {tr} for {t} differs from the dimension {expected}")
    return int(tr)
