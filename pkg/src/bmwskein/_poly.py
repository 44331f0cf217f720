"""Integer polynomials in the two generators A = alpha^(1/2), v = s^(1/2).

Two interchangeable backends are provided.  ``flint`` wraps python-flint's
``fmpz_mpoly`` (compiled, fast gcd); ``sympy`` wraps the sparse
``PolyElement`` ring of sympy (pure Python).  The backend is chosen at import
time; set ``BMW_POLY_BACKEND=sympy`` to force the fallback.

Every function here takes and returns backend-native polynomials.  Exponents
are non-negative; Laurent shifts are handled one level up in :mod:`coeff`.
"""

from __future__ import annotations

import os

_requested = os.environ.get("BMW_POLY_BACKEND", "").strip().lower()

BACKEND = "sympy"
if _requested != "sympy":
    try:
        import flint as _flint

        BACKEND = "flint"
    except ImportError:  # pragma: no cover - depends on environment
        if _requested == "flint":
            raise

if BACKEND == "flint":
    _ctx = _flint.fmpz_mpoly_ctx.get(("A", "v"), "lex")
    GEN_A, GEN_V = _ctx.gens()
    ZERO = _ctx.from_dict({})
    ONE = _ctx.from_dict({(0, 0): 1})

    def from_dict(d):
        return _ctx.from_dict({k: c for k, c in d.items() if c})

    def to_dict(p):
        return {(int(k[0]), int(k[1])): int(c) for k, c in p.to_dict().items()}

    def const(c):
        return _ctx.from_dict({(0, 0): int(c)}) if c else ZERO

    def gcd(p, q):
        return p.gcd(q)

    def divexact(p, q):
        quo = p // q
        if quo * q != p:
            raise ArithmeticError("inexact polynomial division")
        return quo

    def lc(p):
        return int(p.leading_coefficient())

    def is_zero(p):
        return p.is_zero()

    def is_one(p):
        return p.is_one()

    def degrees(p):
        return tuple(max(0, int(d)) for d in p.degrees())

else:
    from sympy import ZZ
    from sympy.polys.orderings import lex
    from sympy.polys.rings import ring

    _ring, GEN_A, GEN_V = ring("A,v", ZZ, lex)
    ZERO = _ring.zero
    ONE = _ring.one

    def from_dict(d):
        return _ring.from_dict({k: ZZ(c) for k, c in d.items() if c})

    def to_dict(p):
        return {k: int(c) for k, c in p.items()}

    def const(c):
        return _ring(int(c))

    def gcd(p, q):
        return p.gcd(q)

    def divexact(p, q):
        return p.exquo(q)

    def lc(p):
        return int(p.LC)

    def is_zero(p):
        return not p

    def is_one(p):
        return p == ONE

    def degrees(p):
        if not p:
            return (0, 0)
        return (max(m[0] for m in p.keys()), max(m[1] for m in p.keys()))


def key(p):
    """Hashable, backend-independent fingerprint of a polynomial."""
    return tuple(sorted(to_dict(p).items()))


def min_exponents(p):
    d = to_dict(p)
    if not d:
        return (0, 0)
    return (min(m[0] for m in d), min(m[1] for m in d))


def monomial(i, j):
    return from_dict({(i, j): 1})
