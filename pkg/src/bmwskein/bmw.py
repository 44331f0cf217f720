"""Elements of the Kauffman skein category: K(nb, nt) and the algebras K_n.

An :class:`AlgElem` is a linear combination of canonical basis tangles of
``Hom(nb, nt)``.  Products are computed from cached structure constants
(the basis expansion of every glued pair of canonical lifts).  Products of
dense elements go through a fraction-free accumulation: coefficients are
brought to a common denominator, multiplied as plain polynomials, and each
output coordinate is reduced once.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from . import _poly as P
from . import coeff as C
from .coeff import RingElem
from .errors import StrandMismatch
from . import tangle as T

__all__ = [
    "AlgElem",
    "identity",
    "gen_e",
    "gen_E",
    "gen_h",
    "cap",
    "cup",
    "jm_element",
    "pure_jm_element",
    "from_word",
    "mul",
    "tensor_id",
    "qtrace",
    "partial_close",
]

_W = P.from_dict({(0, 4): 1, (0, 0): -1})  # v^4 - 1
_DN = P.from_dict({(4, 2): 1, (0, 2): -1, (2, 4): 1, (2, 0): -1})  # delta numerator

_cache_lock = threading.Lock()


@lru_cache(maxsize=None)
def _wpow(k):
    return _W**k


@lru_cache(maxsize=None)
def _dnpow(k):
    return _DN**k


def _kernel_poly(bucket):
    """Turn a kernel bucket into (N, L, Pa, Qv) with value N / (w^L A^Pa v^Qv)."""
    L = max(0, max(l - b for (a, b, l) in bucket))
    Pa = max(0, max(2 * l - 2 * a for (a, b, l) in bucket))
    Qv = max(0, max(2 * b for (a, b, l) in bucket))
    N = P.ZERO
    for (a, b, l), c in bucket.items():
        term = P.monomial(2 * a - 2 * l + Pa, -2 * b + Qv) * _wpow(b - l + L) * _dnpow(l)
        N = N + term * c
    return N, L, Pa, Qv


class _Const:
    """Structure constant of one glued pair: {matching: (N, L, Pa, Qv)}."""

    __slots__ = ("raw", "polys", "_ring")

    def __init__(self, raw):
        self.raw = raw
        self.polys = {m: _kernel_poly(b) for m, b in raw.items()}
        self._ring = None

    @property
    def ring(self):
        if self._ring is None:
            ring = {m: T.kernel_to_ring(b) for m, b in self.raw.items()}
            self._ring = {m: v for m, v in ring.items() if v}
        return self._ring


_STRUCT = {}


def _struct(nb, k, nt, m1, m2):
    key = (nb, k, nt, m1, m2)
    hit = _STRUCT.get(key)
    if hit is None:
        pd = T.compose_pd(T.canonical_pd(nb, k, m1), T.canonical_pd(k, nt, m2))
        hit = _Const(T.resolve_pd(pd))
        with _cache_lock:
            _STRUCT[key] = hit
    return hit


def structure_cache_size():
    return len(_STRUCT)


def _common_den(values):
    """(D, [N_i]) with values[i] = N_i / D."""
    den = None
    for x in values:
        if den is None:
            den = x.den
        elif x.den != den:
            g = P.gcd(den, x.den)
            den = den * P.divexact(x.den, g)
    nums = []
    for x in values:
        if x.den == den:
            nums.append(x.num)
        else:
            nums.append(x.num * P.divexact(den, x.den))
    return den, nums


class AlgElem:
    """A morphism of the skein category, ``Hom(nb, nt)``."""

    __slots__ = ("nb", "nt", "terms")

    def __init__(self, nb, nt=None, terms=None):
        self.nb = nb
        self.nt = nb if nt is None else nt
        self.terms = {m: v for m, v in (terms or {}).items() if v}

    @property
    def n(self):
        if self.nb != self.nt:
            raise StrandMismatch("rectangular element has no strand count")
        return self.nb

    # constructors -----------------------------------------------------------

    @classmethod
    def basis(cls, nb, nt, m, c=None):
        return cls(nb, nt, {tuple(m): C.ONE if c is None else RingElem.coerce(c)})

    @classmethod
    def from_word(cls, w):
        x = identity(w.n)
        for sl in w.slices:
            x = x * _slice_elem(sl, w.n)
        return x

    @classmethod
    def scalar(cls, n, c):
        return identity(n) * RingElem.coerce(c)

    # linear structure ---------------------------------------------------------

    def _check_same(self, other):
        if (self.nb, self.nt) != (other.nb, other.nt):
            raise StrandMismatch(
                f"Hom({self.nb},{self.nt}) and Hom({other.nb},{other.nt}) differ"
            )

    def __add__(self, other):
        if isinstance(other, (int, RingElem)):
            other = AlgElem.scalar(self.n, other)
        self._check_same(other)
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out[m] + v if m in out else v
        return AlgElem(self.nb, self.nt, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.nb, self.nt, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, RingElem)):
            other = AlgElem.scalar(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = RingElem.coerce(c)
        if c.is_zero():
            return AlgElem(self.nb, self.nt)
        return AlgElem(self.nb, self.nt, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, c):
        return self.scale(RingElem.coerce(c).inverse())

    def __matmul__(self, other):
        """Tensor product, ``self`` to the left of ``other``."""
        return tensor(self, other)

    def __pow__(self, k):
        out = identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, RingElem)):
            if self.nb != self.nt:
                return False
            other = AlgElem.scalar(self.nb, other)
        if not isinstance(other, AlgElem):
            return NotImplemented
        return (self.nb, self.nt) == (other.nb, other.nt) and self.terms == other.terms

    def __hash__(self):
        return hash((self.nb, self.nt, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, m):
        return self.terms.get(tuple(m), C.ZERO)

    def proportional_to(self, other):
        """The scalar c with self = c * other, or None."""
        self._check_same(other)
        if not other.terms:
            return C.ZERO if not self.terms else None
        m0 = next(iter(other.terms))
        c = self.coefficient(m0) / other.terms[m0]
        if self == other.scale(c):
            return c
        return None

    def __repr__(self):
        return f"AlgElem({self.nb}, {self.nt}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            parts.append(f"({self.terms[m]}) * {T.matching_to_json(self.nb, self.nt, m)}")
        return "\n + ".join(parts)

    # structure ---------------------------------------------------------------

    def tensor_id(self, k=1):
        return tensor_id(self, k)

    def qtrace(self):
        return qtrace(self)

    def partial_close(self, k=1):
        return partial_close(self, k)

    def map_coefficients(self, f):
        return AlgElem(self.nb, self.nt, {m: f(v) for m, v in self.terms.items()})

    def evaluate(self, a, v):
        """Coefficient vector at a numeric point (dict matching -> Fraction)."""
        return {m: c.evaluate(a, v) for m, c in self.terms.items()}

    def to_json(self):
        out = {"n": self.nb, "terms": []}
        if self.nt != self.nb:
            out["m"] = self.nt
        for m in sorted(self.terms):
            out["terms"].append(
                {"matching": T.matching_to_json(self.nb, self.nt, m), "coeff": str(self.terms[m])}
            )
        return out

    @classmethod
    def from_json(cls, data):
        nb = data["n"]
        nt = data.get("m", nb)
        terms = {}
        for t in data["terms"]:
            m = T.matching_from_json(nb, nt, t["matching"])
            terms[m] = C.parse(t["coeff"])
        return cls(nb, nt, terms)


# products -----------------------------------------------------------------


def mul(a, b):
    """Composite with ``a`` below ``b`` (the product ``ab``)."""
    if a.nt != b.nb:
        raise StrandMismatch(f"cannot compose Hom({a.nb},{a.nt}) with Hom({b.nb},{b.nt})")
    if not a.terms or not b.terms:
        return AlgElem(a.nb, b.nt)
    nb, k, nt = a.nb, a.nt, b.nt
    if len(a.terms) * len(b.terms) <= 4:
        return _mul_small(a, b)
    return _mul_dense(a, b, nb, k, nt)


def _mul_small(a, b):
    nb, k, nt = a.nb, a.nt, b.nt
    out = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c = c1 * c2
            for m, s in _struct(nb, k, nt, m1, m2).ring.items():
                v = c * s
                out[m] = out[m] + v if m in out else v
    return AlgElem(nb, nt, out)


def _mul_dense(a, b, nb, k, nt):
    la, lb = list(a.terms.items()), list(b.terms.items())
    Da, NA = _common_den([c for _, c in la])
    Db, NB = _common_den([c for _, c in lb])
    consts = [[_struct(nb, k, nt, m1, m2) for (m2, _c) in lb] for (m1, _c) in la]
    L = Pa = Qv = 0
    for row in consts:
        for st in row:
            for (_N, l, p, q) in st.polys.values():
                L, Pa, Qv = max(L, l), max(Pa, p), max(Qv, q)
    acc = {}
    for i, row in enumerate(consts):
        na = NA[i]
        for j, st in enumerate(row):
            if not st.polys:
                continue
            ab = na * NB[j]
            for m, (N, l, p, q) in st.polys.items():
                term = ab * N
                if l != L:
                    term = term * _wpow(L - l)
                if p != Pa or q != Qv:
                    term = term * P.monomial(Pa - p, Qv - q)
                acc[m] = acc[m] + term if m in acc else term
    den = Da * Db * _wpow(L) * P.monomial(Pa, Qv)
    out = {}
    for m, num in acc.items():
        if not P.is_zero(num):
            out[m] = RingElem(num, den)
    return AlgElem(nb, nt, out)


def tensor(x, y):
    """x to the left of y."""
    out = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            out[_tensor_matching(x.nb, x.nt, m1, y.nb, y.nt, m2)] = c1 * c2
    return AlgElem(x.nb + y.nb, x.nt + y.nt, out)


def _tensor_matching(xb, xt, m1, yb, yt, m2):
    nb = xb + yb

    def fx(p):
        return p if p < xb else nb + (p - xb)

    def fy(p):
        return xb + p if p < yb else nb + xt + (p - yb)

    m = [0] * (nb + xt + yt)
    for p, q in enumerate(m1):
        m[fx(p)] = fx(q)
    for p, q in enumerate(m2):
        m[fy(p)] = fy(q)
    return tuple(m)


def tensor_id(x, k=1):
    if k == 0:
        return x
    return tensor(x, identity(k))


@lru_cache(maxsize=None)
def _trace_of(n, m):
    res = T.resolve_to_ring(T.close_pd(T.canonical_pd(n, n, m)))
    return res.get((), C.ZERO)


def qtrace(x):
    total = C.ZERO
    for m, c in x.terms.items():
        total = total + c * _trace_of(x.n, m)
    return total


@lru_cache(maxsize=None)
def _partial_close_of(n, k, m):
    return T.resolve_to_ring(T.close_pd(T.canonical_pd(n, n, m), k))


def partial_close(x, k=1):
    n = x.n
    if k > n:
        raise StrandMismatch(f"cannot close {k} strands of {n}")
    out = AlgElem(n - k)
    for m, c in x.terms.items():
        out = out + AlgElem(n - k, n - k, _partial_close_of(n, k, m)).scale(c)
    return out


# generators ------------------------------------------------------------------


@lru_cache(maxsize=None)
def identity(n):
    return AlgElem.basis(n, n, T.identity_matching(n))


@lru_cache(maxsize=None)
def gen_e(n, i):
    return AlgElem.basis(n, n, T.transposition_matching(n, i))


@lru_cache(maxsize=None)
def gen_E(n, i):
    pd = T.canonical_pd(n, n, T.transposition_matching(n, i), inverted=True)
    return AlgElem(n, n, T.resolve_to_ring(pd))


@lru_cache(maxsize=None)
def gen_h(n, i):
    return AlgElem.basis(n, n, T.hook_matching(n, i))


@lru_cache(maxsize=None)
def cap():
    """The cap in Hom(2, 0)."""
    return AlgElem.basis(2, 0, (1, 0))


@lru_cache(maxsize=None)
def cup():
    """The cup in Hom(0, 2)."""
    return AlgElem.basis(0, 2, (1, 0))


def _slice_elem(sl, n):
    if sl.kind == "id":
        return identity(n)
    if sl.kind == "e":
        return gen_e(n, sl.index)
    if sl.kind == "E":
        return gen_E(n, sl.index)
    return gen_h(n, sl.index)


def from_word(w):
    return AlgElem.from_word(w)


@lru_cache(maxsize=None)
def pure_jm_element(n):
    """(e_{n-1} ... e_1)(e_1 ... e_{n-1}): strand n encircling strands 1..n-1."""
    x = identity(n)
    for i in range(n - 1, 0, -1):
        x = x * gen_e(n, i)
    for i in range(1, n):
        x = x * gen_e(n, i)
    return x


@lru_cache(maxsize=None)
def jm_element(n):
    """alpha * pure_jm_element(n); tau_1 = alpha."""
    return pure_jm_element(n).scale(C.alpha())


def hecke_projection(x):
    """Coefficients of the permutation tangles: {permutation tuple: RingElem}."""
    n = x.n
    out = {}
    for m, c in x.terms.items():
        if all(m[i] >= n for i in range(n)):
            out[tuple(m[i] - n + 1 for i in range(n))] = c
    return out
