"""Framed tangle diagrams and their reduction to the canonical basis.

A basis tangle of ``Hom(nb, nt)`` is a perfect matching on ``nb + nt``
boundary points, numbered bottom 0..nb-1 then top nb..nb+nt-1.  Its canonical
lift is drawn with the boundary points on a convex arc and straight chords;
at each crossing the chord whose smallest endpoint comes first passes over.

Diagrams are handled in PD form (see :mod:`bmwskein._skein_py`).  Reduction to
the basis is done by the compiled kernel when it is available.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import coeff as C
from .errors import StrandMismatch

try:
    if os.environ.get("BMW_PURE_PYTHON"):
        raise ImportError
    from ._skein import resolve as _resolve  # type: ignore

    KERNEL = "cython"
except ImportError:
    from ._skein_py import resolve as _resolve

    KERNEL = "python"

__all__ = [
    "KERNEL",
    "PD",
    "Slice",
    "TangleWord",
    "canonical_pd",
    "compose_pd",
    "close_pd",
    "resolve_pd",
    "kernel_to_ring",
    "normalize",
    "close_trace",
    "enumerate_basis",
    "tensor_word",
    "identity_matching",
    "matching_to_json",
    "matching_from_json",
    "parse_word",
    "transposition_matching",
    "hook_matching",
    "resolve_to_ring",
    "tensor_pd",
    "word_pd",
]


@dataclass
class PD:
    nb: int
    nt: int
    crossings: list
    boundary: list
    loops: int = 0
    nlabels: int = field(default=0)

    def relabel(self, offset):
        return PD(
            self.nb,
            self.nt,
            [[x + offset for x in c] for c in self.crossings],
            [x + offset for x in self.boundary],
            self.loops,
            self.nlabels,
        )


# basis ----------------------------------------------------------------------


def identity_matching(n):
    return tuple([n + i for i in range(n)] + list(range(n)))


@lru_cache(maxsize=None)
def _matchings(npts):
    if npts == 0:
        return ((),)
    out = []

    def rec(m, free):
        if not free:
            out.append(tuple(m))
            return
        p = free[0]
        for q in free[1:]:
            m[p], m[q] = q, p
            rec(m, [x for x in free if x != p and x != q])
        m[p] = m[q] = -1

    rec([-1] * npts, list(range(npts)))
    return tuple(out)


def enumerate_basis(n, m=None):
    """All matchings of Hom(n, m) (m defaults to n); (n+m-1)!! of them."""
    if m is None:
        m = n
    if (n + m) % 2:
        return []
    return list(_matchings(n + m))


def _ccw_index(nb, nt):
    """Position of each boundary point along the convex arc."""
    pos = list(range(nb))
    pos += [nb + (nt - 1 - j) for j in range(nt)]
    return pos


def _point(q):
    x = Fraction(q) + Fraction(q * q, 97)
    return (x, x * x)


def _cross(u, w):
    return u[0] * w[1] - u[1] * w[0]


@lru_cache(maxsize=None)
def _canonical_pd_cached(nb, nt, matching):
    npts = nb + nt
    ccw = _ccw_index(nb, nt)
    chords = sorted({(min(p, q), max(p, q)) for p, q in enumerate(matching)})
    geo = {}
    for (p, q) in chords:
        P0, P1 = _point(ccw[p]), _point(ccw[q])
        geo[(p, q)] = (P0, (P1[0] - P0[0], P1[1] - P0[1]))
    # crossings: chords cross iff their endpoints interleave on the arc
    hits = {ch: [] for ch in chords}
    pairs = []
    for i, c1 in enumerate(chords):
        for c2 in chords[i + 1:]:
            a, b = sorted((ccw[c1[0]], ccw[c1[1]]))
            x, y = ccw[c2[0]], ccw[c2[1]]
            if (a < x < b) == (a < y < b):
                continue
            (o1, d1), (o2, d2) = geo[c1], geo[c2]
            den = _cross(d1, d2)
            diff = (o2[0] - o1[0], o2[1] - o1[1])
            t = _cross(diff, d2) / den
            s = _cross(diff, d1) / den
            k = len(pairs)
            pairs.append((c1, c2))
            hits[c1].append((t, k))
            hits[c2].append((s, k))
    label = 0
    boundary = [None] * npts
    arms = [dict() for _ in pairs]  # crossing -> {(chord, +1/-1): label}
    for ch in chords:
        ts = sorted(hits[ch])
        if len({t for t, _ in ts}) != len(ts):
            raise RuntimeError("degenerate canonical lift")
        labels = list(range(label, label + len(ts) + 1))
        label += len(ts) + 1
        boundary[ch[0]] = labels[0]
        boundary[ch[1]] = labels[-1]
        for r, (_t, k) in enumerate(ts):
            arms[k][(ch, -1)] = labels[r]
            arms[k][(ch, 1)] = labels[r + 1]
    crossings = []
    for k, (c1, c2) in enumerate(pairs):
        # the chord with the smaller minimum endpoint is over
        over, under = (c1, c2) if c1[0] < c2[0] else (c2, c1)
        dP, dQ = geo[under][1], geo[over][1]
        A = arms[k]
        if _cross(dP, dQ) > 0:
            crossings.append((A[(under, 1)], A[(over, 1)], A[(under, -1)], A[(over, -1)]))
        else:
            crossings.append((A[(under, 1)], A[(over, -1)], A[(under, -1)], A[(over, 1)]))
    return tuple(crossings), tuple(boundary), label


def canonical_pd(nb, nt, matching, inverted=False):
    """PD code of the canonical lift; ``inverted`` mirrors every crossing."""
    cr, bd, nl = _canonical_pd_cached(nb, nt, tuple(matching))
    crs = [list(c) for c in cr]
    if inverted:
        crs = [[c[1], c[2], c[3], c[0]] for c in crs]
    return PD(nb, nt, crs, list(bd), 0, nl)


# gluing ---------------------------------------------------------------------


class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        root = x
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while self.parent.get(x, x) != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def _finish(nb, nt, crossings, boundary, loops, uf, all_labels):
    crossings = [[uf.find(x) for x in c] for c in crossings]
    boundary = [uf.find(x) for x in boundary]
    used = {x for c in crossings for x in c} | set(boundary)
    roots = {uf.find(x) for x in all_labels}
    loops += len(roots - used)
    # compact labels
    remap = {}
    for x in boundary + [y for c in crossings for y in c]:
        if x not in remap:
            remap[x] = len(remap)
    return PD(
        nb,
        nt,
        [[remap[x] for x in c] for c in crossings],
        [remap[x] for x in boundary],
        loops,
        len(remap),
    )


def _labels(pd):
    out = set(pd.boundary)
    for c in pd.crossings:
        out.update(c)
    return out


def compose_pd(x, y):
    """x below y: the top of x is glued to the bottom of y."""
    if x.nt != y.nb:
        raise StrandMismatch(f"cannot stack Hom({y.nb},{y.nt}) on Hom({x.nb},{x.nt})")
    k = x.nt
    y = y.relabel(x.nlabels)
    uf = _UF()
    for i in range(k):
        uf.union(x.boundary[x.nb + i], y.boundary[i])
    labels = _labels(x) | _labels(y)
    return _finish(
        x.nb,
        y.nt,
        x.crossings + y.crossings,
        x.boundary[: x.nb] + y.boundary[k:],
        x.loops + y.loops,
        uf,
        labels,
    )


def close_pd(x, strands=None):
    """Close the last ``strands`` strands (all by default) of an endomorphism."""
    if x.nb != x.nt:
        raise StrandMismatch("closure needs an endomorphism")
    n = x.nb
    if strands is None:
        strands = n
    uf = _UF()
    for i in range(n - strands, n):
        uf.union(x.boundary[i], x.boundary[n + i])
    keep = n - strands
    return _finish(
        keep,
        keep,
        [list(c) for c in x.crossings],
        x.boundary[:keep] + x.boundary[n : n + keep],
        x.loops,
        uf,
        _labels(x),
    )


def tensor_pd(x, y):
    """x to the left of y."""
    y = y.relabel(x.nlabels)
    bd = x.boundary[: x.nb] + y.boundary[: y.nb] + x.boundary[x.nb :] + y.boundary[y.nb :]
    return PD(x.nb + y.nb, x.nt + y.nt, x.crossings + y.crossings, bd, x.loops + y.loops,
              x.nlabels + y.nlabels)


# resolution -----------------------------------------------------------------


def resolve_pd(pd):
    """Kernel output for a PD diagram: {matching: {(a, z, loops): int}}."""
    return _resolve(pd.crossings, pd.boundary, pd.loops)


@lru_cache(maxsize=None)
def _alpha_pow(k):
    return C.alpha(k)


@lru_cache(maxsize=None)
def _z_pow(k):
    return C.z() ** k


@lru_cache(maxsize=None)
def _delta_pow(k):
    return C.loop_value() ** k


def kernel_to_ring(poly):
    """Sum of c * alpha^a * z^b * delta^l over a kernel bucket."""
    total = C.ZERO
    for (a, b, l), c in poly.items():
        total = total + _alpha_pow(a) * _z_pow(b) * _delta_pow(l) * c
    return total


def resolve_to_ring(pd):
    out = {}
    for m, poly in resolve_pd(pd).items():
        v = kernel_to_ring(poly)
        if v:
            out[m] = v
    return out


# words ------------------------------------------------------------------------


@dataclass(frozen=True)
class Slice:
    kind: str  # "e", "E", "h" or "id"
    index: int = 0

    def __str__(self):
        return "1" if self.kind == "id" else f"{self.kind}{self.index}"


@dataclass(frozen=True)
class TangleWord:
    n: int
    slices: tuple = ()

    def __post_init__(self):
        for sl in self.slices:
            if sl.kind != "id" and not 1 <= sl.index < self.n:
                raise ValueError(f"slice {sl} out of range for {self.n} strands")

    def __mul__(self, other):
        if self.n != other.n:
            raise StrandMismatch("words on different strand counts")
        return TangleWord(self.n, self.slices + other.slices)

    def __str__(self):
        return " ".join(str(s) for s in self.slices)


def parse_word(text, n):
    out = []
    for tok in text.replace(",", " ").split():
        if tok in ("1", "id"):
            out.append(Slice("id"))
            continue
        kind, idx = tok[0], tok[1:]
        if kind not in "eEh" or not idx.isdigit():
            raise ValueError(f"bad word token {tok!r}")
        out.append(Slice(kind, int(idx)))
    return TangleWord(n, tuple(out))


def tensor_word(w, k):
    return TangleWord(w.n + k, w.slices)


def transposition_matching(n, i):
    """Matching of the generator at strands i, i+1 (1-based)."""
    m = list(identity_matching(n))
    a, b = i - 1, i
    m[a], m[n + b] = n + b, a
    m[b], m[n + a] = n + a, b
    return tuple(m)


def hook_matching(n, i):
    m = list(identity_matching(n))
    a, b = i - 1, i
    m[a], m[b] = b, a
    m[n + a], m[n + b] = n + b, n + a
    return tuple(m)


def slice_pd(sl, n):
    if sl.kind == "id":
        return canonical_pd(n, n, identity_matching(n))
    if sl.kind == "h":
        return canonical_pd(n, n, hook_matching(n, sl.index))
    return canonical_pd(n, n, transposition_matching(n, sl.index), inverted=(sl.kind == "E"))


def word_pd(w):
    pd = canonical_pd(w.n, w.n, identity_matching(w.n))
    for sl in w.slices:
        pd = compose_pd(pd, slice_pd(sl, w.n))
    return pd


def normalize(w):
    """Basis expansion {matching: RingElem} of a word, one slice at a time."""
    from .bmw import AlgElem

    return AlgElem.from_word(w).terms


def close_trace(w):
    """Kauffman polynomial of the closure of the word, resolved in one pass."""
    res = resolve_to_ring(close_pd(word_pd(w)))
    return res.get((), C.ZERO)


# JSON -------------------------------------------------------------------------


def matching_to_json(nb, nt, m):
    def name(p):
        return p + 1 if p < nb else -(p - nb + 1)

    pairs = []
    for p, q in enumerate(m):
        if p < q:
            pairs.append([name(p), name(q)])
    return pairs


def matching_from_json(nb, nt, pairs):
    def idx(x):
        return x - 1 if x > 0 else nb + (-x) - 1

    m = [-1] * (nb + nt)
    for a, b in pairs:
        i, j = idx(a), idx(b)
        m[i], m[j] = j, i
    if -1 in m:
        raise ValueError("matching does not cover every boundary point")
    return tuple(m)


