"""Verification suites run by ``bmwskein verify``."""

from __future__ import annotations

import random
from itertools import permutations
from dataclasses import dataclass, field
from math import factorial, prod

from . import bmw as B
from . import coeff as C
from . import hecke as H
from . import idem as I
from .tangle import enumerate_basis
from .young import (
    Partition,
    corners,
    enumerate_standard,
    enumerate_updown,
    iter_standard,
    partitions_of,
)

SUITES = ("relations", "hecke", "section", "units", "branching", "dims", "twist", "residue", "brauer")


class Counterexample(Exception):
    def __init__(self, label, data=None):
        super().__init__(label)
        self.label = label
        self.data = data or {}


@dataclass
class SuiteResult:
    suite: str
    ok: bool = True
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_json(self):
        out = {"suite": self.suite, "ok": self.ok, "checks": len(self.checks)}
        if self.info:
            out["info"] = self.info
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _check(res, label, cond, **data):
    res.checks.append(label)
    if not cond:
        raise Counterexample(label, {k: str(v) for k, v in data.items()})


# suites ----------------------------------------------------------------------------


def _relations(res, max_size, **_):
    delta = C.loop_value()
    for n in range(1, max_size + 1):
        one = B.identity(n)
        for i in range(1, n):
            e, E, h = B.gen_e(n, i), B.gen_E(n, i), B.gen_h(n, i)
            _check(res, f"K n={n} i={i}", e - E == (one - h).scale(C.z()))
            _check(res, f"R1 n={n} i={i}", h * e == h.scale(C.alpha(-1)))
            _check(res, f"R1' n={n} i={i}", e * h == h.scale(C.alpha(-1)))
            _check(res, f"inverse n={n} i={i}", e * E == one)
            _check(res, f"h^2 n={n} i={i}", h * h == h.scale(delta))
            for j in (i - 1, i + 1):
                if 1 <= j < n:
                    ej, Ej, hj = B.gen_e(n, j), B.gen_E(n, j), B.gen_h(n, j)
                    _check(res, f"R2+ n={n} i={i} j={j}", h * ej * h == h.scale(C.alpha()))
                    _check(res, f"R2- n={n} i={i} j={j}", h * Ej * h == h.scale(C.alpha(-1)))
                    _check(res, f"hook n={n} i={i} j={j}", h * hj * h == h)
                    _check(
                        res,
                        f"slide n={n} i={i} j={j}",
                        e * ej * h == hj * e * ej,
                    )
            for j in range(i + 1, n):
                ej = B.gen_e(n, j)
                if j == i + 1:
                    _check(res, f"braid n={n} i={i}", e * ej * e == ej * e * ej)
                else:
                    _check(res, f"B2 n={n} i={i} j={j}", e * ej == ej * e)
                    _check(res, f"B2h n={n} i={i} j={j}", h * B.gen_h(n, j) == B.gen_h(n, j) * h)


def _double_factorial(n):
    return prod(range(2 * n - 1, 0, -2)) if n else 1


def _hecke(res, max_size, **_):
    for n in range(1, min(max_size, 5) + 1):
        dsq = sum(len(enumerate_standard(lam)) ** 2 for lam in partitions_of(n))
        _check(res, f"sum d^2 = n! n={n}", dsq == factorial(n), got=dsq)
    for n in range(1, min(max_size, 4) + 1):
        f, g = H.symmetrizer_f(n), H.antisymmetrizer_g(n)
        _check(res, f"f idempotent n={n}", f * f == f)
        _check(res, f"g idempotent n={n}", g * g == g)
        for i in range(1, n):
            _check(res, f"f sigma n={n}", f * H.sigma(n, i) == f.scale(C.s()))
            _check(res, f"g sigma n={n}", g * H.sigma(n, i) == g.scale(-C.s(-1)))
        total = H.HeckeElem(n)
        for t in iter_standard(n):
            a, b, p = H.tableau_morphisms(t)
            _check(res, f"beta alpha = y for {t}", b * a == H.young_idem(t.shape))
            _check(res, f"p^2 = p for {t}", p * p == p)
            total = total + p
        _check(res, f"sum p_t = 1 n={n}", total == H.hecke_one(n))
        for lam in partitions_of(n):
            _check(
                res,
                f"trace y {lam}",
                H.markov_trace(H.young_idem(lam)) == H.hecke_qdim(lam),
            )


def _random_hecke(rng, n):
    perms = list(permutations(range(1, n + 1)))
    terms = {}
    for p in rng.sample(perms, min(3, len(perms))):
        terms[p] = C.RingElem.coerce(rng.randint(-3, 3)) * C.s(rng.randint(-1, 1))
    return H.HeckeElem(n, terms)


def _section(res, max_size, seed=0, pairs=25, **_):
    rng = random.Random(seed)
    for n in range(1, min(max_size, 3) + 1):
        one = I.section(H.hecke_one(n))
        _check(res, f"s(1) idempotent n={n}", one * one == one)
        for p in permutations(range(1, n + 1)):
            x = H.perm_braid(p)
            _check(res, f"pi s = id on {p}", B.hecke_projection(I.section(x)) == {p: C.ONE})
        for k in range(pairs):
            x, y = _random_hecke(rng, n), _random_hecke(rng, n)
            lhs = I.section(x) * I.section(y)
            _check(res, f"multiplicative n={n} pair={k}", lhs == I.section(x * y))
        # I_n is spanned by the basis tangles that are not permutations
        for m in enumerate_basis(n):
            if all(m[i] >= n for i in range(n)):
                continue
            y = B.AlgElem.basis(n, n, m)
            sx = I.section(H.sigma(n, 1) if n > 1 else H.hecke_one(n))
            _check(res, f"annihilates ideal n={n} {m}", (sx * y).is_zero() and (y * sx).is_zero())


def _units(res, max_size, **_):
    for n in range(1, min(max_size, 5) + 1):
        size = len(enumerate_basis(n))
        _check(res, f"basis size n={n}", size == _double_factorial(n), got=size)
        paths = enumerate_updown(n)
        shapes = {}
        for t in paths:
            shapes[t.shape] = shapes.get(t.shape, 0) + 1
        dsq = sum(d * d for d in shapes.values())
        _check(res, f"sum d^2 n={n}", dsq == size, got=dsq)
    for n in range(1, min(max_size, 3) + 1):
        paths = enumerate_updown(n)
        total = B.AlgElem(n)
        for t in paths:
            a, b = I.unit_a(t), I.unit_b(t)
            _check(res, f"b a = y for {t}", b * a == I.ytilde(t.shape))
            total = total + I.unit_q(t)
        _check(res, f"sum q = 1 n={n}", total == B.identity(n))
        for x in paths:
            for y in paths:
                if x.shape == y.shape and x != y:
                    _check(res, f"b_{x} a_{y} = 0", (I.unit_b(x) * I.unit_a(y)).is_zero())
        # a_L b_X a_Y b_Z = delta_XY a_L b_Z
        for lam in {t.shape for t in paths}:
            same = [t for t in paths if t.shape == lam]
            for L in same:
                for X in same:
                    for Y in same:
                        lhs = I.unit_a(L) * I.unit_b(X) * I.unit_a(Y) * I.unit_b(same[0])
                        rhs = I.unit_a(L) * I.unit_b(same[0]) if X == Y else B.AlgElem(n)
                        _check(res, f"orthogonality {L} {X} {Y}", lhs == rhs)
        gens = [B.gen_e(n, i) for i in range(1, n)] + [B.gen_h(n, i) for i in range(1, n)]
        for lam in {t.shape for t in paths}:
            zc = I.central_idem(n, lam)
            _check(res, f"z idempotent n={n} {lam}", zc * zc == zc)
            for g in gens:
                _check(res, f"z central n={n} {lam}", zc * g == g * zc)
    res.info["units_n3"] = sum(
        1 for x in enumerate_updown(3) for y in enumerate_updown(3) if x.shape == y.shape
    )


def _branching(res, max_size, **_):
    top = min(max_size, 4)
    for n in range(1, top):
        nxt = enumerate_updown(n + 1)
        for t in enumerate_updown(n):
            rhs = B.AlgElem(n + 1)
            for x in nxt:
                if x.parent() == t:
                    rhs = rhs + I.unit_q(x)
            _check(res, f"q_{t} x 1", I.unit_q(t).tensor_id(1) == rhs)
    for k in range(1, top):
        for lam in partitions_of(k):
            y = I.ytilde(lam)
            lhs = y.tensor_id(1)
            rhs = B.AlgElem(k + 1)
            for c in corners(lam)[0]:
                mu = lam.add(c)
                R, Ri = I._rho(mu, c)
                rhs = rhs + (lhs * R * I.ytilde(mu) * Ri * lhs) / H.absorbing_constant(mu, c)
            for c in corners(lam)[1]:
                rhs = rhs + I.ytilde_pair(lam, lam.remove(c))
            _check(res, f"idempotent {lam} x 1 decomposes", lhs == rhs)


def _dims(res, max_size, **_):
    agree = {}
    for k in range(1, max_size + 1):
        for lam in partitions_of(k):
            w = I.qdim_wenzl(lam, "wen")
            _check(res, f"wen = wenzltwo {lam}", w == I.qdim_wenzl(lam, "wenzltwo"))
            _check(res, f"chain {lam}", w == I.qdim_chain(lam))
            for t in enumerate_standard(lam):
                chain = [Partition()] + list(t.chain)
                _check(res, f"chain {t}", w == I.qdim_chain(lam, chain))
            routes = ["wen", "wenzltwo", "rec"]
            if k <= 4:
                tr = B.qtrace(I.unit_q(enumerate_standard(lam)[0]))
                _check(res, f"qtrace {lam}", tr == w, qtrace=tr, wenzl=w)
                routes.append("qtrace")
            swapped = C.negate_invert_alpha(I.qdim_wenzl(lam.transpose()))
            _check(res, f"transpose {lam}", w == swapped)
            agree[str(lam)] = routes
    res.info["agreement"] = agree


def _twist(res, max_size, **_):
    top = min(max_size, 3)
    for k in range(1, top + 1):
        for mu in partitions_of(k):
            _check(res, f"twist {mu}", I.verify_twist(mu) == I.twist_coefficient(mu))
    for k in range(0, top):
        for lam in partitions_of(k):
            for c in corners(lam)[0]:
                mu = lam.add(c)
                got = I.verify_braiding(lam, mu, "grow")
                _check(res, f"grow {lam}->{mu}", got == I.braiding_coefficient(lam, mu, "grow"))
    for k in range(1, top):
        for lam in partitions_of(k):
            for c in corners(lam)[1]:
                mu = lam.remove(c)
                got = I.verify_braiding(lam, mu, "shrink")
                _check(res, f"shrink {lam}->{mu}", got == I.braiding_coefficient(lam, mu, "shrink"))


def _residue(res, max_size, **_):
    u = I.RationalFunction.u()
    _check(res, "Z base case", I.z_series(()) == u * C.loop_value() / (u - C.alpha()))
    for k in range(0, max_size + 1):
        for mu in partitions_of(k) if k else [Partition()]:
            f = I.q_series(mu) / u
            for c in corners(mu)[0]:
                lam = mu.add(c)
                b = C.alpha() * C.s(2 * (c[1] - c[0]))
                _check(res, f"residue {mu}->{lam}", I.residue(f, b) == I.qdim_ratio(lam, mu))


def _brauer(res, max_size, N=3, **_):
    from .brauer import integer_trace_check

    traces = {}
    for k in range(1, min(max_size, N) + 1):
        for t in iter_standard(k):
            try:
                tr = integer_trace_check(t, N)
            except ArithmeticError as exc:
                raise Counterexample(f"integer trace {t}", {"error": str(exc)}) from None
            res.checks.append(f"trace {t}")
            traces[str(t)] = tr
    res.info["N"] = N
    res.info["traces"] = traces


_RUNNERS = {
    "relations": _relations,
    "hecke": _hecke,
    "section": _section,
    "units": _units,
    "branching": _branching,
    "dims": _dims,
    "twist": _twist,
    "residue": _residue,
    "brauer": _brauer,
}


def run_suite(name, max_size=3, **opts):
    res = SuiteResult(name)
    try:
        _RUNNERS[name](res, max_size, **opts)
    except Counterexample as exc:
        res.ok = False
        res.counterexample = {"check": exc.label, **exc.data}
    return res


def run(suite="all", max_size=3, **opts):
    names = SUITES if suite == "all" else (suite,)
    return [run_suite(s, max_size, **opts) for s in names]
