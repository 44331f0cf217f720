"""Minimal idempotents and matrix units of the BMW algebras K_n.

Strands of the object of shape lam are ordered by reading the cells of lam
row by row.  Whenever a cell is added to or removed from a diagram the two
orderings are matched by the positive permutation braid ``rho(lam, cell)``
(new strand last on the bottom, in its row-reading slot on top), and cups
and caps always sit on the two rightmost strands.
"""

from __future__ import annotations

import json
import threading
from fractions import Fraction
from functools import lru_cache

from . import bmw as B
from . import coeff as C
from . import hecke as H
from .bmw import AlgElem
from .coeff import RingElem, Specialization
from .errors import (
    FeasibilityViolated,
    MissingCertificate,
    PoleAtSpecialization,
    RowBound,
    ShapeMismatch,
    ZeroQuantumDimension,
)
from .young import (
    Partition,
    StdTableau,
    UpDownTableau,
    content,
    corners,
    dfun,
    diff_cell,
    enumerate_updown,
    hook_length,
    iter_standard,
    parse_partition,
    partitions_of,
)

__all__ = [
    "lift_to_bmw",
    "lift_perm",
    "lift_perm_inverse",
    "ytilde",
    "ytilde_pair",
    "ptilde",
    "ptilde_pair",
    "ptilde_plus",
    "section",
    "unit_a",
    "unit_b",
    "unit_q",
    "central_idem",
    "matrix_units",
    "MatrixUnitDB",
    "qdim",
    "qdim_wenzl",
    "qdim_ratio",
    "qdim_chain",
    "qdim_specialized",
    "RationalFunction",
    "q_series",
    "z_series",
    "residue",
    "twist_coefficient",
    "verify_twist",
    "braiding_coefficient",
    "verify_braiding",
    "feasibility",
]

_lock = threading.RLock()


# lifting from the Hecke algebra ------------------------------------------------


@lru_cache(maxsize=None)
def _lift_word(n, word):
    x = B.identity(n)
    for i in word:
        x = x * (B.gen_e(n, i) if i > 0 else B.gen_E(n, -i))
    return x


def lift_to_bmw(h):
    """Read every certificate word of a Hecke element in K_n."""
    cert = getattr(h, "certificate", None)
    if cert is None:
        raise MissingCertificate(f"{type(h).__name__} carries no braid-word certificate")
    out = AlgElem(h.n)
    for word, c in cert:
        out = out + _lift_word(h.n, tuple(word)).scale(c)
    return out


def lift_perm(p):
    return _lift_word(len(p), H.reduced_word(tuple(p)))


def lift_perm_inverse(p):
    """Braid inverse of the positive permutation braid of p."""
    return _lift_word(len(p), tuple(-i for i in reversed(H.reduced_word(tuple(p)))))


def _rho(lam, cell):
    r = H.rho(lam, cell)
    return lift_perm(r), lift_perm_inverse(r)


# quantum dimensions ------------------------------------------------------------


def _b_value(cell, added):
    cn = content(cell)
    return C.alpha() * C.s(2 * cn) if added else C.alpha(-1) * C.s(-2 * cn)


def _b_values(mu):
    add, rem = corners(mu)
    return [(c, True, _b_value(c, True)) for c in add] + [
        (c, False, _b_value(c, False)) for c in rem
    ]


@lru_cache(maxsize=None)
def _wen(lam):
    out = C.ONE
    lt = lam.transpose()
    for cell in lam.cells():
        i, j = cell
        hl = C.qint(hook_length(lam, cell))
        if i == j:
            out = out * (C.ybracket(lam.row(j) - lt.row(j)) + hl) / hl
        else:
            out = out * C.ybracket(dfun(lam, cell)) / hl
    return out


@lru_cache(maxsize=None)
def _wenzltwo(lam):
    out = C.ONE
    for cell in lam.cells():
        hl = hook_length(lam, cell)
        d = dfun(lam, cell)
        dp = dfun(lam, cell, primed=True)
        minus = RingElem.from_laurent({(1, d): 1, (-1, -d): -1})
        plus = RingElem.from_laurent({(1, dp): 1, (-1, -dp): 1})
        out = out * minus / RingElem.from_laurent({(0, hl): 1, (0, -hl): -1})
        out = out * plus / RingElem.from_laurent({(0, hl): 1, (0, -hl): 1})
    return out


def qdim_wenzl(lam, form="wen"):
    """Closed-form quantum dimension; ``form`` is ``wen`` or ``wenzltwo``."""
    lam = parse_partition(lam)
    if form == "wen":
        return _wen(lam)
    if form == "wenzltwo":
        return _wenzltwo(lam)
    raise ValueError(f"unknown form {form!r}")


def qdim(lam):
    """The stored quantum dimension of shape lam (closed form)."""
    return _wen(parse_partition(lam))


@lru_cache(maxsize=None)
def _qdim_ratio(lam, mu):
    if lam.size != mu.size + 1 or not lam.contains_diagram(mu):
        raise ShapeMismatch(f"{lam} is not {mu} plus one cell")
    cell = diff_cell(lam, mu)
    b = _b_value(cell, True)
    out = C.alpha() / b * ((b - b.inverse()) / C.z() + 1)
    for c, added, bj in _b_values(mu):
        if added and c == cell:
            continue
        out = out * (b - bj.inverse()) / (b - bj)
    return out


def qdim_ratio(lam, mu):
    """<lam>/<mu> for mu = lam minus one cell, from the eigenvalue product."""
    return _qdim_ratio(parse_partition(lam), parse_partition(mu))


def qdim_chain(lam, chain=None):
    """Product of qdim_ratio along a growth chain ending at lam (default: row-reading)."""
    lam = parse_partition(lam)
    if chain is None:
        cells = lam.cells()
        chain, cur = [Partition()], Partition()
        for c in cells:
            cur = cur.add(c)
            chain.append(cur)
    out = C.ONE
    for small, big in zip(chain, chain[1:]):
        out = out * qdim_ratio(big, small)
    return out


def qdim_specialized(lam, sp):
    """Closed forms at the B, C, D specializations."""
    lam = parse_partition(lam)
    if isinstance(sp, str):
        sp = Specialization.parse(sp)
    if sp.kind not in ("B", "C", "D"):
        return C.specialize(qdim(lam), sp)
    n = sp.parameter
    if len(lam) > n:
        raise RowBound(f"{lam} has more than {n} rows")
    l = [lam.row(j) for j in range(1, n + 1)]
    q = C.qint
    half = Fraction(1, 2)
    out = C.ONE
    if sp.kind == "B":
        for j in range(1, n + 1):
            out = out * q(n + l[j - 1] - j + half) / q(n - j + half)
        shift = 2 * n + 1
    elif sp.kind == "D":
        if l[n - 1] != 0:
            out = out * 2
        shift = 2 * n
    else:
        if lam.size % 2:
            out = -out
        for j in range(1, n + 1):
            out = out * q(2 * n + 2 + 2 * l[j - 1] - 2 * j) / q(2 * n + 2 - 2 * j)
        shift = 2 * n + 2
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            li, lj = l[i - 1], l[j - 1]
            out = out * q(shift + li - i + lj - j) * q(li - i - lj + j)
            out = out / (q(shift - i - j) * q(j - i))
    return out


# rational functions in u ---------------------------------------------------------


def _pstrip(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def _padd(p, q):
    out = [C.ZERO] * max(len(p), len(q))
    for k, c in enumerate(p):
        out[k] = out[k] + c
    for k, c in enumerate(q):
        out[k] = out[k] + c
    return _pstrip(out)


def _pmul(p, q):
    if not p or not q:
        return []
    out = [C.ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _pstrip(out)


def _peval(p, x):
    out = C.ZERO
    for c in reversed(p):
        out = out * x + c
    return out


def _pderiv(p):
    return _pstrip([c * k for k, c in enumerate(p)][1:])


class RationalFunction:
    """num(u)/den(u) with coefficient lists (lowest degree first) over the field."""

    def __init__(self, num, den=None):
        self.num = _pstrip([RingElem.coerce(c) for c in num])
        self.den = _pstrip([RingElem.coerce(c) for c in (den or [C.ONE])])
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def u(cls):
        return cls([C.ZERO, C.ONE])

    @classmethod
    def const(cls, c):
        return cls([c])

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return RationalFunction(num, _pmul(self.den, other.den))

    def __neg__(self):
        return RationalFunction([-c for c in self.num], self.den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other)
        return RationalFunction(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other)
        return RationalFunction(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __call__(self, x):
        d = _peval(self.den, x)
        if d.is_zero():
            raise PoleAtSpecialization(f"pole at u = {x}")
        return _peval(self.num, x) / d

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other)
        return not _padd(_pmul(self.num, other.den), [-c for c in _pmul(other.num, self.den)])

    __hash__ = None

    def series(self, order):
        """Coefficients c_0..c_{order-1} of the expansion in u^-1 (proper or polynomial-free part)."""
        dn, dd = len(self.num) - 1, len(self.den) - 1
        if dn > dd:
            raise ValueError("expansion at infinity needs deg num <= deg den")
        # with w = 1/u: num(1/w)/den(1/w) = w^(dd-dn) * revnum(w) / revden(w)
        rn = list(reversed(self.num)) if self.num else []
        rd = list(reversed(self.den))
        shift = dd - dn if self.num else order
        quot = []
        rem = rn + [C.ZERO] * order
        inv = rd[0].inverse()
        for k in range(order):
            c = rem[k] * inv if k < len(rem) else C.ZERO
            quot.append(c)
            if not c.is_zero():
                for j, d in enumerate(rd):
                    if k + j < len(rem):
                        rem[k + j] = rem[k + j] - c * d
        out = [C.ZERO] * shift + quot
        return out[:order]


def residue(f, b):
    """Residue of f at a simple pole u = b."""
    if not _peval(f.den, b).is_zero():
        return C.ZERO
    d1 = _peval(_pderiv(f.den), b)
    if d1.is_zero():
        raise ValueError(f"pole at {b} is not simple")
    return _peval(f.num, b) / d1


def q_series(mu):
    """Q(mu, u) as a rational function of u."""
    mu = parse_partition(mu)
    u = RationalFunction.u()
    a = C.alpha()
    out = RationalFunction.const(a / C.z()) + u * a / (u * u - 1)
    for _c, _added, bj in _b_values(mu):
        out = out * (u - bj.inverse()) / (u - bj)
    return out


def z_series(mu):
    """Z(mu, u) = Q(mu, u) - alpha^-1/(s - s^-1) + u^2/(u^2 - 1)."""
    u = RationalFunction.u()
    return q_series(mu) - C.alpha(-1) / C.z() + u * u / (u * u - 1)


# idempotents ----------------------------------------------------------------------


def _absorb(lam, cell):
    return H.absorbing_constant(lam, cell)


def _last_removable(lam):
    return corners(lam)[1][-1]


@lru_cache(maxsize=None)
def _ytilde(lam):
    if lam.size <= 1:
        return B.identity(lam.size)
    report = feasibility(lam)
    if not report["ok"]:
        raise FeasibilityViolated(report)
    cell = _last_removable(lam)
    mu = lam.remove(cell)
    R, Ri = _rho(lam, cell)
    mid = Ri * _ytilde(mu).tensor_id(1) * R
    for nu in _smaller(mu):
        mid = mid - Ri * _ytilde_pair(mu, nu) * R
    yhat = lift_to_bmw(H.young_idem(lam))
    return (yhat * mid * yhat) / _absorb(lam, cell)


def ytilde(lam):
    """Minimal idempotent of shape lam in K_|lam|."""
    return _ytilde(parse_partition(lam))


def _smaller(mu):
    return [mu.remove(c) for c in corners(mu)[1]]


def _larger(mu):
    return [mu.add(c) for c in corners(mu)[0]]


@lru_cache(maxsize=None)
def _ytilde_pair(lam, nu):
    if lam.size != nu.size + 1 or not lam.contains_diagram(nu):
        raise ShapeMismatch(f"{nu} is not {lam} minus one cell")
    cell = diff_cell(lam, nu)
    dl = qdim(lam)
    if dl.is_zero():
        raise ZeroQuantumDimension(f"<{lam}> vanishes")
    R, Ri = _rho(lam, cell)
    yl = _ytilde(lam).tensor_id(1)
    middle = B.tensor(_ytilde(nu), B.gen_h(2, 1))
    x = yl * Ri.tensor_id(1) * middle * R.tensor_id(1) * yl
    return x.scale(qdim(nu) / (dl * _absorb(lam, cell)))


def ytilde_pair(lam, nu):
    """The idempotent of K_{|lam|+1} through the object nu (nu = lam minus one cell)."""
    return _ytilde_pair(parse_partition(lam), parse_partition(nu))


# matrix units -----------------------------------------------------------------------


def _as_updown(t):
    if isinstance(t, UpDownTableau):
        return t
    if isinstance(t, StdTableau):
        return UpDownTableau(t.chain)
    if isinstance(t, str):
        from .young import parse_path

        return parse_path(t)
    return UpDownTableau(t)


@lru_cache(maxsize=None)
def _units(path):
    """(a, b) for the up-down tableau with shapes ``path``."""
    if len(path) == 0:
        return B.identity(0), B.identity(0)
    if len(path) == 1:
        return B.identity(1), B.identity(1)
    a_prev, b_prev = _units(path[:-1])
    cur, prev = path[-1], path[-2]
    if cur.size > prev.size:
        cell = diff_cell(cur, prev)
        R, Ri = _rho(cur, cell)
        y = _ytilde(cur)
        a = (a_prev.tensor_id(1) * R * y) / _absorb(cur, cell)
        b = y * Ri * b_prev.tensor_id(1)
        return a, b
    cell = diff_cell(prev, cur)
    R, Ri = _rho(prev, cell)
    y = _ytilde(cur)
    dl = qdim(prev)
    if dl.is_zero():
        raise ZeroQuantumDimension(f"<{prev}> vanishes")
    r = qdim(cur) / (dl * _absorb(prev, cell))
    a = (a_prev.tensor_id(1) * Ri.tensor_id(1) * B.tensor(y, B.cap())).scale(r)
    b = B.tensor(y, B.cup()) * R.tensor_id(1) * b_prev.tensor_id(1)
    return a, b


def unit_a(t):
    return _units(_as_updown(t).path)[0]


def unit_b(t):
    return _units(_as_updown(t).path)[1]


@lru_cache(maxsize=None)
def _unit_q(path):
    a, b = _units(path)
    return a * b


def unit_q(t):
    """The path idempotent a_t b_t in K_n."""
    return _unit_q(_as_updown(t).path)


def ptilde(t):
    """p~_t for a standard tableau (an up-only path)."""
    return unit_q(t)


@lru_cache(maxsize=None)
def _ptilde_pair(path, nu):
    a, b = _units(path)
    lam = path[-1] if path else Partition()
    return a.tensor_id(1) * _ytilde_pair(lam, nu) * b.tensor_id(1)


def ptilde_pair(t, nu):
    return _ptilde_pair(_as_updown(t).path, parse_partition(nu))


@lru_cache(maxsize=None)
def _ptilde_plus(path):
    lam = path[-1] if path else Partition()
    out = _unit_q(path).tensor_id(1)
    for nu in _smaller(lam):
        out = out - _ptilde_pair(path, nu)
    return out


def ptilde_plus(t):
    """p~+_t in K_{n}, for a standard tableau t of size n - 1."""
    if isinstance(t, StdTableau) and t.size == 0:
        return B.identity(1)
    return _ptilde_plus(_as_updown(t).path)


def _tableaux(k):
    if k == 0:
        return [()]
    return [t.chain for t in iter_standard(k)]


@lru_cache(maxsize=None)
def _section_projector(n):
    if n == 1:
        return B.identity(1)
    out = AlgElem(n)
    for path in _tableaux(n - 1):
        out = out + _ptilde_plus(path)
    return out


def section(x):
    """The splitting of K_n -> H_n that kills the hook ideal, applied to x."""
    P = _section_projector(x.n)
    return P * lift_to_bmw(x) * P


@lru_cache(maxsize=None)
def _central(n, lam):
    out = AlgElem(n)
    for t in enumerate_updown(n, lam):
        out = out + _unit_q(t.path)
    return out


def central_idem(n, lam):
    """z^(n)_lam: the sum of q_t over up-down tableaux of length n ending at lam."""
    if n == 0:
        return B.identity(0)
    return _central(n, parse_partition(lam))


class MatrixUnitDB:
    """Idempotents and matrix units of K_1, ..., K_n."""

    def __init__(self, n):
        self.n = n
        self.ytilde = {}
        self.pairs = {}
        self.ptilde = {}
        self.ptilde_plus = {}
        self.units = {}
        self.central = {}
        self.qdims = {}

    def build(self, check_qdims=True):
        with _lock:
            for k in range(1, self.n + 1):
                for lam in partitions_of(k):
                    self.ytilde[lam] = _ytilde(lam)
                    self.qdims[lam] = qdim(lam)
                    if check_qdims and B.qtrace(self.ytilde[lam]) != self.qdims[lam]:
                        raise ZeroQuantumDimension(f"trace of the idempotent of {lam} is off")
                    for nu in _smaller(lam):
                        if k + 1 <= self.n:
                            self.pairs[(lam, nu)] = _ytilde_pair(lam, nu)
                for t in iter_standard(k):
                    self.ptilde[t] = ptilde(t)
                    if k + 1 <= self.n:
                        self.ptilde_plus[t] = ptilde_plus(t)
                for t in enumerate_updown(k):
                    a, b = _units(t.path)
                    self.units[t] = (a, b, _unit_q(t.path))
                for lam in {t.shape for t in enumerate_updown(k)}:
                    self.central[(k, lam)] = central_idem(k, lam)
        return self

    def units_at(self, n):
        return {t: v for t, v in self.units.items() if t.length == n}

    def to_json(self):
        def enc(x):
            return x.to_json()

        return {
            "n": self.n,
            "qdim": {str(lam): str(v) for lam, v in sorted(self.qdims.items())},
            "ytilde": {str(lam): enc(v) for lam, v in sorted(self.ytilde.items())},
            "pairs": {f"{lam}|{nu}": enc(v) for (lam, nu), v in sorted(self.pairs.items())},
            "units": {
                str(t): {"a": enc(a), "b": enc(b), "q": enc(q)}
                for t, (a, b, q) in sorted(self.units.items())
            },
            "central": {
                f"{k}:{lam}": enc(v) for (k, lam), v in sorted(self.central.items())
            },
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def matrix_units(n):
    return MatrixUnitDB(n).build()


# twist and braiding -------------------------------------------------------------------


def twist_coefficient(mu):
    mu = parse_partition(mu)
    return C.alpha(mu.size) * C.s(2 * sum(content(c) for c in mu.cells()))


@lru_cache(maxsize=None)
def _full_twist(m):
    x = B.identity(m)
    for _ in range(m):
        for i in range(1, m):
            x = x * B.gen_e(m, i)
    # one positive curl per strand, each the closure of a crossing
    curl = B.partial_close(B.gen_e(2, 1))
    curls = B.identity(0)
    for _ in range(m):
        curls = B.tensor(curls, curl)
    return x * curls


def verify_twist(mu):
    """Engine eigenvalue of the ribbon twist on the idempotent of shape mu."""
    mu = parse_partition(mu)
    y = _ytilde(mu)
    c = (y * _full_twist(mu.size)).proportional_to(y)
    if c is None:
        raise ShapeMismatch(f"twist does not act by a scalar on {mu}")
    return c


def braiding_coefficient(lam, mu, direction="grow"):
    lam, mu = parse_partition(lam), parse_partition(mu)
    if direction == "grow":
        if mu.size != lam.size + 1 or not mu.contains_diagram(lam):
            raise ShapeMismatch(f"{mu} is not {lam} plus one cell")
        return C.s(2 * content(diff_cell(mu, lam)))
    if direction == "shrink":
        if lam.size != mu.size + 1 or not lam.contains_diagram(mu):
            raise ShapeMismatch(f"{lam} is not {mu} plus one cell")
        return C.alpha(-2) * C.s(-2 * content(diff_cell(lam, mu)))
    raise ValueError(f"direction must be grow or shrink, not {direction!r}")


def verify_braiding(lam, mu, direction="grow"):
    """Eigenvalue of the double crossing of the extra strand around the cable."""
    lam, mu = parse_partition(lam), parse_partition(mu)
    if direction == "grow":
        braiding_coefficient(lam, mu, direction)
        cell = diff_cell(mu, lam)
        R, Ri = _rho(mu, cell)
        yl = _ytilde(lam).tensor_id(1)
        y = yl * R * _ytilde(mu) * Ri * yl
        n = mu.size
    else:
        braiding_coefficient(lam, mu, direction)
        y = _ytilde_pair(lam, mu)
        n = lam.size + 1
    c = (y * B.pure_jm_element(n)).proportional_to(y)
    if c is None:
        raise ShapeMismatch("double crossing does not act by a scalar")
    return c


# feasibility ---------------------------------------------------------------------------


def _status(x, sp):
    """'nonzero', 'zero' or 'pole' for x under sp."""
    if sp.kind == "generic":
        return "zero" if x.is_zero() else "nonzero"
    if sp.kind == "root":
        st = C.root_status(x, sp.parameter)
        return "pole" if st in ("pole", "indeterminate") else st
    try:
        val = C.specialize(x, sp)
    except PoleAtSpecialization:
        return "pole"
    return "zero" if val.is_zero() else "nonzero"


def _bullets(lam, mu, sp):
    out = []
    bound = lam[0] + lam.transpose()[0] if lam else 0
    bad = [m for m in range(1, bound) if _status(C.qint(m), sp) != "nonzero"]
    out.append(
        {
            "bullet": "quantum integers",
            "ok": not bad,
            "witness": f"[{bad[0]}] vanishes" if bad else None,
        }
    )
    sub = feasibility(mu, sp) if mu is not None and mu.size > 1 else None
    ok = sub is None or sub["ok"]
    out.append(
        {
            "bullet": "smaller idempotent",
            "ok": ok,
            "witness": None if ok else f"idempotent of {mu} is not defined",
        }
    )
    bad = []
    if mu is not None:
        for nu in _smaller(mu):
            st = _status(qdim_ratio(mu, nu), sp)
            if st != "nonzero":
                bad.append(f"<{mu}>/<{nu}> is {st}")
    out.append({"bullet": "dimension ratios", "ok": not bad, "witness": bad[0] if bad else None})
    return out


def feasibility(lam, sp="generic", tableau=None):
    """Report, under ``sp``, the conditions for the idempotents of shape lam.

    The ``ytilde`` block picks the first removable cell whose smaller idempotent
    passes; the ``ptilde`` block follows ``tableau`` (default: the row-reading one).
    """
    lam = parse_partition(lam)
    if isinstance(sp, str):
        sp = Specialization.parse(sp)
    rem = corners(lam)[1] if lam else []
    mus = [lam.remove(c) for c in reversed(rem)]
    ybul = None
    for mu in mus:
        ybul = _bullets(lam, mu, sp)
        if all(b["ok"] for b in ybul):
            break
    if ybul is None:
        ybul = _bullets(lam, None, sp)
    if tableau is None:
        chain, cur = [], Partition()
        for c in lam.cells():
            cur = cur.add(c)
            chain.append(cur)
        tableau = StdTableau(chain) if chain else None
    mu = tableau.parent().shape if tableau is not None and lam.size > 1 else None
    pbul = _bullets(lam, mu, sp)
    if tableau is not None:
        # ratios along the whole growth path of the tableau
        shapes = [Partition()] + list(tableau.chain)
        for small, big in zip(shapes, shapes[1:]):
            st = _status(qdim_ratio(big, small), sp)
            if st != "nonzero" and pbul[2]["ok"]:
                pbul[2] = {
                    "bullet": "dimension ratios",
                    "ok": False,
                    "witness": f"<{big}>/<{small}> is {st}",
                }
    ok = all(b["ok"] for b in ybul) and all(b["ok"] for b in pbul)
    return {
        "partition": str(lam),
        "specialization": str(sp),
        "ytilde": ybul,
        "ptilde": pbul,
        "ok": ok,
    }
