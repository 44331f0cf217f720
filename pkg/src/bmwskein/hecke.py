"""The Hecke algebra H_n on the basis of positive permutation braids.

Products are read bottom to top: in ``a * b`` the braid ``a`` sits below
``b``.  A permutation ``p`` (1-based tuple) is the braid whose strand starting
at bottom position ``i`` ends at top position ``p[i-1]``.

Every element carries a certificate: a list of (braid word, coefficient)
pairs whose sum is the element.  The certificate is kept canonical, one
reduced positive word per basis permutation, so lifting to the BMW algebra
reads the word generator by generator.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from . import coeff as C
from .coeff import RingElem
from .errors import NonInvertibleQuantumInteger, NormalizationVanishes, StrandMismatch
from .young import content, hook_length, parse_partition

__all__ = [
    "HeckeElem",
    "hecke_one",
    "sigma",
    "sigma_inv",
    "perm_braid",
    "perm_braid_inverse",
    "reduced_word",
    "length",
    "symmetrizer_f",
    "antisymmetrizer_g",
    "young_idem",
    "young_quasi",
    "rho",
    "tableau_morphisms",
    "absorbing_constant",
    "hecke_qdim",
    "markov_trace",
]


def _identity(n):
    return tuple(range(1, n + 1))


def _compose(p, q):
    """Permutation of the braid p (below) followed by q (above)."""
    return tuple(q[p[i] - 1] for i in range(len(p)))


def length(p):
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@lru_cache(maxsize=None)
def reduced_word(p):
    """Reduced word (bottom to top) of the positive permutation braid of p."""
    p = tuple(p)
    n = len(p)
    # position -> strand currently there, built by bubble-sorting the targets
    cur = list(p)  # cur[k] = target position of the strand at position k+1
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if cur[k] > cur[k + 1]:
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                word.append(k + 1)
                changed = True
    return tuple(word)


def _swap(n, i):
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _word_text(word):
    return " ".join(f"s{i}" if i > 0 else f"S{-i}" for i in word)


class HeckeElem:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {tuple(p): v for p, v in (terms or {}).items() if v}

    @property
    def certificate(self):
        """[(word, coefficient)] with positive reduced words, sorted by length then word."""
        out = [(reduced_word(p), c) for p, c in self.terms.items()]
        return sorted(out, key=lambda wc: (len(wc[0]), wc[0]))

    # linear ------------------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise StrandMismatch(f"H_{self.n} and H_{other.n}")

    def __add__(self, other):
        if isinstance(other, (int, RingElem)):
            other = hecke_one(self.n).scale(other)
        self._check(other)
        out = dict(self.terms)
        for p, v in other.terms.items():
            out[p] = out[p] + v if p in out else v
        return HeckeElem(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElem(self.n, {p: -v for p, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, RingElem)):
            other = hecke_one(self.n).scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = RingElem.coerce(c)
        return HeckeElem(self.n, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return hecke_mul(self, other)
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

    def __eq__(self, other):
        if isinstance(other, (int, RingElem)):
            other = hecke_one(self.n).scale(other)
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, p):
        return self.terms.get(tuple(p), C.ZERO)

    def tensor_id(self, k=1):
        n = self.n
        ext = tuple(range(n + 1, n + k + 1))
        return HeckeElem(n + k, {p + ext: v for p, v in self.terms.items()})

    def shift(self, k):
        """1_k tensor self."""
        pre = tuple(range(1, k + 1))
        return HeckeElem(self.n + k, {pre + tuple(x + k for x in p): v for p, v in self.terms.items()})

    def proportional_to(self, other):
        if not other.terms:
            return C.ZERO if not self.terms else None
        p0 = next(iter(other.terms))
        c = self.coefficient(p0) / other.terms[p0]
        return c if self == other.scale(c) else None

    def trace(self):
        return markov_trace(self)

    def __repr__(self):
        return f"HeckeElem({self.n}, {len(self.terms)} terms)"

    def to_json(self):
        terms = [
            {"perm": list(p), "coeff": str(self.terms[p])} for p in sorted(self.terms)
        ]
        cert = [{"word": _word_text(w), "coeff": str(c)} for w, c in self.certificate]
        return {"n": self.n, "terms": terms, "certificate": cert}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], {tuple(t["perm"]): C.parse(t["coeff"]) for t in data["terms"]})

    @classmethod
    def from_certificate(cls, n, cert):
        """Sum of coefficient * word over a (possibly non-canonical) certificate."""
        total = HeckeElem(n)
        for word, c in cert:
            x = hecke_one(n)
            for g in word:
                x = x * (sigma(n, g) if g > 0 else sigma_inv(n, -g))
            total = total + x.scale(c)
        return total


# multiplication --------------------------------------------------------------


@lru_cache(maxsize=None)
def _times_sigma(p, i):
    """w_p * sigma_i as {perm: RingElem}."""
    n = len(p)
    q = _compose(p, _swap(n, i))
    # strands arriving at top positions i and i+1
    inv = {v: k for k, v in enumerate(p)}
    if inv[i] < inv[i + 1]:
        return {q: C.ONE}
    return {q: C.ONE, p: C.z()}


def _mul_word(terms, word):
    for i in word:
        out = {}
        for p, c in terms.items():
            for q, d in _times_sigma(p, i).items():
                v = c * d if not d.is_one() else c
                out[q] = out[q] + v if q in out else v
        terms = {p: v for p, v in out.items() if v}
    return terms


@lru_cache(maxsize=None)
def _basis_product(p, q):
    return _mul_word({p: C.ONE}, reduced_word(q))


def hecke_mul(a, b):
    a._check(b)
    out = {}
    for p, c1 in a.terms.items():
        for q, c2 in b.terms.items():
            c = c1 * c2
            for r, d in _basis_product(p, q).items():
                v = c * d
                out[r] = out[r] + v if r in out else v
    return HeckeElem(a.n, out)


@lru_cache(maxsize=None)
def hecke_one(n):
    return HeckeElem(n, {_identity(n): C.ONE})


@lru_cache(maxsize=None)
def sigma(n, i):
    return HeckeElem(n, {_swap(n, i): C.ONE})


@lru_cache(maxsize=None)
def sigma_inv(n, i):
    return sigma(n, i) - hecke_one(n).scale(C.z())


def perm_braid(p):
    p = tuple(p)
    return HeckeElem(len(p), {p: C.ONE})


@lru_cache(maxsize=None)
def perm_braid_inverse(p):
    """Inverse of w_p in H_n: the reversed word of inverse generators."""
    p = tuple(p)
    n = len(p)
    x = hecke_one(n)
    for i in reversed(reduced_word(p)):
        x = x * sigma_inv(n, i)
    return x


# trace ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _trace_perm(p):
    n = len(p)
    if n == 0:
        return C.ONE
    if p[-1] == n:
        return C.hecke_loop_value() * _trace_perm(p[:-1])
    # w_p = (s_j ... s_{n-1}) (w_u x 1) where j is the strand that ends on top n
    j = p.index(n) + 1
    u = tuple(p[i] for i in range(n) if i != j - 1)
    a = perm_braid(u)
    word = tuple(range(j, n - 1))
    # cyclicity: tr(A s_{n-1} B) = alpha tr(B A) with A = s_j..s_{n-2}, B = w_u
    prod = HeckeElem(n - 1, _mul_word(dict(a.terms), word))
    total = C.ZERO
    for q, c in prod.terms.items():
        total = total + c * _trace_perm(q)
    return C.alpha() * total


def markov_trace(x):
    """Closure value: tr(1_n) = delta_h^n, tr((y x 1) s_{n-1}) = alpha tr(y)."""
    total = C.ZERO
    for p, c in x.terms.items():
        total = total + c * _trace_perm(p)
    return total


# symmetrizers ----------------------------------------------------------------


def _qfactorial(n):
    out = C.ONE
    for j in range(1, n + 1):
        q = C.qint(j)
        if q.is_zero():
            raise NonInvertibleQuantumInteger(f"[{j}] vanishes")
        out = out * q
    return out


@lru_cache(maxsize=None)
def symmetrizer_f(n):
    """f_n: f_n sigma_i = s f_n."""
    terms = {p: C.s(length(p)) for p in permutations(range(1, n + 1))}
    return HeckeElem(n, terms).scale(C.s(-n * (n - 1) // 2) / _qfactorial(n))


@lru_cache(maxsize=None)
def antisymmetrizer_g(n):
    """g_n: g_n sigma_i = -s^-1 g_n."""
    terms = {p: C.s(-length(p)) * (-1) ** length(p) for p in permutations(range(1, n + 1))}
    return HeckeElem(n, terms).scale(C.s(n * (n - 1) // 2) / _qfactorial(n))


def _block(elems):
    """Tensor product of a list of Hecke elements, left to right."""
    x = HeckeElem(0, {(): C.ONE})
    for e in elems:
        out = {}
        k = x.n
        for p, c in x.terms.items():
            for q, d in e.terms.items():
                out[p + tuple(v + k for v in q)] = c * d
        x = HeckeElem(k + e.n, out)
    return x


def _row_to_column(lam):
    """Permutation sending row-reading positions to column-reading positions."""
    cells = lam.cells()
    col_order = sorted(cells, key=lambda c: (c[1], c[0]))
    col_pos = {c: k + 1 for k, c in enumerate(col_order)}
    return tuple(col_pos[c] for c in cells)


@lru_cache(maxsize=None)
def young_quasi(lam):
    """Row symmetrizers times conjugated column antisymmetrizers, and its Schur constant."""
    lam = parse_partition(lam)
    rows = _block([symmetrizer_f(r) for r in lam])
    cols = _block([antisymmetrizer_g(c) for c in lam.transpose()])
    omega = _row_to_column(lam)
    col_part = perm_braid(omega) * cols * perm_braid_inverse(omega)
    quasi = rows * col_part
    sq = quasi * quasi
    c = sq.proportional_to(quasi)
    if c is None:
        raise NormalizationVanishes(f"row/column product for {lam} is not quasi-idempotent")
    if c.is_zero():
        raise NormalizationVanishes(f"Schur constant of {lam} vanishes")
    return quasi, c


@lru_cache(maxsize=None)
def young_idem(lam):
    """Minimal idempotent y_lambda on strands in row-reading order."""
    lam = parse_partition(lam)
    if lam.size == 0:
        return HeckeElem(0, {(): C.ONE})
    quasi, c = young_quasi(lam)
    return quasi / c


@lru_cache(maxsize=None)
def rho(lam, cell):
    """Positive braid taking the new strand (last) to the row-reading slot of ``cell``."""
    lam = parse_partition(lam)
    n = lam.size
    pos = lam.cells().index(tuple(cell)) + 1
    p = list(range(1, n + 1))
    for k in range(pos, n):
        p[k - 1] = k + 1
    p[n - 1] = pos
    return tuple(p)


@lru_cache(maxsize=None)
def tableau_morphisms(t):
    """(alpha_t, beta_t, p_t) for a standard tableau."""
    lam = t.shape
    n = lam.size
    y = young_idem(lam)
    if n == 1:
        one = hecke_one(1)
        return one, one, one
    a_prev, b_prev, _ = tableau_morphisms(t.parent())
    cell = t.last_cell()
    r = rho(lam, cell)
    a = a_prev.tensor_id(1) * perm_braid(r) * y
    b = y * perm_braid_inverse(r) * b_prev.tensor_id(1)
    # b a = c y; the constant is moved into a so that b a = y exactly
    a = a / absorbing_constant(lam, cell)
    return a, b, a * b


@lru_cache(maxsize=None)
def absorbing_constant(lam, cell):
    """c with y_lam rho^-1 (y_mu x 1) rho y_lam = c y_lam, mu = lam minus cell."""
    lam = parse_partition(lam)
    mu = lam.remove(cell)
    y = young_idem(lam)
    r = rho(lam, cell)
    x = y * perm_braid_inverse(r) * young_idem(mu).tensor_id(1) * perm_braid(r) * y
    c = x.proportional_to(y)
    if c is None or c.is_zero():
        raise NormalizationVanishes(f"{mu} does not absorb into {lam}")
    return c


def hecke_qdim(lam):
    lam = parse_partition(lam)
    out = C.ONE
    for c in lam.cells():
        out = out * C.ybracket(content(c)) / C.qint(hook_length(lam, c))
    return out
