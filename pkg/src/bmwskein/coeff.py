"""Exact arithmetic in Q(alpha^(1/2), s^(1/2)).

Elements are reduced fractions of integer polynomials in ``A = alpha^(1/2)``
and ``v = s^(1/2)``.  Negative exponents live in the denominator, so a Laurent
polynomial is simply a fraction whose denominator is a monomial.  The reduced
form (gcd removed, denominator with positive leading coefficient in lex order)
is unique, which makes ``==`` a structural comparison.

The text format is ``a^i*v^j`` monomials with rational coefficients, sorted by
exponent, and ``num / den`` for genuine fractions; ``parse`` reads it back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd

from . import _poly as P
from .errors import HalfPowerSign, PoleAtSpecialization

__all__ = [
    "RingElem",
    "Specialization",
    "A",
    "V",
    "alpha",
    "s",
    "z",
    "qint",
    "ybracket",
    "loop_value",
    "hecke_loop_value",
    "specialize",
    "root_status",
    "negate_invert_alpha",
    "render",
    "parse",
]


def _lcm(a, b):
    return a // igcd(a, b) * b


class RingElem:
    """An element of Q(A, v) kept in reduced form ``num / den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = P.ONE
        if not _reduced:
            if P.is_zero(den):
                raise ZeroDivisionError("zero denominator")
            if P.is_zero(num):
                num, den = P.ZERO, P.ONE
            elif not P.is_one(den):
                g = P.gcd(num, den)
                if not P.is_one(g):
                    num = P.divexact(num, g)
                    den = P.divexact(den, g)
                if P.lc(den) < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def from_laurent(cls, terms):
        """Build from ``{(i, j): coefficient}`` with i, j arbitrary integers."""
        terms = {k: Fraction(c) for k, c in terms.items() if c}
        if not terms:
            return cls(P.ZERO)
        sa = min(k[0] for k in terms)
        sv = min(k[1] for k in terms)
        den_int = 1
        for c in terms.values():
            den_int = _lcm(den_int, c.denominator)
        num = P.from_dict(
            {(i - sa, j - sv): int(c * den_int) for (i, j), c in terms.items()}
        )
        den = P.from_dict({(max(-sa, 0), max(-sv, 0)): den_int})
        if sa > 0 or sv > 0:
            num = num * P.monomial(max(sa, 0), max(sv, 0))
        return cls(num, den)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RingElem):
            return x
        if isinstance(x, int):
            return cls(P.const(x), _reduced=True)
        if isinstance(x, Fraction):
            return cls(P.const(x.numerator), P.const(x.denominator), _reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RingElem")

    # predicates ---------------------------------------------------------

    def is_zero(self):
        return P.is_zero(self.num)

    def __bool__(self):
        return not P.is_zero(self.num)

    def is_one(self):
        return P.is_one(self.num) and P.is_one(self.den)

    def is_constant(self):
        return P.degrees(self.num) == (0, 0) and P.degrees(self.den) == (0, 0)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        n = P.to_dict(self.num).get((0, 0), 0)
        d = P.to_dict(self.den)[(0, 0)]
        return Fraction(n, d)

    def is_laurent(self):
        d = P.to_dict(self.den)
        return len(d) == 1

    def laurent_terms(self):
        """``{(i, j): Fraction}`` when the denominator is a monomial."""
        d = P.to_dict(self.den)
        if len(d) != 1:
            raise ValueError("not a Laurent polynomial")
        ((sa, sv), c), = d.items()
        return {(i - sa, j - sv): Fraction(k, c) for (i, j), k in P.to_dict(self.num).items()}

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = RingElem.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if P.is_one(self.den) and P.is_one(other.den):
            return RingElem(self.num + other.num, _reduced=True)
        if self.den == other.den:
            return RingElem(self.num + other.num, self.den)
        return RingElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = RingElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RingElem.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = RingElem.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not P.is_one(d2):
            g = P.gcd(n1, d2)
            if not P.is_one(g):
                n1, d2 = P.divexact(n1, g), P.divexact(d2, g)
        if not P.is_one(d1):
            g = P.gcd(n2, d1)
            if not P.is_one(g):
                n2, d1 = P.divexact(n2, g), P.divexact(d1, g)
        num, den = n1 * n2, d1 * d2
        if P.lc(den) < 0:
            num, den = -num, -den
        return RingElem(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if P.lc(den) < 0:
            num, den = -num, -den
        return RingElem(num, den, _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = RingElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RingElem.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = RingElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((P.key(self.num), P.key(self.den)))
        return self._hash

    # evaluation ---------------------------------------------------------

    def evaluate(self, a, v):
        """Value at numeric ``A = a``, ``v = v`` (exact for Fractions)."""
        num = sum(Fraction(c) * a**i * v**j for (i, j), c in P.to_dict(self.num).items())
        den = sum(Fraction(c) * a**i * v**j for (i, j), c in P.to_dict(self.den).items())
        if den == 0:
            raise PoleAtSpecialization(f"denominator of {self} vanishes at A={a}, v={v}")
        return num / den

    def a_parity_even(self):
        """True when only even powers of A occur (a function of alpha itself)."""
        return all(i % 2 == 0 for (i, _j) in P.to_dict(self.num)) and all(
            i % 2 == 0 for (i, _j) in P.to_dict(self.den)
        )

    # rendering ----------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RingElem({render(self)!r})"

    def __reduce__(self):
        return (parse, (render(self),))


ZERO = RingElem(P.ZERO, _reduced=True)
ONE = RingElem(P.ONE, _reduced=True)

# generators and standard quantities ----------------------------------------

A = RingElem.from_laurent({(1, 0): 1})
V = RingElem.from_laurent({(0, 1): 1})


def alpha(k=1):
    return RingElem.from_laurent({(2 * k, 0): 1})


def s(k=1):
    return RingElem.from_laurent({(0, 2 * k): 1})


def _half_exponent(m):
    twice = Fraction(m) * 2
    if twice.denominator != 1:
        raise ValueError(f"{m} is not a half-integer")
    return int(twice)


@lru_cache(maxsize=None)
def z():
    """s - s^{-1}."""
    return RingElem.from_laurent({(0, 2): 1, (0, -2): -1})


@lru_cache(maxsize=None)
def _qint(twice_m):
    # (s^m - s^-m) / (s - s^-1) with s^m = v^(2m)
    num = RingElem.from_laurent({(0, 2 * twice_m): 1, (0, -2 * twice_m): -1}) if twice_m else ZERO
    # exponents of v are 2*(2m)/2 = 2m... keep in terms of v: s^m = v^(2m)
    return num / z()


def qint(m):
    """Quantum integer [m] = (s^m - s^-m)/(s - s^-1); m may be a half-integer."""
    t = _half_exponent(m)
    # s^m = v^(2m) = v^t
    if t == 0:
        return ZERO
    return _qint_v(t)


@lru_cache(maxsize=None)
def _qint_v(t):
    return RingElem.from_laurent({(0, t): 1, (0, -t): -1}) / z()


@lru_cache(maxsize=None)
def _ybracket_v(t):
    return RingElem.from_laurent({(2, t): 1, (-2, -t): -1}) / z()


def ybracket(d):
    """[y + d] = (alpha s^d - alpha^-1 s^-d)/(s - s^-1); d may be a half-integer."""
    return _ybracket_v(_half_exponent(d))


@lru_cache(maxsize=None)
def loop_value():
    """delta = (alpha - alpha^-1)/(s - s^-1) + 1, the value of a trivial loop."""
    return ybracket(0) + ONE


@lru_cache(maxsize=None)
def hecke_loop_value():
    """(alpha - alpha^-1)/(s - s^-1), the Homfly value of a trivial loop."""
    return ybracket(0)


def negate_invert_alpha(x):
    """Image of x under alpha -> -alpha^-1 (x must only involve whole powers of alpha)."""
    x = RingElem.coerce(x)
    if not x.a_parity_even():
        raise HalfPowerSign(f"{x} involves odd powers of alpha^(1/2)")

    def flip(p):
        return RingElem.from_laurent(
            {(-i, j): c * (-1) ** (i // 2) for (i, j), c in P.to_dict(p).items()}
        )

    return flip(x.num) / flip(x.den)


# specializations -------------------------------------------------------------


@dataclass(frozen=True)
class Specialization:
    """A ring morphism out of Q(A, v).

    ``kind`` is one of ``generic``, ``B``, ``C``, ``D``, ``brauer`` or
    ``root``.  B(n): alpha = s^(2n); D(n): alpha = s^(2n-1);
    C(n): alpha = -s^(2n+1); brauer(N): alpha = s^(N-1) then s -> 1;
    root(l): s = exp(i*pi/l) with alpha kept generic (zero tests only).
    """

    kind: str = "generic"
    parameter: int = 0

    def __post_init__(self):
        kinds = ("generic", "B", "C", "D", "brauer", "root")
        if self.kind not in kinds:
            raise ValueError(f"unknown specialization kind {self.kind!r}")
        if self.kind != "generic" and self.parameter < 1:
            raise ValueError(f"{self.kind} needs a positive integer parameter")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.lower() in ("", "generic"):
            return cls()
        name, _, param = text.partition(":")
        name = {"b": "B", "c": "C", "d": "D", "brauer": "brauer", "root": "root"}.get(
            name.strip().lower(), name.strip()
        )
        return cls(name, int(param))

    def __str__(self):
        return "generic" if self.kind == "generic" else f"{self.kind}:{self.parameter}"

    def a_substitution(self):
        """(sign, k) with A -> sign * v^k, or None for generic/root."""
        if self.kind == "B":
            return (1, 2 * self.parameter)
        if self.kind == "D":
            return (1, 2 * self.parameter - 1)
        if self.kind == "brauer":
            return (1, self.parameter - 1)
        return None


def _substitute_poly(p, sign, k, square_only=False):
    """Image of a polynomial under A -> sign * v^k, as a RingElem in v."""
    out = {}
    for (i, j), c in P.to_dict(p).items():
        if square_only:
            if i % 2:
                raise HalfPowerSign("odd power of alpha^(1/2) under a C-type specialization")
            # A^2 -> sign * v^k  (k already doubled by the caller)
            e = i // 2
            coef = c * (sign**e)
            key = (0, j + k * e)
        else:
            coef = c * (sign**i)
            key = (0, j + k * i)
        out[key] = out.get(key, 0) + coef
    return RingElem.from_laurent(out)


def specialize(x, sp):
    """Image of ``x`` under the specialization ``sp``."""
    x = RingElem.coerce(x)
    if sp.kind == "generic":
        return x
    if sp.kind == "root":
        raise ValueError("root-of-unity values are not representable; use root_status")
    if sp.kind == "C":
        # alpha = A^2 -> -s^(2n+1) = -v^(4n+2)
        k = 4 * sp.parameter + 2
        num = _substitute_poly(x.num, -1, k, square_only=True)
        den = _substitute_poly(x.den, -1, k, square_only=True)
    else:
        sign, k = sp.a_substitution()
        num = _substitute_poly(x.num, sign, k)
        den = _substitute_poly(x.den, sign, k)
    if den.is_zero():
        raise PoleAtSpecialization(f"{x} has a pole at {sp}")
    value = num / den
    if sp.kind == "brauer":
        try:
            return RingElem.coerce(value.evaluate(1, 1))
        except PoleAtSpecialization:
            raise PoleAtSpecialization(f"{x} has no limit at {sp}") from None
    return value


def _cyclotomic_dict(m):
    """Coefficients of the m-th cyclotomic polynomial in v, as {deg: coeff}."""
    from sympy import Poly, cyclotomic_poly, symbols

    t = symbols("t")
    poly = Poly(cyclotomic_poly(m, t), t)
    return {mon[0]: int(c) for mon, c in poly.terms()}


def _reduce_mod_cyclotomic(p, m):
    """Reduce a polynomial in (A, v) modulo Phi_m(v); returns {(i, j): c} with j < deg."""
    phi = _cyclotomic_dict(m)
    deg = max(phi)
    rows = {}
    for (i, j), c in P.to_dict(p).items():
        rows.setdefault(i, {})
        rows[i][j] = rows[i].get(j, 0) + c
    out = {}
    for i, row in rows.items():
        coeffs = dict(row)
        top = max(coeffs) if coeffs else -1
        while top >= deg:
            c = coeffs.pop(top, 0)
            if c:
                # Phi is monic: v^deg = -(lower terms)
                for e, pc in phi.items():
                    if e == deg:
                        continue
                    coeffs[top - deg + e] = coeffs.get(top - deg + e, 0) - c * pc
            top = max(coeffs) if coeffs else -1
        for j, c in coeffs.items():
            if c:
                out[(i, j)] = c
    return out


def root_status(x, ell):
    """Classify ``x`` at s = exp(i*pi/ell) with alpha generic.

    Returns ``"zero"``, ``"nonzero"``, ``"pole"`` or ``"indeterminate"``.
    """
    x = RingElem.coerce(x)
    m = 4 * ell  # v = exp(i*pi/(2*ell)) is a primitive 4*ell-th root of unity
    num_zero = not _reduce_mod_cyclotomic(x.num, m)
    den_zero = not _reduce_mod_cyclotomic(x.den, m)
    if den_zero:
        return "indeterminate" if num_zero else "pole"
    return "zero" if num_zero else "nonzero"


# text format -----------------------------------------------------------------


def _fmt_exp(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _render_laurent(terms, integral=False):
    if not terms:
        return "0"
    parts = []
    for (i, j) in sorted(terms, reverse=True):
        c = terms[(i, j)]
        mono = "*".join(x for x in (_fmt_exp("a", i), _fmt_exp("v", j)) if x)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def render(x):
    """Canonical text of a RingElem."""
    dd = P.to_dict(x.den)
    sa = min(k[0] for k in dd)
    sv = min(k[1] for k in dd)
    rest = {(i - sa, j - sv): c for (i, j), c in dd.items()}
    num = {(i - sa, j - sv): c for (i, j), c in P.to_dict(x.num).items()}
    if len(rest) == 1:
        (c,) = rest.values()
        return _render_laurent({k: Fraction(v, c) for k, v in num.items()})
    n_txt = _render_laurent(num)
    d_txt = _render_laurent(rest)
    if len(num) > 1:
        n_txt = f"({n_txt})"
    return f"{n_txt} / ({d_txt})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([av])|(\*\*|[-+*/^()]))")


def parse(text):
    """Read a RingElem from the canonical text format (or any +-*/^ expression in a, v)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("n", int(num)))
        elif var is not None:
            tokens.append(("v", var))
        else:
            tokens.append(("o", "^" if op == "**" else op))
        pos = m.end()
    tokens.append(("end", None))
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def expr():
        val = term()
        while peek() in (("o", "+"), ("o", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() in (("o", "*"), ("o", "/")):
            op = take()[1]
            rhs = factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor():
        if peek() == ("o", "-"):
            take()
            return -factor()
        if peek() == ("o", "+"):
            take()
            return factor()
        base = atom()
        if peek() == ("o", "^"):
            take()
            sign = 1
            if peek() == ("o", "-"):
                take()
                sign = -1
            kind, e = take()
            if kind != "n":
                raise ValueError(f"bad exponent in {text!r}")
            base = base ** (sign * e)
        return base

    def atom():
        kind, val = take()
        if kind == "n":
            return RingElem.coerce(val)
        if kind == "v":
            return A if val == "a" else V
        if (kind, val) == ("o", "("):
            inner = expr()
            if take() != ("o", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result
