"""Independent reference computations used by the tests.

Nothing in here calls the package's tangle engine.  The Kauffman oracle builds
its own PD diagram straight from a word and evaluates it by switching crossings
until the diagram is descending.
"""

from functools import lru_cache

from bmwskein import _poly
from bmwskein import coeff as C


def double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# PD diagrams from words ---------------------------------------------------------


class _Labels:
    def __init__(self):
        self.parent = {}
        self.next = 0

    def fresh(self):
        self.next += 1
        self.parent[self.next] = self.next
        return self.next

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def closed_word_pd(tokens, n):
    """Crossings and free loop count of the trace closure of a word.

    Crossings are 4-tuples in counter-clockwise order with slots 0 and 2 on
    the under-strand.  e_i sends bottom i over to top i+1.
    """
    lab = _Labels()
    bottom = [lab.fresh() for _ in range(n)]
    cur = list(bottom)
    crossings = []
    for tok in tokens:
        kind, i = tok[0], int(tok[1:]) - 1
        if kind == "h":
            lab.union(cur[i], cur[i + 1])
            a = lab.fresh()
            b = lab.fresh()
            lab.union(a, b)
            cur[i], cur[i + 1] = a, b
            continue
        bl, br = cur[i], cur[i + 1]
        tl, tr = lab.fresh(), lab.fresh()
        if kind == "e":
            crossings.append((br, tr, tl, bl))
        else:
            crossings.append((bl, br, tr, tl))
        cur[i], cur[i + 1] = tl, tr
    for k in range(n):
        lab.union(cur[k], bottom[k])
    crossings = [tuple(lab.find(x) for x in c) for c in crossings]
    used = {x for c in crossings for x in c}
    classes = {lab.find(x) for x in lab.parent}
    return tuple(crossings), len(classes - used)


def _components(crossings):
    """Traversals as lists of (crossing index, entry slot), from fixed base points."""
    where = {}
    for k, c in enumerate(crossings):
        for slot, x in enumerate(c):
            where.setdefault(x, []).append((k, slot))
    seen_slots = set()
    comps = []
    for label in sorted(where):
        start = min(where[label])
        if start in seen_slots:
            continue
        walk = []
        k, slot = start
        while True:
            walk.append((k, slot))
            seen_slots.add((k, slot))
            out = (slot + 2) % 4
            seen_slots.add((k, out))
            nxt = crossings[k][out]
            # the other end of the edge leaving through `out`
            ends = [e for e in where[nxt] if e != (k, out)]
            k, slot = ends[0] if ends else (k, out)
            if (k, slot) == start:
                break
        comps.append(walk)
    return comps


def _smooth(crossings, loops, idx, pairs):
    rest = crossings[:idx] + crossings[idx + 1:]
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
    rest = tuple(tuple(find(x) for x in c) for c in rest)
    used = {x for c in rest for x in c}
    new_loops = {find(x) for p in pairs for x in p} - used
    return rest, loops + len(new_loops)


@lru_cache(maxsize=None)
def _value(crossings, loops):
    """Kauffman value as a dict {(alpha power, z power, delta power): int}."""
    if not crossings:
        return {(0, 0, loops): 1}
    comps = _components(crossings)
    first = {}
    for walk in comps:
        for k, slot in walk:
            if k not in first:
                first[k] = slot
    bad = [k for k in sorted(first, key=lambda k: _order(comps, k)) if first[k] % 2 == 0]
    if not bad:
        owner = {}
        for ci, walk in enumerate(comps):
            for k, slot in walk:
                owner.setdefault(k, []).append((ci, slot))
        writhe = 0
        for k, visits in owner.items():
            (c1, s1), (c2, s2) = visits
            if c1 != c2:
                continue
            under_in = s1 if s1 % 2 == 0 else s2
            over_in = s2 if s1 % 2 == 0 else s1
            writhe += 1 if (under_in, over_in) in ((0, 3), (2, 1)) else -1
        return {(writhe, 0, len(comps) + loops): 1}
    k = bad[0]
    a, b, c, d = crossings[k]
    switched = crossings[:k] + ((b, c, d, a),) + crossings[k + 1:]
    out = dict(_value(switched, loops))
    for sign, pairs in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
        for (p, q, r), v in _value(*_smooth(crossings, loops, k, pairs)).items():
            key = (p, q + 1, r)
            out[key] = out.get(key, 0) + sign * v
    return {key: v for key, v in out.items() if v}


def _order(comps, k):
    pos = 0
    for walk in comps:
        for kk, _slot in walk:
            if kk == k:
                return pos
            pos += 1
    return pos


def kauffman_oracle(word, n):
    """Kauffman polynomial of the closure of a word given as text."""
    tokens = word.split()
    crossings, loops = closed_word_pd(tokens, n)
    total = C.ZERO
    for (p, q, r), v in _value(crossings, loops).items():
        total = total + C.alpha(p) * C.z() ** q * C.loop_value() ** r * v
    return total


# hand formulas in K_2 -----------------------------------------------------------


def two_strand_qdims():
    """<(2)> and <(1,1)> from the explicit two-strand idempotents.

    p = (s^-1 + e)/(s + s^-1) satisfies h p = p h = c h with
    c = (s^-1 + alpha^-1)/(s + s^-1); sandwiching by 1 - h/delta leaves
    p - (c/delta) h.  Closures: <1> = delta^2, <e> = alpha delta, <h> = delta.
    """
    s, a, d = C.s(), C.alpha(), C.loop_value()
    q2 = s + 1 / s
    out = {}
    for key, sign, t in (("2", 1, 1 / s), ("1,1", -1, s)):
        c = (t + sign / a) / q2
        trace_p = (t * d * d + sign * a * d) / q2
        out[key] = trace_p - c
    return out


def two_strand_coefficients():
    """Coefficients (identity, e, h) of the lifted symmetrizer and its sandwich."""
    s, a, d = C.s(), C.alpha(), C.loop_value()
    q2 = s + 1 / s
    c = (1 / s + 1 / a) / q2
    return {"one": (1 / s) / q2, "e": 1 / q2, "h": -c / d}


def hecke_transpose(x):
    """s -> -s^-1 on a full-power expression, i.e. v -> i v^-1 on even v-powers."""
    def flip(terms):
        out = {}
        for (i, j), c in terms.items():
            if j % 2:
                raise ValueError("odd v exponent")
            out[(i, -j)] = out.get((i, -j), 0) + c * (-1) ** (j // 2)
        return C.RingElem.from_laurent(out)

    return flip(_poly.to_dict(x.num)) / flip(_poly.to_dict(x.den))


def random_word(rng, n, length, letters="eEh"):
    toks = []
    for _ in range(length):
        kind = rng.choice(letters)
        toks.append(f"{kind}{rng.randint(1, n - 1)}")
    return " ".join(toks)
