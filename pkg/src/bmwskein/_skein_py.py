"""Pure-Python skein resolution kernel.

A diagram is given in PD form: ``crossings`` is a list of 4-lists of edge
labels in counter-clockwise order, slots 0 and 2 on the under-strand, 1 and
3 on the over-strand.  ``boundary`` lists the label at each boundary point in
boundary order.  Every label occurs exactly twice overall.

``resolve`` rewrites the diagram with the Dubrovnik relations

    X[a,b,c,d] = X[b,c,d,a] + z (S[ab|cd] - S[ad|bc])
    kink on slots (0,1) or (2,3) = alpha,  on (1,2) or (3,0) = alpha^-1

until every crossing is met first on its over-strand when components are
walked in boundary order (a descending diagram).  Such a diagram equals the
canonical lift of its matching times alpha^writhe times delta^loops.

Result: ``{matching: {(alpha_exp, z_exp, loops): int}}`` where
``matching[p]`` is the boundary point joined to point ``p``.
"""

from __future__ import annotations


def _join(cr, bd, x, y):
    """Merge edge y into edge x.  Returns 1 when a closed loop appears."""
    if x == y:
        return 1
    for c in cr:
        for k in range(4):
            if c[k] == y:
                c[k] = x
    for p in range(len(bd)):
        if bd[p] == y:
            bd[p] = x
    return 0


def _remove_kinks(cr, bd):
    """Strip Reidemeister I kinks; returns (alpha exponent, new loops)."""
    aexp = 0
    loops = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(cr)):
            a, b, c, d = cr[i]
            if a == b:
                sign, x, y = 1, c, d
            elif c == d:
                sign, x, y = 1, a, b
            elif b == c:
                sign, x, y = -1, d, a
            elif d == a:
                sign, x, y = -1, b, c
            else:
                continue
            del cr[i]
            aexp += sign
            loops += _join(cr, bd, x, y)
            changed = True
            break
    return aexp, loops


def _walk(cr, bd):
    """Walk components in boundary order.

    Returns ("bad", i) for the first crossing first met on its under-strand,
    or ("done", matching, writhe, closed_components).
    """
    occ = {}
    for p, lab in enumerate(bd):
        occ.setdefault(lab, []).append(-1 - p)
    for i, c in enumerate(cr):
        for k in range(4):
            occ.setdefault(c[k], []).append(4 * i + k)

    nb = len(bd)
    nc = len(cr)
    seen = [0] * nc          # passages seen so far
    comp = [[-1, -1] for _ in range(nc)]   # component of under/over passage
    enter = [[-1, -1] for _ in range(nc)]  # slot entered on under/over passage
    matching = [-1] * nb
    ncomp = 0

    def other(lab, pos):
        o = occ[lab]
        return o[1] if o[0] == pos else o[0]

    for p in range(nb):
        if matching[p] >= 0:
            continue
        pos = -1 - p
        lab = bd[p]
        while True:
            nxt = other(lab, pos)
            if nxt < 0:
                q = -1 - nxt
                matching[p] = q
                matching[q] = p
                break
            i, k = divmod(nxt, 4)
            over = k & 1
            if seen[i] == 0 and not over:
                return ("bad", i)
            seen[i] += 1
            comp[i][over] = ncomp
            enter[i][over] = k
            out = (k + 2) & 3
            pos = 4 * i + out
            lab = cr[i][out]
        ncomp += 1

    closed = 0
    for i0 in range(nc):
        if seen[i0] == 2:
            continue
        # start a closed component; prefer entering on the over-strand
        if comp[i0][1] < 0:
            start = 4 * i0 + 1
        else:
            start = 4 * i0
        k = start & 3
        i = i0
        while True:
            over = k & 1
            if seen[i] == 0 and not over:
                return ("bad", i)
            seen[i] += 1
            comp[i][over] = ncomp
            enter[i][over] = k
            out = (k + 2) & 3
            nxt = other(cr[i][out], 4 * i + out)
            if nxt == start:
                break
            i, k = divmod(nxt, 4)
        ncomp += 1
        closed += 1

    writhe = 0
    for i in range(nc):
        if comp[i][0] == comp[i][1]:
            u, o = enter[i]
            writhe += 1 if (u == 0 and o == 3) or (u == 2 and o == 1) else -1
    return ("done", tuple(matching), writhe, closed)


def resolve(crossings, boundary, loops=0):
    out = {}
    stack = [([list(c) for c in crossings], list(boundary), loops, 0, 0, 1)]
    while stack:
        cr, bd, lp, ae, ze, coef = stack.pop()
        da, dl = _remove_kinks(cr, bd)
        ae += da
        lp += dl
        res = _walk(cr, bd)
        if res[0] == "done":
            _tag, m, wr, closed = res
            key = (ae + wr, ze, lp + closed)
            bucket = out.setdefault(m, {})
            v = bucket.get(key, 0) + coef
            if v:
                bucket[key] = v
            else:
                del bucket[key]
            continue
        i = res[1]
        a, b, c, d = cr[i]
        # switched crossing
        sw = [list(x) for x in cr]
        sw[i] = [b, c, d, a]
        stack.append((sw, list(bd), lp, ae, ze, coef))
        # smoothing joining a-b and c-d, coefficient +z
        s1 = [list(x) for j, x in enumerate(cr) if j != i]
        b1 = list(bd)
        l1 = lp + _join(s1, b1, a, b)
        c1, d1 = _find(c, a, b), _find(d, a, b)
        l1 += _join(s1, b1, c1, d1)
        stack.append((s1, b1, l1, ae, ze + 1, coef))
        # smoothing joining a-d and b-c, coefficient -z
        s2 = [list(x) for j, x in enumerate(cr) if j != i]
        b2 = list(bd)
        l2 = lp + _join(s2, b2, a, d)
        bb, cc = _find(b, a, d), _find(c, a, d)
        l2 += _join(s2, b2, bb, cc)
        stack.append((s2, b2, l2, ae, ze + 1, -coef))
    return {m: b for m, b in out.items() if b}


def _find(lab, x, y):
    # after merging y into x, label y is now called x
    return x if lab == y else lab
