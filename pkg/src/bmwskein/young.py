"""Young diagrams, standard tableaux and up-down tableaux."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import CellOutsideDiagram

__all__ = [
    "Partition",
    "StdTableau",
    "UpDownTableau",
    "content",
    "hook_length",
    "dfun",
    "corners",
    "enumerate_standard",
    "enumerate_updown",
    "partitions_of",
    "updown_shapes",
    "iter_standard",
    "diff_cell",
    "parse_partition",
    "parse_path",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def row(self, i):
        """Length of row i (1-based); zero past the last part."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def col(self, j):
        return sum(1 for p in self if p >= j)

    def transpose(self):
        if not self:
            return self
        return Partition(self.col(j) for j in range(1, self[0] + 1))

    def cells(self):
        """Cells in row-reading order."""
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]

    def __contains__(self, cell):
        if isinstance(cell, tuple) and len(cell) == 2:
            i, j = cell
            return i >= 1 and j >= 1 and j <= self.row(i)
        return super().__contains__(cell)

    def add(self, cell):
        i, j = cell
        rows = list(self) + [0]
        if i > len(rows) or rows[i - 1] != j - 1:
            raise CellOutsideDiagram(f"cannot add {cell} to {self}")
        rows[i - 1] += 1
        return Partition(rows)

    def remove(self, cell):
        i, j = cell
        if cell not in self or self.row(i) != j or self.row(i + 1) >= j:
            raise CellOutsideDiagram(f"cannot remove {cell} from {self}")
        rows = list(self)
        rows[i - 1] -= 1
        return Partition(rows)

    def contains_diagram(self, other):
        return all(self.row(i) >= p for i, p in enumerate(other, 1))

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self):
        return f"Partition({tuple(self)})"


def parse_partition(text):
    """``"2,1"`` -> Partition((2, 1)); ``"0"``, ``""`` and ``"-"`` are the empty diagram."""
    if isinstance(text, Partition):
        return text
    if not isinstance(text, str):
        return Partition(text)
    text = text.strip().strip("()[]")
    if text in ("", "0", "-", "empty"):
        return Partition()
    try:
        return Partition(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def content(cell):
    i, j = cell
    return j - i


def _check(lam, cell):
    if cell not in lam:
        raise CellOutsideDiagram(f"{cell} is not a cell of {lam}")


def hook_length(lam, cell):
    _check(lam, cell)
    i, j = cell
    return lam.row(i) + lam.col(j) - i - j + 1


def dfun(lam, cell, primed=False):
    """d_lambda(i, j), or its primed variant (diagonal cells switch case)."""
    _check(lam, cell)
    i, j = cell
    upper = i < j if primed else i <= j
    if upper:
        return lam.row(i) + lam.row(j) - i - j + 1
    return -lam.col(i) - lam.col(j) + i + j - 1


def corners(lam):
    """(addable cells, removable cells), each sorted by row."""
    lam = Partition(lam)
    add, rem = [], []
    for i in range(1, len(lam) + 2):
        if i == 1 or lam.row(i - 1) > lam.row(i):
            add.append((i, lam.row(i) + 1))
        if lam.row(i) > 0 and lam.row(i) > lam.row(i + 1):
            rem.append((i, lam.row(i)))
    return add, rem


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, in reverse lexicographic order."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return tuple(out)


def diff_cell(big, small):
    """The single cell of big/small."""
    cells = [c for c in big.cells() if c not in small]
    if len(cells) != 1 or not big.contains_diagram(small):
        raise ValueError(f"{big} / {small} is not a single cell")
    return cells[0]


class StdTableau:
    """Standard tableau, stored as its growth chain of shapes."""

    __slots__ = ("chain",)

    def __init__(self, chain):
        chain = tuple(Partition(p) for p in chain)
        for k, p in enumerate(chain, 1):
            if p.size != k or (k > 1 and not p.contains_diagram(chain[k - 2])):
                raise ValueError(f"not a standard tableau chain: {chain}")
        self.chain = chain

    @classmethod
    def from_rows(cls, rows):
        """From rows of entries, e.g. [[1, 2], [3]]."""
        pos = {}
        for i, row in enumerate(rows, 1):
            for j, e in enumerate(row, 1):
                pos[e] = (i, j)
        n = len(pos)
        chain, shape = [], Partition()
        for e in range(1, n + 1):
            shape = shape.add(pos[e])
            chain.append(shape)
        return cls(chain)

    @property
    def shape(self):
        return self.chain[-1] if self.chain else Partition()

    @property
    def size(self):
        return len(self.chain)

    def parent(self):
        """The tableau t' with the largest entry removed."""
        return StdTableau(self.chain[:-1])

    def last_cell(self):
        prev = self.chain[-2] if len(self.chain) > 1 else Partition()
        return diff_cell(self.chain[-1], prev)

    def entries(self):
        """{cell: entry}."""
        out, prev = {}, Partition()
        for k, p in enumerate(self.chain, 1):
            out[diff_cell(p, prev)] = k
            prev = p
        return out

    def rows(self):
        ent = self.entries()
        return [[ent[(i, j)] for j in range(1, p + 1)] for i, p in enumerate(self.shape, 1)]

    def __eq__(self, other):
        return isinstance(other, StdTableau) and self.chain == other.chain

    def __hash__(self):
        return hash(("std", self.chain))

    def __str__(self):
        return ">".join(str(p) for p in self.chain)

    def __repr__(self):
        return f"StdTableau({self.rows()})"


class UpDownTableau:
    """A path (1) = L1, L2, ..., Ln where each step adds or removes a cell."""

    __slots__ = ("path",)

    def __init__(self, path):
        path = tuple(Partition(p) for p in path)
        if path and path[0] != Partition((1,)):
            raise ValueError("an up-down tableau starts at (1)")
        prev = Partition()
        for p in path:
            if abs(p.size - prev.size) != 1:
                raise ValueError(f"step {prev} -> {p} is not a single cell")
            big, small = (p, prev) if p.size > prev.size else (prev, p)
            diff_cell(big, small)
            prev = p
        self.path = path

    @property
    def length(self):
        return len(self.path)

    @property
    def shape(self):
        return self.path[-1] if self.path else Partition()

    def parent(self):
        return UpDownTableau(self.path[:-1])

    def previous_shape(self):
        return self.path[-2] if len(self.path) > 1 else Partition()

    def is_up(self):
        """True when the last step adds a cell."""
        return self.shape.size > self.previous_shape().size

    def last_cell(self):
        a, b = self.shape, self.previous_shape()
        return diff_cell(a, b) if self.is_up() else diff_cell(b, a)

    def to_standard(self):
        """The standard tableau when the path only grows."""
        return StdTableau(self.path)

    def __eq__(self, other):
        return isinstance(other, UpDownTableau) and self.path == other.path

    def __hash__(self):
        return hash(("updown", self.path))

    def __lt__(self, other):
        return self.path < other.path

    def __str__(self):
        return ">".join(str(p) for p in self.path)

    def __repr__(self):
        return f"UpDownTableau({str(self)!r})"


def parse_path(text):
    """``"1>2>1"`` -> UpDownTableau((1), (2), (1))."""
    return UpDownTableau(parse_partition(tok) for tok in text.split(">"))


@lru_cache(maxsize=None)
def _updown_all(n):
    if n == 0:
        return ((),)
    out = []
    for path in _updown_all(n - 1):
        last = path[-1] if path else Partition()
        add, rem = corners(last)
        nxt = [last.add(c) for c in add]
        if path:
            nxt += [last.remove(c) for c in rem]
        for p in sorted(nxt, key=lambda q: (-q.size, tuple(q))):
            out.append(path + (p,))
    return tuple(out)


def enumerate_updown(n, lam=None):
    """All up-down tableaux of length n, optionally ending at shape lam."""
    if n < 1:
        raise ValueError("length must be at least 1")
    paths = _updown_all(n)
    if lam is not None:
        lam = parse_partition(lam)
        paths = [p for p in paths if p[-1] == lam]
    return [UpDownTableau(p) for p in paths]


def updown_shapes(n):
    """Shapes reachable at length n: |lam| in {n, n-2, ...}."""
    out = []
    for k in range(n, -1, -2):
        out.extend(partitions_of(k))
    return out


@lru_cache(maxsize=None)
def _standard(lam):
    if not lam:
        return ((),)
    out = []
    _add, rem = corners(lam)
    for c in rem:
        for chain in _standard(lam.remove(c)):
            out.append(chain + (lam,))
    return tuple(sorted(out))


def enumerate_standard(lam):
    lam = parse_partition(lam)
    if not lam:
        return []
    return [StdTableau(c) for c in _standard(lam)]


def iter_standard(n) -> Iterator[StdTableau]:
    for lam in partitions_of(n):
        yield from enumerate_standard(lam)
