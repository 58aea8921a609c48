"""Oriented knot diagrams as signed crossing lists.

A diagram with ``n`` arcs has exactly ``n`` crossings.  Crossing ``i`` is the
one at which arc ``i`` starts: arc ``under_in`` passes under arc ``over`` and
continues as arc ``i``.  Planar embedding data is not kept; the source PD code
is retained (when there is one) only so that it can be written back out.

PD convention: each ``X[a,b,c,d]`` lists edge labels counterclockwise starting
from the incoming under-edge ``a``; ``c`` is the outgoing under-edge.  Labels
``1..N`` increase along the orientation, so the over-strand runs ``b -> d``
when ``d`` follows ``b`` (mod N), which is read as a positive crossing, and
``d -> b`` otherwise (negative).
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    AmbiguousOverOrientation,
    DegenerateParameters,
    KnotError,
    LabelCountNotTwo,
    MalformedTuple,
    MultiComponent,
    NotCoprime,
    OutOfRange,
)

JSON_FORMAT = "rotcolor.diagram/1"


@dataclass(frozen=True)
class Crossing:
    under_in: int
    under_out: int
    over: int
    sign: int

    def as_dict(self) -> dict:
        return {
            "under_in": self.under_in,
            "under_out": self.under_out,
            "over": self.over,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class Diagram:
    n_arcs: int
    crossings: tuple[Crossing, ...]
    pd: tuple[tuple[int, int, int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.under_out)))
        n = self.n_arcs
        if len(self.crossings) != n:
            raise KnotError(f"{n} arcs but {len(self.crossings)} crossings")
        for i, c in enumerate(self.crossings):
            if c.under_out != i:
                raise KnotError(f"arc {i} does not start at exactly one crossing")
            if c.sign not in (1, -1):
                raise KnotError(f"crossing sign must be +1 or -1, got {c.sign}")
            for a in (c.under_in, c.over):
                if not 0 <= a < n:
                    raise KnotError(f"arc id {a} out of range for {n} arcs")
        # underpass walk: arc -> arc it continues into at its end
        succ = {c.under_in: c.under_out for c in self.crossings}
        if len(succ) != n:
            raise MultiComponent("some arc ends at two crossings")
        if n:
            seen, a = set(), 0
            while a not in seen:
                seen.add(a)
                a = succ[a]
            if len(seen) != n:
                raise MultiComponent(f"underpass walk visits {len(seen)} of {n} arcs")

    @property
    def n(self) -> int:
        return self.n_arcs

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def relabel(self, perm: Sequence[int]) -> Diagram:
        """Rename arc ``a`` to ``perm[a]``."""
        return Diagram(
            self.n_arcs,
            tuple(Crossing(perm[c.under_in], perm[c.under_out], perm[c.over], c.sign) for c in self.crossings),
        )

    def mirror(self) -> Diagram:
        return Diagram(
            self.n_arcs,
            tuple(Crossing(c.under_in, c.under_out, c.over, -c.sign) for c in self.crossings),
        )

    def to_json(self) -> dict:
        return {
            "format": JSON_FORMAT,
            "n_arcs": self.n_arcs,
            "crossings": [c.as_dict() for c in self.crossings],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> Diagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["n_arcs"]),
            tuple(
                Crossing(int(c["under_in"]), int(c["under_out"]), int(c["over"]), int(c["sign"]))
                for c in data["crossings"]
            ),
        )

    def to_pd(self) -> str:
        if self.pd is None:
            raise KnotError("diagram has no planar (PD) data to serialize")
        return format_pd(self.pd)


# PD codes

_PD_TUPLE = re.compile(r"X\s*\[\s*([^\]]*)\]")
_PD_FILLER = re.compile(r"^[\s,;]*(?:PD\s*\[)?[\s,;\]]*$")


def _tokenize_pd(text: str) -> list[tuple[int, int, int, int]]:
    tuples = []
    pos = 0
    for m in _PD_TUPLE.finditer(text):
        if not _PD_FILLER.match(text[pos:m.start()]):
            raise MalformedTuple(f"unexpected text {text[pos:m.start()].strip()!r}")
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4 or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise MalformedTuple(f"bad crossing tuple X[{m.group(1)}]")
        tuples.append(tuple(int(p) for p in parts))
        pos = m.end()
    if not _PD_FILLER.match(text[pos:]):
        raise MalformedTuple(f"unexpected text {text[pos:].strip()!r}")
    if not tuples:
        raise MalformedTuple("no X[a,b,c,d] tuples found")
    return tuples


class _DSU:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _over_sign(t, slots, N) -> int:
    a, b, c, d = t
    fwd = d == b % N + 1
    bwd = b == d % N + 1
    if fwd != bwd:
        return 1 if fwd else -1
    if fwd and bwd:
        # only possible for N <= 2: look at where the over-edges live elsewhere
        for label, here_in in ((b, 1), (d, -1)):
            others = [s for s in slots[label] if s[0] is not t or s[1] != (1 if label == b else 3)]
            for other_t, other_pos in others:
                if other_pos == 2:  # other end leaves as an under-edge, so it enters here
                    return here_in
                if other_pos == 0:
                    return -here_in
    raise AmbiguousOverOrientation(f"cannot orient the over-strand of X[{a},{b},{c},{d}]")


def parse_pd(text: str) -> Diagram:
    """Parse a PD code such as ``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]``."""
    tuples = _tokenize_pd(text)
    counts = Counter(x for t in tuples for x in t)
    bad = sorted(x for x, k in counts.items() if k != 2)
    if bad:
        raise LabelCountNotTwo(f"labels {bad} do not appear exactly twice")
    N = len(counts)
    if set(counts) != set(range(1, N + 1)):
        raise MalformedTuple(f"edge labels must be exactly 1..{N}")
    for a, b, c, d in tuples:
        if c != a % N + 1:
            raise MalformedTuple(f"under-strand X[{a},{b},{c},{d}] does not run a -> a+1")

    comp = _DSU(counts)
    for a, b, c, d in tuples:
        comp.union(a, c)
        comp.union(b, d)
    if len({comp.find(x) for x in counts}) != 1:
        raise MultiComponent("PD code describes more than one component")

    slots: dict[int, list] = {x: [] for x in counts}
    for t in tuples:
        for pos, x in enumerate(t):
            slots[x].append((t, pos))
    signs = [_over_sign(t, slots, N) for t in tuples]

    arcs = _DSU(counts)
    for a, b, c, d in tuples:
        arcs.union(b, d)
    roots = sorted({arcs.find(x) for x in counts})
    arc_of = {r: i for i, r in enumerate(roots)}
    if len(roots) != len(tuples):
        raise MultiComponent(f"{len(roots)} arcs for {len(tuples)} crossings")
    crossings = tuple(
        Crossing(arc_of[arcs.find(a)], arc_of[arcs.find(c)], arc_of[arcs.find(b)], s)
        for (a, b, c, d), s in zip(tuples, signs)
    )
    return Diagram(len(roots), crossings, pd=tuple(tuples))


def format_pd(tuples: Iterable[Sequence[int]]) -> str:
    return " ".join("X[{},{},{},{}]".format(*t) for t in tuples)


def braid_closure_pd(word: Sequence[int], strands: int) -> str:
    """PD code of the closure of a braid word.

    ``i > 0`` is the generator in which the strand from position ``i`` passes
    under the strand from position ``i + 1`` (a positive crossing in the PD
    convention above); ``-i`` is its inverse.  Positions are 1-based.
    """
    if strands < 1:
        raise DegenerateParameters("a braid needs at least one strand")
    next_id = strands
    pos = list(range(strands))  # current edge on each strand position
    start = list(pos)
    raw = []  # (under_in, over_in, under_out, over_out, positive?)
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise OutOfRange(f"generator {g} outside 1..{strands - 1}")
        left, right = pos[i], pos[i + 1]
        tl, tr = next_id, next_id + 1
        next_id += 2
        if g > 0:
            # left strand goes under, bottom-left -> top-right
            raw.append((left, right, tr, tl, True))
        else:
            # right strand goes under, bottom-right -> top-left
            raw.append((right, left, tl, tr, False))
        pos[i], pos[i + 1] = tl, tr
    # closure: the top edge at each position is the bottom edge there
    alias = {pos[j]: start[j] for j in range(strands)}

    def canon(e):
        while e in alias and alias[e] != e:
            e = alias[e]
        return e

    succ = {}
    for ui, oi, uo, oo, _ in raw:
        succ[canon(ui)] = canon(uo)
        succ[canon(oi)] = canon(oo)
    edges = {canon(e) for r in raw for e in r[:4]}
    if len(edges) != len(succ) or not edges:
        raise DegenerateParameters("braid closure has a strand without crossings")
    first = min(edges)
    label, e = {}, first
    while e not in label:
        label[e] = len(label) + 1
        e = succ[e]
    if len(label) != len(edges):
        raise MultiComponent("braid closure is a link, not a knot")
    out = []
    for ui, oi, uo, oo, positive in raw:
        a, c = label[canon(ui)], label[canon(uo)]
        bi, bo = label[canon(oi)], label[canon(oo)]
        out.append((a, bi, c, bo) if positive else (a, bo, c, bi))
    return format_pd(out)


# torus knots

def _torus_params(p: int, q: int) -> tuple[int, int]:
    if p == 0 or q == 0 or abs(p) < 2 or abs(q) < 2:
        raise DegenerateParameters(f"need |p|, |q| >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    return abs(p), abs(q)


def arc_index(i: int, j: int, p: int, q: int) -> int:
    """Flat id of the torus-diagram arc ``a_ij``.

    ``a_i0`` is identified with ``a_{i+1,|p|-1}`` and ``a_{|q|j}`` with
    ``a_0j``; the representatives ``a_ij`` with ``0 <= i < |q|`` and
    ``1 <= j < |p|`` get ids ``i*(|p|-1) + j - 1``.
    """
    P, Q = abs(p), abs(q)
    if not (0 <= i <= Q and 0 <= j <= P - 1):
        raise OutOfRange(f"a_({i},{j}) outside 0<=i<={Q}, 0<=j<={P - 1}")
    if j == 0:
        i, j = i + 1, P - 1
    return (i % Q) * (P - 1) + j - 1


def torus_diagram(p: int, q: int) -> Diagram:
    """The closed-braid diagram D(p, q) of the (p, q)-torus knot.

    One crossing for each ``0 <= i < |q|``, ``1 <= j < |p|``: arc ``a_ij``
    passes under ``a_i0`` and becomes ``a_{i+1,j-1}``.  All crossings carry
    the sign of ``p*q``.
    """
    P, Q = _torus_params(p, q)
    sign = 1 if p * q > 0 else -1
    crossings = tuple(
        Crossing(
            under_in=arc_index(i, j, P, Q),
            under_out=arc_index(i + 1, j - 1, P, Q),
            over=arc_index(i, 0, P, Q),
            sign=sign,
        )
        for i in range(Q)
        for j in range(1, P)
    )
    return Diagram(Q * (P - 1), crossings)


def torus_pd(p: int, q: int) -> str:
    """PD code for D(p, q): closure of ``(s_{|p|-1} ... s_1)^{|q|}``.

    The strand travelling across the braid passes over, as in D(p, q).
    """
    P, Q = _torus_params(p, q)
    sign = 1 if p * q > 0 else -1
    word = [sign * g for g in range(P - 1, 0, -1)] * Q
    return braid_closure_pd(word, P)
