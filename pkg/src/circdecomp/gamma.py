"""Coordinate form of 4-regular connected circulants.

A ``GammaGraph(alpha, k, c)`` has vertices ``(i, j)`` with ``0 <= i < alpha``
and ``0 <= j < k``, flattened to ``i * k + j``. First-kind edges run along
each of the ``alpha`` vertical cycles; second-kind edges join cycle ``i`` to
cycle ``i + 1`` in parallel, except the last matching which is shifted by
``c``. Adding or removing cycles at the end leaves existing indices intact,
which keeps lifted decompositions index-compatible with their sources.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from math import gcd

from .errors import (
    AlphaTooSmall,
    ConstructionFailed,
    DegenerateJump,
    Disconnected,
    InvalidSpec,
)
from .graph_core import Edge, MultiGraph, canon


class NonSimpleKind(enum.Enum):
    LOOPS_C0_ALPHA3 = "Loops_c0_alpha3"
    DOUBLED_C0_ALPHA4 = "Doubled_c0_alpha4"
    DOUBLED_CHALF_ALPHA3 = "Doubled_chalf_alpha3"


def _raw_edges(alpha: int, k: int, c: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(alpha):
        for j in range(k):
            edges.append((i * k + j, i * k + (j + 1) % k))
    for i in range(alpha - 1):
        for j in range(k):
            edges.append((i * k + j, (i + 1) * k + j))
    for j in range(k):
        edges.append(((alpha - 1) * k + j, (j + c) % k))
    return edges


@dataclass(frozen=True)
class GammaGraph:
    alpha: int
    k: int
    c: int

    def __post_init__(self):
        if self.alpha < 1 or self.k < 3 or not 0 <= self.c < self.k:
            raise InvalidSpec(f"invalid Gamma parameters {self}")
        raw = _raw_edges(self.alpha, self.k, self.c)
        if any(u == v for u, v in raw) or len({canon(u, v) for u, v in raw}) != len(raw):
            raise InvalidSpec(f"{self} is not a simple graph")

    @property
    def n(self) -> int:
        return self.alpha * self.k

    @property
    def beta(self) -> int:
        return gcd(self.k, self.c)

    def index(self, i: int, j: int) -> int:
        return (i % self.alpha) * self.k + j % self.k

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.k)

    def closing_edge(self, j: int) -> Edge:
        """Second-kind edge ``(alpha-1, j)(0, j+c)``."""
        return canon(self.index(self.alpha - 1, j), self.index(0, j + self.c))

    def matching(self, i: int) -> set[Edge]:
        """Second-kind edges with one end in C_i and the other in C_{i+1} (C_alpha = C_0).

        With ``alpha == 2`` both parallel matchings join C_0 and C_1 and are
        returned together; with ``alpha == 1`` this is the chord set.
        """
        second = {canon(u, v) for u, v in _raw_edges(self.alpha, self.k, self.c)[self.n:]}
        lo, hi = i % self.alpha, (i + 1) % self.alpha
        return {
            (u, v)
            for u, v in second
            if {u // self.k, v // self.k} == {lo, hi}
        }

    def to_multigraph(self) -> MultiGraph:
        labels = tuple(f"({i},{j})" for i in range(self.alpha) for j in range(self.k))
        return MultiGraph(self.n, tuple((u, v, 1) for u, v in _raw_edges(self.alpha, self.k, self.c)), labels)

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "k": self.k, "c": self.c}


@dataclass(frozen=True)
class LabelMap:
    """Bijection ``(i, j) -> i*b + j*a (mod n)`` between Gamma coordinates and Z_n."""

    n: int
    a: int
    b: int
    gamma: GammaGraph

    @property
    def pairs_to_group(self) -> tuple[int, ...]:
        k = self.gamma.k
        return tuple((i * self.b + j * self.a) % self.n for i in range(self.gamma.alpha) for j in range(k))

    @property
    def group_to_pairs(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for idx, x in enumerate(self.pairs_to_group):
            inv[x] = idx
        return tuple(inv)

    def to_csv(self) -> str:
        rows = ["group_element,i,j"]
        for idx, x in sorted(enumerate(self.pairs_to_group), key=lambda t: t[1]):
            i, j = self.gamma.coords(idx)
            rows.append(f"{x},{i},{j}")
        return "\n".join(rows) + "\n"


def to_gamma(n: int, a: int, b: int) -> tuple[GammaGraph, LabelMap]:
    a %= n
    b %= n
    if gcd(gcd(n, a), b) != 1:
        raise Disconnected(f"gcd({n}, {a}, {b}) != 1")
    if (2 * a) % n == 0 or (2 * b) % n == 0 or (a - b) % n == 0 or (a + b) % n == 0:
        raise DegenerateJump(f"jumps {a}, {b} degenerate modulo {n}")
    alpha = gcd(n, a)
    k = n // alpha
    target = (alpha * b) % n
    # walk C_0 = {0, a, 2a, ...} until alpha*b is reached
    c, x = 0, 0
    while x != target:
        x = (x + a) % n
        c += 1
        if c >= k:
            raise ConstructionFailed(f"{alpha}*{b} not on the a-cycle through 0")
    gamma = GammaGraph(alpha, k, c)
    return gamma, LabelMap(n, a, b, gamma)


def transpose(g: GammaGraph) -> tuple[GammaGraph, tuple[int, ...]]:
    """Redraw ``g`` with the second-kind cycles as the vertical cycles.

    Returns the new graph and the bijection ``old index -> new index``;
    first-kind edges of ``g`` become second-kind edges of the result and
    vice versa.
    """
    alpha, k, c = g.alpha, g.k, g.c
    beta = g.beta
    period = k // beta
    new_k = alpha * period
    if period == 1:
        step = 0
    else:
        step = pow(c // beta, -1, period)
    new = GammaGraph(beta, new_k, (step * alpha) % new_k)
    # (0, j0 + t*c) sits at position t*alpha on second-kind cycle j0
    position = {}
    for t in range(period):
        for j0 in range(beta):
            position[(j0 + t * c) % k] = (j0, t)
    bij = [0] * g.n
    for i in range(alpha):
        for j in range(k):
            j0, t = position[j]
            bij[g.index(i, j)] = new.index(j0, t * alpha + i)
    return new, tuple(bij)


def _reduced_edges(g: GammaGraph) -> list[tuple[int, int]]:
    return _raw_edges(g.alpha - 2, g.k, g.c)


def classify_nonsimple(g: GammaGraph) -> NonSimpleKind | None:
    """Closed-form prediction of a non-simple reduction (three known cases)."""
    if g.alpha == 3 and g.c == 0:
        return NonSimpleKind.LOOPS_C0_ALPHA3
    if g.alpha == 4 and g.c == 0:
        return NonSimpleKind.DOUBLED_C0_ALPHA4
    if g.alpha == 3 and 2 * g.c == g.k:
        return NonSimpleKind.DOUBLED_CHALF_ALPHA3
    return None


def reduce(g: GammaGraph) -> GammaGraph | NonSimpleKind:
    """Delete the last two vertical cycles and reconnect C_{alpha-3} to C_0 with shift c."""
    if g.alpha < 3:
        raise AlphaTooSmall(f"cannot reduce {g}: alpha < 3")
    raw = _reduced_edges(g)
    loops = any(u == v for u, v in raw)
    doubled = max(Counter(canon(u, v) for u, v in raw).values()) > 1
    predicted = classify_nonsimple(g)
    if loops:
        found = NonSimpleKind.LOOPS_C0_ALPHA3
    elif doubled:
        found = NonSimpleKind.DOUBLED_C0_ALPHA4 if g.alpha == 4 else NonSimpleKind.DOUBLED_CHALF_ALPHA3
    else:
        found = None
    if found is not predicted:
        raise ConstructionFailed(f"reduction of {g}: scan found {found}, closed form predicts {predicted}")
    if found is not None:
        return found
    return GammaGraph(g.alpha - 2, g.k, g.c)


def lift(g: GammaGraph) -> GammaGraph:
    return GammaGraph(g.alpha + 2, g.k, g.c)
