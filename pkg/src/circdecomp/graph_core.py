"""Multigraphs, circulants, tensor products and component analysis.

Vertices are dense zero-based integers. Edges are kept canonically as
``(u, v, multiplicity)`` with ``u < v``; parallel edges are never stored as
separate entries, so edge-partition checks reduce to comparing counters.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import HalfJump, InvalidSpec

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidSpec("vertex_count must be >= 1")
        merged: Counter[Edge] = Counter()
        for u, v, m in self.edges:
            if u == v:
                raise InvalidSpec(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidSpec(f"edge ({u}, {v}) out of range")
            if m < 1:
                raise InvalidSpec(f"edge ({u}, {v}) has multiplicity {m}")
            merged[canon(u, v)] += m
        object.__setattr__(
            self, "edges", tuple((u, v, m) for (u, v), m in sorted(merged.items()))
        )

    @classmethod
    def from_counter(cls, n: int, counts: Mapping[Edge, int]) -> "MultiGraph":
        return cls(n, tuple((u, v, m) for (u, v), m in counts.items()))

    @cached_property
    def edge_counter(self) -> Counter[Edge]:
        return Counter({(u, v): m for u, v, m in self.edges})

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def multiplicity(self, u: int, v: int) -> int:
        return self.edge_counter.get(canon(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edge_counter

    def degree(self, v: int) -> int:
        return sum(self.multiplicity(v, w) for w in self.neighbors[v])

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v, m in self.edges:
            deg[u] += m
            deg[v] += m
        return deg

    def edge_total(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    def scaled(self, factor: int) -> "MultiGraph":
        return MultiGraph(
            self.vertex_count,
            tuple((u, v, m * factor) for u, v, m in self.edges),
            self.labels,
        )

    def relabeled(self, perm: Sequence[int]) -> "MultiGraph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return MultiGraph(
            self.vertex_count, tuple((perm[u], perm[v], m) for u, v, m in self.edges)
        )

    def vertex_label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        jumps = tuple(self.jumps)
        object.__setattr__(self, "jumps", jumps)
        if self.n < 3:
            raise InvalidSpec(f"circulant order must be >= 3, got {self.n}")
        if not jumps:
            raise InvalidSpec("jump list is empty")
        if any(b <= a for a, b in zip(jumps, jumps[1:])):
            raise InvalidSpec(f"jumps must be strictly increasing: {list(jumps)}")
        for ell in jumps:
            if not 1 <= ell <= self.n // 2:
                raise InvalidSpec(f"jump {ell} outside [1, {self.n // 2}]")

    @classmethod
    def of(cls, n: int, jumps: Iterable[int]) -> "CirculantSpec":
        """Build from an unsorted jump collection (duplicates rejected)."""
        js = list(jumps)
        if len(set(js)) != len(js):
            raise InvalidSpec(f"duplicate jumps in {js}")
        return cls(n, tuple(sorted(js)))

    def has_half_jump(self) -> bool:
        return self.n % 2 == 0 and self.n // 2 in self.jumps


def build_circulant(spec: CirculantSpec) -> MultiGraph:
    counts: dict[Edge, int] = {}
    for ell in spec.jumps:
        for i in range(spec.n):
            counts[canon(i, (i + ell) % spec.n)] = 1
    return MultiGraph.from_counter(spec.n, counts)


def jump_cycles(spec: CirculantSpec, jump: int) -> list[list[int]]:
    """The cycles formed by the edges of one jump.

    Cycle ``s`` starts at vertex ``s`` and steps by ``+jump``; there are
    ``gcd(n, jump)`` of them, each of length ``n / gcd(n, jump)``.
    """
    n = spec.n
    if jump not in spec.jumps:
        raise InvalidSpec(f"{jump} is not a jump of Circ({n}, {list(spec.jumps)})")
    if 2 * jump == n:
        raise HalfJump(f"jump {jump} = n/2 gives a 1-factor, not cycles")
    g = gcd(n, jump)
    return [[(s + t * jump) % n for t in range(n // g)] for s in range(g)]


def cycle_graph(n: int, multiplicity: int = 1) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n, multiplicity) for i in range(n)))


def tensor_product(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    """Tensor (Kronecker) product; vertex ``(x, y)`` is flattened to ``x * |V(H)| + y``.

    Each pair of edges ``x1x2`` (multiplicity l) and ``y1y2`` (multiplicity m)
    yields ``(x1,y1)(x2,y2)`` and ``(x1,y2)(x2,y1)``, each with multiplicity ``l*m``.
    """
    nh = h.vertex_count
    counts: Counter[Edge] = Counter()
    for x1, x2, lam in g.edges:
        for y1, y2, mu in h.edges:
            counts[canon(x1 * nh + y1, x2 * nh + y2)] += lam * mu
            counts[canon(x1 * nh + y2, x2 * nh + y1)] += lam * mu
    return MultiGraph.from_counter(g.vertex_count * nh, counts)


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)


def components(g: MultiGraph) -> ComponentPartition:
    seen = [False] * g.vertex_count
    blocks = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return ComponentPartition(tuple(blocks))


def is_bipartite(g: MultiGraph) -> tuple[bool, list[int] | None]:
    """Return ``(True, coloring)`` with colors in {0, 1}, or ``(False, None)``."""
    color = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, None
    return True, color


# -- serialization -----------------------------------------------------------


def graph_from_json(data: Mapping) -> tuple[MultiGraph, CirculantSpec | None]:
    """Ingest ``{"type": "circulant", ...}`` or ``{"type": "multigraph", ...}``."""
    kind = data.get("type")
    try:
        if kind == "circulant":
            spec = CirculantSpec.of(int(data["n"]), (int(j) for j in data["jumps"]))
            return build_circulant(spec), spec
        if kind == "multigraph":
            edges = []
            for item in data["edges"]:
                if len(item) == 2:
                    u, v = item
                    m = 1
                else:
                    u, v, m = item
                edges.append((int(u), int(v), int(m)))
            return MultiGraph(int(data["n"]), tuple(edges)), None
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpec(f"malformed graph JSON: {exc}") from exc
    raise InvalidSpec(f"unknown graph type {kind!r}")


def graph_to_json(g: MultiGraph) -> dict:
    return {"type": "multigraph", "n": g.vertex_count, "edges": [list(e) for e in g.edges]}


def load_graph(path: str) -> tuple[MultiGraph, CirculantSpec | None]:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


def to_edge_list(g: MultiGraph) -> str:
    return "".join(f"{u} {v} {m}\n" for u, v, m in g.edges)


def to_dot(g: MultiGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{g.vertex_label(v)}"];')
    for u, v, m in g.edges:
        for _ in range(m):
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
