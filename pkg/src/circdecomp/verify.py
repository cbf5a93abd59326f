"""Ground truth: decomposition checks, Q1/Q2 checks and a brute-force decomposer.

Nothing here calls into the constructive modules; the constructions are
judged by these functions, never the other way round.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .decomposition import Decomposition, Q2Certificate, trace_cycle
from .errors import InvalidSpec, OddHostOrder, ParityUndefined, TooLarge, VertexAbsent
from .gamma import GammaGraph
from .graph_core import MultiGraph, canon

ORACLE_MAX_VERTICES = 16


class FailureKind(str, enum.Enum):
    NOT_A_CYCLE = "NotACycle"
    MISSED_VERTEX = "MissedVertex"
    NOT_AN_EDGE = "NotAnEdge"
    EDGE_OVERUSE = "EdgeOveruse"
    EDGE_UNDERUSE = "EdgeUnderuse"
    Q1_VIOLATION = "Q1Violation"
    Q2_INVALID = "Q2Invalid"


@dataclass
class VerificationReport:
    failures: list[tuple[FailureKind, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def kinds(self) -> set[FailureKind]:
        return {k for k, _ in self.failures}

    def add(self, kind: FailureKind, detail: str) -> None:
        self.failures.append((kind, detail))

    def to_json(self) -> dict:
        return {"ok": self.ok, "failures": [[k.value, d] for k, d in self.failures]}


def verify_hamilton_decomposition(g: MultiGraph, d: Decomposition) -> VerificationReport:
    report = VerificationReport()
    n = g.vertex_count
    used: Counter = Counter()
    for idx, cyc in enumerate(d.cycles):
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            report.add(FailureKind.NOT_A_CYCLE, f"cycle {idx} repeats a vertex or is too short")
        if any(not 0 <= v < n for v in cyc):
            report.add(FailureKind.NOT_A_CYCLE, f"cycle {idx} has out-of-range vertices")
            continue
        missing = set(range(n)) - set(cyc)
        if missing:
            report.add(FailureKind.MISSED_VERTEX, f"cycle {idx} misses {sorted(missing)[:8]}")
        for t in range(len(cyc)):
            u, v = cyc[t], cyc[(t + 1) % len(cyc)]
            if u == v or not g.has_edge(u, v):
                report.add(FailureKind.NOT_AN_EDGE, f"cycle {idx} uses non-edge {u}-{v}")
            else:
                used[canon(u, v)] += 1
    for e, m in sorted(g.edge_counter.items()):
        if used[e] > m:
            report.add(FailureKind.EDGE_OVERUSE, f"edge {e} used {used[e]} times, multiplicity {m}")
        elif used[e] < m:
            report.add(FailureKind.EDGE_UNDERUSE, f"edge {e} used {used[e]} times, multiplicity {m}")
    return report


def verify_q1(gg: GammaGraph, d: Decomposition) -> bool:
    """Both cycles own a second-kind edge between every C_i and C_{i+1}."""
    owner = d.owner()
    for i in range(gg.alpha):
        owners = {owner.get(e) for e in gg.matching(i)}
        if not all(h in owners for h in range(len(d))):
            return False
    return True


def cycle_distance_parity(cycle: Sequence[int], u: int, v: int) -> int:
    """Parity (0 even, 1 odd) of the distance between u and v along an even cycle."""
    if len(cycle) % 2:
        raise ParityUndefined(f"cycle of odd length {len(cycle)}")
    try:
        pu, pv = cycle.index(u), cycle.index(v)
    except ValueError as exc:
        raise VertexAbsent(str(exc)) from exc
    return (pu - pv) % 2


def _positions(d: Decomposition) -> list[dict[int, int]]:
    return [{v: t for t, v in enumerate(c)} for c in d.cycles]


def _alternation(owner: dict, quad: Sequence[int]) -> tuple[int, int] | None:
    v1, v2, v3, v4 = quad
    e12, e23 = owner.get(canon(v1, v2)), owner.get(canon(v2, v3))
    e34, e41 = owner.get(canon(v3, v4)), owner.get(canon(v4, v1))
    if None in (e12, e23, e34, e41):
        return None
    if e12 == e34 and e23 == e41 and e12 != e23:
        return (e12, e23)
    return None


def verify_q2_certificate(g: MultiGraph, d: Decomposition, cert: Q2Certificate) -> bool:
    if len(d) != 2 or g.vertex_count % 2:
        return False
    quad = cert.quad
    if len(set(quad)) != 4:
        return False
    if any(not g.has_edge(quad[t], quad[(t + 1) % 4]) for t in range(4)):
        return False
    if _alternation(d.owner(), quad) != tuple(cert.pairing):
        return False
    if set(cert.diagonal) not in ({quad[0], quad[2]}, {quad[1], quad[3]}):
        return False
    pos = _positions(d)
    x, y = cert.diagonal
    return all((p[x] - p[y]) % 2 == 1 for p in pos)


def _all_quads(g: MultiGraph):
    """Every 4-cycle once, as (v1, v2, v3, v4) with v1 minimal and v2 < v4."""
    nb = g.neighbors
    for v1 in range(g.vertex_count):
        for v2 in nb[v1]:
            if v2 <= v1:
                continue
            for v4 in nb[v1]:
                if v4 <= v2:
                    continue
                for v3 in nb[v2]:
                    if v3 > v1 and v3 not in (v4,) and g.has_edge(v3, v4):
                        yield (v1, v2, v3, v4)


def find_q2_certificate(
    g: MultiGraph, d: Decomposition, jumps: tuple[int, int] | None = None
) -> Q2Certificate | None:
    """First odd alternating 4-cycle, or None.

    With ``jumps=(a, b)`` on a circulant host the candidates are the quads
    ``(x, x+a, x+a+b, x+b)`` in increasing x; otherwise every 4-cycle of the
    host is scanned. The diagonal ``(v1, v3)`` is tried before ``(v2, v4)``.
    """
    n = g.vertex_count
    if n % 2:
        raise OddHostOrder(f"host order {n} is odd")
    if len(d) != 2:
        raise InvalidSpec("Q2 needs a decomposition into exactly two cycles")
    if jumps is not None:
        a, b = jumps
        quads = ((x, (x + a) % n, (x + a + b) % n, (x + b) % n) for x in range(n))
    else:
        quads = _all_quads(g)
    owner = d.owner()
    pos = _positions(d)
    for quad in quads:
        if len(set(quad)) != 4 or any(not g.has_edge(quad[t], quad[(t + 1) % 4]) for t in range(4)):
            continue
        pairing = _alternation(owner, quad)
        if pairing is None:
            continue
        for x, y in ((quad[0], quad[2]), (quad[1], quad[3])):
            if all((p[x] - p[y]) % 2 == 1 for p in pos):
                return Q2Certificate(quad, pairing, (x, y))
    return None


# -- brute-force oracle ------------------------------------------------------


def _hamilton_cycles(n: int, remaining: Counter, adj: list[list[int]]):
    """Hamilton cycles of the remaining edges, as sequences from 0 with seq[1] < seq[-1]."""
    visited = [False] * n
    visited[0] = True
    path = [0]

    def live(v: int) -> list[int]:
        return [w for w in adj[v] if remaining[canon(v, w)] > 0]

    def feasible() -> bool:
        end = path[-1]
        for v in range(n):
            if visited[v]:
                continue
            ok = 0
            for w in live(v):
                if not visited[w] or w == end or w == 0:
                    ok += 1
            if ok < 2:
                return False
        return True

    def extend():
        cur = path[-1]
        if len(path) == n:
            if remaining[canon(cur, 0)] > 0 and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in live(cur):
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if feasible():
                yield from extend()
            path.pop()
            visited[w] = False

    yield from extend()


def brute_force_decomposition(
    g: MultiGraph,
    q1_on: GammaGraph | None = None,
    q2_required: bool = False,
) -> Decomposition | None:
    """Exhaustive Hamilton decomposition search; first hit in enumeration order.

    Cycles are enumerated depth-first from vertex 0 with neighbours in
    increasing order, each cycle written with ``seq[1] < seq[-1]``; the
    decomposition returned is the first one (cycle by cycle) that satisfies
    the optional Q1 / Q2 constraints. Returns None when none exists.
    """
    n = g.vertex_count
    if n > ORACLE_MAX_VERTICES:
        raise TooLarge(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {n}")
    degs = g.degrees()
    if len(set(degs)) != 1 or degs[0] % 2 or degs[0] == 0 or n < 3:
        return None
    count = degs[0] // 2
    adj = [list(nb) for nb in g.neighbors]
    remaining = Counter(g.edge_counter)

    def accept(cycles: list[tuple[int, ...]]) -> bool:
        d = Decomposition(tuple(cycles))
        if q1_on is not None and not verify_q1(q1_on, d):
            return False
        if q2_required and (len(d) != 2 or n % 2 or find_q2_certificate(g, d) is None):
            return False
        return True

    chosen: list[tuple[int, ...]] = []

    def search() -> bool:
        if len(chosen) == count:
            return accept(chosen)
        if len(chosen) == count - 1:
            last = trace_cycle([e for e, m in remaining.items() if m > 0 for _ in range(m)], n)
            if last is None:
                return False
            if last[1] > last[-1]:
                last = (0,) + tuple(reversed(last[1:]))
            chosen.append(last)
            if accept(chosen):
                return True
            chosen.pop()
            return False
        for cyc in _hamilton_cycles(n, remaining, adj):
            edges = [canon(cyc[t], cyc[(t + 1) % n]) for t in range(n)]
            for e in edges:
                remaining[e] -= 1
            chosen.append(cyc)
            if search():
                return True
            chosen.pop()
            for e in edges:
                remaining[e] += 1
        return False

    return Decomposition(tuple(chosen)) if search() else None
