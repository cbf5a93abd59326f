"""Lifting decompositions through added vertical cycles, and the full 4-regular pipeline.

Lifting ``Gr = Gamma(alpha, .)`` inserts cycles C_alpha and C_{alpha+1}. Each
closing edge ``e_j = (alpha-1, j)(0, j+c)`` of ``Gr`` is owned by one of the
two Hamilton cycles; it is replaced in its owner by an odd path
``(alpha-1, j) -> ... -> (0, j+c)`` through the new cycles.

Owners split the columns ``j`` into cyclic runs. A column that is not at the
sweeping end of its run takes the straight path down its own column. With
clockwise orientation the last column of every run sweeps the following
run: along C_alpha to the end of that run, across, and back along
C_{alpha+1}. Anticlockwise mirrors this, the first column sweeping the
preceding run. The sweeps of the two owners interleave, so every new edge
and every new vertex is used exactly once per cycle, and every path has odd
length, which keeps distance parities between retained vertices unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .base_decomp import Orientation, decompose_base, special_c3_box_c4, special_gamma32
from .decomposition import Decomposition, Q2Certificate
from .errors import ConstructionFailed, OddHostOrder, Q1Missing, SameParityJumps
from .gamma import GammaGraph, LabelMap, NonSimpleKind, lift, reduce, to_gamma, transpose
from .graph_core import CirculantSpec, MultiGraph, build_circulant, canon
from .verify import find_q2_certificate, verify_hamilton_decomposition, verify_q1


@dataclass
class LiftPlan:
    """Replacement paths for the closing edges, keyed by column ``j``."""

    owners: list[int]
    replaced_edges: dict[int, list[int]]
    paths: dict[int, list[int]] = field(default_factory=dict)


def _runs(owners: list[int]) -> list[tuple[int, int]]:
    """Maximal cyclic runs of equal owner as (start, length); start of the first run aligned."""
    k = len(owners)
    first = next(j for j in range(k) if owners[j] != owners[j - 1])
    runs = []
    j = first
    while True:
        length = 1
        while owners[(j + length) % k] == owners[j] and length < k:
            length += 1
        runs.append((j, length))
        j = (j + length) % k
        if j == first:
            return runs


def plan_lift(gr: GammaGraph, d: Decomposition, orient: Orientation) -> LiftPlan:
    alpha, k, c = gr.alpha, gr.k, gr.c
    owner_of = d.owner()
    owners = []
    for j in range(k):
        h = owner_of.get(gr.closing_edge(j))
        if h is None:
            raise ConstructionFailed(f"closing edge {gr.closing_edge(j)} not covered")
        owners.append(h)
    replaced = {h: [j for j in range(k) if owners[j] == h] for h in range(len(d))}
    missing = [h for h, cols in replaced.items() if not cols]
    if missing:
        raise Q1Missing(f"cycles {missing} own no edge between C_{alpha - 1} and C_0")

    def top(j):  # (alpha, j)
        return alpha * k + j % k

    def bottom(j):  # (alpha + 1, j)
        return (alpha + 1) * k + j % k

    def start(j):  # (alpha - 1, j)
        return (alpha - 1) * k + j % k

    def end(j):  # (0, j + c)
        return (j + c) % k

    plan = LiftPlan(owners, replaced)
    runs = _runs(owners)
    for j in range(k):
        plan.paths[j] = [start(j), top(j), bottom(j), end(j)]
    for r, (s, length) in enumerate(runs):
        if orient is Orientation.CLOCKWISE:
            col = s + length - 1
            _, nlen = runs[(r + 1) % len(runs)]
            span = [col + t for t in range(nlen + 1)]
        else:
            col = s
            _, plen = runs[r - 1]
            span = [col - t for t in range(plen + 1)]
        path = [start(col % k)]
        path += [top(j) for j in span]
        path += [bottom(j) for j in reversed(span)]
        path.append(end(col % k))
        plan.paths[col % k] = path
    return plan


def lift_decomposition(gr: GammaGraph, d: Decomposition, orient: Orientation = Orientation.CLOCKWISE) -> Decomposition:
    """Decomposition of ``lift(gr)`` from one of ``gr`` with Q1 between C_{alpha-1} and C_0."""
    plan = plan_lift(gr, d, orient)
    big = lift(gr)
    by_edge = {}
    for j, path in plan.paths.items():
        by_edge[canon(path[0], path[-1])] = path
    cycles = []
    for cyc in d.cycles:
        out = []
        m = len(cyc)
        for t in range(m):
            u, v = cyc[t], cyc[(t + 1) % m]
            out.append(u)
            path = by_edge.get(canon(u, v))
            if path is not None:
                inner = path[1:-1] if path[0] == u else path[-2:0:-1]
                out.extend(inner)
        cycles.append(tuple(out))
    lifted = Decomposition(tuple(cycles))
    report = verify_hamilton_decomposition(big.to_multigraph(), lifted)
    if not report.ok:
        raise ConstructionFailed(f"lift of {gr} failed verification: {report.failures[:3]}")
    return lifted


# -- pipeline ------------------------------------------------------------------


@dataclass
class _Step:
    op: str  # "reduce" | "transpose"
    before: GammaGraph
    after: GammaGraph
    bijection: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {"op": self.op, "from": self.before.to_json(), "to": self.after.to_json()}


def reduction_chain(g: GammaGraph) -> tuple[list[_Step], str]:
    """Reduce/transpose steps from ``g`` to a base graph, and the base kind.

    Base kinds: ``"formula"`` for Gamma(2,1)/Gamma(1,2), ``"c3_box_c4"`` and
    ``"gamma32"`` for the two stored special graphs.
    """
    special_c3 = special_c3_box_c4()[0]
    special_32 = special_gamma32()[0]
    steps: list[_Step] = []
    seen = set()
    cur = g
    while True:
        if cur in seen:
            raise ConstructionFailed(f"reduction chain revisits {cur}")
        seen.add(cur)
        if cur.alpha <= 2 and cur.beta <= 2:
            return steps, "formula"
        if cur == special_c3:
            return steps, "c3_box_c4"
        if cur == special_32:
            return steps, "gamma32"
        if cur.alpha >= 3:
            reduced = reduce(cur)
            if not isinstance(reduced, NonSimpleKind):
                steps.append(_Step("reduce", cur, reduced))
                cur = reduced
                continue
        nxt, bij = transpose(cur)
        steps.append(_Step("transpose", cur, nxt, bij))
        cur = nxt


def _base(kind: str, g: GammaGraph) -> Decomposition:
    if kind == "formula":
        return decompose_base(g)
    if kind == "c3_box_c4":
        return special_c3_box_c4()[1]
    return special_gamma32()[1]


def _replay(steps: list[_Step], d: Decomposition, accept) -> Decomposition | None:
    """Undo ``steps`` in reverse; depth-first over lift orientations until ``accept`` holds."""
    if not steps:
        return d if accept(d) else None
    step = steps[-1]
    if step.op == "transpose":
        inverse = [0] * step.before.n
        for old, new in enumerate(step.bijection):
            inverse[new] = old
        return _replay(steps[:-1], d.relabeled(inverse), accept)
    for orient in Orientation:
        try:
            lifted = lift_decomposition(step.after, d, orient)
        except Q1Missing:
            return None
        found = _replay(steps[:-1], lifted, accept)
        if found is not None:
            return found
    return None


@dataclass
class PipelineResult:
    """Output of the 4-regular pipeline, in group-element labels.

    ``q1_gamma`` / ``q1_labels`` name the drawing in which Q1 was verified:
    the caller's ``to_gamma(n, a, b)`` when possible, else ``to_gamma(n, b, a)``.
    Some even-alpha drawings admit no decomposition with Q1 on every matching
    (Circ(12, {4, 1}) is the smallest), so the odd-alpha drawing is the fallback.
    """

    graph: MultiGraph
    decomposition: Decomposition
    certificate: Q2Certificate
    gamma: GammaGraph
    q1_gamma: GammaGraph
    q1_labels: LabelMap
    trace: list[dict]


def decompose_4regular_full(n: int, a: int, b: int) -> PipelineResult:
    if n % 2:
        raise OddHostOrder(f"order {n} is odd")
    if (a - b) % 2 == 0:
        raise SameParityJumps(f"jumps {a} and {b} have the same parity")
    g0, labels = to_gamma(n, a, b)
    alt, alt_labels = to_gamma(n, b, a)
    host = build_circulant(CirculantSpec.of(n, [min(a % n, -a % n), min(b % n, -b % n)]))
    steps, kind = reduction_chain(g0)
    base_graph = steps[-1].after if steps else g0
    to_group = labels.pairs_to_group
    alt_index = alt_labels.group_to_pairs

    def has_q2(d: Decomposition) -> bool:
        return find_q2_certificate(host, d.relabeled(to_group), (a, b)) is not None

    def strict(d: Decomposition) -> bool:
        return verify_q1(g0, d) and has_q2(d)

    def either(d: Decomposition) -> bool:
        alt_d = d.relabeled(to_group).relabeled(alt_index)
        return (verify_q1(g0, d) or verify_q1(alt, alt_d)) and has_q2(d)

    base = _base(kind, base_graph)
    d = _replay(steps, base, strict)
    q1_gamma, q1_labels = g0, labels
    if d is None:
        d = _replay(steps, base, either)
        if d is not None and not verify_q1(g0, d):
            q1_gamma, q1_labels = alt, alt_labels
    if d is None:
        raise ConstructionFailed(f"no lift orientation gives Q1 and Q2 on Circ({n}, {{{a}, {b}}})")
    final = d.relabeled(to_group)
    cert = find_q2_certificate(host, final, (a, b))
    trace = [s.to_json() for s in steps] + [{"op": "base", "kind": kind, "graph": base_graph.to_json()}]
    trace.append({"op": "q1_drawing", "graph": q1_gamma.to_json(), "a": q1_labels.a, "b": q1_labels.b})
    return PipelineResult(host, final, cert, g0, q1_gamma, q1_labels, trace)


def decompose_4regular(n: int, a: int, b: int) -> tuple[MultiGraph, Decomposition, Q2Certificate]:
    r = decompose_4regular_full(n, a, b)
    return r.graph, r.decomposition, r.certificate
