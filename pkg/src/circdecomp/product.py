"""Hamilton decompositions of tensor products with a circulant factor.

``C_n x G`` (vertex ``(t, u)`` flattened to ``t * |V(G)| + u``) is split
into four 2-factors. For each Hamilton cycle H of G every edge ``xy`` of H
is given a time direction: the factor X_H takes the edges
``(t, x)(t+1, y)`` for all t, and its complement Y_H takes ``(t, y)(t+1, x)``.
Any choice of directions gives 2-factors; walking once around H shifts time
by D = (#forward - #backward), so each factor has gcd(n, D) components.

Directions are fixed so that D = 2 (two components per factor) and so that
the product copy ``(0,v1)(1,v2)(0,v3)(1,v4)`` of the odd alternating
4-cycle alternates between X_A and X_B. Its diagonal is at odd distance on
both cycles, so the two edges it takes from each factor lie in different
components, and exchanging them merges both factors into Hamilton cycles.
The mirrored copy ``(1,v1)(0,v2)(1,v3)(0,v4)`` does the same for Y_A, Y_B.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decomposition import Decomposition, Q2Certificate, trace_cycle
from .errors import (
    CircDecompError,
    CertificateInvalid,
    ConstructionFailed,
    HNotDecomposition,
    InvalidSpec,
    OddN,
    OddOrderUnsupported,
    PropertyQFailed,
)
from .graph_core import CirculantSpec, Edge, MultiGraph, build_circulant, canon, cycle_graph, tensor_product
from .lift import decompose_4regular
from .pairing import check_property_q
from .verify import verify_hamilton_decomposition, verify_q2_certificate


def _edge_position(cycle: Sequence[int], x: int, y: int) -> tuple[int, int]:
    """Index s of edge {x, y} on the cycle, and +1 if it runs x -> y in cycle order."""
    m = len(cycle)
    for s in range(m):
        a, b = cycle[s], cycle[(s + 1) % m]
        if (a, b) == (x, y):
            return s, 1
        if (a, b) == (y, x):
            return s, -1
    raise CertificateInvalid(f"edge {x}-{y} not on cycle")


def _directions(cycle: Sequence[int], forced: list[tuple[int, int]]) -> list[int]:
    """Per-edge time directions with net shift 2 and the forced edges pointing x -> y."""
    m = len(cycle)
    dirs = [0] * m
    for x, y in forced:
        s, d = _edge_position(cycle, x, y)
        dirs[s] = d
    free = [s for s in range(m) if dirs[s] == 0]
    forward = (2 - sum(dirs) + len(free)) // 2
    for rank, s in enumerate(free):
        dirs[s] = 1 if rank < forward else -1
    return dirs


def _factor_pair(n: int, nv: int, cycle: Sequence[int], dirs: list[int]) -> tuple[set[Edge], set[Edge]]:
    x_side, y_side = set(), set()
    m = len(cycle)
    for s in range(m):
        a, b = cycle[s], cycle[(s + 1) % m]
        if dirs[s] < 0:
            a, b = b, a
        for t in range(n):
            u = (t + 1) % n
            x_side.add(canon(t * nv + a, u * nv + b))
            y_side.add(canon(t * nv + b, u * nv + a))
    return x_side, y_side


def _exchange(first: set[Edge], second: set[Edge], quad: Sequence[int]) -> None:
    """Swap the alternating 4-cycle ``quad``: edges 01, 23 leave ``first``, edges 12, 30 leave ``second``."""
    odd = [canon(quad[0], quad[1]), canon(quad[2], quad[3])]
    even = [canon(quad[1], quad[2]), canon(quad[3], quad[0])]
    if not all(e in first for e in odd) or not all(e in second for e in even):
        raise ConstructionFailed("certificate copy does not alternate between the chosen factors")
    first.difference_update(odd)
    second.difference_update(even)
    first.update(even)
    second.update(odd)


def decompose_cn_cross_g(n: int, g: MultiGraph, d: Decomposition, cert: Q2Certificate) -> Decomposition:
    if n % 2:
        raise OddN(f"cycle length {n} is odd")
    if n < 4:
        raise InvalidSpec(f"cycle length {n} < 4")
    nv = g.vertex_count
    if nv % 2 or nv < 6:
        raise InvalidSpec(f"G needs an even order >= 6, got {nv}")
    if len(d) != 2 or not verify_hamilton_decomposition(g, d).ok:
        raise InvalidSpec("decomposition of G does not verify as two Hamilton cycles")
    if not verify_q2_certificate(g, d, cert):
        raise CertificateInvalid(f"certificate {cert} does not verify")

    quad = list(cert.quad)
    first, second = cert.pairing
    if set(cert.diagonal) != {quad[0], quad[2]}:
        quad = quad[1:] + quad[:1]
        first, second = second, first
    v1, v2, v3, v4 = quad
    cyc_a, cyc_b = d.cycles[first], d.cycles[second]
    dirs_a = _directions(cyc_a, [(v1, v2), (v3, v4)])
    dirs_b = _directions(cyc_b, [(v3, v2), (v1, v4)])
    xa, ya = _factor_pair(n, nv, cyc_a, dirs_a)
    xb, yb = _factor_pair(n, nv, cyc_b, dirs_b)

    def at(t, v):
        return t * nv + v

    _exchange(xa, xb, (at(0, v1), at(1, v2), at(0, v3), at(1, v4)))
    _exchange(ya, yb, (at(0, v2), at(1, v1), at(0, v4), at(1, v3)))

    cycles = []
    for factor in (xa, ya, xb, yb):
        cyc = trace_cycle(sorted(factor), n * nv)
        if cyc is None:
            raise ConstructionFailed("a merged 2-factor is not a Hamilton cycle")
        cycles.append(cyc)
    result = Decomposition(tuple(cycles))
    product = tensor_product(cycle_graph(n), g)
    report = verify_hamilton_decomposition(product, result)
    if not report.ok:
        raise ConstructionFailed(f"C_{n} x G decomposition failed verification: {report.failures[:3]}")
    return result


@dataclass(frozen=True)
class ProductDecomposition:
    host: MultiGraph
    cycles: Decomposition
    provenance: tuple[tuple[int, int], ...]  # one (pair, h_cycle) tag per block of 4 cycles

    def to_json(self) -> dict:
        return {
            "n_vertices": self.host.vertex_count,
            "cycles": [list(c) for c in self.cycles.cycles],
            "provenance": [{"pair": i, "h_cycle": j} for i, j in self.provenance],
        }


def expand_cycles(h_cycles: Sequence[tuple[Sequence[int], int]]) -> list[tuple[int, ...]]:
    out = []
    for cyc, mult in h_cycles:
        if mult < 1:
            raise InvalidSpec(f"multiplicity {mult} < 1")
        out.extend([tuple(cyc)] * mult)
    return out


def decompose_product(
    gspec: CirculantSpec, h: MultiGraph, h_cycles: Sequence[tuple[Sequence[int], int]]
) -> ProductDecomposition:
    """Hamilton decomposition of Circ(gspec) x H from a Hamilton decomposition of H.

    ``h_cycles`` lists (cycle, multiplicity); a cycle with multiplicity l
    stands for l identical Hamilton cycles of the multigraph H.
    """
    if gspec.n % 2 or h.vertex_count % 2:
        raise OddOrderUnsupported(f"orders {gspec.n} and {h.vertex_count} must both be even")
    try:
        pairing = check_property_q(gspec)
    except CircDecompError as exc:
        raise PropertyQFailed(f"Circ({gspec.n}, {list(gspec.jumps)}): {exc}") from exc
    expanded = expand_cycles(h_cycles)
    if not expanded or not verify_hamilton_decomposition(h, Decomposition(tuple(expanded))).ok:
        raise HNotDecomposition("H cycles are not a Hamilton decomposition of H")

    nh = h.vertex_count
    cycles, provenance = [], []
    for i, (odd, even) in enumerate(pairing.pairs):
        gi, di, cert = decompose_4regular(gspec.n, odd, even)
        block = decompose_cn_cross_g(nh, gi, di, cert)
        for j, hc in enumerate(expanded):
            # (t, u) -> (u, hc[t]) in G x H
            mapping = [u * nh + hc[t] for t in range(nh) for u in range(gspec.n)]
            cycles.extend(block.relabeled(mapping).cycles)
            provenance.append((i, j))
    host = tensor_product(build_circulant(gspec), h)
    result = Decomposition(tuple(cycles))
    report = verify_hamilton_decomposition(host, result)
    if not report.ok:
        raise ConstructionFailed(f"product decomposition failed verification: {report.failures[:3]}")
    return ProductDecomposition(host, result, tuple(provenance))
