"""Two-cycle Hamilton decompositions of the base Gamma graphs.

Gamma(2, 1) is handled by the explicit formula; Gamma(1, 2) by transposing
to Gamma(2, 1) and pulling the cycles back. The two 12-vertex graphs reached
by non-simple reductions (C3 x C4 as Gamma(3, 4) with c = 0, and Gamma(3, 2)
with k = 4, c = 2) carry stored decompositions, regenerated in the test
suite by the brute-force oracle under Q1 and Q2 constraints.
"""

from __future__ import annotations

import enum

from .decomposition import Decomposition, Q2Certificate, trace_cycle
from .errors import BadShape, DegenerateC, OddHostOrder
from .gamma import GammaGraph, LabelMap, transpose
from .graph_core import canon
from .verify import find_q2_certificate

__all__ = [
    "Orientation",
    "decompose_gamma21",
    "decompose_base",
    "find_q2_certificate",
    "special_c3_box_c4",
    "special_gamma32",
]


class Orientation(enum.Enum):
    CLOCKWISE = "clockwise"
    ANTICLOCKWISE = "anticlockwise"


def _relabel(d: Decomposition, labels: LabelMap | None) -> Decomposition:
    return d if labels is None else d.relabeled(labels.pairs_to_group)


def decompose_gamma21(g: GammaGraph, labels: LabelMap | None = None) -> Decomposition:
    """H1 = (C0 - {0a}) + (C1 - {(-b)(-b+a)}) + {0(-b), (-b+a)a}; H2 is the rest.

    In coordinates 0 = (0,0), a = (0,1), -b = (1,-c), -b+a = (1,1-c). Output
    is in Gamma indices, or in group elements when ``labels`` is given.
    """
    if g.alpha != 2 or g.beta != 1:
        raise BadShape(f"expected Gamma(2,1), got alpha={g.alpha}, beta={g.beta}")
    if g.c == 0:
        raise DegenerateC("c = 0 in Gamma(2,1)")
    if g.n % 2:
        raise OddHostOrder(f"host order {g.n} is odd")
    k, c = g.k, g.c
    idx = g.index
    removed = {canon(idx(0, 0), idx(0, 1)), canon(idx(1, -c), idx(1, 1 - c))}
    cycle_edges = [canon(idx(i, j), idx(i, j + 1)) for i in range(2) for j in range(k)]
    h1 = [e for e in cycle_edges if e not in removed]
    h1 += [canon(idx(0, 0), idx(1, -c)), canon(idx(0, 1), idx(1, 1 - c))]
    h1_set = set(h1)
    host = g.to_multigraph()
    h2 = [(u, v) for u, v, _ in host.edges if (u, v) not in h1_set]
    c1 = trace_cycle(h1, g.n)
    c2 = trace_cycle(h2, g.n)
    if c1 is None or c2 is None:
        raise BadShape(f"base formula does not yield Hamilton cycles on {g}")
    return _relabel(Decomposition((c1, c2)), labels)


def decompose_base(g: GammaGraph, labels: LabelMap | None = None) -> Decomposition:
    if {g.alpha, g.beta} != {1, 2}:
        raise BadShape(f"base needs {{alpha, beta}} = {{1, 2}}, got ({g.alpha}, {g.beta})")
    if g.alpha == 2:
        return decompose_gamma21(g, labels)
    t, bij = transpose(g)
    inverse = [0] * g.n
    for old, new in enumerate(bij):
        inverse[new] = old
    d = decompose_gamma21(t).relabeled(inverse)
    return _relabel(d, labels)


# Found by brute_force_decomposition(q1_on=..., q2_required=True); see
# tests/test_base_decomp.py::test_special_bases_regenerate.
_C3_BOX_C4 = GammaGraph(3, 4, 0)
_C3_BOX_C4_CYCLES = (
    (0, 1, 2, 6, 5, 9, 10, 11, 3, 7, 4, 8),
    (0, 3, 2, 10, 6, 7, 11, 8, 9, 1, 5, 4),
)
_C3_BOX_C4_CERT = Q2Certificate((2, 3, 7, 6), (1, 0), (2, 7))

_GAMMA32 = GammaGraph(3, 4, 2)
_GAMMA32_CYCLES = (
    (0, 1, 2, 6, 5, 4, 8, 9, 3, 7, 11, 10),
    (0, 3, 2, 8, 11, 1, 5, 9, 10, 6, 7, 4),
)
_GAMMA32_CERT = Q2Certificate((0, 3, 9, 10), (1, 0), (0, 9))


def special_c3_box_c4() -> tuple[GammaGraph, Decomposition, Q2Certificate]:
    return _C3_BOX_C4, Decomposition(_C3_BOX_C4_CYCLES), _C3_BOX_C4_CERT


def special_gamma32() -> tuple[GammaGraph, Decomposition, Q2Certificate]:
    return _GAMMA32, Decomposition(_GAMMA32_CYCLES), _GAMMA32_CERT
