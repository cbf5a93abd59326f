import random

import pytest
from hypothesis import given, settings, strategies as st

from circdecomp.decomposition import Decomposition, Q2Certificate
from circdecomp.errors import OddHostOrder, ParityUndefined, TooLarge, VertexAbsent
from circdecomp.gamma import GammaGraph
from circdecomp.graph_core import CirculantSpec, MultiGraph, build_circulant, cycle_graph
from circdecomp.lift import decompose_4regular
from circdecomp.verify import (
    FailureKind,
    brute_force_decomposition,
    cycle_distance_parity,
    find_q2_certificate,
    verify_hamilton_decomposition,
    verify_q1,
    verify_q2_certificate,
)


def circ(n, *jumps):
    return build_circulant(CirculantSpec.of(n, jumps))


def test_cycle_is_its_own_decomposition():
    assert verify_hamilton_decomposition(cycle_graph(6), Decomposition(((0, 1, 2, 3, 4, 5),))).ok


def test_moved_edge_reports_over_and_underuse():
    g = circ(6, 1, 2)
    d = brute_force_decomposition(g)
    a, b = d.cycles
    # reroute the first cycle through an edge the second already uses
    edges_b = set(d.cycle_edges(1))
    bad = None
    for i in range(6):
        c = list(a)
        c[i], c[(i + 1) % 6] = c[(i + 1) % 6], c[i]
        cand = Decomposition((tuple(c), b))
        kinds = verify_hamilton_decomposition(g, cand).kinds()
        if kinds == {FailureKind.EDGE_OVERUSE, FailureKind.EDGE_UNDERUSE}:
            bad = cand
            break
    assert bad is not None and any(e in edges_b for e in bad.cycle_edges(0))


def test_failure_kinds():
    g = cycle_graph(6)
    assert FailureKind.MISSED_VERTEX in verify_hamilton_decomposition(g, Decomposition(((0, 1, 2),))).kinds()
    assert FailureKind.NOT_A_CYCLE in verify_hamilton_decomposition(g, Decomposition(((0, 1, 0, 1, 2, 3),))).kinds()
    assert FailureKind.NOT_AN_EDGE in verify_hamilton_decomposition(g, Decomposition(((0, 2, 1, 3, 4, 5),))).kinds()


def test_doubled_edges_must_be_used_twice():
    g = cycle_graph(5, 2)
    once = Decomposition(((0, 1, 2, 3, 4),))
    assert verify_hamilton_decomposition(g, once).kinds() == {FailureKind.EDGE_UNDERUSE}
    assert verify_hamilton_decomposition(g, Decomposition(once.cycles * 2)).ok


def _perturbations(d, n, rng):
    """Single edge swap, vertex transposition or truncation of one cycle."""
    cyc = list(d.cycles[0])
    kind = rng.choice(["swap", "transpose", "truncate"])
    if kind == "truncate":
        cyc = cyc[:-1]
    elif kind == "transpose":
        i, j = rng.sample(range(n), 2)
        cyc[i], cyc[j] = cyc[j], cyc[i]
    else:
        i = rng.randrange(n)
        cyc[i], cyc[(i + 1) % n] = cyc[(i + 1) % n], cyc[i]
    return Decomposition((tuple(cyc),) + d.cycles[1:])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_verifier_rejects_perturbations(seed):
    rng = random.Random(seed)
    n = rng.choice([8, 10, 12, 14, 16])
    host, d, _ = decompose_4regular(n, 1, 2)
    bad = _perturbations(d, n, rng)
    if bad == d or sorted(map(sorted, bad.cycle_edges(0))) == sorted(map(sorted, d.cycle_edges(0))):
        return  # the perturbation reproduced the same cycle
    assert not verify_hamilton_decomposition(host, bad).ok


def test_q1_counterexample():
    g = GammaGraph(2, 3, 1)
    # toy: every edge between C0 and C1 in the second cycle
    d = Decomposition(((0, 1, 2), (3, 4, 5)))
    assert not verify_q1(g, d)


def test_q2_round_trip_and_bad_certificates():
    host, d, _ = decompose_4regular(10, 4, 3)
    cert = find_q2_certificate(host, d)
    assert verify_q2_certificate(host, d, cert)
    v1, v2, v3, v4 = cert.quad
    other = (v2, v4) if set(cert.diagonal) == {v1, v3} else (v1, v3)
    even = Q2Certificate(cert.quad, cert.pairing, other)
    pos = [c.index for c in d.cycles]
    if any((p(other[0]) - p(other[1])) % 2 == 0 for p in pos):
        assert not verify_q2_certificate(host, d, even)
    not_a_quad = Q2Certificate((0, 1, 2, 3), cert.pairing, (0, 2))
    assert not verify_q2_certificate(host, d, not_a_quad)


def test_q2_needs_even_order():
    g = circ(9, 1, 2)
    d = brute_force_decomposition(g)
    with pytest.raises(OddHostOrder):
        find_q2_certificate(g, d)


def test_bipartite_host_has_no_odd_alternating_square():
    g = circ(8, 1, 3)
    d = brute_force_decomposition(g)
    assert d is not None
    assert find_q2_certificate(g, d) is None
    assert brute_force_decomposition(g, q2_required=True) is None


def test_cycle_distance_parity():
    assert cycle_distance_parity((0, 1, 2, 3), 0, 2) == 0
    assert cycle_distance_parity(tuple(range(6)), 0, 3) == 1
    assert cycle_distance_parity(tuple(range(6)), 3, 0) == 1
    with pytest.raises(ParityUndefined):
        cycle_distance_parity((0, 1, 2), 0, 1)
    with pytest.raises(VertexAbsent):
        cycle_distance_parity((0, 1, 2, 3), 0, 7)


def test_oracle_small_cases():
    assert brute_force_decomposition(cycle_graph(6)) == Decomposition(((0, 1, 2, 3, 4, 5),))
    k5 = MultiGraph(5, tuple((u, v, 1) for u in range(5) for v in range(u + 1, 5)))
    d = brute_force_decomposition(k5)
    assert len(d) == 2 and verify_hamilton_decomposition(k5, d).ok
    g = circ(8, 1, 2)
    assert verify_hamilton_decomposition(g, brute_force_decomposition(g)).ok


def test_oracle_limit():
    with pytest.raises(TooLarge):
        brute_force_decomposition(circ(18, 1, 2))
