import random
from itertools import combinations

import pytest

from circdecomp.base_decomp import Orientation, decompose_base
from circdecomp.decomposition import Decomposition
from circdecomp.errors import OddHostOrder, Q1Missing, SameParityJumps
from circdecomp.gamma import GammaGraph, lift, to_gamma
from circdecomp.graph_core import CirculantSpec, build_circulant
from circdecomp.lift import (
    _runs,
    decompose_4regular,
    decompose_4regular_full,
    lift_decomposition,
    plan_lift,
    reduction_chain,
)
from circdecomp.pairing import admissible_pairs
from circdecomp.verify import (
    brute_force_decomposition,
    cycle_distance_parity,
    verify_hamilton_decomposition,
    verify_q1,
    verify_q2_certificate,
)


def test_runs_cover_columns():
    owners = [0, 0, 1, 1, 1, 0]
    runs = _runs(owners)
    assert sorted(s for s, _ in runs) == [2, 5]
    assert sum(length for _, length in runs) == 6


@pytest.mark.parametrize("orient", list(Orientation))
def test_lift_paths_are_odd_and_cover_new_vertices(orient):
    g = GammaGraph(2, 7, 3)
    d = decompose_base(g)
    plan = plan_lift(g, d, orient)
    new = set(range(g.n, g.n + 2 * g.k))
    inner = [v for p in plan.paths.values() for v in p[1:-1]]
    assert all((len(p) - 1) % 2 == 1 for p in plan.paths.values())
    for h in range(2):
        cols = plan.replaced_edges[h]
        covered = [v for j in cols for v in plan.paths[j][1:-1]]
        assert sorted(covered) == sorted(new)
    assert len(inner) == 2 * len(new)


def test_lift_of_gamma_1_10_8_keeps_q1():
    g = GammaGraph(1, 10, 8)
    d = decompose_base(g)
    for orient in Orientation:
        big = lift_decomposition(g, d, orient)
        assert verify_hamilton_decomposition(lift(g).to_multigraph(), big).ok
        assert verify_q1(lift(g), big)


def test_q1_missing():
    g = GammaGraph(1, 7, 2)
    # the first cycle uses no chord, the second uses all of them
    d = Decomposition(((0, 1, 2, 3, 4, 5, 6), (0, 2, 4, 6, 1, 3, 5)))
    assert verify_hamilton_decomposition(g.to_multigraph(), d).ok
    with pytest.raises(Q1Missing):
        plan_lift(g, d, Orientation.CLOCKWISE)


def _parities(d, vertices):
    return [
        {(u, v): cycle_distance_parity(c, u, v) for u, v in combinations(vertices, 2)}
        for c in d.cycles
    ]


@pytest.mark.parametrize("seed", range(5))
def test_lift_preserves_retained_parities(seed):
    rng = random.Random(seed)
    n = rng.choice(range(10, 40, 2))
    a, b = rng.choice(admissible_pairs(n))
    g, _ = to_gamma(n, a, b)
    d = decompose_4regular_full(n, a, b).decomposition
    d = d.relabeled(to_gamma(n, a, b)[1].group_to_pairs)
    try:
        big = lift_decomposition(g, d, rng.choice(list(Orientation)))
    except Q1Missing:
        pytest.skip("closing matching owned by one cycle")
    assert _parities(d, range(g.n)) == _parities(big, range(g.n))


def test_reduction_chain_ends_in_base():
    steps, kind = reduction_chain(to_gamma(36, 3, 2)[0])
    assert kind in {"formula", "c3_box_c4", "gamma32"}
    assert all(s.op in {"reduce", "transpose"} for s in steps)


def test_pipeline_errors():
    with pytest.raises(OddHostOrder):
        decompose_4regular(11, 1, 2)
    with pytest.raises(SameParityJumps):
        decompose_4regular(12, 1, 5)


def test_pipeline_output_verifies():
    host, d, cert = decompose_4regular(24, 5, 2)
    assert host == build_circulant(CirculantSpec.of(24, [2, 5]))
    assert verify_hamilton_decomposition(host, d).ok
    assert verify_q2_certificate(host, d, cert)


def test_alternate_drawing_used_when_needed():
    r = decompose_4regular_full(12, 4, 1)
    assert (r.q1_labels.a, r.q1_labels.b) == (1, 4)
    assert verify_q1(r.q1_gamma, r.decomposition.relabeled(r.q1_labels.group_to_pairs))


@pytest.mark.parametrize("n,a,b", [(12, 4, 1), (12, 4, 3), (12, 4, 5), (16, 4, 1), (16, 4, 3)])
def test_even_alpha_drawing_admits_no_full_q1(n, a, b):
    """Exhaustive search: Q1 on every matching of to_gamma(n, a, b) is impossible here."""
    g, labels = to_gamma(n, a, b)
    assert g.alpha % 2 == 0
    host = g.to_multigraph()
    assert brute_force_decomposition(host) is not None
    assert brute_force_decomposition(host, q1_on=g) is None
