import pytest
from hypothesis import given, settings, strategies as st

from circdecomp.errors import AlphaTooSmall, DegenerateJump, Disconnected, InvalidSpec
from circdecomp.gamma import GammaGraph, NonSimpleKind, lift, reduce, to_gamma, transpose
from circdecomp.graph_core import CirculantSpec, build_circulant
from circdecomp.pairing import admissible_pairs


@pytest.mark.parametrize(
    "n,a,b,expected",
    [(12, 2, 3, (2, 6, 3)), (12, 3, 2, (3, 4, 2)), (10, 3, 4, (1, 10, 8)), (10, 4, 3, (2, 5, 4))],
)
def test_to_gamma_parameters(n, a, b, expected):
    g, _ = to_gamma(n, a, b)
    assert (g.alpha, g.k, g.c) == expected


def test_to_gamma_errors():
    with pytest.raises(Disconnected):
        to_gamma(12, 2, 4)
    with pytest.raises(DegenerateJump):
        to_gamma(10, 5, 2)


def _instances():
    return [(n, a, b) for n in range(6, 31, 2) for a, b in admissible_pairs(n)]


@pytest.mark.parametrize("n,a,b", _instances())
def test_label_map_is_isomorphism(n, a, b):
    g, labels = to_gamma(n, a, b)
    circ = build_circulant(CirculantSpec.of(n, [a, b]))
    assert g.to_multigraph().relabeled(labels.pairs_to_group) == circ
    assert sorted(labels.pairs_to_group) == list(range(n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(3, 12), st.data())
def test_transpose_is_isomorphism(alpha, k, data):
    c = data.draw(st.integers(0, k - 1))
    try:
        g = GammaGraph(alpha, k, c)
        t, bij = transpose(g)
    except InvalidSpec:
        return
    assert t.alpha == g.beta
    assert g.to_multigraph().relabeled(bij) == t.to_multigraph()
    back, _ = transpose(t)
    assert back.alpha == g.alpha


def test_reduce_and_lift_are_inverse():
    g = GammaGraph(5, 6, 2)
    r = reduce(g)
    assert r == GammaGraph(3, 6, 2)
    assert lift(r) == g


@pytest.mark.parametrize(
    "g,kind",
    [
        (GammaGraph(3, 5, 0), NonSimpleKind.LOOPS_C0_ALPHA3),
        (GammaGraph(4, 5, 0), NonSimpleKind.DOUBLED_C0_ALPHA4),
        (GammaGraph(3, 6, 3), NonSimpleKind.DOUBLED_CHALF_ALPHA3),
    ],
)
def test_nonsimple_reductions(g, kind):
    assert reduce(g) is kind


def test_reduce_needs_three_cycles():
    with pytest.raises(AlphaTooSmall):
        reduce(GammaGraph(2, 5, 1))


def test_matching_sets():
    g = GammaGraph(3, 4, 1)
    assert len(g.matching(0)) == 4 and len(g.matching(2)) == 4
    assert g.closing_edge(0) in g.matching(2)


def test_label_csv():
    _, labels = to_gamma(12, 2, 3)
    rows = labels.to_csv().splitlines()
    assert rows[0] == "group_element,i,j" and len(rows) == 13
