import pytest
from hypothesis import given, strategies as st

from circdecomp.errors import HalfJump, InvalidSpec
from circdecomp.graph_core import (
    CirculantSpec,
    MultiGraph,
    build_circulant,
    components,
    cycle_graph,
    graph_from_json,
    graph_to_json,
    is_bipartite,
    jump_cycles,
    tensor_product,
    to_dot,
    to_edge_list,
)


def test_circulant_edges():
    g = build_circulant(CirculantSpec.of(6, [1, 2]))
    assert g.edge_total() == 12
    assert g.degrees() == [4] * 6
    assert g.has_edge(0, 5) and g.has_edge(0, 4) and not g.has_edge(0, 3)


def test_half_jump_gives_single_edges():
    g = build_circulant(CirculantSpec.of(8, [1, 4]))
    assert g.degrees() == [3] * 8
    with pytest.raises(HalfJump):
        jump_cycles(CirculantSpec.of(8, [1, 4]), 4)


def test_jump_cycles_count():
    cycles = jump_cycles(CirculantSpec.of(12, [3, 2]), 3)
    assert len(cycles) == 3 and all(len(c) == 4 for c in cycles)


@pytest.mark.parametrize("n,jumps", [(2, [1]), (8, [0]), (8, [5]), (8, [2, 2])])
def test_bad_specs(n, jumps):
    with pytest.raises(InvalidSpec):
        CirculantSpec.of(n, jumps)


def test_multigraph_rejects_loops_and_merges_parallel():
    with pytest.raises(InvalidSpec):
        MultiGraph(3, ((1, 1, 1),))
    g = MultiGraph(3, ((0, 1, 1), (1, 0, 2)))
    assert g.multiplicity(0, 1) == 3


def test_tensor_product_degree_and_size():
    g = build_circulant(CirculantSpec.of(6, [1, 2]))
    h = cycle_graph(4)
    p = tensor_product(g, h)
    assert p.vertex_count == 24
    assert p.degrees() == [8] * 24
    assert p.edge_total() == 2 * g.edge_total() * h.edge_total()


@given(st.integers(1, 3), st.integers(1, 3))
def test_tensor_product_multiplicities_multiply(lam, mu):
    g = cycle_graph(5, lam)
    h = cycle_graph(3, mu)
    p = tensor_product(g, h)
    assert set(m for _, _, m in p.edges) == {lam * mu}
    assert p == tensor_product(cycle_graph(5), cycle_graph(3)).scaled(lam * mu)


def test_bipartite_product_of_even_cycles_splits():
    p = tensor_product(cycle_graph(4), cycle_graph(6))
    assert len(components(p)) == 2
    assert is_bipartite(cycle_graph(6))[0]
    assert not is_bipartite(cycle_graph(5))[0]


def test_json_round_trip_and_exports():
    g, spec = graph_from_json({"type": "circulant", "n": 8, "jumps": [3, 1]})
    assert spec.jumps == (1, 3)
    again, none = graph_from_json(graph_to_json(g))
    assert again == g and none is None
    assert to_edge_list(g).splitlines()[0] == "0 1 1"
    assert to_dot(g).startswith("graph G {")
    with pytest.raises(InvalidSpec):
        graph_from_json({"type": "tree"})
