import pytest

from brokencrown import (
    BrokenCrownSpec,
    MalformedCycle,
    RemovalPolicy,
    build_broken_crown,
    count_hc_directed,
    count_hc_undirected,
    lift_cycle,
    to_undirected_karp,
)
from oracles import bidirected_ring, directed_ring


def expand_cycle(cycle):
    """Forward image of a directed cycle under the triple split (test-local)."""
    out = []
    for j in cycle:
        out.extend((3 * j - 2, 3 * j - 1, 3 * j))
    return tuple(out)


def test_directed_triangle_image():
    g = directed_ring(3)
    image, mapping = to_undirected_karp(g)
    assert image.order == 9
    assert image.edge_count == 9
    assert mapping.triple == {1: (1, 2, 3), 2: (4, 5, 6), 3: (7, 8, 9)}
    report = count_hc_undirected(image, collect=True)
    assert report.count == 1
    assert lift_cycle(mapping, report.cycles[0]) == (1, 2, 3)


def test_triple_chain_edges_and_mid_degree():
    bc = build_broken_crown(BrokenCrownSpec(n=5, k=5))
    image, mapping = to_undirected_karp(bc.graph)
    for j, (i_node, m_node, o_node) in mapping.triple.items():
        assert (i_node, m_node, o_node) == (3 * j - 2, 3 * j - 1, 3 * j)
        assert image.has_edge(i_node, m_node)
        assert image.has_edge(m_node, o_node)
        assert image.degree(m_node) == 2


@pytest.mark.parametrize("n", range(4, 13))
def test_size_formulas_small_range(n):
    for k in range(4, n + 1):
        for policy, edges in (
            (RemovalPolicy.OUTGOING_ONLY, 22 * n + k - 40),
            (RemovalPolicy.INCOMING_ONLY, 22 * n + k - 40),
            (RemovalPolicy.BOTH, 21 * n + 2 * k - 40),
        ):
            bc = build_broken_crown(BrokenCrownSpec(n=n, k=k, policy=policy))
            image, _ = to_undirected_karp(bc.graph)
            assert image.order == 15 * n - 27
            assert image.edge_count == edges


def test_conversion_preserves_count_and_lift_is_a_bijection():
    bc = build_broken_crown(BrokenCrownSpec(n=4, k=4))
    image, mapping = to_undirected_karp(bc.graph)
    directed = count_hc_directed(bc.graph, collect=True)
    undirected = count_hc_undirected(image, collect=True)
    assert directed.count == undirected.count == 4
    lifted = [lift_cycle(mapping, c) for c in undirected.cycles]
    assert len(set(lifted)) == 4
    assert set(lifted) == set(directed.cycles)


@pytest.mark.parametrize("make,expected", [
    (lambda: bidirected_ring(5), 2),
    (lambda: bidirected_ring(11), 2),
    (lambda: directed_ring(8), 1),
])
def test_conversion_preserves_count_on_rings(make, expected):
    g = make()
    image, _ = to_undirected_karp(g)
    assert count_hc_directed(g).count == expected
    assert count_hc_undirected(image).count == expected


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lift_of_expansion_is_identity(n):
    bc = build_broken_crown(BrokenCrownSpec(n=n, k=n))
    _, mapping = to_undirected_karp(bc.graph)
    directed = count_hc_directed(bc.graph, collect=True)
    for cycle in directed.cycles:
        assert lift_cycle(mapping, expand_cycle(cycle)) == cycle


def test_lift_accepts_rotations_and_reversals():
    g = directed_ring(4)
    _, mapping = to_undirected_karp(g)
    base = expand_cycle((1, 2, 3, 4))
    for shift in range(len(base)):
        rotated = base[shift:] + base[:shift]
        assert lift_cycle(mapping, rotated) == (1, 2, 3, 4)
        assert lift_cycle(mapping, rotated[::-1]) == (1, 2, 3, 4)


def test_lift_rejects_malformed_sequences():
    g = directed_ring(3)
    _, mapping = to_undirected_karp(g)
    with pytest.raises(MalformedCycle):
        lift_cycle(mapping, (1, 2, 3))  # wrong length
    with pytest.raises(MalformedCycle):
        lift_cycle(mapping, (1, 2, 2, 4, 5, 6, 7, 8, 9))  # not a permutation
    with pytest.raises(MalformedCycle):
        lift_cycle(mapping, (1, 2, 4, 3, 5, 6, 7, 8, 9))  # triples broken
