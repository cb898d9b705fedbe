import pytest

from brokencrown import (
    BrokenCrownSpec,
    DirectedGraph,
    HubSpec,
    InvalidParameter,
    RemovalPolicy,
    analyze_labels,
    attach_hub,
    build_broken_crown,
    build_crown,
    build_gp2,
    build_path_hub,
    build_wheel,
    count_hc_directed,
    count_hc_undirected,
    hub_range,
    remove_arcs,
)
from oracles import bidirected_ring


def test_crown_n4_exact_arc_set_and_attachment():
    g, att = build_crown(4)
    assert g.order == 10
    ring = set()
    for i in range(1, 10):
        ring |= {(i, i + 1), (i + 1, i)}
    ring |= {(1, 10), (10, 1)}
    assert g.arcs == frozenset(ring | {(8, 6), (10, 2)})
    assert att.entry == {1: 1, 2: 3, 3: 5, 4: 7}
    assert att.exit == {1: 10, 2: 1, 3: 7, 4: 8}


def test_crown_n5_chords_and_exits():
    g, att = build_crown(5)
    assert g.order == 15
    chords = {(u, v) for u, v in g.arcs if (v, u) not in g.arcs}
    assert chords == {(10, 8), (15, 2), (13, 6)}
    assert att.exit == {1: 15, 2: 1, 3: 12, 4: 9, 5: 10}
    assert att.entry == {i: 2 * i - 1 for i in range(1, 6)}


def test_crown_size_formulas_and_attachment_bijections_up_to_500():
    for n in range(4, 501):
        g, att = build_crown(n)
        assert g.order == 5 * n - 10
        assert g.arc_count == 11 * n - 22
        labels = set(range(1, n + 1))
        assert set(att.entry) == labels and set(att.exit) == labels
        assert len(set(att.entry.values())) == n
        assert len(set(att.exit.values())) == n
        assert all(v <= 2 * n - 1 for v in att.entry.values())
        allowed = {5 * n - 10, 1, 2 * n - 1, 2 * n}
        allowed |= {5 * n - 9 - 3 * i for i in range(1, (n - 4) // 2 + 1)}
        allowed |= {2 * n - 1 + 3 * i for i in range(1, (n - 3) // 2 + 1)}
        assert set(att.exit.values()) == allowed


def test_crown_rejects_small_parameter():
    with pytest.raises(InvalidParameter):
        build_crown(3)


def test_broken_crown_smallest_instance():
    bc = build_broken_crown(BrokenCrownSpec(n=4, k=4))
    assert bc.graph.order == 11
    assert bc.graph.arc_count == 30
    assert bc.hub.lo == bc.hub.hi == bc.hub.start == bc.hub.finish == 11
    assert count_hc_directed(bc.graph).count == 4


def test_broken_crown_default_labels_are_the_largest():
    spec = BrokenCrownSpec(n=9, k=6)
    assert spec.removed_labels == frozenset({7, 8, 9})
    assert spec.policy is RemovalPolicy.OUTGOING_ONLY


def test_broken_crown_both_policy_arc_arithmetic():
    spec = BrokenCrownSpec(
        n=6, k=4, policy=RemovalPolicy.BOTH, removed_labels=frozenset({3, 4})
    )
    bc = build_broken_crown(spec)
    assert bc.graph.order == 21
    assert bc.graph.arc_count == 11 * 6 + 2 * 4 - 22  # 52
    assert count_hc_directed(bc.graph).count == 4


def test_broken_crown_contract_only_touches_freed_bottom_exits():
    spec = BrokenCrownSpec(
        n=11, k=6, removed_labels=frozenset({2, 5, 7, 8, 9}), contract=True
    )
    bc = build_broken_crown(spec)
    # label 2 exits from a top vertex, the other four free a bottom pair each
    assert bc.graph.order == 42
    assert count_hc_directed(bc.graph).count == 6
    assert bc.hub.lo == bc.hub.hi == bc.graph.order


def test_broken_crown_contract_remaps_attachment_for_label_analysis():
    spec = BrokenCrownSpec(n=7, k=3, contract=True)
    bc = build_broken_crown(spec)
    report = count_hc_directed(bc.graph, collect=True)
    assert report.count == 3
    analysis = analyze_labels(report, bc.attachment, bc.hub)
    assert analysis.ok
    assert sorted(i for i, _ in analysis.pairs) == [1, 2, 3]


def test_spec_validation_errors():
    with pytest.raises(InvalidParameter):
        BrokenCrownSpec(n=3, k=3)
    with pytest.raises(InvalidParameter):
        BrokenCrownSpec(n=5, k=7)
    with pytest.raises(InvalidParameter):
        BrokenCrownSpec(n=5, k=0)
    with pytest.raises(InvalidParameter):
        BrokenCrownSpec(n=5, k=4, removed_labels=frozenset({1, 2}))  # wrong size
    with pytest.raises(InvalidParameter):
        BrokenCrownSpec(n=5, k=4, removed_labels=frozenset({9}))  # out of range
    with pytest.raises(InvalidParameter):
        BrokenCrownSpec(n=5, k=5, hub_length=0)


def test_path_hub_shapes():
    single = build_path_hub(1)
    assert single.graph.order == 1
    assert single.start == single.finish == 1
    assert single.graph.arcs == frozenset()
    three = build_path_hub(3)
    assert three.graph.arcs == frozenset({(1, 2), (2, 3)})
    assert (three.start, three.finish) == (1, 3)
    with pytest.raises(InvalidParameter):
        build_path_hub(0)


def test_hub_spec_rejects_ambiguous_hamiltonian_paths():
    with pytest.raises(InvalidParameter):
        HubSpec(bidirected_ring(3), start=1, finish=3)
    with pytest.raises(InvalidParameter):
        HubSpec(DirectedGraph(2, {(1, 2)}), start=2, finish=1)  # wrong endpoints


def test_attach_hub_single_vertex_matches_builder():
    crown, att = build_crown(4)
    g = attach_hub(crown, att, build_path_hub(1))
    assert g == build_broken_crown(BrokenCrownSpec(n=4, k=4)).graph


def test_attach_hub_orientation_and_single_traversal():
    crown, att = build_crown(5)
    hub = build_path_hub(2)
    g = attach_hub(crown, att, hub)
    hr = hub_range(crown.order, hub)
    assert g.order == 17
    assert (hr.start, hr.finish) == (16, 17)
    for i in range(1, 6):
        assert g.has_arc(hr.finish, att.entry[i])  # incoming arcs leave the finish
        assert g.has_arc(att.exit[i], hr.start)  # outgoing arcs enter the start
    report = count_hc_directed(g, collect=True)
    assert report.count == 5
    for cycle in report.cycles:
        hub_positions = [p for p, v in enumerate(cycle) if v in (16, 17)]
        assert len(hub_positions) == 2
        p = hub_positions[0]
        assert cycle[p] == 16 and cycle[(p + 1) % len(cycle)] == 17


@pytest.mark.parametrize("m", [1, 2, 5])
def test_longer_hubs_keep_the_cycle_count(m):
    bc = build_broken_crown(BrokenCrownSpec(n=5, k=5, hub_length=m))
    assert bc.graph.order == 15 + m
    assert count_hc_directed(bc.graph).count == 5


def test_wheel_nine_counts():
    w9 = build_wheel(9)
    report = count_hc_undirected(w9, collect=True)
    assert report.count == 8
    for spoke in range(1, 9):
        using = sum(
            1
            for cycle in report.cycles
            for p, u in enumerate(cycle)
            if {u, cycle[(p + 1) % len(cycle)]} == {spoke, 9}
        )
        assert using == 2


def test_wheel_with_three_consecutive_spokes_has_two_cycles():
    w = build_wheel(9, kept_spokes={1, 2, 3})
    assert count_hc_undirected(w).count == 2


def test_wheel_validation():
    with pytest.raises(InvalidParameter):
        build_wheel(3)
    with pytest.raises(InvalidParameter):
        build_wheel(9, kept_spokes={9})  # the centre is not a rim vertex


@pytest.mark.parametrize("n", [5, 7, 9, 12])
def test_gp2_is_three_regular(n):
    g = build_gp2(n)
    assert g.order == 2 * n
    assert g.edge_count == 3 * n
    assert all(g.degree(v) == 3 for v in range(1, 2 * n + 1))


def test_gp2_known_count():
    assert count_hc_undirected(build_gp2(7)).count == 7
    with pytest.raises(InvalidParameter):
        build_gp2(4)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_every_label_subset_gives_exactly_k_cycles_exhaustive(n):
    from itertools import combinations

    for k in range(1, n + 1):
        for removed in combinations(range(1, n + 1), n - k):
            for policy in RemovalPolicy:
                bc = build_broken_crown(
                    BrokenCrownSpec(
                        n=n, k=k, policy=policy, removed_labels=frozenset(removed)
                    )
                )
                assert count_hc_directed(bc.graph).count == k, (n, k, removed, policy)


@pytest.mark.parametrize("n", [8, 9])
def test_label_subsets_sampled_for_larger_n(n):
    from itertools import combinations

    for k in range(1, n + 1):
        subsets = list(combinations(range(1, n + 1), n - k))
        stride = max(1, len(subsets) // 4)
        for removed in subsets[::stride]:
            for policy in RemovalPolicy:
                bc = build_broken_crown(
                    BrokenCrownSpec(
                        n=n, k=k, policy=policy, removed_labels=frozenset(removed)
                    )
                )
                assert count_hc_directed(bc.graph).count == k, (n, k, removed, policy)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_single_label_arc_removal_eliminates_exactly_that_cycle(n):
    bc = build_broken_crown(BrokenCrownSpec(n=n, k=n))
    full = count_hc_directed(bc.graph, collect=True)
    assert full.count == n
    for label in range(1, n + 1):
        for arc in (
            (bc.hub.finish, bc.attachment.entry[label]),
            (bc.attachment.exit[label], bc.hub.start),
        ):
            thinned = remove_arcs(bc.graph, {arc})
            report = count_hc_directed(thinned, collect=True)
            assert report.count == n - 1
            analysis = analyze_labels(report, bc.attachment, bc.hub)
            assert analysis.ok
            survivors = {i for i, _ in analysis.pairs}
            assert survivors == set(range(1, n + 1)) - {label}
