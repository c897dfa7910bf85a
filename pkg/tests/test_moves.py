"""Move validity, application, the move graph, components, and paths."""

import pytest
from hypothesis import given, settings

from heegaardtubes import (
    BridgeParams,
    IndexSet,
    apply_move,
    build_move_graph,
    canonical_pairing,
    classify_side,
    compression_path,
    coverage_vector,
    enumerate_indices,
    enumerate_moves,
    graph_edge_list,
    graph_to_dot,
    invert_move,
    move_valid,
    replay_path,
    weak_components,
)
from heegaardtubes.errors import (
    ExcludedMoveError,
    InvalidMoveError,
    MoveRejectedError,
    ResourceLimitError,
)
from heegaardtubes.moves import (
    Move,
    REASON_CORRIDOR_CROSSING,
    REASON_CORRIDOR_WRAPS,
    REASON_NESTED_ENDPOINTS,
    corridor,
)
from heegaardtubes.surfaces import Side
from conftest import indexed_params


def surface(members, n):
    return canonical_pairing(IndexSet(tuple(members)), BridgeParams(n))


# ------------------------------------------------------------- validity

def test_valid_move_with_short_corridor():
    s = surface((1, 3), 2)
    check = move_valid(s, 1, 3)
    assert check
    assert corridor(s, 1, 3) == (2, 1)


def test_nested_tubes_reject_both_orders():
    s = surface((1, 2), 2)
    # tube 2 sits inside tube 1: the corridor from r(1)=4 to 2 wraps past 1
    check = move_valid(s, 1, 2)
    assert not check and check.reason == REASON_CORRIDOR_WRAPS
    # and with roles swapped the moving tube is the nested one
    check = move_valid(s, 2, 1)
    assert not check and check.reason == REASON_NESTED_ENDPOINTS


def test_wrapping_corridor_with_bystander_tube():
    s = surface((1, 2, 5), 3)
    check = move_valid(s, 1, 2)
    assert not check and check.reason == REASON_CORRIDOR_WRAPS


def test_corridor_crossing_reports_offender():
    # pairing of (1,3,4) is (1,2), (3,6), (4,5); the corridor of (1,4)
    # covers arcs 2,3 and cuts into the span {3,4,5} of tube 3
    s = surface((1, 3, 4), 3)
    check = move_valid(s, 1, 4)
    assert not check
    assert check.reason == REASON_CORRIDOR_CROSSING
    assert check.crossing_annulus == 3


def test_malformed_moves_raise():
    s = surface((1, 3), 2)
    with pytest.raises(ExcludedMoveError):
        move_valid(s, 1, 1)
    with pytest.raises(InvalidMoveError):
        move_valid(s, 2, 3)
    with pytest.raises(InvalidMoveError):
        move_valid(s, 1, 4)


# ---------------------------------------------------------------- apply

def test_apply_worked_examples():
    assert apply_move(surface((1, 3), 2), 1, 3).members == (1, 2)
    assert apply_move(surface((1, 3), 2), 3, 1).members == (3, 4)
    assert apply_move(surface((2, 4, 6), 3), 2, 4).members == (2, 3, 6)


def test_apply_rejected_carries_reason():
    with pytest.raises(MoveRejectedError) as err:
        apply_move(surface((1, 2), 2), 1, 2)
    assert err.value.reason == REASON_CORRIDOR_WRAPS


def test_enumerate_moves_worked_examples():
    assert [(m.i, m.j, t.members) for m, t in enumerate_moves(surface((1, 3), 2))] == [
        (1, 3, (1, 2)),
        (3, 1, (3, 4)),
    ]
    assert enumerate_moves(surface((1, 2), 2)) == []
    assert len(enumerate_moves(surface((2, 4, 6), 3))) == 6


# ---------------------------------------------------------------- graph

def test_move_graph_n2_exact():
    graph = build_move_graph(BridgeParams(2))
    assert len(graph.vertices) == 6
    edges = [(e.source.members, (e.move.i, e.move.j), e.target.members) for e in graph.edges]
    assert edges == [
        ((1, 3), (1, 3), (1, 2)),
        ((1, 3), (3, 1), (3, 4)),
        ((2, 4), (2, 4), (2, 3)),
        ((2, 4), (4, 2), (1, 4)),
    ]


def test_move_graph_edges_stay_on_one_side():
    graph = build_move_graph(BridgeParams(3))
    assert len(graph.vertices) == 20
    side = {v: s for v, s in zip(graph.vertices, graph.sides)}
    for edge in graph.edges:
        assert side[edge.source] is side[edge.target]


def test_graph_cap():
    with pytest.raises(ResourceLimitError):
        build_move_graph(BridgeParams(8))
    with pytest.raises(ResourceLimitError):
        build_move_graph(BridgeParams(4), graph_cap=3)


def test_out_degree_bound():
    params = BridgeParams(4)
    for index in enumerate_indices(params):
        moves = enumerate_moves(canonical_pairing(index, params))
        assert len(moves) <= params.n * (params.n - 1)


# ----------------------------------------------------------- components

def test_components_n2_exact():
    graph = build_move_graph(BridgeParams(2))
    components = weak_components(graph)
    assert [[v.members for v in c] for c in components] == [
        [(1, 2), (1, 3), (3, 4)],
        [(1, 4), (2, 3), (2, 4)],
    ]


@pytest.mark.parametrize("n,half", [(2, 3), (3, 10), (4, 35)])
def test_components_are_the_side_classes(n, half):
    params = BridgeParams(n)
    graph = build_move_graph(params)
    components = weak_components(graph)
    assert sorted(len(c) for c in components) == [half, half]
    # independent cross-check: count sides directly
    below = {
        index.members
        for index in enumerate_indices(params)
        if classify_side(canonical_pairing(index, params)) is Side.BELOW
    }
    assert {frozenset(v.members for v in c) for c in components} == {
        frozenset(below),
        frozenset(i.members for i in enumerate_indices(params)) - frozenset(below),
    }


# --------------------------------------------------------------- paths

def test_path_worked_examples():
    params = BridgeParams(2)
    path = compression_path(params, IndexSet((1, 2)), IndexSet((3, 4)))
    assert len(path.steps) == 2
    assert [s.direction for s in path.steps] == ["reverse", "forward"]
    assert path.steps[0].target.members == (1, 3)
    assert replay_path(path, params) == IndexSet((3, 4))

    identity = compression_path(params, IndexSet((1, 3)), IndexSet((1, 3)))
    assert identity.steps == ()
    assert replay_path(identity, params) == IndexSet((1, 3))

    assert compression_path(params, IndexSet((1, 3)), IndexSet((2, 4))) is None


def test_paths_are_deterministic_and_replayable(rng):
    params = BridgeParams(4)
    indices = enumerate_indices(params)
    sides = {
        i: classify_side(canonical_pairing(i, params)) for i in indices
    }
    for _ in range(25):
        start, end = rng.sample(indices, 2)
        first = compression_path(params, start, end)
        again = compression_path(params, start, end)
        assert (first is None) == (again is None)
        if first is None:
            assert sides[start] is not sides[end]
        else:
            assert first.steps == again.steps
            assert replay_path(first, params) == end


def test_invert_move_round_trip():
    params = BridgeParams(3)
    for index in enumerate_indices(params):
        s = canonical_pairing(index, params)
        for move, target in enumerate_moves(s):
            assert invert_move(target, move, params) == index


# ------------------------------------------------------------ invariants

@pytest.mark.parametrize("n", [2, 3, 4])
def test_side_invariance_and_coverage_delta_exhaustive(n):
    params = BridgeParams(n)
    modulus = params.punctures
    for index in enumerate_indices(params):
        s = canonical_pairing(index, params)
        before = coverage_vector(s)
        side = classify_side(s)
        for move, target in enumerate_moves(s):
            first, count = corridor(s, move.i, move.j)
            assert count % 2 == 1
            assert target == index.replace(move.j, s.right_foot(move.i))
            after_surface = canonical_pairing(target, params)
            assert classify_side(after_surface) is side
            after = coverage_vector(after_surface)
            corridor_arcs = {(first - 1 + k) % modulus + 1 for k in range(count)}
            for arc in range(1, modulus + 1):
                expected = 2 if arc in corridor_arcs else 0
                assert after[arc - 1] - before[arc - 1] == expected


@settings(max_examples=60, deadline=None)
@given(indexed_params(min_n=5, max_n=7))
def test_side_invariance_sampled(pair):
    index, params = pair
    s = canonical_pairing(index, params)
    side = classify_side(s)
    for move, target in enumerate_moves(s):
        assert classify_side(canonical_pairing(target, params)) is side


# -------------------------------------------------------------- exports

def test_dot_export_golden_n2():
    dot = graph_to_dot(build_move_graph(BridgeParams(2)))
    assert dot == (
        "digraph moves {\n"
        "  node [style=filled];\n"
        '  "1,2" [fillcolor=lightblue];\n'
        '  "1,3" [fillcolor=lightblue];\n'
        '  "1,4" [fillcolor=lightsalmon];\n'
        '  "2,3" [fillcolor=lightsalmon];\n'
        '  "2,4" [fillcolor=lightsalmon];\n'
        '  "3,4" [fillcolor=lightblue];\n'
        '  "1,3" -> "1,2" [label="1,3"];\n'
        '  "1,3" -> "3,4" [label="3,1"];\n'
        '  "2,4" -> "2,3" [label="2,4"];\n'
        '  "2,4" -> "1,4" [label="4,2"];\n'
        "}\n"
    )


def test_edge_list_export_n2():
    record = graph_edge_list(build_move_graph(BridgeParams(2)))
    assert record == {
        "n": 2,
        "edges": [
            {"from": [1, 3], "i": 1, "j": 3, "to": [1, 2]},
            {"from": [1, 3], "i": 3, "j": 1, "to": [3, 4]},
            {"from": [2, 4], "i": 2, "j": 4, "to": [2, 3]},
            {"from": [2, 4], "i": 4, "j": 2, "to": [1, 4]},
        ],
    }


def test_move_ordering():
    assert Move(1, 3) < Move(1, 4) < Move(3, 1)
