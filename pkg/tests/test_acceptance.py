"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.
"""

import json
import math
import random
import time
from contextlib import contextmanager

from heegaardtubes import (
    BridgeParams,
    Side,
    build_move_graph,
    canonical_pairing,
    chunk_decomposition,
    classify_side,
    compression_path,
    coverage_vector,
    enumerate_indices,
    enumerate_moves,
    even_feet_index,
    odd_feet_index,
    oracle_matching,
    replay_path,
    stable_genus_report,
    tunnel_system,
    weak_components,
)
from heegaardtubes.cli import main
from heegaardtubes.moves import corridor
from conftest import random_index


@contextmanager
def budget(label, seconds):
    started = time.monotonic()
    yield
    elapsed = time.monotonic() - started
    assert elapsed < seconds, f"{label} exceeded its {seconds} s budget ({elapsed:.2f} s)"
    print(f"ACCEPTANCE {label}: PASS ({elapsed:.2f} s, budget {seconds:.0f} s)")


def test_criterion_1_chunk_examples(capsys):
    with budget("1 chunk-examples", 1.0):
        code = main(["chunks", "--n", "7", "--index", "1,3,5,6,7,11,12"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0 and doc["sizes"] == [1, 1, 3, 2]

        code = main(["chunks", "--n", "3", "--index", "1,2,3"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0 and doc["sizes"] == [3]

        for n in range(3, 7):
            params = BridgeParams(n)
            for builder in (odd_feet_index, even_feet_index):
                surface = canonical_pairing(builder(n), params)
                assert [c.size for c in chunk_decomposition(surface)] == [1] * n


def test_criterion_2_counts():
    with budget("2 counts", 10.0):
        expected = {2: 6, 3: 20, 4: 70, 5: 252, 6: 924, 7: 3432, 8: 12870}
        for n, count in expected.items():
            indices = enumerate_indices(BridgeParams(n))
            assert len(indices) == count == math.comb(2 * n, n)
        for n in range(2, 6):
            params = BridgeParams(n)
            for index in enumerate_indices(params):
                system = tunnel_system(canonical_pairing(index, params))
                assert len(system.tunnels) == n - 1


def test_criterion_3_pairing_oracle_equivalence():
    with budget("3 pairing-oracle", 60.0):
        for n in range(2, 6):
            params = BridgeParams(n)
            for index in enumerate_indices(params):
                assert (
                    canonical_pairing(index, params).annuli
                    == oracle_matching(index, params).annuli
                )
        for n in range(6, 9):
            params = BridgeParams(n)
            rng = random.Random(1000 + n)
            for _ in range(500):
                index = random_index(rng, n)
                assert (
                    canonical_pairing(index, params).annuli
                    == oracle_matching(index, params).annuli
                )


def test_criterion_4_side_invariance_and_corridor_parity():
    with budget("4 side-invariance", 60.0):
        for n in range(2, 6):
            params = BridgeParams(n)
            modulus = params.punctures
            for index in enumerate_indices(params):
                surface = canonical_pairing(index, params)
                side = classify_side(surface)
                before = coverage_vector(surface)
                for move, target in enumerate_moves(surface):
                    first, count = corridor(surface, move.i, move.j)
                    assert count % 2 == 1, (index.members, move)
                    after_surface = canonical_pairing(target, params)
                    assert classify_side(after_surface) is side, (index.members, move)
                    after = coverage_vector(after_surface)
                    in_corridor = {(first - 1 + k) % modulus + 1 for k in range(count)}
                    for arc in range(1, modulus + 1):
                        expected = 2 if arc in in_corridor else 0
                        assert after[arc - 1] - before[arc - 1] == expected, (
                            index.members,
                            move,
                            arc,
                        )


def test_criterion_5_same_side_connectivity():
    with budget("5 connectivity", 120.0):
        expected = {2: 3, 3: 10, 4: 35, 5: 126}
        for n, half in expected.items():
            params = BridgeParams(n)
            graph = build_move_graph(params)
            components = weak_components(graph)
            side_classes = {Side.BELOW: set(), Side.ABOVE: set()}
            for vertex, side in zip(graph.vertices, graph.sides):
                side_classes[side].add(vertex)
            sizes = sorted(len(c) for c in components)
            assert len(components) == 2 and sizes == [half, half], (
                f"n={n}: {len(components)} components of sizes {sizes}; "
                f"components={[sorted(v.members for v in c)[:4] for c in components]}"
            )
            assert {frozenset(c) for c in components} == {
                frozenset(side_classes[Side.BELOW]),
                frozenset(side_classes[Side.ABOVE]),
            }, f"n={n}: components differ from side classes"


def test_criterion_6_tunnel_atlas_n3():
    with budget("6 tunnel-atlas", 1.0):
        params = BridgeParams(3)
        systems = []
        below = 0
        for index in enumerate_indices(params):
            surface = canonical_pairing(index, params)
            systems.append(tunnel_system(surface))
            if classify_side(surface) is Side.BELOW:
                below += 1
                for chunk in chunk_decomposition(surface):
                    assert chunk.defining.left % 2 == 1, index.members
        assert len(systems) == 20
        assert below == 10 and len(systems) - below == 10
        assert all(len(s.tunnels) == 2 for s in systems)


def test_criterion_7_bounds_table():
    with budget("7 bounds-table", 1.0):
        table = {
            (3, 7): (3, 20, 4, 3, True, False),
            (3, 12): (3, 20, 4, 5, True, True),
            (4, 9): (4, 70, 5, 4, True, False),
            (4, 16): (4, 70, 5, 7, True, True),
            (5, 11): (5, 252, 6, 5, True, False),
            (5, 20): (5, 252, 6, 9, True, True),
        }
        for (n, d), (genus, count, same, cross, gt2n, ge4n) in table.items():
            report = stable_genus_report(BridgeParams(n, d))
            assert report.heegaard_genus == genus
            assert report.surface_count_upper == count
            assert report.same_side_stable_genus_upper == same
            assert report.cross_side_stable_genus_lower == cross
            assert report.hypothesis_d_gt_2n is gt2n
            assert report.hypothesis_d_ge_4n is ge4n


def test_criterion_8_path_witnesses():
    with budget("8 path-witnesses", 30.0):
        params = BridgeParams(4)
        indices = enumerate_indices(params)
        by_side = {Side.BELOW: [], Side.ABOVE: []}
        for index in indices:
            by_side[classify_side(canonical_pairing(index, params))].append(index)

        rng = random.Random(8484)
        for _ in range(100):
            side = rng.choice((Side.BELOW, Side.ABOVE))
            start, end = rng.sample(by_side[side], 2)
            path = compression_path(params, start, end)
            assert path is not None, (start.members, end.members)
            assert replay_path(path, params) == end
        for _ in range(100):
            start = rng.choice(by_side[Side.BELOW])
            end = rng.choice(by_side[Side.ABOVE])
            assert compression_path(params, start, end) is None, (
                start.members,
                end.members,
            )
