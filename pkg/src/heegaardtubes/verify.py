"""Cross-module invariant suites behind the ``verify`` subcommand.

Runs, for every bridge number up to a requested maximum: the pairing
oracle equivalence, coverage-vector step and parity invariants, move
side-invariance with the exact coverage delta, corridor parity,
component structure of the move graph against the side classes, tunnel
counting identities, defining-tube directions, and a fixed battery of
worked examples.  Exhaustive for n <= 5, seeded random samples beyond.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import cyclic
from . import moves as moves_mod
from . import tunnels as tunnels_mod
from .bounds import stable_genus_report
from .errors import InvalidParameterError, VerificationError
from .surfaces import (
    BridgeParams,
    DEFAULT_ORACLE_CAP,
    IndexSet,
    Side,
    TubedSurface,
    canonical_pairing,
    chunk_decomposition,
    classify_side,
    coverage_vector,
    enumerate_indices,
    even_feet_index,
    odd_feet_index,
    oracle_matching,
    stabilization_schedule,
)

EXHAUSTIVE_MAX = 5
SAMPLE_SIZE = 500
_SEED_BASE = 52_0301


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _sample_indices(n: int, count: int) -> list[IndexSet]:
    rng = random.Random(_SEED_BASE + n)
    seen = set()
    out = []
    while len(out) < count:
        members = tuple(sorted(rng.sample(range(1, 2 * n + 1), n)))
        if members not in seen:
            seen.add(members)
            out.append(IndexSet(members))
    return out


def _indices_for(params: BridgeParams, sample_size: int) -> tuple[list[IndexSet], str]:
    if params.n <= EXHAUSTIVE_MAX:
        return enumerate_indices(params), "exhaustive"
    return _sample_indices(params.n, sample_size), f"{sample_size} sampled"


def check_pairing_oracle(params: BridgeParams, oracle_cap: int, sample_size: int) -> CheckResult:
    name = f"pairing-oracle n={params.n}"
    if params.n > oracle_cap:
        return CheckResult(name, True, f"skipped (n beyond oracle cap {oracle_cap})")
    indices, how = _indices_for(params, sample_size)
    for index in indices:
        fast = canonical_pairing(index, params)
        brute = oracle_matching(index, params, oracle_cap=oracle_cap)
        if fast.annuli != brute.annuli:
            return CheckResult(
                name, False, f"pairings disagree at index {index.members}"
            )
    return CheckResult(name, True, f"{len(indices)} indices, {how}")


def check_coverage(params: BridgeParams, sample_size: int) -> CheckResult:
    name = f"coverage-invariants n={params.n}"
    indices, how = _indices_for(params, sample_size)
    modulus = params.punctures
    for index in indices:
        surface = canonical_pairing(index, params)
        p = coverage_vector(surface)
        for arc in range(modulus):
            following = (arc + 1) % modulus
            step = p[following] - p[arc]
            expected = 1 if (following + 1) in index else -1
            if step != expected:
                return CheckResult(
                    name,
                    False,
                    f"index {index.members}: coverage step at arc {arc + 1} is "
                    f"{step}, expected {expected}",
                )
            if p[arc] % 2 != (p[0] + arc) % 2:
                return CheckResult(
                    name, False, f"index {index.members}: parity breaks at arc {arc + 1}"
                )
        rounds = stabilization_schedule(surface)
        rebuilt = sorted(pair for r in rounds for pair in r.attachments)
        if rebuilt != [a.feet() for a in surface.annuli]:
            return CheckResult(
                name, False, f"index {index.members}: schedule does not rebuild pairing"
            )
    return CheckResult(name, True, f"{len(indices)} indices, {how}")


def _move_violation(surface: TubedSurface) -> str | None:
    params = surface.params
    modulus = params.punctures
    before = coverage_vector(surface)
    side = classify_side(surface)
    for move, target in moves_mod.enumerate_moves(surface):
        first, count = moves_mod.corridor(surface, move.i, move.j)
        if count % 2 == 0:
            return f"corridor of {move} on {surface.index.members} has even length {count}"
        expected_target = surface.index.replace(move.j, surface.right_foot(move.i))
        if target != expected_target:
            return f"{move} on {surface.index.members} produced {target.members}"
        after_surface = canonical_pairing(target, params)
        if classify_side(after_surface) is not side:
            return f"{move} on {surface.index.members} changed the side"
        after = coverage_vector(after_surface)
        for arc in range(1, modulus + 1):
            delta = after[arc - 1] - before[arc - 1]
            expected = 2 if cyclic.interval_contains(first, count, arc, modulus) else 0
            if delta != expected:
                return (
                    f"{move} on {surface.index.members}: coverage delta {delta} at arc "
                    f"{arc}, expected {expected}"
                )
    return None


def check_moves(params: BridgeParams, sample_size: int) -> CheckResult:
    name = f"move-invariants n={params.n}"
    indices, how = _indices_for(params, sample_size)
    total_moves = 0
    for index in indices:
        surface = canonical_pairing(index, params)
        violation = _move_violation(surface)
        if violation:
            return CheckResult(name, False, violation)
        total_moves += len(moves_mod.enumerate_moves(surface))
    return CheckResult(name, True, f"{len(indices)} indices ({how}), {total_moves} moves")


def check_components(params: BridgeParams, graph_cap: int) -> CheckResult:
    name = f"components n={params.n}"
    if params.n > graph_cap:
        return CheckResult(name, True, f"skipped (n beyond graph cap {graph_cap})")
    graph = moves_mod.build_move_graph(params, graph_cap=graph_cap)
    components = moves_mod.weak_components(graph)
    side_classes = {Side.BELOW: set(), Side.ABOVE: set()}
    for vertex, side in zip(graph.vertices, graph.sides):
        side_classes[side].add(vertex)
    if len(components) != 2:
        return CheckResult(
            name,
            False,
            f"{len(components)} weak components, expected 2; "
            f"sizes {[len(c) for c in components]}",
        )
    component_sets = [set(c) for c in components]
    if {frozenset(s) for s in component_sets} != {
        frozenset(side_classes[Side.BELOW]),
        frozenset(side_classes[Side.ABOVE]),
    }:
        return CheckResult(name, False, "components do not coincide with the side classes")
    sizes = tuple(sorted(len(c) for c in components))
    return CheckResult(name, True, f"two components of sizes {sizes}")


def check_tunnels(params: BridgeParams, sample_size: int) -> CheckResult:
    name = f"tunnel-invariants n={params.n}"
    indices, how = _indices_for(params, sample_size)
    modulus = params.punctures
    for index in indices:
        surface = canonical_pairing(index, params)
        chunks = chunk_decomposition(surface)
        system = tunnels_mod.tunnel_system(surface)
        if len(system.tunnels) != params.n - 1:
            return CheckResult(
                name, False, f"index {index.members}: {len(system.tunnels)} tunnels"
            )
        identity = sum(c.size - 1 for c in chunks) + len(chunks) - 1
        if identity != params.n - 1:
            return CheckResult(
                name, False, f"index {index.members}: count identity gives {identity}"
            )
        for chunk in chunks:
            direction = tunnels_mod.annulus_direction(surface, chunk.defining)
            if direction is not tunnels_mod.Direction.UP:
                return CheckResult(
                    name,
                    False,
                    f"index {index.members}: defining tube {chunk.defining.feet()} goes down",
                )
        for tunnel in system.tunnels:
            anchor = cyclic.wrap(tunnel.chunk_defining_foot - 1, modulus)
            if tunnel.kind is tunnels_mod.TunnelKind.CHUNK_CONNECTOR:
                expected = (anchor, surface.right_foot(tunnel.chunk_defining_foot))
            else:
                expected = (anchor, anchor)
            if tunnel.endpoints != expected:
                return CheckResult(
                    name,
                    False,
                    f"index {index.members}: tunnel endpoints {tunnel.endpoints}, "
                    f"expected {expected}",
                )
    return CheckResult(name, True, f"{len(indices)} indices, {how}")


def check_worked_examples() -> CheckResult:
    """The fixed examples quoted throughout the interface docs."""
    name = "worked-examples"
    failures = []

    params7 = BridgeParams(7)
    surface7 = canonical_pairing(IndexSet((1, 3, 5, 6, 7, 11, 12)), params7)
    sizes7 = [c.size for c in chunk_decomposition(surface7)]
    if sizes7 != [1, 1, 3, 2]:
        failures.append(f"7-bridge chunk sizes {sizes7}")

    params3 = BridgeParams(3)
    surface123 = canonical_pairing(IndexSet((1, 2, 3)), params3)
    if [c.size for c in chunk_decomposition(surface123)] != [3]:
        failures.append("index (1,2,3) should be a single chunk of size 3")

    for n in range(3, 7):
        p = BridgeParams(n)
        for builder in (odd_feet_index, even_feet_index):
            chunks = chunk_decomposition(canonical_pairing(builder(n), p))
            if [c.size for c in chunks] != [1] * n:
                failures.append(f"{builder.__name__}({n}) chunks are not n singletons")

    total, below, above = tunnels_mod.count_tunnel_systems(params3)
    if (total, below, above) != (20, 10, 10):
        failures.append(f"3-bridge tunnel counts {(total, below, above)}")

    report = stable_genus_report(BridgeParams(3, 12))
    if report.cross_side_stable_genus_lower != 5 or not report.hypothesis_d_ge_4n:
        failures.append("(n=3, d=12) report incorrect")

    if classify_side(canonical_pairing(odd_feet_index(4), BridgeParams(4))) is not Side.BELOW:
        failures.append("odd-feet index should put the knot below")
    if classify_side(canonical_pairing(even_feet_index(4), BridgeParams(4))) is not Side.ABOVE:
        failures.append("even-feet index should put the knot above")

    if failures:
        return CheckResult(name, False, "; ".join(failures))
    return CheckResult(name, True, "7 fixed example families")


def run_verification(
    n_max: int,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    graph_cap: int = moves_mod.DEFAULT_GRAPH_CAP,
    sample_size: int = SAMPLE_SIZE,
) -> list[CheckResult]:
    """Every check for every n in 2..n_max, plus the fixed examples."""
    if n_max < 2:
        raise InvalidParameterError(f"n_max must be >= 2, got {n_max}")
    results = []
    for n in range(2, n_max + 1):
        params = BridgeParams(n)
        results.append(check_pairing_oracle(params, oracle_cap, sample_size))
        results.append(check_coverage(params, sample_size))
        results.append(check_moves(params, sample_size))
        results.append(check_components(params, graph_cap))
        results.append(check_tunnels(params, sample_size))
    results.append(check_worked_examples())
    return results


def ensure_all_passed(results: list[CheckResult]) -> None:
    failed = [r for r in results if not r.passed]
    if failed:
        summary = "; ".join(f"{r.name}: {r.detail}" for r in failed)
        raise VerificationError(f"{len(failed)} checks failed: {summary}")
