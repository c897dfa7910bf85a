"""Annulus-compression moves, the move graph, and compression paths.

A move (i, j) names two tubes by their left feet and compresses the
surface along a connecting tube that runs along the knot from the right
foot of tube i to puncture j.  On the index it acts by replacing j with
r(i).  The move is admissible exactly when the two tubes sit side by
side (feet in cyclic order i, r(i), j, r(j)) and the corridor of arcs
between r(i) and j is disjoint-or-nested with every other tube's span.

Rejections carry one of three reason codes:

* ``corridor-wraps``  - tube j is nested inside tube i, so the corridor
  would have to wrap all the way around the circle past i;
* ``nested-endpoints`` - tube i is nested inside tube j;
* ``corridor-crossing`` - the corridor partially overlaps some third
  tube's span (the offending left foot is reported).

The directed graph of all moves over all indices for a fixed n splits,
undirectedly, into exactly two components - the below-side and
above-side families - a fact the test suites check rather than assume.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import cyclic
from .errors import (
    ExcludedMoveError,
    InternalConsistencyError,
    InvalidMoveError,
    InvalidParameterError,
    MoveRejectedError,
    ResourceLimitError,
)
from .surfaces import (
    BridgeParams,
    IndexSet,
    Side,
    TubedSurface,
    canonical_pairing,
    classify_side,
    enumerate_indices,
)

DEFAULT_GRAPH_CAP = 7

REASON_NESTED_ENDPOINTS = "nested-endpoints"
REASON_CORRIDOR_WRAPS = "corridor-wraps"
REASON_CORRIDOR_CROSSING = "corridor-crossing"

FORWARD = "forward"
REVERSE = "reverse"


@dataclass(frozen=True, order=True)
class Move:
    """An ordered pair of left feet naming a compression."""

    i: int
    j: int


@dataclass(frozen=True)
class MoveCheck:
    """Validity verdict with a reason code on rejection."""

    valid: bool
    reason: str | None = None
    crossing_annulus: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def corridor(surface: TubedSurface, i: int, j: int) -> tuple[int, int]:
    """(first arc, arc count) of the corridor from r(i) forward to j."""
    modulus = surface.params.punctures
    first = surface.right_foot(i)
    return first, cyclic.forward_distance(first, j, modulus)


def move_valid(surface: TubedSurface, i: int, j: int) -> MoveCheck:
    """Check admissibility of the move (i, j) on the surface.

    Raises for malformed moves (i = j, or a non-left-foot label); returns
    a falsy MoveCheck with a reason code for well-formed but inadmissible
    ones.
    """
    if i == j:
        raise ExcludedMoveError(
            f"move ({i},{j}) is excluded: compressing a tube against itself disconnects the surface"
        )
    for label in (i, j):
        if label not in surface.index:
            raise InvalidMoveError(
                f"{label} is not a left foot of index {surface.index.members}"
            )
    modulus = surface.params.punctures
    tube_i = surface.annulus_at(i)
    tube_j = surface.annulus_at(j)
    if cyclic.interval_contains(i, tube_i.length, j, modulus):
        # tube j opens inside tube i's span, so the corridor from r(i)
        # would have to pass puncture i to reach j
        return MoveCheck(False, REASON_CORRIDOR_WRAPS)
    if cyclic.interval_contains(j, tube_j.length, i, modulus):
        return MoveCheck(False, REASON_NESTED_ENDPOINTS)
    first, count = corridor(surface, i, j)
    for other in surface.annuli:
        if other.left in (i, j):
            continue
        if not cyclic.intervals_laminar(first, count, other.left, other.length, modulus):
            return MoveCheck(False, REASON_CORRIDOR_CROSSING, crossing_annulus=other.left)
    return MoveCheck(True)


def apply_move(surface: TubedSurface, i: int, j: int) -> IndexSet:
    """The index after compressing along (i, j): j is replaced by r(i)."""
    check = move_valid(surface, i, j)
    if not check:
        raise MoveRejectedError(check.reason, check.crossing_annulus)
    return surface.index.replace(j, surface.right_foot(i))


def enumerate_moves(surface: TubedSurface) -> list[tuple[Move, IndexSet]]:
    """All admissible ordered moves with their resulting indices,
    lexicographic in (i, j)."""
    results = []
    for i in surface.index:
        for j in surface.index:
            if i == j:
                continue
            if move_valid(surface, i, j):
                results.append((Move(i, j), surface.index.replace(j, surface.right_foot(i))))
    return results


@dataclass(frozen=True, order=True)
class MoveEdge:
    source: IndexSet
    move: Move
    target: IndexSet


@dataclass(frozen=True)
class MoveGraph:
    """All indices for one bridge number with every admissible move."""

    n: int
    vertices: tuple[IndexSet, ...]
    sides: tuple[Side, ...]
    edges: tuple[MoveEdge, ...]

    def side_of(self, vertex: IndexSet) -> Side:
        return self.sides[self.vertices.index(vertex)]


def build_move_graph(params: BridgeParams, graph_cap: int = DEFAULT_GRAPH_CAP) -> MoveGraph:
    """Materialize the move graph, verifying every edge preserves the side."""
    if params.n > graph_cap:
        raise ResourceLimitError(
            f"move graph capped at n <= {graph_cap}; n = {params.n} means "
            f"{2 * params.n} choose {params.n} vertices"
        )
    vertices = tuple(enumerate_indices(params))
    sides = []
    edges = []
    side_by_index: dict[IndexSet, Side] = {}
    surfaces: dict[IndexSet, TubedSurface] = {}
    for vertex in vertices:
        surfaces[vertex] = canonical_pairing(vertex, params)
        side_by_index[vertex] = classify_side(surfaces[vertex])
        sides.append(side_by_index[vertex])
    for vertex in vertices:
        for move, target in enumerate_moves(surfaces[vertex]):
            if side_by_index[target] is not side_by_index[vertex]:
                raise InternalConsistencyError(
                    f"move {move} on {vertex.members} changed the knot's side"
                )
            edges.append(MoveEdge(vertex, move, target))
    edges.sort(key=lambda e: (e.source, e.move))
    return MoveGraph(params.n, vertices, tuple(sides), tuple(edges))


def _undirected_adjacency(graph: MoveGraph) -> dict[IndexSet, list[tuple]]:
    """Per-vertex traversal lists, sorted for deterministic search order.

    Each entry is (neighbor, direction rank, i, j, edge); forward edges
    sort before reversed ones at equal neighbors.
    """
    adjacency: dict[IndexSet, list[tuple]] = {v: [] for v in graph.vertices}
    for edge in graph.edges:
        adjacency[edge.source].append((edge.target, 0, edge.move.i, edge.move.j, edge))
        adjacency[edge.target].append((edge.source, 1, edge.move.i, edge.move.j, edge))
    for entries in adjacency.values():
        entries.sort(key=lambda item: item[:4])
    return adjacency


def weak_components(graph: MoveGraph) -> list[tuple[IndexSet, ...]]:
    """Connected components of the underlying undirected graph, each
    sorted, listed by smallest member."""
    adjacency = _undirected_adjacency(graph)
    seen: set[IndexSet] = set()
    components = []
    for root in graph.vertices:
        if root in seen:
            continue
        queue = deque([root])
        seen.add(root)
        component = []
        while queue:
            vertex = queue.popleft()
            component.append(vertex)
            for neighbor, *_ in adjacency[vertex]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
        components.append(tuple(sorted(component)))
    components.sort(key=lambda c: c[0])
    return components


@dataclass(frozen=True)
class PathStep:
    """One traversal step: a move, walked with or against its direction."""

    move: Move
    direction: str
    source: IndexSet
    target: IndexSet


@dataclass(frozen=True)
class CompressionPath:
    start: IndexSet
    end: IndexSet
    steps: tuple[PathStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


def compression_path(
    params: BridgeParams,
    start: IndexSet,
    end: IndexSet,
    graph_cap: int = DEFAULT_GRAPH_CAP,
) -> CompressionPath | None:
    """Shortest undirected move path from start to end, or None.

    BFS expands lexicographically smallest neighbors first, so equal
    inputs always yield the same witness.  A returned path certifies
    that the two surfaces share a common stabilization one genus up;
    None means the two indices lie in different components (in practice:
    on opposite sides of the knot).
    """
    for index in (start, end):
        if index.n != params.n:
            raise InvalidParameterError(
                f"index {index.members} does not match bridge number {params.n}"
            )
    graph = build_move_graph(params, graph_cap=graph_cap)
    if start == end:
        return CompressionPath(start, end, ())
    adjacency = _undirected_adjacency(graph)
    parents: dict[IndexSet, PathStep] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        vertex = queue.popleft()
        for neighbor, rank, _i, _j, edge in adjacency[vertex]:
            if neighbor in seen:
                continue
            seen.add(neighbor)
            direction = FORWARD if rank == 0 else REVERSE
            parents[neighbor] = PathStep(edge.move, direction, vertex, neighbor)
            if neighbor == end:
                steps = []
                cursor = end
                while cursor != start:
                    step = parents[cursor]
                    steps.append(step)
                    cursor = step.source
                return CompressionPath(start, end, tuple(reversed(steps)))
            queue.append(neighbor)
    return None


def invert_move(index: IndexSet, move: Move, params: BridgeParams) -> IndexSet:
    """The unique source index from which ``move`` produces ``index``.

    After the move, puncture j is the right foot of the tube that starts
    at the old r(i); swapping that left foot back out for j undoes the
    compression.
    """
    surface = canonical_pairing(index, params)
    if move.j in index:
        raise InvalidParameterError(
            f"cannot invert ({move.i},{move.j}) at {index.members}: {move.j} is still a left foot"
        )
    closing = [a.left for a in surface.annuli if a.right == move.j]
    if len(closing) != 1:
        raise InternalConsistencyError(
            f"expected exactly one tube closing at {move.j} in {index.members}"
        )
    return index.replace(closing[0], move.j)


def replay_path(path: CompressionPath, params: BridgeParams) -> IndexSet:
    """Re-run a path from its start; the result must equal ``path.end``."""
    current = path.start
    for step in path.steps:
        if step.source != current:
            raise InvalidParameterError(
                f"step {step} does not continue from {current.members}"
            )
        if step.direction == FORWARD:
            current = apply_move(canonical_pairing(current, params), step.move.i, step.move.j)
        else:
            previous = invert_move(current, step.move, params)
            forward = apply_move(canonical_pairing(previous, params), step.move.i, step.move.j)
            if forward != current:
                raise InternalConsistencyError(
                    f"inverting {step.move} at {current.members} is not consistent"
                )
            current = previous
        if current != step.target:
            raise InternalConsistencyError(f"step {step} did not land on its target")
    return current


_SIDE_COLORS = {Side.BELOW: "lightblue", Side.ABOVE: "lightsalmon"}


def graph_to_dot(graph: MoveGraph) -> str:
    """Deterministic DOT text: vertices labelled by index, colored by side."""
    lines = ["digraph moves {"]
    lines.append("  node [style=filled];")
    for vertex, side in zip(graph.vertices, graph.sides):
        label = ",".join(str(m) for m in vertex.members)
        lines.append(f'  "{label}" [fillcolor={_SIDE_COLORS[side]}];')
    for edge in graph.edges:
        source = ",".join(str(m) for m in edge.source.members)
        target = ",".join(str(m) for m in edge.target.members)
        lines.append(f'  "{source}" -> "{target}" [label="{edge.move.i},{edge.move.j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_edge_list(graph: MoveGraph) -> dict:
    """The structured edge-list record: {"n": ..., "edges": [...]}."""
    return {
        "n": graph.n,
        "edges": [
            {
                "from": list(edge.source.members),
                "i": edge.move.i,
                "j": edge.move.j,
                "to": list(edge.target.members),
            }
            for edge in graph.edges
        ],
    }


def path_record(path: CompressionPath) -> dict:
    """Ordered step list with direction flags, for export."""
    return {
        "start": list(path.start.members),
        "end": list(path.end.members),
        "length": len(path.steps),
        "steps": [
            {
                "from": list(step.source.members),
                "i": step.move.i,
                "j": step.move.j,
                "direction": step.direction,
                "to": list(step.target.members),
            }
            for step in path.steps
        ],
    }
