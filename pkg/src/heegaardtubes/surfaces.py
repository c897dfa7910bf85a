"""Combinatorial model of tubed Heegaard surfaces over a bridge sphere.

A knot in n-bridge position meets its bridge sphere in 2n punctures,
labelled 1..2n along the knot's orientation; bridge arc m joins puncture
m to puncture m+1 (cyclically).  A tubed surface replaces the puncture
disks with n disjoint tubes, each running along the knot from its *left
foot* to its *right foot*.  The n-element set of left feet (the *index*)
determines everything else: the tubes' stretches along the knot must be
pairwise disjoint or nested, and reading left feet as opening and right
feet as closing parentheses around the circle leaves exactly one such
matching.  ``canonical_pairing`` computes it by attaching tubes in
rounds of increasing odd length; ``oracle_matching`` recovers it
independently by brute force over all bijections and checks uniqueness.

Derived data: the coverage vector (tubes over each arc), the side of the
knot (parity of coverage over arc 1), the chunk decomposition (maximal
tubes plus everything nested under them), and the (genus, bridge count)
bookkeeping of meridional stabilization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import cyclic
from ._kernels import noncrossing_survivors
from .errors import (
    InternalConsistencyError,
    InvalidOperationError,
    InvalidParameterError,
    OracleViolationError,
    ResourceLimitError,
)

DEFAULT_ORACLE_CAP = 8


@dataclass(frozen=True, order=True)
class BridgeParams:
    """Bridge number n (>= 2) and, optionally, the bridge distance d.

    The distance is an input parameter (a curve-complex path length),
    never computed here; it only feeds hypothesis flags and bounds.
    """

    n: int
    d: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 2:
            raise InvalidParameterError(f"bridge number must be an integer >= 2, got {self.n!r}")
        if self.d is not None:
            if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 0:
                raise InvalidParameterError(
                    f"bridge distance must be a nonnegative integer or None, got {self.d!r}"
                )

    @property
    def punctures(self) -> int:
        """Number of punctures on the bridge sphere (2n)."""
        return 2 * self.n

    @property
    def distance_exceeds_2n(self) -> bool:
        return self.d is not None and self.d > 2 * self.n

    @property
    def distance_at_least_4n(self) -> bool:
        return self.d is not None and self.d >= 4 * self.n


@dataclass(frozen=True, order=True)
class IndexSet:
    """The set of left-foot punctures, stored as a sorted tuple.

    Self-validating: the bridge number is ``len(members)`` and every
    member must lie in 1..2n.
    """

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = self.members
        if not isinstance(members, tuple) or len(members) < 2:
            raise InvalidParameterError(f"index needs a tuple of >= 2 left feet, got {members!r}")
        modulus = 2 * len(members)
        previous = 0
        for value in members:
            cyclic.check_label(value, modulus, "left foot")
            if value <= previous:
                raise InvalidParameterError(
                    f"index members must be strictly ascending, got {members!r}"
                )
            previous = value

    @classmethod
    def from_iterable(cls, values) -> "IndexSet":
        members = tuple(sorted(values))
        if len(set(members)) != len(members):
            raise InvalidParameterError(f"index members must be distinct, got {values!r}")
        return cls(members)

    @property
    def n(self) -> int:
        return len(self.members)

    def __contains__(self, value: int) -> bool:
        return value in self.members

    def __iter__(self):
        return iter(self.members)

    def complement(self) -> tuple[int, ...]:
        """The right-foot punctures, ascending."""
        present = set(self.members)
        return tuple(v for v in range(1, 2 * self.n + 1) if v not in present)

    def replace(self, old: int, new: int) -> "IndexSet":
        """The index with ``old`` swapped out for ``new`` (the move action)."""
        if old not in self.members:
            raise InvalidParameterError(f"{old} is not a member of {self.members}")
        if new in self.members:
            raise InvalidParameterError(f"{new} is already a member of {self.members}")
        return IndexSet(tuple(sorted([new] + [m for m in self.members if m != old])))


@dataclass(frozen=True, order=True)
class Annulus:
    """A tube with feet at two punctures, spanning the arcs between them.

    The span runs forward (along the knot orientation) from the left
    foot to the arc just before the right foot; its arc count is the
    tube's length, always odd in a valid surface.
    """

    left: int
    right: int
    punctures: int

    def __post_init__(self) -> None:
        if self.punctures < 4 or self.punctures % 2:
            raise InvalidParameterError(f"puncture count must be an even integer >= 4, got {self.punctures}")
        cyclic.check_label(self.left, self.punctures, "left foot")
        cyclic.check_label(self.right, self.punctures, "right foot")
        if self.length % 2 == 0:
            raise InvalidParameterError(
                f"tube ({self.left},{self.right}) has even length {self.length}; "
                "feet of one tube must have odd separation"
            )

    @property
    def length(self) -> int:
        return cyclic.forward_distance(self.left, self.right, self.punctures)

    @property
    def span(self) -> tuple[int, ...]:
        """Arc labels covered by this tube, in forward order."""
        return cyclic.interval_arcs(self.left, self.length, self.punctures)

    def covers(self, arc: int) -> bool:
        return cyclic.interval_contains(self.left, self.length, arc, self.punctures)

    def contains_span(self, other: "Annulus") -> bool:
        return cyclic.interval_contains_interval(
            self.left, self.length, other.left, other.length, self.punctures
        )

    def feet(self) -> tuple[int, int]:
        return (self.left, self.right)


class Side(Enum):
    """Which side of the surface the knot ends up on."""

    BELOW = "below"
    ABOVE = "above"


@dataclass(frozen=True)
class TubedSurface:
    """An index together with its (unique) non-crossing tube pairing."""

    params: BridgeParams
    annuli: tuple[Annulus, ...]
    index: IndexSet

    def __post_init__(self) -> None:
        params, annuli, index = self.params, self.annuli, self.index
        if index.n != params.n:
            raise InvalidParameterError(
                f"index has {index.n} members but bridge number is {params.n}"
            )
        modulus = params.punctures
        if len(annuli) != params.n:
            raise InvalidParameterError(f"expected {params.n} tubes, got {len(annuli)}")
        lefts = tuple(a.left for a in annuli)
        if lefts != index.members:
            raise InvalidParameterError(
                f"tubes must be sorted by left foot and match the index; "
                f"got left feet {lefts} for index {index.members}"
            )
        rights = tuple(sorted(a.right for a in annuli))
        if rights != index.complement():
            raise InvalidParameterError(
                f"right feet {rights} do not partition the punctures with index {index.members}"
            )
        for a in annuli:
            if a.punctures != modulus:
                raise InvalidParameterError(
                    f"tube {a.feet()} built for {a.punctures} punctures, surface has {modulus}"
                )
        for a, b in itertools.combinations(annuli, 2):
            if not cyclic.intervals_laminar(a.left, a.length, b.left, b.length, modulus):
                raise InvalidParameterError(
                    f"tube spans {a.feet()} and {b.feet()} cross; surface is not embeddable"
                )

    def right_foot(self, left: int) -> int:
        return self.annulus_at(left).right

    def annulus_at(self, left: int) -> Annulus:
        for a in self.annuli:
            if a.left == left:
                return a
        raise InvalidParameterError(f"{left} is not a left foot of index {self.index.members}")


@dataclass(frozen=True)
class Chunk:
    """A maximal tube (the defining tube, adjacent to the knot) together
    with every tube nested inside its span, the defining tube included."""

    defining: Annulus
    members: tuple[Annulus, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def member_feet(self) -> tuple[int, ...]:
        return tuple(a.left for a in self.members)


@dataclass(frozen=True)
class ScheduleRound:
    """One round of the increasing-length attachment: in round k every
    attached tube has length 2k-1."""

    round_number: int
    attachments: tuple[tuple[int, int], ...]

    @property
    def attachment_length(self) -> int:
        return 2 * self.round_number - 1


def odd_feet_index(n: int) -> IndexSet:
    """The index (1, 3, ..., 2n-1): all tubes short, knot below."""
    return IndexSet(tuple(range(1, 2 * n, 2)))


def even_feet_index(n: int) -> IndexSet:
    """The index (2, 4, ..., 2n): all tubes short, knot above."""
    return IndexSet(tuple(range(2, 2 * n + 1, 2)))


def _check_index(index: IndexSet, params: BridgeParams) -> None:
    if not isinstance(index, IndexSet):
        raise InvalidParameterError(f"expected an IndexSet, got {index!r}")
    if index.n != params.n:
        raise InvalidParameterError(
            f"index {index.members} has {index.n} members, bridge number is {params.n}"
        )


def enumerate_indices(params: BridgeParams) -> list[IndexSet]:
    """All n-element subsets of the punctures, in lexicographic order."""
    modulus = params.punctures
    return [
        IndexSet(combo) for combo in itertools.combinations(range(1, modulus + 1), params.n)
    ]


def _attachment_rounds(index: IndexSet, params: BridgeParams) -> list[list[tuple[int, int]]]:
    """Pair left feet in rounds of increasing odd length.

    Round k tries to close every still-open left foot i at the puncture
    i + (2k-1); the attachment happens whenever that target is neither a
    left foot nor a right foot already used in earlier rounds.  After n
    rounds every foot is paired, and because each attached tube encloses
    only already-balanced feet, the result is the unique non-crossing
    matching of the index.
    """
    modulus = params.punctures
    unpaired = set(index.members)
    occupied = set(index.members)
    rounds: list[list[tuple[int, int]]] = []
    for k in range(1, params.n + 1):
        length = 2 * k - 1
        closing = [
            (i, cyclic.wrap(i + length, modulus))
            for i in sorted(unpaired)
            if cyclic.wrap(i + length, modulus) not in occupied
        ]
        rounds.append(closing)
        for left, right in closing:
            unpaired.discard(left)
            occupied.add(right)
    if unpaired:
        raise InternalConsistencyError(
            f"feet {sorted(unpaired)} left unpaired after {params.n} rounds for index "
            f"{index.members}"
        )
    return rounds


def canonical_pairing(index: IndexSet, params: BridgeParams) -> TubedSurface:
    """The tubed surface realizing ``index``, built by increasing-length
    attachment (equivalently: meridional stabilizations in the right order)."""
    _check_index(index, params)
    pairs = [pair for one_round in _attachment_rounds(index, params) for pair in one_round]
    annuli = tuple(
        Annulus(left, right, params.punctures) for left, right in sorted(pairs)
    )
    return TubedSurface(params, annuli, index)


def stabilization_schedule(surface: TubedSurface) -> list[ScheduleRound]:
    """The attachment rounds (including empty ones) reproducing the surface."""
    rounds = _attachment_rounds(surface.index, surface.params)
    return [
        ScheduleRound(k, tuple(pairs)) for k, pairs in enumerate(rounds, start=1)
    ]


def oracle_matching(
    index: IndexSet, params: BridgeParams, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> TubedSurface:
    """Brute-force route to the same surface as ``canonical_pairing``.

    Enumerates all n! left-to-right bijections, keeps those with pairwise
    disjoint-or-nested spans, and insists exactly one survives.  Anything
    else is reported as an oracle violation: it would mean the pairing
    model itself is wrong.
    """
    _check_index(index, params)
    if params.n > oracle_cap:
        raise ResourceLimitError(
            f"oracle capped at n <= {oracle_cap} ({params.n}! assignments would be searched)"
        )
    lefts = np.array(index.members, dtype=np.int64)
    rights = np.array(index.complement(), dtype=np.int64)
    count, assignment = noncrossing_survivors(lefts, rights, params.punctures)
    if count != 1:
        raise OracleViolationError(
            f"index {index.members} admits {count} non-crossing matchings, expected exactly 1"
        )
    annuli = tuple(
        sorted(
            (
                Annulus(int(lefts[k]), int(rights[assignment[k]]), params.punctures)
                for k in range(params.n)
            ),
        )
    )
    return TubedSurface(params, annuli, index)


def coverage_vector(surface: TubedSurface) -> tuple[int, ...]:
    """Per-arc tube counts: entry m-1 is the number of tubes over arc m."""
    modulus = surface.params.punctures
    return tuple(
        sum(1 for a in surface.annuli if a.covers(arc)) for arc in range(1, modulus + 1)
    )


def classify_side(surface: TubedSurface) -> Side:
    """Below when an odd number of tubes runs over arc 1, above otherwise."""
    return Side.BELOW if coverage_vector(surface)[0] % 2 else Side.ABOVE


def side_of_index(index: IndexSet, params: BridgeParams) -> Side:
    return classify_side(canonical_pairing(index, params))


def chunk_decomposition(surface: TubedSurface) -> list[Chunk]:
    """Chunks in increasing order of defining left foot.

    A tube is defining when its span is not strictly contained in any
    other tube's span; each chunk collects the tubes nested under one
    defining tube.  Defining spans are pairwise disjoint, so the chunks
    partition the tubes.
    """
    annuli = surface.annuli
    defining = [
        a
        for a in annuli
        if not any(b is not a and b.contains_span(a) for b in annuli)
    ]
    chunks = []
    for d in defining:
        members = tuple(a for a in annuli if d.contains_span(a))
        chunks.append(Chunk(defining=d, members=members))
    if sum(c.size for c in chunks) != surface.params.n:
        raise InternalConsistencyError(
            f"chunk sizes {[c.size for c in chunks]} do not partition the "
            f"{surface.params.n} tubes of index {surface.index.members}"
        )
    return chunks


def meridional_bookkeeping(genus: int, bridges: int) -> tuple[int, int]:
    """(genus, bridge count) after one meridional stabilization."""
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
        raise InvalidParameterError(f"genus must be a nonnegative integer, got {genus!r}")
    if not isinstance(bridges, int) or isinstance(bridges, bool) or bridges < 0:
        raise InvalidParameterError(f"bridge count must be a nonnegative integer, got {bridges!r}")
    if bridges == 0:
        raise InvalidOperationError(
            "meridional stabilization needs at least one bridge arc to tube along"
        )
    return (genus + 1, bridges - 1)


def surface_record(surface: TubedSurface) -> dict:
    """The canonical interchange record for a surface.

    Field order is fixed: n, index, annuli, p, side, chunks; all arrays
    ascend by left foot.
    """
    return {
        "n": surface.params.n,
        "index": list(surface.index.members),
        "annuli": [[a.left, a.right] for a in surface.annuli],
        "p": list(coverage_vector(surface)),
        "side": classify_side(surface).value,
        "chunks": [
            {
                "defining": c.defining.left,
                "size": c.size,
                "members": list(c.member_feet()),
            }
            for c in chunk_decomposition(surface)
        ],
    }
