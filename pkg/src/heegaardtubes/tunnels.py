"""Symbolic tunnel systems synthesized from chunk decompositions.

Each surface yields exactly n-1 tunnels: every chunk of size k
contributes k-1 tunnels anchored on the arc just before its defining
left foot, and all chunks except the one with the smallest defining
foot get one connector tunnel to the next chunk.  Tunnels are symbolic
records (kind, endpoints, associated data), not curves: they identify
the tunnel system up to isotopy and edge slides.

With the knot below the surface, a tube *goes up* when its left foot is
odd and down otherwise; above-side surfaces are handled through the
label rotation m -> m+1, which swaps the sides, and works out to the
same endpoint formulas in the surface's own labels with the parity
convention flipped.

Non-defining members map to tunnel kinds as follows:

* down tube of length 1  -> dual to that tube's bridge disk;
* down tube, longer      -> dual to the disk banding the bridge disks
  at the tube's first and last arcs;
* up tube                -> dual to a disk separating the punctures
  from the tube's right foot up to just before the defining tube's
  right foot.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import cyclic
from .errors import InternalConsistencyError, InvalidParameterError
from .surfaces import (
    Annulus,
    BridgeParams,
    Chunk,
    IndexSet,
    Side,
    TubedSurface,
    canonical_pairing,
    chunk_decomposition,
    classify_side,
    enumerate_indices,
)
from .bounds import binomial


class Direction(Enum):
    UP = "up"
    DOWN = "down"


class TunnelKind(Enum):
    BRIDGE_DISK_DUAL = "bridge-disk-dual"
    BANDED_BRIDGE_DISKS = "banded-bridge-disks"
    SEPARATING_DISK_DUAL = "separating-disk-dual"
    CHUNK_CONNECTOR = "chunk-connector"


@dataclass(frozen=True)
class Tunnel:
    """A symbolic tunnel: its kind, owning chunk, and arc endpoints."""

    kind: TunnelKind
    chunk_defining_foot: int
    source_annulus: Annulus | None
    endpoints: tuple[int, int]
    separated_range: tuple[int, ...] | None = None

    @property
    def banded_arcs(self) -> tuple[int, int] | None:
        """For banded kinds, the two arcs whose bridge disks are joined."""
        if self.kind is not TunnelKind.BANDED_BRIDGE_DISKS:
            return None
        tube = self.source_annulus
        return (tube.left, cyclic.wrap(tube.right - 1, tube.punctures))


@dataclass(frozen=True)
class TunnelSystem:
    surface: TubedSurface
    tunnels: tuple[Tunnel, ...]
    omitted_connector_foot: int


def relabelled_index(index: IndexSet, delta: int) -> IndexSet:
    """Rotate every left foot by ``delta``; one step swaps the sides."""
    modulus = 2 * index.n
    return IndexSet.from_iterable(cyclic.wrap(m + delta, modulus) for m in index.members)


def annulus_direction(surface: TubedSurface, tube: Annulus) -> Direction:
    """Up/down classification of one tube of the surface.

    Stated for below-side surfaces as "odd left foot goes up"; an
    above-side surface is first rotated one label to its below-side
    mirror, which flips the parity convention.
    """
    if tube not in surface.annuli:
        raise InvalidParameterError(
            f"tube {tube.feet()} does not belong to index {surface.index.members}"
        )
    odd = tube.left % 2 == 1
    below = classify_side(surface) is Side.BELOW
    return Direction.UP if odd == below else Direction.DOWN


def chunk_tunnels(surface: TubedSurface, chunk: Chunk) -> list[Tunnel]:
    """The size-1 fewer tunnels of one chunk, anchored before its defining foot."""
    for member in chunk.members:
        if member not in surface.annuli:
            raise InvalidParameterError(
                f"chunk defined by {chunk.defining.feet()} does not belong to index "
                f"{surface.index.members}"
            )
    modulus = surface.params.punctures
    anchor = cyclic.wrap(chunk.defining.left - 1, modulus)
    defining_right = chunk.defining.right
    tunnels = []
    for member in chunk.members:
        if member == chunk.defining:
            continue
        direction = annulus_direction(surface, member)
        if direction is Direction.DOWN:
            kind = (
                TunnelKind.BRIDGE_DISK_DUAL
                if member.length == 1
                else TunnelKind.BANDED_BRIDGE_DISKS
            )
            tunnels.append(
                Tunnel(kind, chunk.defining.left, member, (anchor, anchor))
            )
        else:
            separated = cyclic.interval_arcs(
                member.right,
                cyclic.forward_distance(member.right, defining_right, modulus),
                modulus,
            )
            tunnels.append(
                Tunnel(
                    TunnelKind.SEPARATING_DISK_DUAL,
                    chunk.defining.left,
                    member,
                    (anchor, anchor),
                    separated_range=separated,
                )
            )
    return tunnels


def tunnel_system(surface: TubedSurface) -> TunnelSystem:
    """All n-1 tunnels of the surface, in chunk order then by member foot."""
    chunks = chunk_decomposition(surface)
    modulus = surface.params.punctures
    omitted = min(c.defining.left for c in chunks)
    tunnels: list[Tunnel] = []
    for chunk in chunks:
        tunnels.extend(chunk_tunnels(surface, chunk))
        if chunk.defining.left != omitted:
            tunnels.append(
                Tunnel(
                    TunnelKind.CHUNK_CONNECTOR,
                    chunk.defining.left,
                    None,
                    (cyclic.wrap(chunk.defining.left - 1, modulus), chunk.defining.right),
                )
            )
    if len(tunnels) != surface.params.n - 1:
        raise InternalConsistencyError(
            f"synthesized {len(tunnels)} tunnels for index {surface.index.members}, "
            f"expected {surface.params.n - 1}"
        )
    return TunnelSystem(surface, tuple(tunnels), omitted)


def count_tunnel_systems(params: BridgeParams) -> tuple[int, int, int]:
    """(total, below count, above count) over all indices for this n."""
    below = 0
    for index in enumerate_indices(params):
        if classify_side(canonical_pairing(index, params)) is Side.BELOW:
            below += 1
    total = binomial(2 * params.n, params.n)
    return (total, below, total - below)


def system_record(system: TunnelSystem) -> dict:
    """Serialized tunnel system with fixed field order."""
    return {
        "index": list(system.surface.index.members),
        "side": classify_side(system.surface).value,
        "omitted": system.omitted_connector_foot,
        "tunnels": [
            {
                "kind": t.kind.value,
                "chunk": t.chunk_defining_foot,
                "annulus": list(t.source_annulus.feet()) if t.source_annulus else None,
                "endpoints": list(t.endpoints),
                "separated": list(t.separated_range) if t.separated_range else None,
            }
            for t in system.tunnels
        ],
    }
