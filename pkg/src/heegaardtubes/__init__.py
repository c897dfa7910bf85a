"""Combinatorial engine for the tubed Heegaard surfaces of an n-bridge
knot exterior: index enumeration, canonical non-crossing tube pairings,
annulus-compression moves and their graph, chunk decompositions, tunnel
systems, and stable-genus bounds."""

__version__ = "0.1.0"

from .bounds import StableGenusReport, binomial, euler_genus_floor, stable_genus_report
from .errors import (
    ExcludedMoveError,
    HeegaardTubesError,
    InternalConsistencyError,
    InvalidMoveError,
    InvalidOperationError,
    InvalidParameterError,
    MoveRejectedError,
    OracleViolationError,
    ResourceLimitError,
    VerificationError,
)
from .moves import (
    CompressionPath,
    Move,
    MoveCheck,
    MoveEdge,
    MoveGraph,
    PathStep,
    apply_move,
    build_move_graph,
    compression_path,
    enumerate_moves,
    graph_edge_list,
    graph_to_dot,
    invert_move,
    move_valid,
    replay_path,
    weak_components,
)
from .surfaces import (
    Annulus,
    BridgeParams,
    Chunk,
    IndexSet,
    ScheduleRound,
    Side,
    TubedSurface,
    canonical_pairing,
    chunk_decomposition,
    classify_side,
    coverage_vector,
    enumerate_indices,
    even_feet_index,
    meridional_bookkeeping,
    odd_feet_index,
    oracle_matching,
    stabilization_schedule,
    surface_record,
)
from .tunnels import (
    Direction,
    Tunnel,
    TunnelKind,
    TunnelSystem,
    annulus_direction,
    chunk_tunnels,
    count_tunnel_systems,
    relabelled_index,
    system_record,
    tunnel_system,
)
from .verify import CheckResult, ensure_all_passed, run_verification
