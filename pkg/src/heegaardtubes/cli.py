"""Command-line interface.

Subcommands: enumerate, pair, classify, moves, graph, path, chunks,
tunnels, bounds, verify.  Output is deterministic (fixed field order,
sorted collections) and every document embeds the tool version, a
canonical echo of the command, and n.

Exit codes: 0 success, 2 invalid arguments, 3 move rejected, 4 resource
limit, 5 oracle violation (or internal inconsistency), 6 verification
failure.  Errors additionally emit a single JSON record on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .bounds import report_record, reports_csv, stable_genus_report
from .errors import (
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
    DEFAULT_GRAPH_CAP,
    apply_move,
    build_move_graph,
    compression_path,
    enumerate_moves,
    graph_edge_list,
    graph_to_dot,
    path_record,
)
from .surfaces import (
    DEFAULT_ORACLE_CAP,
    BridgeParams,
    IndexSet,
    canonical_pairing,
    chunk_decomposition,
    classify_side,
    enumerate_indices,
    surface_record,
)
from .tunnels import count_tunnel_systems, system_record, tunnel_system
from .verify import SAMPLE_SIZE, run_verification

EXIT_OK = 0
EXIT_INVALID_ARGUMENTS = 2
EXIT_MOVE_REJECTED = 3
EXIT_RESOURCE_LIMIT = 4
EXIT_ORACLE_VIOLATION = 5
EXIT_VERIFICATION_FAILURE = 6

_FORMATS = {
    "enumerate": ("json",),
    "pair": ("json",),
    "classify": ("json", "text"),
    "moves": ("json",),
    "graph": ("json", "dot"),
    "path": ("json",),
    "chunks": ("json", "text"),
    "tunnels": ("json",),
    "bounds": ("json", "csv", "text"),
    "verify": ("text", "json"),
}


@dataclass(frozen=True)
class Command:
    """A fully parsed invocation, validated before any computation."""

    subcommand: str
    n: int
    index: tuple[int, ...] | None = None
    target_index: tuple[int, ...] | None = None
    d: int | None = None
    move: tuple[int, int] | None = None
    format: str = "json"
    output: str | None = None
    oracle_cap: int = DEFAULT_ORACLE_CAP
    graph_cap: int = DEFAULT_GRAPH_CAP
    samples: int = SAMPLE_SIZE

    def echo(self) -> str:
        parts = [self.subcommand, f"--n {self.n}"]
        if self.index is not None:
            parts.append("--index " + ",".join(map(str, self.index)))
        if self.target_index is not None:
            parts.append("--target " + ",".join(map(str, self.target_index)))
        if self.d is not None:
            parts.append(f"--d {self.d}")
        if self.move is not None:
            parts.append("--move " + ",".join(map(str, self.move)))
        return " ".join(parts)


def _parse_labels(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise InvalidParameterError(f"{what} must be comma-separated integers, got {text!r}")
    if not values:
        raise InvalidParameterError(f"{what} must not be empty")
    return values


def _index_argument(values: tuple[int, ...], n: int, what: str = "index") -> IndexSet:
    deduplicated = tuple(sorted(set(values)))
    if len(deduplicated) != n:
        raise InvalidParameterError(
            f"{what} must contain exactly n={n} distinct values in 1..{2 * n}, "
            f"got {len(deduplicated)} after sorting and deduplication: {list(deduplicated)}"
        )
    return IndexSet(deduplicated)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heegaardtubes",
        description="Tubed Heegaard surfaces of n-bridge knot exteriors: "
        "pairings, moves, chunks, tunnels, and genus bounds.",
    )
    parser.add_argument("--version", action="version", version=f"heegaardtubes {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str, *, index=False, target=False, d=False, move=False,
            graph_cap=False, oracle_cap=False, samples=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True, help="bridge number (n >= 2)")
        if index:
            p.add_argument("--index", type=str, help="comma-separated left feet")
        if target:
            p.add_argument("--target", type=str, help="comma-separated target left feet")
        if d:
            p.add_argument("--d", type=int, help="bridge distance")
        if move:
            p.add_argument("--move", type=str, help="one move to apply, as i,j")
        if graph_cap:
            p.add_argument("--graph-cap", type=int, default=DEFAULT_GRAPH_CAP,
                           help=f"largest n for which graphs are built (default {DEFAULT_GRAPH_CAP})")
        if oracle_cap:
            p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                           help=f"largest n the brute-force oracle accepts (default {DEFAULT_ORACLE_CAP})")
        if samples:
            p.add_argument("--samples", type=int, default=SAMPLE_SIZE,
                           help=f"random indices per n beyond the exhaustive range (default {SAMPLE_SIZE})")
        p.add_argument("--format", type=str, default=_FORMATS[name][0], choices=_FORMATS[name])
        p.add_argument("--output", type=str, help="write the document here instead of stdout")
        return p

    add("enumerate", "list every index for one bridge number")
    add("pair", "canonical tube pairing and derived data for one index", index=True)
    add("classify", "which side of the surface the knot lies on", index=True)
    add("moves", "admissible compressions of one surface", index=True, move=True)
    add("graph", "the full move graph for one bridge number", graph_cap=True)
    add("path", "shortest compression path between two indices", index=True, target=True,
        graph_cap=True)
    add("chunks", "chunk decomposition of one surface", index=True)
    add("tunnels", "tunnel system for one index, or for every index", index=True)
    add("bounds", "genus / count / stable-genus report", d=True)
    add("verify", "run the invariant suites up to n (exit 6 on failure)",
        oracle_cap=True, graph_cap=True, samples=True)
    return parser


def command_from_args(args: argparse.Namespace) -> Command:
    index = _parse_labels(args.index, "--index") if getattr(args, "index", None) else None
    target = _parse_labels(args.target, "--target") if getattr(args, "target", None) else None
    move = None
    if getattr(args, "move", None):
        pair = _parse_labels(args.move, "--move")
        if len(pair) != 2:
            raise InvalidParameterError(f"--move needs exactly two labels i,j, got {args.move!r}")
        move = (pair[0], pair[1])
    return Command(
        subcommand=args.subcommand,
        n=args.n,
        index=index,
        target_index=target,
        d=getattr(args, "d", None),
        move=move,
        format=args.format,
        output=args.output,
        oracle_cap=getattr(args, "oracle_cap", DEFAULT_ORACLE_CAP),
        graph_cap=getattr(args, "graph_cap", DEFAULT_GRAPH_CAP),
        samples=getattr(args, "samples", SAMPLE_SIZE),
    )


def _document(cmd: Command, payload: dict) -> dict:
    return {"version": __version__, "command": cmd.echo(), "n": cmd.n, **payload}


def _render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _comment_header(cmd: Command, marker: str) -> str:
    return (
        f"{marker} heegaardtubes {__version__}\n"
        f"{marker} command: {cmd.echo()}\n"
        f"{marker} n: {cmd.n}\n"
    )


def _require_index(cmd: Command) -> IndexSet:
    if cmd.index is None:
        raise InvalidParameterError(f"subcommand {cmd.subcommand!r} requires --index")
    return _index_argument(cmd.index, cmd.n)


def _text_lines(cmd: Command, lines: list[str]) -> str:
    header = [
        f"heegaardtubes {__version__}",
        f"command: {cmd.echo()}",
        f"n: {cmd.n}",
    ]
    return "\n".join(header + lines) + "\n"


def dispatch(cmd: Command) -> tuple[int, str]:
    """Route a command to its module operation; returns (exit code, document)."""
    params = BridgeParams(cmd.n, cmd.d)
    sub = cmd.subcommand

    if sub == "enumerate":
        indices = enumerate_indices(params)
        doc = _document(
            cmd, {"count": len(indices), "indices": [list(i.members) for i in indices]}
        )
        return EXIT_OK, _render_json(doc)

    if sub == "pair":
        surface = canonical_pairing(_require_index(cmd), params)
        record = surface_record(surface)
        record.pop("n")
        return EXIT_OK, _render_json(_document(cmd, record))

    if sub == "classify":
        surface = canonical_pairing(_require_index(cmd), params)
        side = classify_side(surface).value
        if cmd.format == "text":
            return EXIT_OK, _text_lines(cmd, [f"index: {list(surface.index.members)}",
                                              f"side: {side}"])
        doc = _document(cmd, {"index": list(surface.index.members), "side": side})
        return EXIT_OK, _render_json(doc)

    if sub == "moves":
        surface = canonical_pairing(_require_index(cmd), params)
        if cmd.move is not None:
            result = apply_move(surface, cmd.move[0], cmd.move[1])
            doc = _document(
                cmd,
                {
                    "index": list(surface.index.members),
                    "i": cmd.move[0],
                    "j": cmd.move[1],
                    "valid": True,
                    "to": list(result.members),
                },
            )
            return EXIT_OK, _render_json(doc)
        admissible = enumerate_moves(surface)
        doc = _document(
            cmd,
            {
                "index": list(surface.index.members),
                "count": len(admissible),
                "moves": [
                    {"i": move.i, "j": move.j, "to": list(target.members)}
                    for move, target in admissible
                ],
            },
        )
        return EXIT_OK, _render_json(doc)

    if sub == "graph":
        graph = build_move_graph(params, graph_cap=cmd.graph_cap)
        if cmd.format == "dot":
            return EXIT_OK, _comment_header(cmd, "//") + graph_to_dot(graph)
        record = graph_edge_list(graph)
        record.pop("n")
        return EXIT_OK, _render_json(_document(cmd, record))

    if sub == "path":
        start = _require_index(cmd)
        if cmd.target_index is None:
            raise InvalidParameterError("subcommand 'path' requires --target")
        end = _index_argument(cmd.target_index, cmd.n, "--target")
        start_side = classify_side(canonical_pairing(start, params)).value
        end_side = classify_side(canonical_pairing(end, params)).value
        path = compression_path(params, start, end, graph_cap=cmd.graph_cap)
        if path is None:
            reason = (
                "start and end lie on opposite sides of the knot"
                if start_side != end_side
                else "no path found"
            )
            doc = _document(
                cmd,
                {
                    "start": list(start.members),
                    "end": list(end.members),
                    "found": False,
                    "start_side": start_side,
                    "end_side": end_side,
                    "reason": reason,
                },
            )
            return EXIT_OK, _render_json(doc)
        record = path_record(path)
        doc = {
            "start": record["start"],
            "end": record["end"],
            "found": True,
            "start_side": start_side,
            "end_side": end_side,
            "length": record["length"],
            "steps": record["steps"],
        }
        return EXIT_OK, _render_json(_document(cmd, doc))

    if sub == "chunks":
        surface = canonical_pairing(_require_index(cmd), params)
        chunks = chunk_decomposition(surface)
        sizes = [c.size for c in chunks]
        if cmd.format == "text":
            lines = [f"index: {list(surface.index.members)}", f"sizes: {sizes}"]
            lines += [
                f"chunk defining={c.defining.left} size={c.size} members={list(c.member_feet())}"
                for c in chunks
            ]
            return EXIT_OK, _text_lines(cmd, lines)
        doc = _document(
            cmd,
            {
                "index": list(surface.index.members),
                "sizes": sizes,
                "chunks": [
                    {
                        "defining": c.defining.left,
                        "size": c.size,
                        "members": list(c.member_feet()),
                    }
                    for c in chunks
                ],
            },
        )
        return EXIT_OK, _render_json(doc)

    if sub == "tunnels":
        if cmd.index is not None:
            system = tunnel_system(canonical_pairing(_require_index(cmd), params))
            return EXIT_OK, _render_json(_document(cmd, system_record(system)))
        total, below, above = count_tunnel_systems(params)
        systems = [
            system_record(tunnel_system(canonical_pairing(index, params)))
            for index in enumerate_indices(params)
        ]
        doc = _document(
            cmd, {"count": total, "below": below, "above": above, "systems": systems}
        )
        return EXIT_OK, _render_json(doc)

    if sub == "bounds":
        report = stable_genus_report(params)
        if cmd.format == "csv":
            return EXIT_OK, _comment_header(cmd, "#") + reports_csv([report])
        record = report_record(report)
        if cmd.format == "text":
            return EXIT_OK, _text_lines(
                cmd, [f"{key}: {value}" for key, value in record.items() if key != "n"]
            )
        record.pop("n")
        return EXIT_OK, _render_json(_document(cmd, record))

    if sub == "verify":
        results = run_verification(
            cmd.n,
            oracle_cap=cmd.oracle_cap,
            graph_cap=cmd.graph_cap,
            sample_size=cmd.samples,
        )
        all_passed = all(r.passed for r in results)
        if cmd.format == "json":
            doc = _document(
                cmd,
                {
                    "all_passed": all_passed,
                    "checks": [
                        {"name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results
                    ],
                },
            )
            text = _render_json(doc)
        else:
            lines = [
                f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
            ]
            lines.append(
                f"{'all checks passed' if all_passed else 'VERIFICATION FAILED'} "
                f"({sum(r.passed for r in results)}/{len(results)})"
            )
            text = _text_lines(cmd, lines)
        return (EXIT_OK if all_passed else EXIT_VERIFICATION_FAILURE), text

    raise InvalidParameterError(f"unknown subcommand {sub!r}")


_ERROR_CODES = [
    (MoveRejectedError, EXIT_MOVE_REJECTED, "move-rejected"),
    (ResourceLimitError, EXIT_RESOURCE_LIMIT, "resource-limit"),
    (OracleViolationError, EXIT_ORACLE_VIOLATION, "oracle-violation"),
    (InternalConsistencyError, EXIT_ORACLE_VIOLATION, "oracle-violation"),
    (VerificationError, EXIT_VERIFICATION_FAILURE, "verification-failure"),
    (InvalidMoveError, EXIT_INVALID_ARGUMENTS, "invalid-arguments"),
    (InvalidOperationError, EXIT_INVALID_ARGUMENTS, "invalid-arguments"),
    (InvalidParameterError, EXIT_INVALID_ARGUMENTS, "invalid-arguments"),
    (HeegaardTubesError, EXIT_INVALID_ARGUMENTS, "invalid-arguments"),
]


def _emit(cmd_output: str, output_path: str | None) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8") as handle:
            handle.write(cmd_output)
    else:
        sys.stdout.write(cmd_output)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cmd = command_from_args(args)
        code, document = dispatch(cmd)
        _emit(document, cmd.output)
        return code
    except HeegaardTubesError as error:
        for kind, code, label in _ERROR_CODES:
            if isinstance(error, kind):
                diagnostic = {"error": label, "message": str(error)}
                print(json.dumps(diagnostic), file=sys.stderr)
                return code
        raise  # pragma: no cover - every subclass is listed above


if __name__ == "__main__":
    sys.exit(main())
