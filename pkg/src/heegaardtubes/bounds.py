"""Genus, count, and stable-genus arithmetic for one bridge number.

For an n-bridge knot whose bridge sphere has distance d > 2n (n >= 3),
the minimal Heegaard genus of the exterior is n, at most C(2n, n)
distinct minimal splittings exist, same-side pairs have a common
stabilization of genus n+1, and cross-side pairs need genus at least
min(2n-1, d/2).  Reports never refuse out-of-hypothesis inputs; they
carry applicability flags instead, since the combinatorics is
meaningful for every n >= 2.

d/2 is taken as floor(d/2): d counts curve-complex edges, and floor is
the conservative reading for odd d.
"""

from __future__ import annotations

import io
import csv
import math
from dataclasses import dataclass

from .errors import InvalidParameterError
from . import surfaces


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient (arbitrary precision)."""
    for value, name in ((a, "a"), (b, "b")):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidParameterError(f"{name} must be a nonnegative integer, got {value!r}")
    if b > a:
        raise InvalidParameterError(f"binomial needs b <= a, got a={a}, b={b}")
    return math.comb(a, b)


def euler_genus_floor(n: int) -> int:
    """Least genus of a surface compressing onto two parallel copies of
    the 2n-punctured sphere.

    Walks the Euler-characteristic chain explicitly: the punctured
    sphere has chi = 2 - 2n, so a surface with chi <= 2(2 - 2n) has
    2 - 2g <= 4 - 4n, i.e. g >= 2n - 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"bridge number must be a positive integer, got {n!r}")
    chi_punctured_sphere = 2 - 2 * n
    chi_bound = 2 * chi_punctured_sphere
    return (2 - chi_bound) // 2


@dataclass(frozen=True)
class StableGenusReport:
    """Pure arithmetic in (n, d); same inputs give a bit-identical report."""

    n: int
    d: int | None
    hypothesis_d_gt_2n: bool
    hypothesis_d_ge_4n: bool
    heegaard_genus: int
    surface_count_upper: int
    same_side_stable_genus_upper: int
    cross_side_stable_genus_lower: int | None


def stable_genus_report(params: surfaces.BridgeParams) -> StableGenusReport:
    """Evaluate the headline bounds for (n, d).

    Hypothesis flags are false whenever n < 3 or d is absent or too
    small; the numeric fields are reported regardless.
    """
    n, d = params.n, params.d
    in_scope = d is not None and n >= 3
    return StableGenusReport(
        n=n,
        d=d,
        hypothesis_d_gt_2n=in_scope and d > 2 * n,
        hypothesis_d_ge_4n=in_scope and d >= 4 * n,
        heegaard_genus=n,
        surface_count_upper=binomial(2 * n, n),
        same_side_stable_genus_upper=n + 1,
        cross_side_stable_genus_lower=None if d is None else min(2 * n - 1, d // 2),
    )


def report_record(report: StableGenusReport) -> dict:
    """Serialized report with the exact field names, in declaration order."""
    return {
        "n": report.n,
        "d": report.d,
        "hypothesis_d_gt_2n": report.hypothesis_d_gt_2n,
        "hypothesis_d_ge_4n": report.hypothesis_d_ge_4n,
        "heegaard_genus": report.heegaard_genus,
        "surface_count_upper": report.surface_count_upper,
        "same_side_stable_genus_upper": report.same_side_stable_genus_upper,
        "cross_side_stable_genus_lower": report.cross_side_stable_genus_lower,
    }


CSV_HEADER = (
    "n",
    "d",
    "genus",
    "count",
    "same_side_upper",
    "cross_side_lower",
    "d_gt_2n",
    "d_ge_4n",
)


def reports_csv(reports: list[StableGenusReport]) -> str:
    """CSV table of reports, one row each."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(
            [
                r.n,
                "" if r.d is None else r.d,
                r.heegaard_genus,
                r.surface_count_upper,
                r.same_side_stable_genus_upper,
                "" if r.cross_side_stable_genus_lower is None else r.cross_side_stable_genus_lower,
                "true" if r.hypothesis_d_gt_2n else "false",
                "true" if r.hypothesis_d_ge_4n else "false",
            ]
        )
    return buffer.getvalue()
