"""Cyclic label arithmetic on punctures and arcs.

Punctures and bridge arcs are labelled 1..m (m = 2n), and all arithmetic
stays in that 1-based window: ``wrap(m + 1, m) == 1``, never 0.  A cyclic
interval of arcs is described by its first arc and its arc count; two such
intervals are *laminar* when they are disjoint or one contains the other,
which is the embeddability condition every pair of tube spans (and every
move corridor) must satisfy.
"""

from __future__ import annotations

from .errors import InvalidParameterError


def wrap(value: int, modulus: int) -> int:
    """Reduce ``value`` into the cyclic window 1..modulus."""
    return (value - 1) % modulus + 1


def forward_distance(start: int, end: int, modulus: int) -> int:
    """Steps from ``start`` forward to ``end`` (0 when equal)."""
    return (end - start) % modulus


def check_label(value: int, modulus: int, what: str = "label") -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidParameterError(f"{what} must be an integer, got {value!r}")
    if not 1 <= value <= modulus:
        raise InvalidParameterError(f"{what} {value} out of range 1..{modulus}")
    return value


def interval_arcs(first: int, count: int, modulus: int) -> tuple[int, ...]:
    """The ``count`` arc labels of the interval starting at arc ``first``."""
    return tuple(wrap(first + k, modulus) for k in range(count))


def interval_contains(first: int, count: int, arc: int, modulus: int) -> bool:
    """Whether arc lies in the cyclic interval [first, first + count)."""
    return forward_distance(first, arc, modulus) < count


def intervals_laminar(
    first_a: int, count_a: int, first_b: int, count_b: int, modulus: int
) -> bool:
    """Whether two cyclic arc intervals are disjoint or nested.

    Both intervals must be proper (0 < count < modulus); the offset
    algebra below breaks down for empty or full-circle intervals.
    """
    if not (0 < count_a < modulus and 0 < count_b < modulus):
        raise InvalidParameterError(
            f"interval counts must be in 1..{modulus - 1}, got {count_a}, {count_b}"
        )
    offset = forward_distance(first_a, first_b, modulus)
    if offset >= count_a and offset + count_b <= modulus:
        return True  # disjoint
    if offset + count_b <= count_a:
        return True  # b nested in a
    if forward_distance(first_b, first_a, modulus) + count_a <= count_b:
        return True  # a nested in b
    return False


def interval_contains_interval(
    first_outer: int, count_outer: int, first_inner: int, count_inner: int, modulus: int
) -> bool:
    """Whether [first_inner, +count_inner) lies within [first_outer, +count_outer)."""
    offset = forward_distance(first_outer, first_inner, modulus)
    return offset + count_inner <= count_outer
