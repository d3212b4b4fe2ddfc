"""Exhaustive ground truth used to cross-check the crystal machinery.

Everything here enumerates or counts straight from the definitions, with
no reference to the operator or graph modules, so agreement between the
two routes is meaningful evidence rather than a tautology.
"""

from __future__ import annotations

from functools import cache
from typing import Sequence

from .multisegment import Multisegment, canonicalize
from .root_data import CartanType


def _validate_target(ctype: CartanType, target: Sequence[int]) -> tuple[int, ...]:
    vec = tuple(int(x) for x in target)
    if len(vec) != len(ctype.index_set()):
        raise ValueError(
            f"target has {len(vec)} entries, expected {len(ctype.index_set())}"
        )
    if any(x < 0 for x in vec):
        raise ValueError(f"target must be nonnegative, got {vec}")
    return vec


def _segment_content(ctype: CartanType, k: int, l: int) -> tuple[int, ...]:
    vec = [0] * len(ctype.index_set())
    if ctype.is_affine:
        for r in range(k, l + 1):
            vec[r % (ctype.n + 1)] += 1
    else:
        for r in range(k, l + 1):
            vec[r - 1] += 1
    return tuple(vec)


def _candidate_segments(
    ctype: CartanType, target: tuple[int, ...]
) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
    """Segments whose content fits inside target, with their content vectors."""
    total = sum(target)
    spans: list[tuple[int, int]] = []
    if ctype.is_affine:
        # Any longer segment cannot fit total boxes; generous but finite.
        for k in range(ctype.n + 1):
            for l in range(k, k + (ctype.n + 1) * total):
                spans.append((k, l))
    else:
        for k in range(1, ctype.n + 1):
            for l in range(k, ctype.n + 1):
                spans.append((k, l))
    out = []
    for k, l in spans:
        content = _segment_content(ctype, k, l)
        if all(c <= t for c, t in zip(content, target)):
            out.append(((k, l), content))
    return out


def enumerate_multisegments(
    ctype: CartanType, target: Sequence[int]
) -> list[Multisegment]:
    """All canonical multisegments with the given dimension vector.

    Backtracks over the finite list of segments that fit inside the target,
    assigning each a multiplicity.  Affine output mixes aperiodic and
    periodic elements; filter with ``Multisegment.is_aperiodic``.
    """
    goal = _validate_target(ctype, target)
    candidates = _candidate_segments(ctype, goal)
    found: list[Multisegment] = []
    chosen: list[tuple[int, int, int]] = []

    def recurse(idx: int, remaining: tuple[int, ...]) -> None:
        if idx == len(candidates):
            if not any(remaining):
                found.append(canonicalize(ctype, chosen))
            return
        (k, l), content = candidates[idx]
        limit = min(
            rem // c for rem, c in zip(remaining, content) if c
        )
        for mult in range(limit + 1):
            if mult:
                chosen.append((k, l, mult))
            recurse(
                idx + 1,
                tuple(rem - mult * c for rem, c in zip(remaining, content)),
            )
            if mult:
                chosen.pop()

    recurse(0, goal)
    return sorted(found, key=lambda ms: ms.entries)


def enumerate_by_degree(ctype: CartanType, degree: int) -> list[Multisegment]:
    """All canonical multisegments of the given total degree."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    parts = len(ctype.index_set())
    found: list[Multisegment] = []

    def targets(prefix: tuple[int, ...], left: int) -> None:
        if len(prefix) == parts - 1:
            found.extend(enumerate_multisegments(ctype, prefix + (left,)))
            return
        for x in range(left + 1):
            targets(prefix + (x,), left - x)

    targets((), degree)
    return sorted(found, key=lambda ms: ms.entries)


def kostant_count(n: int, beta: Sequence[int]) -> int:
    """Ways to write beta as a nonnegative combination of the positive roots.

    The positive roots of the rank-n path diagram are the interval sums
    alpha_k + ... + alpha_l; the count is a direct recursion over that
    fixed list, sharing no code with the enumerator above.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    goal = tuple(int(x) for x in beta)
    if len(goal) != n:
        raise ValueError(f"beta has {len(goal)} entries, expected {n}")
    if any(x < 0 for x in goal):
        raise ValueError(f"beta must be nonnegative, got {goal}")
    roots = [
        tuple(1 if k <= r <= l else 0 for r in range(1, n + 1))
        for k in range(1, n + 1)
        for l in range(k, n + 1)
    ]

    @cache
    def ways(idx: int, remaining: tuple[int, ...]) -> int:
        if not any(remaining):
            return 1
        if idx == len(roots):
            return 0
        root = roots[idx]
        limit = min(rem // c for rem, c in zip(remaining, root) if c)
        return sum(
            ways(idx + 1, tuple(rem - m * c for rem, c in zip(remaining, root)))
            for m in range(limit + 1)
        )

    return ways(0, goal)


def aperiodic_count(n: int, beta: Sequence[int]) -> int:
    """Number of aperiodic affine multisegments with dimension vector beta."""
    ctype = CartanType.affine_a(n)
    return sum(
        1 for ms in enumerate_multisegments(ctype, beta) if ms.is_aperiodic()
    )
