"""Signature-rule crystal operators on multisegments.

For a vertex i, segments ending at i contribute minus symbols and segments
ending at i-1 contribute plus symbols.  Affine type first moves every
contributing segment into the unique translate ending exactly at i or i-1
(with i taken in its canonical residue 0..n, so l = -1 can occur at i = 0).
Symbols are listed in the order

    (k, l) < (k', l')   iff   k < k', or k = k' and l > l',

so for each k the minuses of (k, i) immediately precede the pluses of
(k, i-1).  Adjacent (+, -) pairs with the plus on the left cancel until
none remain; the surviving word always has the shape -...- +...+.

epsilon counts the surviving minuses.  The lowering operator extends the
segment under the leftmost surviving plus from (k, i-1) to (k, i), or
starts a fresh (i, i) when no plus survives.  The raising operator shrinks
the segment under the rightmost surviving minus from (k, i) to (k, i-1),
deleting it outright when that segment is (i, i) itself; with no surviving
minus the raising operator is absent and ``None`` is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .multisegment import Multisegment, Segment, canonical_segment, canonicalize
from .root_data import CartanType

PLUS = "+"
MINUS = "-"


class SignedEntry(NamedTuple):
    segment: Segment  # representative ending at i (minus) or i-1 (plus)
    sign: str
    position: int


@dataclass(frozen=True)
class ReducedSignature:
    minuses: tuple[SignedEntry, ...]
    pluses: tuple[SignedEntry, ...]
    canceled: frozenset[int]


def signature_word(gamma: Multisegment, i: int) -> list[SignedEntry]:
    """The i-signature of gamma before cancellation."""
    ctype = gamma.ctype
    ctype.check_index(i)
    groups: list[tuple[int, int, str, int]] = []
    if ctype.is_affine:
        period = ctype.n + 1
        for (k, l), mult in gamma.items():
            for target, sign in ((i, MINUS), (i - 1, PLUS)):
                if (l - target) % period == 0:
                    shift = target - l
                    groups.append((k + shift, target, sign, mult))
    else:
        for (k, l), mult in gamma.items():
            if l == i:
                groups.append((k, l, MINUS, mult))
            elif l == i - 1:
                groups.append((k, l, PLUS, mult))
    # k ascending, and for equal k the larger l (the minus pair) first.
    groups.sort(key=lambda g: (g[0], -g[1]))
    word: list[SignedEntry] = []
    for k, l, sign, mult in groups:
        for _ in range(mult):
            word.append(SignedEntry(Segment(k, l), sign, len(word)))
    return word


def reduce_signature(word: Iterable[SignedEntry]) -> ReducedSignature:
    """Cancel adjacent (+, -) pairs, plus on the left, until none remain.

    One stack pass is equivalent to repeated deletion: a minus cancels the
    most recent surviving plus, otherwise it survives for good.
    """
    surviving_minuses: list[SignedEntry] = []
    plus_stack: list[SignedEntry] = []
    canceled: set[int] = set()
    for entry in word:
        if entry.sign == PLUS:
            plus_stack.append(entry)
        elif entry.sign == MINUS:
            if plus_stack:
                canceled.add(plus_stack.pop().position)
                canceled.add(entry.position)
            else:
                surviving_minuses.append(entry)
        else:
            raise ValueError(f"bad sign {entry.sign!r}")
    return ReducedSignature(
        tuple(surviving_minuses), tuple(plus_stack), frozenset(canceled)
    )


def epsilon(gamma: Multisegment, i: int) -> int:
    """Number of surviving minuses; the length of the raising string at i."""
    return len(reduce_signature(signature_word(gamma, i)).minuses)


def phi(gamma: Multisegment, i: int) -> int:
    """epsilon plus the pairing of h_i with the weight.  Can be negative."""
    return epsilon(gamma, i) + gamma.ctype.pairing(i, gamma.dim_vector())


def _rebuild(gamma: Multisegment, deltas: dict[Segment, int]) -> Multisegment:
    totals = gamma.counts()
    for seg, change in deltas.items():
        totals[seg] = totals.get(seg, 0) + change
    # Decrement targets always carried the symbol just consumed, so no
    # count can go negative here; canonicalize would reject it anyway.
    return canonicalize(gamma.ctype, [(s.k, s.l, m) for s, m in totals.items()])


def lowering_operator(gamma: Multisegment, i: int) -> Multisegment:
    """Add one box of color i.  Total, and always raises epsilon by one."""
    ctype = gamma.ctype
    sig = reduce_signature(signature_word(gamma, i))
    if sig.pluses:
        k = sig.pluses[0].segment.k  # leftmost surviving plus, pair (k, i-1)
        grow = canonical_segment(ctype, k, i)
        shrink = canonical_segment(ctype, k, i - 1)
        return _rebuild(gamma, {grow: +1, shrink: -1})
    fresh = canonical_segment(ctype, i, i)
    return _rebuild(gamma, {fresh: +1})


def raising_operator(gamma: Multisegment, i: int) -> Multisegment | None:
    """Remove one box of color i, or return None when epsilon is zero."""
    ctype = gamma.ctype
    sig = reduce_signature(signature_word(gamma, i))
    if not sig.minuses:
        return None
    k = sig.minuses[-1].segment.k  # rightmost surviving minus, pair (k, i)
    shrink = canonical_segment(ctype, k, i)
    if k == i:
        # The segment is (i, i); shrinking it just deletes one copy.
        return _rebuild(gamma, {shrink: -1})
    grow = canonical_segment(ctype, k, i - 1)
    return _rebuild(gamma, {shrink: -1, grow: +1})


def apply_word(
    gamma: Multisegment, ops: Iterable[tuple[str, int]]
) -> Multisegment | None:
    """Apply (op, index) pairs left to right; None is absorbing."""
    current: Multisegment | None = gamma
    for op, i in ops:
        if current is None:
            return None
        if op == "f":
            current = lowering_operator(current, i)
        elif op == "e":
            current = raising_operator(current, i)
        else:
            raise ValueError(f"unknown operator {op!r} (expected 'e' or 'f')")
    return current


def negate_index(ctype: CartanType, i: int) -> int:
    """The residue -i mod n+1.  Affine only; an involution on 0..n."""
    if not ctype.is_affine:
        raise ValueError("index negation is only defined for affine type")
    ctype.check_index(i)
    return (-i) % (ctype.n + 1)
