"""Multisegments, the combinatorial objects the whole package acts on.

A segment (k, l) with k <= l covers the vertices k..l of a finite type A
diagram, or the residues k..l mod n+1 of an affine one.  Affine segments
are only meaningful up to shifting both ends by a multiple of n+1, so we
keep the unique translate with k in {0..n}; that makes structural
equality, hashing, and sorted iteration exact.

A multisegment is a finite multiset of segments, stored as a tuple of
(segment, multiplicity) pairs sorted by (k, l) with every multiplicity
positive.  Build instances through :func:`canonicalize`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .root_data import CartanType


class Segment(NamedTuple):
    k: int
    l: int


def canonical_segment(ctype: CartanType, k: int, l: int) -> Segment:
    """Validate (k, l) and, in affine type, shift it so k lands in 0..n."""
    if k > l:
        raise ValueError(f"segment ({k}, {l}) has k > l")
    if ctype.is_affine:
        shift = k % (ctype.n + 1) - k
        return Segment(k + shift, l + shift)
    if k < 1 or l > ctype.n:
        raise ValueError(
            f"segment ({k}, {l}) outside the finite rank-{ctype.n} range 1..{ctype.n}"
        )
    return Segment(k, l)


@dataclass(frozen=True)
class Multisegment:
    ctype: CartanType
    entries: tuple[tuple[Segment, int], ...]

    @classmethod
    def empty(cls, ctype: CartanType) -> "Multisegment":
        return cls(ctype, ())

    def items(self) -> tuple[tuple[Segment, int], ...]:
        """Entries sorted by (k, l); the iteration order of every export."""
        return self.entries

    def counts(self) -> dict[Segment, int]:
        return dict(self.entries)

    def multiplicity(self, k: int, l: int) -> int:
        seg = canonical_segment(self.ctype, k, l)
        for stored, mult in self.entries:
            if stored == seg:
                return mult
        return 0

    def is_empty(self) -> bool:
        return not self.entries

    def total_degree(self) -> int:
        return sum(self.dim_vector())

    def dim_vector(self) -> tuple[int, ...]:
        """Count vertex occurrences: v_i = total coverage of vertex/residue i."""
        vec = [0] * len(self.ctype.index_set())
        if self.ctype.is_affine:
            period = self.ctype.n + 1
            for (k, l), mult in self.entries:
                for r in range(k, l + 1):
                    vec[r % period] += mult
        else:
            for (k, l), mult in self.entries:
                for r in range(k, l + 1):
                    vec[r - 1] += mult
        return tuple(vec)

    def is_aperiodic(self) -> bool:
        """True unless some segment length is present at all n+1 translates.

        Finite multisegments are vacuously aperiodic.  In affine type the
        n+1 translates of (k, l) are exactly the canonical segments with
        gap l-k, so periodicity means some gap class uses every k in 0..n.
        """
        if not self.ctype.is_affine:
            return True
        by_gap: dict[int, set[int]] = {}
        for (k, l), _ in self.entries:
            by_gap.setdefault(l - k, set()).add(k)
        return all(len(ks) <= self.ctype.n for ks in by_gap.values())

    def label(self) -> str:
        """Compact rendering used by the DOT and text exports."""
        if not self.entries:
            return "1"
        return ",".join(f"{k}-{l}:{m}" for (k, l), m in self.entries)


def canonicalize(
    ctype: CartanType, raw: Iterable[tuple[int, int, int]]
) -> Multisegment:
    """Build a multisegment from raw (k, l, multiplicity) triples.

    Affine segments are shifted into the canonical frame, multiplicities of
    coinciding segments are summed, and zero entries are dropped.  Negative
    multiplicities are rejected.
    """
    totals: dict[Segment, int] = {}
    for k, l, mult in raw:
        if mult < 0:
            raise ValueError(f"negative multiplicity {mult} for segment ({k}, {l})")
        if mult == 0:
            continue
        seg = canonical_segment(ctype, k, l)
        totals[seg] = totals.get(seg, 0) + mult
    return Multisegment(ctype, tuple(sorted(totals.items())))
