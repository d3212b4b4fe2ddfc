"""Shared strategies and reference implementations for property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from segcrystal import CartanType, Multisegment, canonicalize
from segcrystal.crystal_ops import MINUS, PLUS, ReducedSignature, SignedEntry


@st.composite
def cartan_types(draw, max_n: int = 4, affine: bool | None = None) -> CartanType:
    if affine is None:
        affine = draw(st.booleans())
    n = draw(st.integers(min_value=1, max_value=max_n))
    return CartanType.affine_a(n) if affine else CartanType.finite_a(n)


@st.composite
def raw_segment_lists(draw, ctype: CartanType, max_segments: int = 6):
    """Raw (k, l, mult) triples acceptable to canonicalize."""
    if ctype.is_affine:
        starts = st.integers(min_value=-6, max_value=ctype.n + 6)
        spans = st.integers(min_value=0, max_value=5)
    else:
        starts = st.integers(min_value=1, max_value=ctype.n)
        spans = st.integers(min_value=0, max_value=ctype.n - 1)
    triples = st.tuples(starts, spans, st.integers(min_value=0, max_value=3))
    raw = draw(st.lists(triples, max_size=max_segments))
    out = []
    for k, span, mult in raw:
        l = k + span
        if not ctype.is_affine and l > ctype.n:
            l = ctype.n
        out.append((k, l, mult))
    return out


@st.composite
def multisegments(draw, ctype: CartanType | None = None, max_segments: int = 6):
    if ctype is None:
        ctype = draw(cartan_types())
    raw = draw(raw_segment_lists(ctype, max_segments=max_segments))
    return canonicalize(ctype, raw)


@st.composite
def lowering_words(draw, ctype: CartanType, max_length: int = 8):
    indices = st.sampled_from(ctype.index_set())
    return [("f", i) for i in draw(st.lists(indices, max_size=max_length))]


def naive_reduce(word) -> ReducedSignature:
    """Reference cancellation: repeatedly delete one adjacent +,- pair.

    Quadratic but obviously correct; the production version uses a single
    stack pass.
    """
    entries: list[SignedEntry] = list(word)
    canceled: set[int] = set()
    changed = True
    while changed:
        changed = False
        for a, b in zip(entries, entries[1:]):
            if a.sign == PLUS and b.sign == MINUS:
                canceled.add(a.position)
                canceled.add(b.position)
                entries = [e for e in entries if e is not a and e is not b]
                changed = True
                break
    minuses = tuple(e for e in entries if e.sign == MINUS)
    pluses = tuple(e for e in entries if e.sign == PLUS)
    return ReducedSignature(minuses, pluses, frozenset(canceled))
