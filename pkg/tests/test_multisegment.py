"""Multisegments: canonical form, weights, aperiodicity."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segcrystal import (
    CartanType,
    Multisegment,
    Segment,
    canonical_segment,
    canonicalize,
)

from conftest import cartan_types, multisegments, raw_segment_lists


class TestCanonicalSegment:
    def test_rejects_reversed(self):
        ct = CartanType.finite_a(3)
        with pytest.raises(ValueError):
            canonical_segment(ct, 3, 1)

    def test_finite_bounds(self):
        ct = CartanType.finite_a(3)
        assert canonical_segment(ct, 1, 3) == Segment(1, 3)
        with pytest.raises(ValueError):
            canonical_segment(ct, 0, 2)
        with pytest.raises(ValueError):
            canonical_segment(ct, 2, 4)

    def test_affine_translation(self):
        ct = CartanType.affine_a(2)
        assert canonical_segment(ct, 3, 4) == Segment(0, 1)
        assert canonical_segment(ct, -1, 0) == Segment(2, 3)
        assert canonical_segment(ct, 0, 5) == Segment(0, 5)

    @given(st.integers(min_value=-20, max_value=20), st.integers(min_value=0, max_value=8))
    def test_affine_start_lands_in_window(self, k, span):
        ct = CartanType.affine_a(2)
        seg = canonical_segment(ct, k, k + span)
        assert 0 <= seg.k <= ct.n
        assert seg.l - seg.k == span


class TestCanonicalize:
    def test_merges_translates(self):
        ct = CartanType.affine_a(2)
        gamma = canonicalize(ct, [(3, 4, 1), (0, 1, 2)])
        assert gamma.items() == ((Segment(0, 1), 3),)

    def test_drops_zero_multiplicity(self):
        ct = CartanType.finite_a(2)
        assert canonicalize(ct, [(1, 1, 0)]).is_empty()

    def test_rejects_negative_multiplicity(self):
        ct = CartanType.finite_a(2)
        with pytest.raises(ValueError):
            canonicalize(ct, [(1, 1, -1)])

    @given(cartan_types(), st.data())
    def test_idempotent(self, ctype, data):
        gamma = data.draw(multisegments(ctype))
        again = canonicalize(ctype, [(s.k, s.l, m) for s, m in gamma.items()])
        assert again == gamma

    @given(cartan_types(), st.data())
    def test_entries_sorted_and_positive(self, ctype, data):
        gamma = data.draw(multisegments(ctype))
        segs = [s for s, _ in gamma.items()]
        assert segs == sorted(segs)
        assert len(set(segs)) == len(segs)
        assert all(m > 0 for _, m in gamma.items())


class TestWeightData:
    def test_dim_vector_finite(self):
        ct = CartanType.finite_a(3)
        gamma = canonicalize(ct, [(1, 3, 1), (2, 2, 2)])
        assert gamma.dim_vector() == (1, 3, 1)

    def test_dim_vector_affine_wraps(self):
        ct = CartanType.affine_a(1)
        gamma = canonicalize(ct, [(0, 3, 1)])
        assert gamma.dim_vector() == (2, 2)

    def test_total_degree(self):
        ct = CartanType.affine_a(1)
        gamma = canonicalize(ct, [(0, 3, 1), (1, 1, 2)])
        assert gamma.total_degree() == 6
        assert sum(gamma.dim_vector()) == 6

    @given(cartan_types(), st.data())
    def test_dim_additive_under_union(self, ctype, data):
        a = data.draw(multisegments(ctype))
        b = data.draw(multisegments(ctype))
        merged = canonicalize(
            ctype,
            [(s.k, s.l, m) for s, m in a.items()]
            + [(s.k, s.l, m) for s, m in b.items()],
        )
        assert merged.dim_vector() == tuple(
            x + y for x, y in zip(a.dim_vector(), b.dim_vector())
        )


class TestAperiodicity:
    def test_finite_always_aperiodic(self):
        ct = CartanType.finite_a(2)
        gamma = canonicalize(ct, [(1, 1, 1), (2, 2, 1)])
        assert gamma.is_aperiodic()

    def test_full_gap_class_is_periodic(self):
        ct = CartanType.affine_a(1)
        gamma = canonicalize(ct, [(0, 0, 1), (1, 1, 1)])
        assert not gamma.is_aperiodic()

    def test_repeats_of_one_start_stay_aperiodic(self):
        ct = CartanType.affine_a(1)
        gamma = canonicalize(ct, [(0, 0, 2)])
        assert gamma.is_aperiodic()

    def test_mixed_gaps(self):
        ct = CartanType.affine_a(1)
        gamma = canonicalize(ct, [(0, 0, 1), (1, 2, 1)])
        assert gamma.is_aperiodic()
        worse = canonicalize(ct, [(0, 0, 1), (1, 2, 1), (1, 1, 1), (0, 1, 1)])
        assert not worse.is_aperiodic()

    def test_periodicity_needs_every_start(self):
        ct = CartanType.affine_a(2)
        two_of_three = canonicalize(ct, [(0, 0, 1), (1, 1, 1)])
        assert two_of_three.is_aperiodic()
        all_three = canonicalize(ct, [(0, 0, 1), (1, 1, 1), (2, 2, 1)])
        assert not all_three.is_aperiodic()


class TestLabels:
    def test_empty_label(self):
        assert Multisegment.empty(CartanType.finite_a(2)).label() == "1"

    def test_label_lists_entries(self):
        ct = CartanType.finite_a(2)
        gamma = canonicalize(ct, [(1, 2, 1), (1, 1, 2)])
        assert gamma.label() == "1-1:2,1-2:1"

    @given(cartan_types(), st.data())
    def test_counts_copy_is_fresh(self, ctype, data):
        gamma = data.draw(multisegments(ctype))
        counts = gamma.counts()
        counts[Segment(1, 1)] = 99
        assert dict(gamma.items()) == gamma.counts()
        assert gamma.counts() is not counts
