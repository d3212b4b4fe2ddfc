"""Young walls: translation, transported operators, properness, rendering."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segcrystal import (
    CartanType,
    Multisegment,
    Segment,
    WallBar,
    YoungWall,
    canonicalize,
    enumerate_by_degree,
    epsilon,
    lowering_operator,
    negate_index,
    phi,
    render_ascii,
    verify_wall_model,
    wall_dim_vector,
    wall_epsilon,
    wall_lowering,
    wall_phi,
    wall_raising,
    wall_to_json,
)


class TestTranslation:
    def test_single_bar(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(1, 1)])
        assert wall.to_multisegment() == canonicalize(ct, [(2, 3, 1)])

    def test_color_zero_bar(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(0, 2)])
        assert wall.to_multisegment() == canonicalize(ct, [(0, 2, 1)])

    def test_multiset_of_bars(self):
        ct = CartanType.affine_a(1)
        wall = YoungWall.from_bars(ct, [(1, 0), (1, 0), (0, 1)])
        gamma = wall.to_multisegment()
        assert gamma == canonicalize(ct, [(1, 1, 2), (0, 1, 1)])

    def test_from_multisegment_round_trip(self):
        ct = CartanType.affine_a(2)
        gamma = canonicalize(ct, [(0, 1, 1), (2, 2, 3)])
        wall = YoungWall.from_multisegment(gamma)
        assert wall.to_multisegment() == gamma

    def test_periodic_rejected(self):
        ct = CartanType.affine_a(1)
        gamma = Multisegment(
            ct, ((Segment(0, 0), 1), (Segment(1, 1), 1))
        )
        assert not gamma.is_aperiodic()
        with pytest.raises(ValueError):
            YoungWall.from_multisegment(gamma)

    def test_finite_rejected(self):
        with pytest.raises(ValueError):
            YoungWall.from_bars(CartanType.finite_a(2), [])
        gamma = canonicalize(CartanType.finite_a(2), [(1, 1, 1)])
        with pytest.raises(ValueError):
            YoungWall.from_multisegment(gamma)

    def test_negative_extent_rejected(self):
        with pytest.raises(ValueError):
            YoungWall.from_bars(CartanType.affine_a(1), [(0, -1)])

    def test_bars_sorted_longest_first(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(2, 0), (0, 3), (1, 1)])
        assert wall.bars == (WallBar(0, 3), WallBar(1, 1), WallBar(2, 0))

    @given(st.integers(min_value=1, max_value=3), st.data())
    @settings(max_examples=30, deadline=None)
    def test_round_trip_over_enumeration(self, n, data):
        ct = CartanType.affine_a(n)
        degree = data.draw(st.integers(min_value=0, max_value=4))
        for gamma in enumerate_by_degree(ct, degree):
            if gamma.is_aperiodic():
                assert YoungWall.from_multisegment(gamma).to_multisegment() == gamma
            else:
                with pytest.raises(ValueError):
                    YoungWall.from_multisegment(gamma)


class TestWallOperators:
    def test_lowering_on_empty(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.empty(ct)
        assert wall_lowering(wall, 1).bars == (WallBar(1, 0),)
        assert wall_lowering(wall, 0).bars == (WallBar(0, 0),)

    def test_transport_matches_negated_index(self):
        ct = CartanType.affine_a(2)
        gamma = canonicalize(ct, [(1, 1, 1), (2, 3, 1)])
        wall = YoungWall.from_multisegment(gamma)
        for i in ct.index_set():
            j = negate_index(ct, i)
            assert wall_lowering(wall, i).to_multisegment() == lowering_operator(
                gamma, j
            )
            assert wall_epsilon(wall, i) == epsilon(gamma, j)
            assert wall_phi(wall, i) == phi(gamma, j)

    def test_raising_none_on_empty(self):
        ct = CartanType.affine_a(1)
        assert wall_raising(YoungWall.empty(ct), 0) is None
        assert wall_raising(YoungWall.empty(ct), 1) is None

    def test_raising_undoes_lowering(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(0, 1), (2, 2)])
        for i in ct.index_set():
            assert wall_raising(wall_lowering(wall, i), i) == wall

    def test_dim_vector_relabels(self):
        ct = CartanType.affine_a(2)
        gamma = canonicalize(ct, [(0, 1, 1)])  # residues 0 and 1
        wall = YoungWall.from_multisegment(gamma)
        # Residue r of the multisegment shows up as wall color -r mod 3.
        assert gamma.dim_vector() == (1, 1, 0)
        assert wall_dim_vector(wall) == (1, 0, 1)

    def test_lowering_adds_box_of_its_color(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(1, 1)])
        base = wall_dim_vector(wall)
        for i in ct.index_set():
            grown = list(base)
            grown[ct.index_position(i)] += 1
            assert wall_dim_vector(wall_lowering(wall, i)) == tuple(grown)


class TestRendering:
    def test_two_block_bar(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(0, 2)])
        assert render_ascii(wall) == "1 2 0"

    def test_rank_one_bar(self):
        ct = CartanType.affine_a(1)
        wall = YoungWall.from_bars(ct, [(1, 1)])
        assert render_ascii(wall) == "0 1"

    def test_multiline_longest_first(self):
        ct = CartanType.affine_a(1)
        wall = YoungWall.from_bars(ct, [(0, 0), (1, 1)])
        assert render_ascii(wall) == "0 1\n0"

    def test_empty_wall(self):
        assert render_ascii(YoungWall.empty(CartanType.affine_a(2))) == ""

    def test_json_form(self):
        ct = CartanType.affine_a(2)
        wall = YoungWall.from_bars(ct, [(1, 1), (0, 0)])
        assert json.loads(wall_to_json(wall)) == {
            "bars": [{"c": 1, "m": 1}, {"c": 0, "m": 0}]
        }


class TestModelAgreement:
    @pytest.mark.parametrize("n,depth", [(1, 5), (2, 4)])
    def test_sweep(self, n, depth):
        report = verify_wall_model(n, depth)
        assert report.violations == []
        assert report.checks > 0

    def test_rejects_mismatched_graph(self):
        from segcrystal import generate

        graph = generate(CartanType.affine_a(2), 2)
        with pytest.raises(ValueError):
            verify_wall_model(1, 2, graph=graph)
