"""Young walls as a twisted affine model of the same crystal.

A wall is encoded purely by its added material: a multiset of bars, each a
color c in 0..n together with an extent m >= 0 counting the blocks to the
left of the rightmost slice.  A bar of color c and extent m translates to
one copy of the affine segment (k, k+m) with k = -c mod n+1, and the wall
is proper exactly when that multisegment is aperiodic.

Wall operators are transported through this translation with the index
twist i <-> -i mod n+1: lowering a wall at i lowers the multisegment at
the negated index and translates back.  The translation of a lowered
proper wall is again aperiodic, so the round trip never leaves the model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, TYPE_CHECKING

from .crystal_ops import epsilon, lowering_operator, negate_index, phi, raising_operator
from .multisegment import Multisegment, canonicalize
from .oracle import enumerate_by_degree
from .root_data import CartanType

if TYPE_CHECKING:
    from .crystal_graph import CrystalGraph, VerificationReport


class WallBar(NamedTuple):
    color: int
    extent: int


@dataclass(frozen=True)
class YoungWall:
    ctype: CartanType
    bars: tuple[WallBar, ...]

    @classmethod
    def from_bars(
        cls, ctype: CartanType, bars: Iterable[tuple[int, int]]
    ) -> "YoungWall":
        if not ctype.is_affine:
            raise ValueError("Young walls exist for affine type only")
        cleaned = []
        for color, extent in bars:
            if extent < 0:
                raise ValueError(f"bar extent must be nonnegative, got {extent}")
            cleaned.append(WallBar(color % (ctype.n + 1), extent))
        # Rendering order: longest bars first, then by color.
        cleaned.sort(key=lambda bar: (-bar.extent, bar.color))
        return cls(ctype, tuple(cleaned))

    @classmethod
    def empty(cls, ctype: CartanType) -> "YoungWall":
        return cls.from_bars(ctype, [])

    def to_multisegment(self) -> Multisegment:
        period = self.ctype.n + 1
        return canonicalize(
            self.ctype,
            [
                ((-bar.color) % period, (-bar.color) % period + bar.extent, 1)
                for bar in self.bars
            ],
        )

    @classmethod
    def from_multisegment(cls, gamma: Multisegment) -> "YoungWall":
        if not gamma.ctype.is_affine:
            raise ValueError("Young walls exist for affine type only")
        if not gamma.is_aperiodic():
            raise ValueError("a periodic multisegment has no proper wall")
        period = gamma.ctype.n + 1
        bars = []
        for (k, l), mult in gamma.items():
            bars.extend([((-k) % period, l - k)] * mult)
        return cls.from_bars(gamma.ctype, bars)

    def is_proper(self) -> bool:
        return self.to_multisegment().is_aperiodic()


def wall_lowering(wall: YoungWall, i: int) -> YoungWall:
    lowered = lowering_operator(wall.to_multisegment(), negate_index(wall.ctype, i))
    return YoungWall.from_multisegment(lowered)


def wall_raising(wall: YoungWall, i: int) -> YoungWall | None:
    raised = raising_operator(wall.to_multisegment(), negate_index(wall.ctype, i))
    if raised is None:
        return None
    return YoungWall.from_multisegment(raised)


def wall_epsilon(wall: YoungWall, i: int) -> int:
    return epsilon(wall.to_multisegment(), negate_index(wall.ctype, i))


def wall_phi(wall: YoungWall, i: int) -> int:
    return phi(wall.to_multisegment(), negate_index(wall.ctype, i))


def wall_dim_vector(wall: YoungWall) -> tuple[int, ...]:
    """Dimension vector in wall coordinates: entry i counts color -i boxes."""
    ctype = wall.ctype
    dim = wall.to_multisegment().dim_vector()
    return tuple(dim[negate_index(ctype, i)] for i in ctype.index_set())


def render_ascii(wall: YoungWall) -> str:
    """One line per bar; colors decrease by one (mod n+1) leftward.

    The rightmost cell shows the bar color, so a bar (c=0, m=2) at n=2
    prints as ``1 2 0``.
    """
    period = wall.ctype.n + 1
    lines = []
    for color, extent in wall.bars:
        cells = [(color - extent + t) % period for t in range(extent + 1)]
        lines.append(" ".join(str(c) for c in cells))
    return "\n".join(lines)


def wall_to_json(wall: YoungWall) -> str:
    return json.dumps(
        {"bars": [{"c": bar.color, "m": bar.extent} for bar in wall.bars]}
    )


def verify_wall_model(
    n: int, depth: int, graph: "CrystalGraph | None" = None
) -> "VerificationReport":
    """Round trips and the twisted crystal laws over all elements to depth.

    The wall of every aperiodic multisegment must translate back to it,
    periodic multisegments must be rejected, and the transported operators
    must invert each other, raise epsilon by one, add one box of the
    twisted color, and preserve properness.
    """
    from .crystal_graph import VerificationReport, generate

    ctype = CartanType.affine_a(n)
    if graph is None:
        graph = generate(ctype, depth)
    elif graph.ctype != ctype or graph.depth_bound != depth:
        raise ValueError("supplied graph does not match the requested sweep")
    report = VerificationReport("youngwall")
    for degree in range(depth + 1):
        for gamma in enumerate_by_degree(ctype, degree):
            report.checks += 1
            if gamma.is_aperiodic():
                wall = YoungWall.from_multisegment(gamma)
                if wall.to_multisegment() != gamma:
                    report.violations.append(
                        f"translation round trip fails at {gamma.label()}"
                    )
                if not wall.is_proper():
                    report.violations.append(
                        f"wall of aperiodic {gamma.label()} is not proper"
                    )
            else:
                try:
                    YoungWall.from_multisegment(gamma)
                except ValueError:
                    pass
                else:
                    report.violations.append(
                        f"periodic {gamma.label()} produced a wall"
                    )
    for node in graph.nodes:
        wall = YoungWall.from_multisegment(node.gamma)
        base_dim = wall_dim_vector(wall)
        for i in ctype.index_set():
            report.checks += 1
            lowered = wall_lowering(wall, i)
            if not lowered.is_proper():
                report.violations.append(
                    f"lowering({i}) broke properness at {node.gamma.label()}"
                )
            if wall_raising(lowered, i) != wall:
                report.violations.append(
                    f"wall raising({i}) does not undo lowering at {node.gamma.label()}"
                )
            if wall_epsilon(lowered, i) != wall_epsilon(wall, i) + 1:
                report.violations.append(
                    f"wall epsilon({i}) did not rise by one at {node.gamma.label()}"
                )
            grown = list(base_dim)
            grown[ctype.index_position(i)] += 1
            if wall_dim_vector(lowered) != tuple(grown):
                report.violations.append(
                    f"wall weight did not add one {i}-box at {node.gamma.label()}"
                )
    return report
