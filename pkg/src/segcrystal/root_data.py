"""Cartan data for the two type A families handled by this package.

``finiteA`` of rank n has vertices 1..n arranged on a path; ``affineA`` of
rank n has vertices 0..n arranged on a cycle, so indices behave like
residues mod n+1.  The n = 1 cycle degenerates to a double bond and gets
the off-diagonal entries -2.

Weights travel through the code as nonnegative dimension vectors over the
vertex set.  A vector v stands for the weight -sum_i v_i * alpha_i; the
minus sign is applied only inside :meth:`CartanType.pairing`, never in
stored data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

FINITE_A = "finiteA"
AFFINE_A = "affineA"


@dataclass(frozen=True)
class CartanType:
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in (FINITE_A, AFFINE_A):
            raise ValueError(f"unknown Cartan kind {self.kind!r}")
        if self.n < 1:
            raise ValueError(f"rank must be at least 1, got {self.n}")

    @classmethod
    def finite_a(cls, n: int) -> "CartanType":
        return cls(FINITE_A, n)

    @classmethod
    def affine_a(cls, n: int) -> "CartanType":
        return cls(AFFINE_A, n)

    @property
    def is_affine(self) -> bool:
        return self.kind == AFFINE_A

    def index_set(self) -> tuple[int, ...]:
        """Vertex labels in the fixed order used for all array-shaped data."""
        if self.is_affine:
            return tuple(range(self.n + 1))
        return tuple(range(1, self.n + 1))

    def check_index(self, i: int) -> None:
        lo = 0 if self.is_affine else 1
        if not isinstance(i, int) or not lo <= i <= self.n:
            raise ValueError(
                f"index {i!r} outside the {self.kind} rank-{self.n} vertex set"
            )

    def index_position(self, i: int) -> int:
        """Position of vertex i inside :meth:`index_set`."""
        self.check_index(i)
        return i if self.is_affine else i - 1

    def cartan_entry(self, i: int, j: int) -> int:
        self.check_index(i)
        self.check_index(j)
        if i == j:
            return 2
        if not self.is_affine:
            return -1 if abs(i - j) == 1 else 0
        if self.n == 1:
            # Double bond between the two vertices of the 2-cycle.
            return -2
        return -1 if (i - j) % (self.n + 1) in (1, self.n) else 0

    def pairing(self, i: int, dim: Sequence[int]) -> int:
        """Evaluate h_i against the weight -sum_j dim_j * alpha_j."""
        idx = self.index_set()
        if len(dim) != len(idx):
            raise ValueError(
                f"dimension vector has {len(dim)} entries, expected {len(idx)}"
            )
        return -sum(self.cartan_entry(i, j) * dim[pos] for pos, j in enumerate(idx))

    def zero_vector(self) -> tuple[int, ...]:
        return (0,) * len(self.index_set())

    def unit_vector(self, i: int) -> tuple[int, ...]:
        pos = self.index_position(i)
        vec = [0] * len(self.index_set())
        vec[pos] = 1
        return tuple(vec)
