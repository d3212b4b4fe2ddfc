"""Large semistandard tableaux as an independent model of the same crystal.

A rank-n tableau here has exactly n nonempty rows, entries 1..n+1, weakly
increasing rows, strictly increasing columns, no entry smaller than its row
index, and the largeness condition: row i starts with strictly more copies
of i than row i+1 has boxes in total.  Two large tableaux are equivalent
when, for every i < j, they agree on the number of j-entries in row i;
those counts are the whole class datum and translate segment-by-segment
into a finite-type multisegment.

The tableau lowering operator reads the cells column by column from the
right, top to bottom inside a column, marks i-cells as pluses and
(i+1)-cells as minuses, cancels adjacent (+, -) pairs with the plus on the
left, and bumps the leftmost surviving plus from i to i+1.  On any large
tableau the leading i-run of row i supplies surviving pluses, so the
operator is total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, TYPE_CHECKING

from .crystal_ops import lowering_operator
from .multisegment import Multisegment, canonicalize
from .root_data import CartanType

if TYPE_CHECKING:
    from .crystal_graph import CrystalGraph, VerificationReport


@dataclass(frozen=True)
class RowCountMatrix:
    """Counts N(i, j) of j-entries in row i, for 1 <= i < j <= n+1."""

    n: int
    counts: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[tuple[int, int], int]) -> "RowCountMatrix":
        if n < 1:
            raise ValueError("rank must be at least 1")
        cleaned: dict[tuple[int, int], int] = {}
        for (i, j), count in mapping.items():
            if not 1 <= i < j <= n + 1:
                raise ValueError(f"count position ({i}, {j}) outside 1 <= i < j <= {n + 1}")
            if count < 0:
                raise ValueError(f"negative count at ({i}, {j})")
            if count:
                cleaned[(i, j)] = count
        return cls(n, tuple(sorted(cleaned.items())))

    def count(self, i: int, j: int) -> int:
        for pos, value in self.counts:
            if pos == (i, j):
                return value
        return 0

    def to_multisegment(self) -> Multisegment:
        """The j-entries of row i become copies of the segment (i, j-1)."""
        ctype = CartanType.finite_a(self.n)
        return canonicalize(
            ctype, [(i, j - 1, count) for (i, j), count in self.counts]
        )

    @classmethod
    def from_multisegment(cls, gamma: Multisegment) -> "RowCountMatrix":
        if gamma.ctype.is_affine:
            raise ValueError("the tableau model covers finite type only")
        return cls.from_mapping(
            gamma.ctype.n, {(k, l + 1): mult for (k, l), mult in gamma.items()}
        )


@dataclass(frozen=True)
class LargeTableau:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def leading_run(self, i: int) -> int:
        """Number of leading i-entries in row i (rows are 1-based)."""
        row = self.rows[i - 1]
        run = 0
        for value in row:
            if value != i:
                break
            run += 1
        return run

    def check_semistandard(self) -> None:
        if len(self.rows) != self.n or any(not row for row in self.rows):
            raise ValueError(f"expected {self.n} nonempty rows")
        for r, row in enumerate(self.rows, start=1):
            if any(not r <= v <= self.n + 1 for v in row):
                raise ValueError(f"row {r} has an entry outside {r}..{self.n + 1}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {r} is not weakly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths must weakly decrease")
            if any(u >= v for u, v in zip(upper, lower)):
                raise ValueError("columns must strictly increase")

    def check_large(self) -> None:
        for i in range(1, self.n + 1):
            below = len(self.rows[i]) if i < self.n else 0
            if self.leading_run(i) <= below:
                raise ValueError(
                    f"row {i} needs more than {below} leading {i}-entries"
                )

    def validate(self) -> None:
        self.check_semistandard()
        self.check_large()

    def row_counts(self) -> RowCountMatrix:
        """Forget the leading runs; keep only the class datum N(i, j)."""
        counts: dict[tuple[int, int], int] = {}
        for i, row in enumerate(self.rows, start=1):
            for value in row:
                if value > i:
                    counts[(i, value)] = counts.get((i, value), 0) + 1
        return RowCountMatrix.from_mapping(self.n, counts)


def build_representative(counts: RowCountMatrix, pad: int) -> LargeTableau:
    """The representative whose leading run exceeds the next row by ``pad``.

    Rows are assembled bottom up: row i gets len(row i+1) + pad leading
    copies of i followed by its class entries in increasing order.
    """
    if pad < 1:
        raise ValueError("pad must be at least 1")
    rows_reversed: list[tuple[int, ...]] = []
    below = 0
    for i in range(counts.n, 0, -1):
        extras = [
            j
            for j in range(i + 1, counts.n + 2)
            for _ in range(counts.count(i, j))
        ]
        row = tuple([i] * (below + pad) + extras)
        rows_reversed.append(row)
        below = len(row)
    return LargeTableau(counts.n, tuple(reversed(rows_reversed)))


def _reading_cells(tab: LargeTableau) -> Iterator[tuple[int, int, int]]:
    """Cells in reading order: rightmost column first, top to bottom."""
    width = len(tab.rows[0])
    for c in range(width - 1, -1, -1):
        for r, row in enumerate(tab.rows):
            if c < len(row):
                yield r, c, row[c]


def tableau_lowering(tab: LargeTableau, i: int) -> LargeTableau:
    """Bump the leftmost unmatched i-cell to i+1."""
    if not 1 <= i <= tab.n:
        raise ValueError(f"index {i} outside 1..{tab.n}")
    plus_stack: list[tuple[int, int]] = []
    for r, c, value in _reading_cells(tab):
        if value == i:
            plus_stack.append((r, c))
        elif value == i + 1 and plus_stack:
            plus_stack.pop()
    if not plus_stack:
        # Largeness guarantees surviving pluses in row i's leading run.
        raise ValueError(f"no unmatched {i}-cell; tableau is not large enough")
    r, c = plus_stack[0]
    rows = [list(row) for row in tab.rows]
    rows[r][c] = i + 1
    bumped = LargeTableau(tab.n, tuple(tuple(row) for row in rows))
    bumped.check_semistandard()
    return bumped


def tableau_epsilon(tab: LargeTableau, i: int) -> int:
    """Number of unmatched (i+1)-cells in the reading word."""
    if not 1 <= i <= tab.n:
        raise ValueError(f"index {i} outside 1..{tab.n}")
    unmatched_minus = 0
    open_plus = 0
    for _, _, value in _reading_cells(tab):
        if value == i:
            open_plus += 1
        elif value == i + 1:
            if open_plus:
                open_plus -= 1
            else:
                unmatched_minus += 1
    return unmatched_minus


def verify_tableau_model(
    n: int,
    depth: int,
    pad: int,
    graph: "CrystalGraph | None" = None,
) -> "VerificationReport":
    """Check that class translation intertwines the two lowering operators.

    For every multisegment gamma of degree <= depth and every index i:
    lowering the representative tableau and reading off its class must give
    exactly the lowered multisegment, and the tableau's unmatched-minus
    count must equal epsilon.  Needs pad >= depth so every representative
    stays large throughout the sweep.
    """
    from .crystal_graph import VerificationReport, generate

    if pad < depth:
        raise ValueError("pad must be at least the sweep depth")
    ctype = CartanType.finite_a(n)
    if graph is None:
        graph = generate(ctype, depth)
    elif graph.ctype != ctype or graph.depth_bound != depth:
        raise ValueError("supplied graph does not match the requested sweep")
    report = VerificationReport("tableaux")
    for node in graph.nodes:
        gamma = node.gamma
        tab = build_representative(RowCountMatrix.from_multisegment(gamma), pad)
        report.checks += 1
        try:
            tab.validate()
        except ValueError as exc:
            report.violations.append(f"bad representative for {gamma.label()}: {exc}")
            continue
        for i in ctype.index_set():
            report.checks += 1
            if tableau_epsilon(tab, i) != node.eps[i]:
                report.violations.append(
                    f"tableau epsilon mismatch at {gamma.label()}, index {i}"
                )
            bumped = tableau_lowering(tab, i)
            got = bumped.row_counts().to_multisegment()
            want = lowering_operator(gamma, i)
            if got != want:
                report.violations.append(
                    f"tableau lowering disagrees at {gamma.label()}, index {i}: "
                    f"{got.label()} != {want.label()}"
                )
    return report
