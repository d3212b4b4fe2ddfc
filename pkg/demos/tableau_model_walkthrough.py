"""
The tableau model, step by step
===============================

Large semistandard tableaux carry the same crystal: the class of a
tableau — how many j-entries sit in row i — is exactly a finite-type
multisegment, and bumping cells matches the segment operators.
"""

from segcrystal import (
    CartanType,
    RowCountMatrix,
    build_representative,
    canonicalize,
    lowering_operator,
    tableau_epsilon,
    tableau_lowering,
)


def show(tab, caption):
    print(caption)
    for row in tab.rows:
        print("   ", " ".join(str(v) for v in row))


# Start from a multisegment and build its representative tableau: row i
# opens with a run of i-entries (the padding) followed by the class data.
ctype = CartanType.finite_a(2)
gamma = canonicalize(ctype, [(1, 1, 1), (2, 2, 1)])
counts = RowCountMatrix.from_multisegment(gamma)
tab = build_representative(counts, pad=3)
show(tab, f"representative of {gamma.label()} with pad 3:")

# Reading the cells column by column from the right, i-cells are pluses
# and (i+1)-cells are minuses; unmatched minuses give epsilon.
for i in ctype.index_set():
    print(f"epsilon_{i} =", tableau_epsilon(tab, i))

# Bump the leftmost unmatched 2-cell to a 3 and read the class back off:
# it lands on the same multisegment the segment operator produces.
bumped = tableau_lowering(tab, 2)
show(bumped, "\nafter lowering at 2:")
print("class of the bump:", bumped.row_counts().to_multisegment().label())
print("segment operator:  ", lowering_operator(gamma, 2).label())
assert bumped.row_counts().to_multisegment() == lowering_operator(gamma, 2)

# The padding is invisible to the class, so any sufficiently large
# representative tells the same story.
for pad in (2, 4, 6):
    wide = build_representative(counts, pad)
    assert (
        tableau_lowering(wide, 2).row_counts().to_multisegment()
        == lowering_operator(gamma, 2)
    )
print("\nsame class after bumping, for pads 2, 4, and 6")
