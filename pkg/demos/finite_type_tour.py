"""
A first tour of the finite-type crystal
=======================================

Grow the graph from the empty multisegment, look at a few nodes, and
check the node count of each weight against two independent answers.
"""

from segcrystal import (
    CartanType,
    Multisegment,
    apply_word,
    enumerate_multisegments,
    generate,
    kostant_count,
    weight_multiplicities,
)

# Everything starts from the empty multisegment.  Lowering at index i
# either extends a segment ending at i-1 or starts the new segment (i, i).
ctype = CartanType.finite_a(2)
empty = Multisegment.empty(ctype)
print("f_2 then f_1 from the empty multisegment:")
print(" ", apply_word(empty, [("f", 2), ("f", 1)]).label())

# Breadth-first closure under lowering, up to four boxes.
graph = generate(ctype, depth=4)
print(f"\ndepth 4 graph: {len(graph)} nodes, {len(graph.edges)} edges")

# The first two levels, with their cached statistics.
for node in graph.nodes[:6]:
    print(
        f"  {node.gamma.label():<14} weight={node.weight} "
        f"eps={node.eps} phi={node.phi}"
    )

# Every weight appears with a predictable multiplicity.  The same number
# falls out of a direct enumeration and of a closed-form count over the
# segment supports, neither of which touches the operators.
print("\nweight multiplicities, three ways:")
counts = weight_multiplicities(graph)
for beta in ((1, 1), (2, 1), (2, 2)):
    from_graph = counts[beta]
    from_enum = len(enumerate_multisegments(ctype, beta))
    from_formula = kostant_count(ctype.n, beta)
    print(f"  beta={beta}: graph={from_graph} enum={from_enum} formula={from_formula}")
    assert from_graph == from_enum == from_formula
