"""
Aperiodicity in the affine crystal
==================================

In affine type the operators never produce a multisegment that uses all
n+1 starting residues of one segment length.  This script watches that
exclusion happen at the smallest possible size.
"""

from segcrystal import (
    CartanType,
    aperiodic_count,
    canonicalize,
    enumerate_multisegments,
    generate,
)

# For n = 1 there are two residues, 0 and 1, and segments wrap around:
# the canonical translate of (2, 3) is (0, 1).
ctype = CartanType.affine_a(1)
print("canonical translate of (2,3):", canonicalize(ctype, [(2, 3, 1)]).label())

# Weight (1, 1) — one box of each residue — has three multisegments...
everything = enumerate_multisegments(ctype, (1, 1))
print("\nall multisegments of weight (1,1):")
for gamma in everything:
    tag = "aperiodic" if gamma.is_aperiodic() else "PERIODIC"
    print(f"  {gamma.label():<12} {tag}")

# ...but the one holding both length-1 segments (0,0) and (1,1) is
# periodic: its gap class fills every residue.  The graph skips it.
graph = generate(ctype, depth=2)
reachable = {node.gamma for node in graph.nodes}
periodic = canonicalize(ctype, [(0, 0, 1), (1, 1, 1)])
print("\nperiodic element reachable by lowering?", periodic in reachable)

# The filtered count agrees with what the graph actually contains,
# weight by weight.
for beta in ((1, 1), (2, 1), (2, 2)):
    deep = generate(ctype, depth=sum(beta))
    from_graph = sum(1 for node in deep.nodes if node.weight == beta)
    from_filter = aperiodic_count(ctype.n, beta)
    print(f"beta={beta}: graph={from_graph} filtered enumeration={from_filter}")
    assert from_graph == from_filter
