"""
A small gallery of Young walls
==============================

Walls of colored bars realize the affine crystal through an index twist:
acting at i on the wall is acting at -i (mod n+1) on its multisegment.
Each bar prints as its blocks, rightmost block showing the bar's color.
"""

from segcrystal import (
    CartanType,
    YoungWall,
    enumerate_by_degree,
    render_ascii,
    wall_lowering,
    wall_to_json,
)

# Walk a short word of wall operators from the empty wall, rendering as
# we go.  Colors decrease leftward along a bar, wrapping mod n+1.
ctype = CartanType.affine_a(2)
wall = YoungWall.empty(ctype)
print("growing a wall with lowering at 0, 2, 2, 1:")
for i in (0, 2, 2, 1):
    wall = wall_lowering(wall, i)
    print(f"\nafter lowering at {i}:  (segments: {wall.to_multisegment().label()})")
    print(render_ascii(wall) or "  (empty)")

# The JSON form keeps just the bars.
print("\nas JSON:", wall_to_json(wall))

# Properness of the wall is exactly aperiodicity of its multisegment:
# periodic multisegments have no wall at all.
print("\ndegree-3 multisegments and their walls (n = 1):")
rank_one = CartanType.affine_a(1)
for gamma in enumerate_by_degree(rank_one, 3):
    if gamma.is_aperiodic():
        bars = YoungWall.from_multisegment(gamma).bars
        summary = ", ".join(f"color {b.color} x{b.extent + 1}" for b in bars)
        print(f"  {gamma.label():<16} -> {summary}")
    else:
        print(f"  {gamma.label():<16} -> no proper wall (periodic)")
