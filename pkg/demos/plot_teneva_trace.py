"""
Dropping colors from T(2, 5) and T(2, 7)
========================================

A kink and a run of R3 moves pull one strand up through the braid.  Every
R3 move brings in one color and, from the second move on, retires one.
"""

from foxcol import braid_coloring, palette_of, teneva_sequence, teneva_transform

###############################################################################
# The moves for T(2, 5)
# ---------------------
#
# Sites refer to PD edges and crossings of the diagram being moved.

for m in teneva_sequence(5, 2):
    print(m.kind, m.site, m.variant or "")

###############################################################################
# Run them on the coloring ``0, 1, 2, 3, 4``.

out, trace = teneva_transform(braid_coloring(5, 5, 0, 1), 2)
for s in trace.steps:
    print(f"{s.move.kind:7s} in {sorted(s.introduced)} out {sorted(s.removed)} "
          f"-> {s.palette_size_after} colors")
print("final palette:", sorted(palette_of(out).colors))

###############################################################################
# Step count matters
# ------------------
#
# For ``p = 7`` the palette is smallest after ``k = 3`` moves and grows again
# afterwards.

cd = braid_coloring(7, 7, 0, 1)
for steps in range(1, 7):
    _, trace = teneva_transform(cd, steps)
    print(f"steps={steps}: {trace.palette_sizes()}")
