"""
Counting colorings of the trefoil
=================================

The trefoil is the closure of the 2-braid ``s1^3``.  We count its
``r``-colorings, list the nine 3-colorings and check the count against
``gcd(n, r) * r`` for the whole torus family.
"""

import math

from foxcol import (ColoredDiagram, color_spectrum, count_colorings, enumerate_colorings,
                    palette_of, torus_diagram)

###############################################################################
# Build the diagram
# -----------------
#
# Arcs are numbered so that crossing ``i`` ends arc ``i``.

trefoil = torus_diagram(3)
for i, c in enumerate(trefoil.crossings, 1):
    print(f"crossing {i}: over {c.over}, under {c.under_in} -> {c.under_out}")

###############################################################################
# Nine 3-colorings
# ----------------
#
# Three of them are constant.  The other six use all three colors.

for col in enumerate_colorings(trefoil, 3):
    cd = ColoredDiagram(trefoil, col)
    print(dict(col.assignment), "colors used:", palette_of(cd).size)

###############################################################################
# The spectrum
# ------------

for r, count in color_spectrum(trefoil, 9):
    print(f"r={r}: {count} colorings")

###############################################################################
# The torus family follows ``gcd(n, r) * r``.

bad = [(n, r) for n in range(2, 10) for r in range(2, 16)
       if count_colorings(torus_diagram(n), r) != math.gcd(n, r) * r]
print("exceptions:", bad)
