"""
A two-bridge knot with determinant 73
=====================================

The 4-plat with twist vector ``[8, -9]`` has 17 arcs and determinant 73.
Every nontrivial 73-coloring of this diagram is injective on arcs.  A beam
search over kink-and-R3 walks finds a diagram that needs only 12 colors.
"""

import time

from foxcol import (ColoredDiagram, determinant, enumerate_colorings, harary_check,
                    palette_of, rational_diagram, teneva_search)

d = rational_diagram([8, -9])
print("arcs:", len(d.arcs), "determinant:", determinant(d))
print("injective on arcs:", harary_check(d, 73))

###############################################################################
# Search
# ------
#
# Two rounds, each extending the ten best diagrams by one transformation.

col = next(c for c in enumerate_colorings(d, 73) if not c.is_trivial)
start = ColoredDiagram(d, col)
t0 = time.perf_counter()
res = teneva_search(start)
print(f"{palette_of(start).size} -> {res.palette_size} colors "
      f"in {time.perf_counter() - t0:.1f} s, {len(res.trace.steps)} moves")
print("sizes along the way:", res.trace.palette_sizes())

###############################################################################
# The smaller example ``[8, -6]`` has determinant 49 and a 7-coloring
# with 7 colors that comes down to 5.

e = rational_diagram([8, -6])
col = next(c for c in enumerate_colorings(e, 7) if not c.is_trivial)
res = teneva_search(ColoredDiagram(e, col))
print("det", determinant(e), "palette", res.palette_size)
