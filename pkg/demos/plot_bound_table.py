"""
Minimum colors for T(2, n)
==========================

The answer depends on the least prime ``p`` dividing both ``n`` and ``r``.
We print the branch, the bounds and the witness palette for a small grid,
next to the minimum over colorings of the standard diagram alone.
"""

from foxcol import conjecture_experiment, mincol_bounds, min_colors_of_diagram, torus_diagram

print(f"{'n':>3} {'r':>3}  {'branch':13s} {'bounds':8s} {'witness':8s} standard")
for n in (3, 4, 5, 6, 7, 9, 10, 11, 15):
    for r in (5, 6, 7, 9, 11, 15):
        rep = mincol_bounds(n, r)
        if rep.lower is None:
            continue
        std = min_colors_of_diagram(torus_diagram(n), r)
        wit = rep.witnesses[0].palette_size
        print(f"{n:3d} {r:3d}  {rep.branch:13s} {rep.lower}..{rep.upper:<5} {wit:<8d} {std}")

###############################################################################
# In the ``Range`` branch the upper bound is a witness, not a proven value.
# ``conjecture_experiment`` looks for something smaller.

rep = conjecture_experiment(3, 7, n=7)
print(rep.to_json())
