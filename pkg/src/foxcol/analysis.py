"""Minimum color counts, the torus-link bound table and related checks."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .coloring import (ColoredDiagram, checked, enumerate_colorings, has_nontrivial,
                       palette_of, stacked_coloring)
from .diagram import Diagram
from .modular import DEFAULT_CAP, DomainError, is_prime, least_common_prime_divisor
from .moves import teneva_reduce, teneva_search

CLOSED_CYCLIC = "ClosedCyclic"
BLOCKED_COLOR = "BlockedColor"
NOT_APPLICABLE = "NotApplicable"


# ---------------------------------------------------------------------------
# three-color tables

@dataclass(frozen=True)
class TripleClass:
    """How three distinct colors can meet at crossings.

    ``blocked`` holds every color of the triple that is not ``2u - v`` for
    the other two colors ``u, v``; such a color cannot be an under-arc at a
    crossing where all three colors meet.
    """

    kind: str
    blocked: frozenset = frozenset()
    requires_3_divides_r: bool = False

    def to_dict(self) -> dict:
        return {"kind": self.kind, "blocked": sorted(self.blocked),
                "requires_3_divides_r": self.requires_3_divides_r}


def classify_triple(a: int, b: int, c: int, r: int) -> TripleClass:
    if r < 2:
        raise DomainError(f"modulus must be at least 2, got {r}")
    t = (a % r, b % r, c % r)
    if len(set(t)) != 3:
        raise DomainError(f"colors {a}, {b}, {c} are not distinct mod {r}")
    for x, y, z in itertools.permutations(t):
        if (2 * y - x - z) % r == 0 and (2 * x - z - y) % r == 0 and (2 * z - y - x) % r == 0:
            return TripleClass(CLOSED_CYCLIC, frozenset(), True)
    blocked = frozenset(x for x in t
                        if all((2 * u - v - x) % r for u in t for v in t
                               if u != v and x not in (u, v)))
    if not blocked:
        # never happens: a triple with no blocked color is closed (checked by scan)
        return TripleClass(NOT_APPLICABLE)
    return TripleClass(BLOCKED_COLOR, blocked)


def three_color_feasible(r: int) -> bool:
    """True iff some three colors mod ``r`` are closed under ``2y - x``."""
    if r < 2:
        raise DomainError(f"modulus must be at least 2, got {r}")
    return r % 3 == 0


# ---------------------------------------------------------------------------
# per-diagram minimum

def min_colors_of_diagram(d: Diagram, r: int, cap: int = DEFAULT_CAP) -> int | None:
    """Fewest colors in a nontrivial ``r``-coloring of this very diagram.

    ``None`` when the diagram has no nontrivial ``r``-coloring.
    """
    best = None
    for col in enumerate_colorings(d, r, cap):
        size = len(set(col.assignment.values()))
        if size > 1 and (best is None or size < best):
            best = size
            if best == 2:
                break
    return best


def harary_check(d: Diagram, p: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff every nontrivial ``p``-coloring gives distinct arcs distinct colors.

    The caller asserts that ``d`` is a minimal alternating diagram.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not has_nontrivial(d, p):
        raise DomainError(f"the diagram has no nontrivial {p}-coloring")
    arcs = len(d.arcs)
    for col in enumerate_colorings(d, p, cap):
        size = len(set(col.assignment.values()))
        if size > 1 and size != arcs:
            return False
    return True


# ---------------------------------------------------------------------------
# bounds for T(2, n)

NO_NONTRIVIAL, EXACT2, EXACT3, EXACT4, RANGE = (
    "NoNontrivial", "Exact2", "Exact3", "Exact4", "Range")


@dataclass(frozen=True)
class Witness:
    colored: ColoredDiagram
    source: str

    @property
    def palette_size(self) -> int:
        return palette_of(self.colored).size

    def to_dict(self) -> dict:
        return {"source": self.source,
                "palette": sorted(palette_of(self.colored).colors),
                "palette_size": self.palette_size,
                "crossings": len(self.colored.diagram.crossings)}


@dataclass
class BoundReport:
    n: int
    r: int
    lcpd: int
    branch: str
    lower: int | None
    upper: int | None
    witnesses: list[Witness] = field(default_factory=list)
    #: where each bound comes from: "theorem", "witness" or "search"
    provenance: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "lcpd": self.lcpd, "branch": self.branch,
                "lower": self.lower, "upper": self.upper,
                "provenance": dict(self.provenance),
                "witnesses": [w.to_dict() for w in self.witnesses]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def mincol_bounds(n: int, r: int) -> BoundReport:
    """Minimum number of colors of ``T(2, n)`` mod ``r``, by case on ``<n, r>``."""
    if n < 2 or r < 2:
        raise DomainError(f"need n >= 2 and r >= 2, got n={n}, r={r}")
    p = least_common_prime_divisor(n, r)
    if p == 1:
        return BoundReport(n, r, p, NO_NONTRIVIAL, None, None,
                           provenance={"lower": "theorem", "upper": "theorem"})
    if p in (2, 3):
        w = Witness(checked(stacked_coloring(n, r, 0, r // p)), "stacked")
        return BoundReport(n, r, p, EXACT2 if p == 2 else EXACT3, p, p, [w],
                           {"lower": "theorem", "upper": "witness"})
    k = (p - 1) // 2
    cd, _ = teneva_reduce(n, r, 0, r // p)
    w = Witness(checked(cd), "teneva")
    if p == 5:
        return BoundReport(n, r, p, EXACT4, 4, 4, [w], {"lower": "theorem", "upper": "witness"})
    return BoundReport(n, r, p, RANGE, 4, k + 2, [w], {"lower": "theorem", "upper": "witness"})


# ---------------------------------------------------------------------------
# bounded search for fewer than k + 2 colors

@dataclass
class ExperimentReport:
    k: int
    n: int
    r: int
    bound: int
    best_palette: int
    best_source: str
    moves_applied: int
    complete: bool
    by_steps: dict = field(default_factory=dict)

    @property
    def counterexample(self) -> bool:
        return self.best_palette < self.bound

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "r": self.r,
                "bound": {"value": self.bound, "provenance": "theorem"},
                "best_palette": {"value": self.best_palette, "provenance": "search"},
                "best_source": self.best_source,
                "counterexample": self.counterexample,
                "moves_applied": self.moves_applied,
                "complete": self.complete,
                "by_steps": {str(s): v for s, v in sorted(self.by_steps.items())}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def conjecture_experiment(k: int, r: int, move_budget: int = 2000,
                          n: int | None = None) -> ExperimentReport:
    """Look for a coloring of ``T(2, n)`` mod ``r`` with fewer than ``k + 2`` colors.

    Tries the block transformation with every step count first, then a
    beam search over further transformations while the move budget lasts.
    ``n`` defaults to ``2k + 1``.  A found palette below ``k + 2`` would be a
    counterexample; the report never claims more than what was searched.
    """
    if k <= 2:
        raise DomainError(f"k must exceed 2 (k = {k} is settled), got {k}")
    p = 2 * k + 1
    n = p if n is None else n
    lcpd = least_common_prime_divisor(n, r)
    if lcpd != p:
        raise DomainError(f"<{n}, {r}> = {lcpd}, not 2k+1 = {p}")
    start = stacked_coloring(n, r, 0, r // p)
    best, source = palette_of(start).size, "start"
    used, complete, by_steps = 0, True, {}
    for steps in range(1, p):
        cost = (1 + steps) * (n // p)
        if used + cost > move_budget:
            complete = False
            break
        _, trace = teneva_reduce(n, r, 0, r // p, steps=steps)
        used += cost
        size = trace.palette_sizes()[-1]
        by_steps[steps] = size
        if size < best:
            best, source = size, f"teneva steps={steps}"
    if complete and used < move_budget:
        res = teneva_search(start, rounds=2, beam=5, budget=move_budget - used)
        used += res.moves_applied
        complete = res.complete
        if res.palette_size < best:
            best, source = res.palette_size, "search"
    return ExperimentReport(k, n, r, k + 2, best, source, used, complete, by_steps)


__all__ = [
    "TripleClass", "classify_triple", "three_color_feasible", "min_colors_of_diagram",
    "harary_check", "Witness", "BoundReport", "mincol_bounds", "ExperimentReport",
    "conjecture_experiment", "CLOSED_CYCLIC", "BLOCKED_COLOR", "NOT_APPLICABLE",
    "NO_NONTRIVIAL", "EXACT2", "EXACT3", "EXACT4", "RANGE",
]
