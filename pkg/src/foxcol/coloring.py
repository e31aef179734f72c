"""Fox colorings: the linear system, counting, enumeration and palettes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping

from .diagram import Diagram, torus_diagram, validate_diagram
from .modular import (DEFAULT_CAP, DomainError, IntegerMatrix, count_solutions_mod,
                      det, enumerate_solutions_mod, is_prime, least_common_prime_divisor)


class ColoringError(ValueError):
    """A coloring does not fit its diagram (missing or unknown arcs, bad values)."""


class Rejection(DomainError):
    """A requested coloring does not exist; the message names the failed condition."""


@dataclass(frozen=True)
class Coloring:
    r: int
    assignment: Mapping[int, int]

    def __post_init__(self):
        if self.r < 2:
            raise DomainError(f"modulus must be at least 2, got {self.r}")
        for arc, v in self.assignment.items():
            if not 0 <= v < self.r:
                raise ColoringError(f"color {v} of arc {arc} outside [0, {self.r - 1}]")

    def __getitem__(self, arc):
        return self.assignment[arc]

    @property
    def is_trivial(self) -> bool:
        return len(set(self.assignment.values())) <= 1

    def to_dict(self) -> dict:
        return {"r": self.r,
                "assignment": {str(a): v for a, v in sorted(self.assignment.items())}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        if set(data) != {"r", "assignment"}:
            raise ColoringError(f"coloring fields must be r and assignment, got {sorted(data)}")
        return cls(int(data["r"]), {int(a): int(v) for a, v in data["assignment"].items()})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ColoredDiagram:
    diagram: Diagram
    coloring: Coloring

    @property
    def r(self) -> int:
        return self.coloring.r


@dataclass(frozen=True)
class Palette:
    colors: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.colors)


def _arc_index(d: Diagram) -> dict[int, int]:
    return {a: k for k, a in enumerate(d.arcs)}


def coloring_matrix(d: Diagram) -> IntegerMatrix:
    """One row per crossing, one column per arc: ``2*over - under_in - under_out``."""
    if not d.crossings:
        raise DomainError("a crossingless diagram has no coloring equations")
    col = _arc_index(d)
    rows = []
    for c in d.crossings:
        row = [0] * len(d.arcs)
        row[col[c.over]] += 2
        row[col[c.under_in]] -= 1
        row[col[c.under_out]] -= 1
        rows.append(row)
    return IntegerMatrix.from_rows(rows, len(d.arcs))


def count_colorings(d: Diagram, r: int) -> int:
    if r < 2:
        raise DomainError(f"modulus must be at least 2, got {r}")
    if not d.crossings:
        return r ** len(d.arcs)
    return count_solutions_mod(coloring_matrix(d), r)


def has_nontrivial(d: Diagram, r: int) -> bool:
    return count_colorings(d, r) > r


def enumerate_colorings(d: Diagram, r: int, cap: int = DEFAULT_CAP) -> Iterator[Coloring]:
    """Every r-coloring of ``d`` once, in the kernel-parameter order."""
    if d.crossings:
        stream = enumerate_solutions_mod(coloring_matrix(d), r, cap)
    else:
        from .modular import IntegerMatrix as _M
        stream = enumerate_solutions_mod(_M.zeros(1, len(d.arcs)), r, cap)
    arcs = d.arcs
    return (Coloring(r, dict(zip(arcs, x))) for x in stream)


def validate_coloring(cd: ColoredDiagram) -> bool:
    """True iff the crossing relation holds everywhere.

    Raises :class:`ColoringError` when the assignment does not cover exactly
    the arcs of the diagram.
    """
    d, col = cd.diagram, cd.coloring
    if set(col.assignment) != set(d.arcs):
        missing = sorted(set(d.arcs) - set(col.assignment))
        extra = sorted(set(col.assignment) - set(d.arcs))
        raise ColoringError(f"arc mismatch: missing {missing}, unknown {extra}")
    r, a = col.r, col.assignment
    return all((2 * a[c.over] - a[c.under_in] - a[c.under_out]) % r == 0
               for c in d.crossings)


def palette_of(cd: ColoredDiagram) -> Palette:
    return Palette(frozenset(cd.coloring.assignment.values()))


def _check_values(r, *vals):
    if r < 2:
        raise DomainError(f"modulus must be at least 2, got {r}")
    for v in vals:
        if not 0 <= v < r:
            raise DomainError(f"color {v} outside [0, {r - 1}]")


def braid_coloring(n: int, r: int, a: int, b: int) -> ColoredDiagram:
    """Color the closure of ``s1^n`` from top colors ``a`` (left) and ``b`` (right).

    Arc ``j`` receives ``j*b - (j-1)*a`` shifted by one, i.e. the sequence
    ``a, b, 2b-a, 3b-2a, ...``.  The colors close up only when
    ``n*(b-a) == 0 (mod r)``.
    """
    _check_values(r, a, b)
    if (n * (b - a)) % r:
        raise Rejection(f"closure condition n(b-a) = {n}*{b - a} != 0 mod {r}")
    d = torus_diagram(n)
    assignment = {j: ((j - 1) * b - (j - 2) * a) % r for j in d.arcs}
    return ColoredDiagram(d, Coloring(r, assignment))


def subpalette(r: int, p: int) -> frozenset[int]:
    """``{0, r/p, 2r/p, ..., (p-1)r/p}`` for a prime ``p`` dividing ``r``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if r % p:
        raise DomainError(f"{p} does not divide {r}")
    step = r // p
    return frozenset(k * step for k in range(p))


def stacked_coloring(n: int, r: int, a: int, b: int) -> ColoredDiagram:
    """Coloring of T(2, n) built from ``n/p`` stacked colorings of ``s1^p``.

    ``p`` is the least common prime divisor of ``n`` and ``r``; ``a`` and ``b``
    must come from :func:`subpalette` ``(r, p)``.
    """
    _check_values(r, a, b)
    p = least_common_prime_divisor(n, r)
    if p == 1:
        raise Rejection(f"gcd({n}, {r}) = 1: T(2, {n}) has no nontrivial {r}-coloring")
    sub = subpalette(r, p)
    if a not in sub or b not in sub:
        raise Rejection(f"colors ({a}, {b}) are not in the subpalette {sorted(sub)}")
    cd = braid_coloring(n, r, a, b)
    cd.diagram.provenance["stacked"] = {"p": p, "blocks": n // p}
    return cd


def determinant(d: Diagram) -> int:
    """Absolute value of a first minor of the coloring matrix."""
    if d.components != 1:
        raise DomainError(f"determinant is defined here for knots, got {d.components} components")
    m = coloring_matrix(d)
    if m.rows != m.cols:
        raise DomainError("coloring matrix is not square")
    return abs(det(m.delete(0, 0).to_rows()))


def color_spectrum(d: Diagram, r_max: int) -> list[tuple[int, int]]:
    if r_max < 2:
        raise DomainError(f"r_max must be at least 2, got {r_max}")
    return [(r, count_colorings(d, r)) for r in range(2, r_max + 1)]


def checked(cd: ColoredDiagram) -> ColoredDiagram:
    """Return ``cd`` after confirming both the diagram and the coloring are valid."""
    report = validate_diagram(cd.diagram)
    if not report.valid:
        raise DomainError(f"invalid diagram: {report.violations}")
    if not validate_coloring(cd):
        raise ColoringError("coloring violates the crossing relation")
    return cd
