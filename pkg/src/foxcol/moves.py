"""Reidemeister moves on colored PD diagrams, and Teneva transformations.

Move sites are addressed on the PD code of the diagram being moved: edges by
their PD label, crossings by their 1-based index.  Colors travel with the
diagram: every edge untouched by a move keeps its color and the colors of
the new local edges are forced by the crossing relation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .coloring import (ColoredDiagram, Coloring, Rejection, palette_of, stacked_coloring,
                       validate_coloring)
from .diagram import Diagram, orient_crossing, pd_structure, torus_diagram
from .modular import DomainError, least_common_prime_divisor

KINDS = ("R1_add", "R1_remove", "R2_add", "R2_remove", "R3")
R1_VARIANTS = ("left-under", "left-over", "right-under", "right-over")
SIDES = ("left", "right")


class MovePatternError(DomainError):
    """The addressed site does not look like the move's local pattern."""


class TransportError(RuntimeError):
    """Colors could not be carried across a move (a bug, not a user error)."""


@dataclass(frozen=True)
class MoveSpec:
    """One addressed Reidemeister move.

    ======== ===================== =======================================
    kind     site                  variant
    ======== ===================== =======================================
    R1_add   ``(edge,)``           loop side and first pass, e.g.
                                   ``"left-under"``
    R1_remove ``(crossing,)``      unused
    R2_add   ``(over_edge,         ``"<over side>/<under side>"``: the
             under_edge)``         side of each edge facing the shared face
    R2_remove ``(c1, c2)``         unused
    R3       ``(c1, c2, c3)``      unused; the crossings of a triangle face
    ======== ===================== =======================================
    """

    kind: str
    site: tuple[int, ...]
    variant: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown move kind {self.kind!r}")
        object.__setattr__(self, "site", tuple(int(x) for x in self.site))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "site": list(self.site), "variant": self.variant}


@dataclass
class TraceStep:
    """One move of a trace.

    ``introduced``/``removed`` are the colors of the under segment the move
    rebuilds (after/before); for an R3 move that is the strand passing under
    both others.  ``palette_introduced``/``palette_removed`` are the changes
    to the set of colors of the whole diagram.
    """

    move: MoveSpec
    introduced: frozenset
    removed: frozenset
    palette_size_after: int
    palette_introduced: frozenset = frozenset()
    palette_removed: frozenset = frozenset()


@dataclass
class PaletteTrace:
    initial_palette: frozenset
    steps: list[TraceStep] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def palette_sizes(self) -> list[int]:
        return [len(self.initial_palette)] + [s.palette_size_after for s in self.steps]

    def consistent(self) -> bool:
        pal = set(self.initial_palette)
        for s in self.steps:
            pal = (pal - s.palette_removed) | s.palette_introduced
            if len(pal) != s.palette_size_after:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "initial_palette": sorted(self.initial_palette),
            "steps": [{"move": s.move.kind, "site": list(s.move.site),
                       "variant": s.move.variant,
                       "introduced": sorted(s.introduced),
                       "removed": sorted(s.removed),
                       "palette_introduced": sorted(s.palette_introduced),
                       "palette_removed": sorted(s.palette_removed),
                       "palette_size_after": s.palette_size_after}
                      for s in self.steps],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# mutable working form

class _Work:
    """Crossings as counter-clockwise slot lists with explicit orientation."""

    def __init__(self, cd: ColoredDiagram):
        d = cd.diagram
        if d.pd is None:
            raise DomainError("moves need a diagram with a PD code")
        self.diagram = d
        self.r = cd.r
        self.info = pd_structure(d.pd)
        # per crossing: [slots, under_parity, incoming flags]
        self.cross = [[list(x.edges), 0, [x.incoming(s) for s in range(4)]] for x in d.pd]
        self.colors = {e: cd.coloring[d.edge_arcs[e]] for e in self.info.occ}
        self.unknown: set[int] = set()
        free = d.arcs[len(d.arcs) - d.free_loops:] if d.free_loops else ()
        self.loop_colors = [cd.coloring[a] for a in free]
        self.next_label = max(self.info.occ, default=0) + 1
        #: (edge, color before) of the under segment a move rebuilds, if any
        self.segment = None

    def fresh(self) -> int:
        e = self.next_label
        self.next_label += 1
        self.unknown.add(e)
        return e

    def set_slot(self, c, s, e):
        self.cross[c][0][s] = e

    def is_over(self, c, s) -> bool:
        return s % 2 != self.cross[c][1]

    def transport(self):
        r = self.r
        col = self.colors
        todo = set(self.unknown)
        for e in todo:
            col.pop(e, None)
        progress = True
        while todo and progress:
            progress = False
            for slots, par, _ in self.cross:
                o1, o2 = slots[(par + 1) % 4], slots[(par + 3) % 4]
                u1, u2 = slots[par], slots[par + 2]
                if o1 in col and o2 not in col:
                    col[o2] = col[o1]
                elif o2 in col and o1 not in col:
                    col[o1] = col[o2]
                else:
                    if o1 not in col:
                        continue
                if u1 in col and u2 not in col:
                    col[u2] = (2 * col[o1] - col[u1]) % r
                elif u2 in col and u1 not in col:
                    col[u1] = (2 * col[o1] - col[u2]) % r
                else:
                    continue
                progress = True
            todo = {e for e in todo if e not in col}
        if todo:
            raise TransportError(f"colors of edges {sorted(todo)} are not forced")

    def finish(self, cd: ColoredDiagram, extra_loops=()) -> ColoredDiagram:
        self.transport()
        pd = [orient_crossing(slots, par, inc) for slots, par, inc in self.cross]
        loops = self.loop_colors + list(extra_loops)
        prov = dict(self.diagram.provenance)
        prov["moves"] = prov.get("moves", 0) + 1
        d = Diagram.from_pd(pd, len(loops), prov)
        assignment = {}
        for e, a in d.edge_arcs.items():
            c = self.colors[e]
            if assignment.setdefault(a, c) != c:
                raise TransportError(f"arc {a} would carry two colors")
        free = d.arcs[len(d.arcs) - len(loops):] if loops else ()
        assignment.update(zip(free, loops))
        out = ColoredDiagram(d, Coloring(self.r, assignment))
        if not validate_coloring(out):
            raise TransportError("transported coloring violates a crossing relation")
        return out


def _crossing_index(d: Diagram, c: int) -> int:
    if not 1 <= c <= len(d.crossings):
        raise MovePatternError(f"no crossing {c}")
    return c - 1


# ---------------------------------------------------------------------------
# individual moves

def _r1_add(w: _Work, m: MoveSpec):
    (e,) = m.site
    if e not in w.info.occ:
        raise MovePatternError(f"no edge {e}")
    if m.variant not in R1_VARIANTS:
        raise MovePatternError(f"R1_add variant must be one of {R1_VARIANTS}")
    side, first = m.variant.split("-")
    head = w.info.head(e)
    e2, e3 = w.fresh(), w.fresh()
    w.colors[e2] = w.colors[e3] = w.colors[e]
    w.unknown -= {e2, e3}
    w.set_slot(*head, e3)
    if side == "left":
        slots, inc = [e, e3, e2, e2], [True, False, False, True]
    else:
        slots, inc = [e, e2, e2, e3], [True, True, False, False]
    w.cross.append([slots, 0 if first == "under" else 1, inc])


def _r1_remove(w: _Work, m: MoveSpec):
    c = _crossing_index(w.diagram, m.site[0])
    slots = w.cross[c][0]
    loop_slot = next((s for s in range(4) if slots[s] == slots[(s + 1) % 4]), None)
    if loop_slot is None:
        raise MovePatternError(f"crossing {c + 1} has no kink loop")
    faces = w.info.faces()
    sizes = {d: len(f) for f in faces for d in f}
    if sizes[(c, loop_slot)] != 1 and sizes[(c, (loop_slot + 1) % 4)] != 1:
        raise MovePatternError(f"loop at crossing {c + 1} does not bound a monogon")
    x, y = slots[(loop_slot + 2) % 4], slots[(loop_slot + 3) % 4]
    del w.cross[c]
    extra = []
    if x == y:
        extra.append(w.colors[x])
    else:
        _rename(w, y, x)
    return extra


def _rename(w: _Work, old, new):
    for cr in w.cross:
        cr[0] = [new if e == old else e for e in cr[0]]


def _side_dart(info, e, side):
    return info.tail(e) if side == "right" else info.head(e)


def _r2_add(w: _Work, m: MoveSpec):
    eo, eu = m.site
    for e in (eo, eu):
        if e not in w.info.occ:
            raise MovePatternError(f"no edge {e}")
    if eo == eu:
        raise MovePatternError("R2 needs two distinct edges")
    try:
        so, su = (m.variant or "").split("/")
    except ValueError:
        raise MovePatternError("R2_add variant must look like 'left/right'") from None
    if so not in SIDES or su not in SIDES:
        raise MovePatternError("R2_add sides must be 'left' or 'right'")
    fo = w.info.face_of_dart()
    if fo[_side_dart(w.info, eo, so)] != fo[_side_dart(w.info, eu, su)]:
        raise MovePatternError(f"edges {eo} and {eu} do not share that face")
    # traversal with the face on the right runs P0 -> P1 (resp. Q0 -> Q1)
    o_fwd, u_fwd = so == "right", su == "right"
    p1 = w.info.head(eo) if o_fwd else w.info.tail(eo)
    q1 = w.info.head(eu) if u_fwd else w.info.tail(eu)
    o2, o3, u2, u3 = (w.fresh() for _ in range(4))
    w.set_slot(*p1, o3)
    w.set_slot(*q1, u3)
    o1, u1 = eo, eu
    # C1: (u2, o1, u3, o2)   C2: (u1, o3, u2, o2); under strand in slots 0/2
    c1_inc = [u_fwd, o_fwd, not u_fwd, not o_fwd]
    c2_inc = [u_fwd, not o_fwd, not u_fwd, o_fwd]
    w.segment = (u2, None)
    w.cross.append([[u2, o1, u3, o2], 0, c1_inc])
    w.cross.append([[u1, o3, u2, o2], 0, c2_inc])


def _bigon(w: _Work, c1: int, c2: int):
    for face in w.info.faces():
        if len(face) == 2 and {face[0][0], face[1][0]} == {c1, c2}:
            yield face


def _r2_remove(w: _Work, m: MoveSpec):
    d = w.diagram
    c1, c2 = (_crossing_index(d, c) for c in m.site)
    if c1 == c2:
        raise MovePatternError("R2_remove needs two crossings")
    for (a, sa), (b, sb) in _bigon(w, c1, c2):
        ea = w.cross[a][0][sa]           # edge from a to b
        ta = w.info.other_end(a, sa)[1]  # its slot at b
        eb = w.cross[b][0][sb]
        tb = w.info.other_end(b, sb)[1]
        if w.is_over(a, sa) and w.is_over(b, ta) and not w.is_over(b, sb) \
                and not w.is_over(a, tb):
            pass
        elif w.is_over(b, sb) and w.is_over(a, tb) and not w.is_over(a, sa) \
                and not w.is_over(b, ta):
            pass
        else:
            continue
        mid = eb if w.is_over(a, sa) else ea
        w.segment = (None, w.colors[mid])
        strand_a = (w.cross[a][0][(sa + 2) % 4], ea, w.cross[b][0][(ta + 2) % 4])
        strand_b = (w.cross[b][0][(sb + 2) % 4], eb, w.cross[a][0][(tb + 2) % 4])
        return _drop_crossings(w, [a, b], [strand_a, strand_b])
    raise MovePatternError(f"crossings {m.site} do not bound a removable bigon")


def _drop_crossings(w: _Work, idx, strands):
    parent = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            e = parent[e]
        return e

    for group in strands:
        for e in group[1:]:
            ra, rb = find(group[0]), find(e)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    # the middle edge of an under strand may differ; the ends agree
    for group in strands:
        w.colors[find(group[0])] = w.colors[group[0]]
    for c in sorted(idx, reverse=True):
        del w.cross[c]
    used = set()
    for cr in w.cross:
        cr[0] = [find(e) if e in parent else e for e in cr[0]]
        used.update(cr[0])
    extra = []
    for root in sorted({find(e) for e in parent}):
        if root not in used:
            extra.append(w.colors[root])
    return extra


def _triangle(w: _Work, cs):
    target = set(cs)
    if len(target) != 3:
        raise MovePatternError("R3 needs three distinct crossings")
    for face in w.info.faces():
        if len(face) == 3 and {c for c, _ in face} == target:
            return face
    raise MovePatternError(f"crossings {tuple(c + 1 for c in cs)} do not bound a triangle")


def _r3(w: _Work, m: MoveSpec):
    d = w.diagram
    cs = [_crossing_index(d, c) for c in m.site]
    face = _triangle(w, cs)
    (a1, s1), (a2, s2), (a3, s3) = face
    # the dart before each one arrives in the preceding slot
    t1, t2, t3 = (s1 - 1) % 4, (s2 - 1) % 4, (s3 - 1) % 4
    hexagon = [(a2, (t2 + 2) % 4), (a2, (t2 + 3) % 4),
               (a1, (t1 + 2) % 4), (a1, (t1 + 3) % 4),
               (a3, (t3 + 2) % 4), (a3, (t3 + 3) % 4)]
    internal = {0: w.cross[a2][0][t2],        # strand A: h0/h3, between a2 and a1
                1: w.cross[a2][0][(t2 + 1) % 4],  # strand B: h1/h4
                2: w.cross[a1][0][t1]}        # strand C: h2/h5
    over = [w.is_over(c, s) for c, s in hexagon]
    # pattern: one strand over at both crossings, one under at both
    status = sorted((over[k] + over[k + 3]) for k in range(3))
    if status != [0, 1, 2]:
        raise MovePatternError(f"triangle {m.site} is not a Reidemeister III configuration")
    # the strand under at both crossings carries the only genuinely new color
    low = next(k for k in range(3) if over[k] + over[k + 3] == 0)
    w.segment = (internal[low], w.colors[internal[low]])
    ext = [w.cross[c][0][s] for c, s in hexagon]
    inc = [w.cross[c][2][s] for c, s in hexagon]
    for k in range(3):
        w.unknown.add(internal[k])
    new = {}
    for k in (1, 3, 5):
        h, g = k, (k + 1) % 6
        sh, sg = h % 3, g % 3
        # internal edge of strand entering at h is outgoing here
        slots = [ext[h], ext[g], internal[sh], internal[sg]]
        flags = [inc[h], inc[g], not inc[h], not inc[g]]
        # the same pair of strands met at the old crossing holding h + 3
        parity = 1 if over[(h + 3) % 6] else 0
        new[frozenset((sh, sg))] = [slots, parity, flags]
    old_pair = {a2: frozenset((0, 1)), a1: frozenset((2, 0)), a3: frozenset((1, 2))}
    for c, pair in old_pair.items():
        w.cross[c] = new[pair]


def _apply(cd: ColoredDiagram, m: MoveSpec):
    w = _Work(cd)
    extra = ()
    if m.kind == "R1_add":
        _r1_add(w, m)
    elif m.kind == "R1_remove":
        extra = _r1_remove(w, m)
    elif m.kind == "R2_add":
        _r2_add(w, m)
    elif m.kind == "R2_remove":
        extra = _r2_remove(w, m)
    else:
        _r3(w, m)
    out = w.finish(cd, extra)
    local_in, local_out = frozenset(), frozenset()
    if w.segment is not None:
        edge, old = w.segment
        if old is not None:
            local_out = frozenset((old,))
        if edge is not None:
            local_in = frozenset((w.colors[edge],))
    return out, local_in, local_out


def apply_move(cd: ColoredDiagram, m: MoveSpec):
    """Apply one move; returns ``(new_colored_diagram, introduced, removed)``.

    ``introduced`` and ``removed`` are the palette delta over the whole
    diagram.

    Raises
    ------
    MovePatternError
        If the site does not match the move.
    TransportError
        If the transported coloring fails to be consistent (should not happen).
    """
    out, _, _ = _apply(cd, m)
    before, after = palette_of(cd).colors, palette_of(out).colors
    return out, after - before, before - after


def run_moves(cd: ColoredDiagram, moves) -> tuple[ColoredDiagram, PaletteTrace]:
    """Apply ``moves`` in order and record the palette after each one."""
    trace = PaletteTrace(palette_of(cd).colors)
    for m in moves:
        before = palette_of(cd).colors
        cd, local_in, local_out = _apply(cd, m)
        after = palette_of(cd).colors
        trace.steps.append(TraceStep(m, local_in, local_out, len(after),
                                     after - before, before - after))
    return cd, trace


# ---------------------------------------------------------------------------
# Teneva transformations on 2-braids

def _block_moves(d: Diagram, first: int, length: int, steps: int, kink: int):
    """Moves pulling the bottom-left strand of a run of crossings upwards.

    The run is crossings ``first .. first + length - 1`` (1-based) of a
    closed positive 2-braid, read top to bottom; ``kink`` is the index the
    R1 crossing will receive.
    """
    last = first + length - 1
    edge = d.pd[last - 2].edges[2]    # leaves the next-to-last crossing below
    seq = [MoveSpec("R1_add", (edge,), "left-under")]
    seq += [MoveSpec("R3", (last - i, last, kink)) for i in range(1, steps + 1)]
    return seq


def teneva_sequence(n: int, steps: int) -> list[MoveSpec]:
    """R1 followed by ``steps`` R3 moves on ``torus_diagram(n)``."""
    if n < 3:
        raise DomainError(f"the transformation needs n >= 3, got {n}")
    if not 1 <= steps <= n - 1:
        raise DomainError(f"steps must lie in [1, {n - 1}], got {steps}")
    return _block_moves(torus_diagram(n), 1, n, steps, n + 1)


def _torus_order(d: Diagram) -> int:
    n = (d.provenance.get("torus") or [None, None])[1]
    if n is None or d.pd != torus_diagram(n).pd:
        raise DomainError("expected the standard closure of s1^n (see torus_diagram)")
    return n


def teneva_transform(cd: ColoredDiagram, steps: int) -> tuple[ColoredDiagram, PaletteTrace]:
    """Run :func:`teneva_sequence` on a colored standard closure of ``s1^n``."""
    n = _torus_order(cd.diagram)
    out, trace = run_moves(cd, teneva_sequence(n, steps))
    if n % 2 == 0 and cd.r % 2 == 0:
        trace.notes.append(f"n={n} and r={cd.r} are even: two colors already suffice")
    return out, trace


def teneva_reduce(n: int, r: int, a: int, b: int,
                  steps: int | None = None) -> tuple[ColoredDiagram, PaletteTrace]:
    """Stacked coloring of ``T(2, n)`` reduced block by block to ``k + 2`` colors.

    Requires ``<n, r> = p = 2k + 1`` with ``k > 1``; each ``s1^p`` block gets
    one R1 and ``steps`` R3 moves, ``k`` by default (the fewest colors).
    """
    p = least_common_prime_divisor(n, r)
    if p == 1:
        raise Rejection(f"gcd({n}, {r}) = 1: no nontrivial coloring to reduce")
    if p <= 3:
        raise DomainError(f"<{n}, {r}> = {p}: handled without moves (exact value {p})")
    if a == b:
        raise DomainError("colors a and b must differ")
    k = (p - 1) // 2
    steps = k if steps is None else steps
    if not 1 <= steps <= p - 1:
        raise DomainError(f"steps must lie in [1, {p - 1}], got {steps}")
    cd = stacked_coloring(n, r, a, b)
    trace = PaletteTrace(palette_of(cd).colors)
    for block in range(n // p):
        moves = _block_moves(cd.diagram, block * p + 1, p, steps, n + block + 1)
        cd, part = run_moves(cd, moves)
        trace.steps.extend(part.steps)
    return cd, trace


def _kink_walks(cd: ColoredDiagram, kink: int, prev, depth: int, path, budget):
    if depth == 0:
        return
    for m in legal_moves(cd.diagram):
        if m.kind != "R3" or kink not in m.site or m.site == prev:
            continue
        if not budget.spend():
            return
        out, _, _ = _apply(cd, m)
        yield out, path + [m]
        yield from _kink_walks(out, kink, m.site, depth - 1, path + [m], budget)


class _Budget:
    def __init__(self, limit):
        self.limit, self.used = limit, 0

    def spend(self) -> bool:
        if self.limit is not None and self.used >= self.limit:
            return False
        self.used += 1
        return True


def teneva_walks(cd: ColoredDiagram, max_steps: int, budget=None):
    """Every Teneva-style transformation of ``cd`` with at most ``max_steps`` R3 moves.

    A transformation is one R1 kink anywhere followed by a walk of R3 moves
    that each involve the kink crossing and never undo the previous one.
    Yields ``(colored_diagram, moves)`` pairs in a deterministic order.
    """
    budget = budget if isinstance(budget, _Budget) else _Budget(budget)
    kink = len(cd.diagram.pd) + 1
    edges = sorted({e for x in cd.diagram.pd for e in x.edges})
    for e in edges:
        for v in R1_VARIANTS:
            if not budget.spend():
                return
            m = MoveSpec("R1_add", (e,), v)
            out, _, _ = _apply(cd, m)
            yield from _kink_walks(out, kink, None, max_steps, [m], budget)


@dataclass
class SearchResult:
    diagram: ColoredDiagram
    trace: PaletteTrace
    moves_applied: int
    complete: bool

    @property
    def palette_size(self) -> int:
        return self.trace.palette_sizes()[-1]


def _score(cd: ColoredDiagram):
    # fewer colors first, then colors carried by few arcs (closest to vanishing)
    counts = {}
    for v in cd.coloring.assignment.values():
        counts[v] = counts.get(v, 0) + 1
    return len(counts), tuple(sorted(counts.values()))


def teneva_search(cd: ColoredDiagram, rounds: int = 2, beam: int = 10,
                  max_steps: int = 9, budget: int | None = None) -> SearchResult:
    """Beam search over chains of Teneva-style transformations.

    Each round extends every kept state by one transformation (see
    :func:`teneva_walks`) and keeps the ``beam`` best by palette size.
    ``budget`` caps the number of moves applied; running out makes the
    result incomplete rather than failing.
    """
    if cd.diagram.pd is None:
        raise DomainError("the search needs a diagram with a PD code")
    spent = _Budget(budget)
    best_cd, best_moves = cd, []
    states = [(cd, [])]
    complete = True
    for _ in range(rounds):
        found = {}
        for state, history in states:
            for out, moves in teneva_walks(state, max_steps, spent):
                key = (out.diagram.pd, tuple(sorted(out.coloring.assignment.items())))
                if key not in found:
                    found[key] = (out, history + moves)
        if spent.limit is not None and spent.used >= spent.limit:
            complete = False
        if not found:
            break
        states = sorted(found.values(), key=lambda s: _score(s[0]))[:beam]
        if _score(states[0][0]) < _score(best_cd):
            best_cd, best_moves = states[0]
        if not complete:
            break
    _, trace = run_moves(cd, best_moves)
    return SearchResult(best_cd, trace, spent.used, complete)


# ---------------------------------------------------------------------------
# site discovery, used by tests and the bounded searches

def legal_moves(d: Diagram, max_crossings: int | None = None) -> Iterator[MoveSpec]:
    """Every move applicable to ``d``, in a deterministic order.

    Additions are skipped once ``d`` has ``max_crossings`` crossings.
    """
    if d.pd is None:
        return
    info = pd_structure(d.pd)
    faces = info.faces()
    n = len(d.pd)
    grow = max_crossings is None or n < max_crossings
    edges = sorted(info.occ)
    if grow:
        for e in edges:
            for v in R1_VARIANTS:
                yield MoveSpec("R1_add", (e,), v)
    for c, x in enumerate(d.pd):
        if any(x.edges[s] == x.edges[(s + 1) % 4] for s in range(4)):
            yield MoveSpec("R1_remove", (c + 1,))
    if max_crossings is None or n + 2 <= max_crossings:
        where = {}
        for fi, f in enumerate(faces):
            for dart in f:
                e = d.pd[dart[0]].edges[dart[1]]
                side = "right" if info.tail(e) == dart else "left"
                where.setdefault(fi, []).append((e, side))
        for fi in sorted(where):
            sides = where[fi]
            for eo, so in sides:
                for eu, su in sides:
                    if eo != eu:
                        yield MoveSpec("R2_add", (eo, eu), f"{so}/{su}")
    for f in faces:
        if len(f) == 2 and f[0][0] != f[1][0]:
            (a, sa), (b, sb) = f
            ta, tb = info.other_end(a, sa)[1], info.other_end(b, sb)[1]
            # removable only if one bigon edge is over at both ends, the other under
            if sa % 2 == ta % 2 and sb % 2 == tb % 2 and sa % 2 != sb % 2:
                yield MoveSpec("R2_remove", tuple(sorted((a + 1, b + 1))))
        if len(f) == 3 and len({c for c, _ in f}) == 3:
            status = sorted(s % 2 + info.other_end(c, s)[1] % 2 for c, s in f)
            if status == [0, 1, 2]:
                yield MoveSpec("R3", tuple(sorted(c + 1 for c, _ in f)))
