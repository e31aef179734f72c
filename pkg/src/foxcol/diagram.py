"""Knot and link diagrams.

A :class:`Diagram` always carries the arc-level view used for colorings:
arcs and, per crossing, the over arc, the incoming and outgoing under arcs and
a sign.  Diagrams built by the constructors here also carry a planar diagram
(PD) code, which is what the Reidemeister move machinery rewrites.

PD conventions
--------------
Each crossing lists four edge labels counter-clockwise, starting with the
incoming under edge, so slots 0 and 2 hold the under strand.  The sign is
+1 when the over strand runs from slot 3 to slot 1 and -1 when it runs from
slot 1 to slot 3.

Arc numbering
-------------
Crossings are numbered from 1 in construction order (top to bottom for
braid closures and plats).  An arc takes the number of the crossing at which
it ends as the incoming under strand, so crossing ``c`` always has
``under_in == c``.  Arcs without under-passes (a component lying entirely on
top, or a crossingless loop) are numbered after all crossings.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .modular import DomainError


class ParseError(ValueError):
    """Malformed braid text; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# ---------------------------------------------------------------------------
# braid words

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 2:
            raise DomainError("a braid needs at least two strands")
        for i, s in self.letters:
            if not 1 <= i < self.strands or s not in (1, -1):
                raise DomainError(f"bad generator ({i}, {s}) for {self.strands} strands")

    def __str__(self):
        terms = []
        for i, s in self.letters:
            if terms and terms[-1][0] == i and (terms[-1][1] > 0) == (s > 0):
                terms[-1][1] += s
            else:
                terms.append([i, s])
        body = " ".join(f"s{i}" if k == 1 else f"s{i}^{k}" for i, k in terms)
        return f"B{self.strands}: {body}".rstrip()


_HEADER = re.compile(r"\s*B(\d+)\s*:")
_TERM = re.compile(r"s(\d+)(?:\^([+-]?\d+))?")


def braid_word_parse(text: str) -> BraidWord:
    """Parse ``"B<strands>: s<i>^<k> ..."``; exponents default to 1.

    >>> braid_word_parse("B3: s1 s2^-1").letters
    ((1, 1), (2, -1))
    """
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected 'B<strands>:'", 0)
    strands = int(m.group(1))
    if strands < 2:
        raise ParseError("strand count must be at least 2", m.start(1))
    pos = m.end()
    letters = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        t = _TERM.match(text, pos)
        if not t or (t.end() < len(text) and not text[t.end()].isspace()):
            raise ParseError("expected a term like 's1' or 's2^-3'", pos)
        i = int(t.group(1))
        k = int(t.group(2)) if t.group(2) is not None else 1
        if not 1 <= i < strands:
            raise ParseError(f"generator s{i} needs 1 <= i < {strands}", t.start(1))
        if k == 0:
            raise ParseError("zero exponent", t.start(2))
        letters.extend([(i, 1 if k > 0 else -1)] * abs(k))
        pos = t.end()
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------------------
# PD-level data

@dataclass(frozen=True)
class PDCrossing:
    edges: tuple[int, int, int, int]
    sign: int

    def incoming(self, slot: int) -> bool:
        if slot == 0:
            return True
        if slot == 2:
            return False
        return (slot == 3) == (self.sign == 1)


def orient_crossing(slots: Sequence[int], under_parity: int,
                    incoming: Sequence[bool]) -> PDCrossing:
    """Build a PD crossing from a counter-clockwise slot list.

    ``under_parity`` is 0 when slots 0 and 2 carry the under strand and 1 when
    slots 1 and 3 do; ``incoming[s]`` says whether the strand enters at slot s.
    """
    start = under_parity if incoming[under_parity] else under_parity + 2
    order = [(start + t) % 4 for t in range(4)]
    if not incoming[order[0]] or incoming[order[2]]:
        raise DomainError("under strand must enter and leave the crossing")
    if incoming[order[1]] == incoming[order[3]]:
        raise DomainError("over strand must enter and leave the crossing")
    sign = 1 if incoming[order[3]] else -1
    return PDCrossing(tuple(slots[s] for s in order), sign)


@dataclass(frozen=True)
class CrossingRecord:
    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class Diagram:
    """A diagram; see the module docstring for conventions."""

    arcs: tuple[int, ...]
    crossings: tuple[CrossingRecord, ...]
    components: int
    provenance: dict = field(default_factory=dict, compare=False)
    pd: tuple[PDCrossing, ...] | None = None
    free_loops: int = 0
    #: PD edge label -> arc id, only for PD-backed diagrams
    edge_arcs: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def has_pd(self) -> bool:
        return self.pd is not None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_pd(cls, pd: Iterable, free_loops: int = 0,
                provenance: dict | None = None) -> "Diagram":
        """Diagram from PD crossings (``PDCrossing`` or ``(i, j, k, l, sign)``)."""
        pd = tuple(c if isinstance(c, PDCrossing) else PDCrossing(tuple(c[:4]), c[4])
                   for c in pd)
        info = pd_structure(pd)
        n = len(pd)
        edge_arcs = {}
        records_over = [None] * n
        closed = []
        for c, x in enumerate(pd):
            start = x.edges[2]
            path = info.follow_arc(start)
            end_c = path[-1][1]
            for e, _ in path:
                edge_arcs[e] = end_c + 1
        # components with no under-pass at all
        for e in sorted(info.occ):
            if e not in edge_arcs:
                cycle = info.strand_cycle(e)
                closed.append(cycle)
                for f in cycle:
                    edge_arcs[f] = -1
        next_id = n + 1
        for cycle in closed:
            for f in cycle:
                edge_arcs[f] = next_id
            next_id += 1
        for c, x in enumerate(pd):
            records_over[c] = CrossingRecord(edge_arcs[x.edges[1]], c + 1,
                                             edge_arcs[x.edges[2]], x.sign)
        arcs = tuple(range(1, next_id + free_loops))
        comps = info.component_count() + free_loops
        return cls(arcs, tuple(records_over), comps, dict(provenance or {}), pd,
                   free_loops, edge_arcs)

    @classmethod
    def from_records(cls, arcs: Iterable[int], crossings: Iterable,
                     provenance: dict | None = None) -> "Diagram":
        """Arc-level diagram without planar data (no moves possible)."""
        arcs = tuple(arcs)
        recs = tuple(c if isinstance(c, CrossingRecord) else CrossingRecord(*c)
                     for c in crossings)
        return cls(arcs, recs, _arc_components(arcs, recs), dict(provenance or {}))

    # -- JSON ----------------------------------------------------------------

    def to_dict(self) -> dict:
        prov = dict(self.provenance)
        if self.pd is not None:
            prov["pd"] = [list(x.edges) + [x.sign] for x in self.pd]
            prov["free_loops"] = self.free_loops
        return {
            "arcs": list(self.arcs),
            "crossings": [{"over": c.over, "under_in": c.under_in,
                           "under_out": c.under_out, "sign": c.sign}
                          for c in self.crossings],
            "provenance": prov,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Diagram":
        extra = set(data) - {"arcs", "crossings", "provenance"}
        if extra:
            raise DomainError(f"unknown diagram fields: {sorted(extra)}")
        for key in ("arcs", "crossings"):
            if key not in data:
                raise DomainError(f"missing diagram field {key!r}")
        recs = []
        for rec in data["crossings"]:
            if set(rec) != {"over", "under_in", "under_out", "sign"}:
                raise DomainError(f"bad crossing fields: {sorted(rec)}")
            if rec["sign"] not in (1, -1):
                raise DomainError(f"crossing sign must be 1 or -1, got {rec['sign']}")
            recs.append(CrossingRecord(rec["over"], rec["under_in"],
                                       rec["under_out"], rec["sign"]))
        prov = dict(data.get("provenance") or {})
        pd = prov.pop("pd", None)
        loops = prov.pop("free_loops", 0)
        if pd is not None:
            d = cls.from_pd(pd, loops, prov)
            if list(d.arcs) != list(data["arcs"]) or d.crossings != tuple(recs):
                raise DomainError("arc-level data disagrees with the embedded PD code")
            return d
        return cls.from_records(data["arcs"], recs, prov)

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        return cls.from_dict(json.loads(text))


def _arc_components(arcs, recs) -> int:
    parent = {a: a for a in arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in recs:
        if c.under_in in parent and c.under_out in parent:
            parent[find(c.under_in)] = find(c.under_out)
    return len({find(a) for a in arcs})


# ---------------------------------------------------------------------------
# PD structure: occurrences, strands, faces

@dataclass
class PDStructure:
    pd: tuple[PDCrossing, ...]
    #: edge -> [(crossing, slot), (crossing, slot)]
    occ: dict

    def other_end(self, c: int, s: int) -> tuple[int, int]:
        e = self.pd[c].edges[s]
        a, b = self.occ[e]
        return b if a == (c, s) else a

    def head(self, e: int) -> tuple[int, int]:
        a, b = self.occ[e]
        return a if self.pd[a[0]].incoming(a[1]) else b

    def tail(self, e: int) -> tuple[int, int]:
        a, b = self.occ[e]
        return b if self.pd[a[0]].incoming(a[1]) else a

    def next_edge(self, e: int) -> int:
        c, s = self.head(e)
        return self.pd[c].edges[(s + 2) % 4]

    def follow_arc(self, e: int) -> list[tuple[int, int]]:
        """Edges of the arc starting at ``e``, each paired with its head crossing."""
        path = []
        for _ in range(len(self.occ) + 1):
            c, s = self.head(e)
            path.append((e, c))
            if s == 0:
                return path
            e = self.pd[c].edges[(s + 2) % 4]
        raise DomainError("arc does not terminate")

    def strand_cycle(self, e: int) -> list[int]:
        cycle = [e]
        f = self.next_edge(e)
        while f != e:
            cycle.append(f)
            f = self.next_edge(f)
        return cycle

    def component_count(self) -> int:
        seen, count = set(), 0
        for e in sorted(self.occ):
            if e not in seen:
                count += 1
                seen.update(self.strand_cycle(e))
        return count

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as cyclic dart lists; the face lies right of each dart.

        A dart ``(c, s)`` leaves crossing ``c`` along the edge in slot ``s``.
        Faces are listed in order of their smallest dart.
        """
        seen, out = set(), []
        for c in range(len(self.pd)):
            for s in range(4):
                if (c, s) in seen:
                    continue
                face, d = [], (c, s)
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    c2, s2 = self.other_end(*d)
                    d = (c2, (s2 + 1) % 4)
                out.append(face)
        return out

    def face_of_dart(self) -> dict:
        return {d: i for i, f in enumerate(self.faces()) for d in f}

    def side_face(self, e: int, side: str) -> int:
        """Index of the face on the given side (``"left"``/``"right"``) of edge e."""
        dart = self.tail(e) if side == "right" else self.head(e)
        return self.face_of_dart()[dart]

    def connected_pieces(self) -> int:
        parent = list(range(len(self.pd)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (c1, _), (c2, _) in self.occ.values():
            parent[find(c1)] = find(c2)
        return len({find(c) for c in range(len(self.pd))})


def pd_structure(pd: Sequence[PDCrossing]) -> PDStructure:
    occ: dict = {}
    for c, x in enumerate(pd):
        if x.sign not in (1, -1):
            raise DomainError(f"crossing {c + 1} has sign {x.sign}")
        for s, e in enumerate(x.edges):
            occ.setdefault(e, []).append((c, s))
    for e, where in occ.items():
        if len(where) != 2:
            raise DomainError(f"edge {e} occurs {len(where)} times")
        (c1, s1), (c2, s2) = where
        if pd[c1].incoming(s1) == pd[c2].incoming(s2):
            raise DomainError(f"edge {e} is not oriented consistently")
    return PDStructure(tuple(pd), occ)


# ---------------------------------------------------------------------------
# top-to-bottom builder shared by braid closures and plats

class _MorseBuilder:
    """Assemble a diagram from cups, caps and crossings read top to bottom.

    Crossing slots are recorded counter-clockwise as (NE, NW, SW, SE).
    """

    def __init__(self):
        self.parent = {}
        self.ends: list[int] = []
        self.cross: list[tuple[list[int], int]] = []
        self._next = 0

    def _new(self):
        self._next += 1
        self.parent[self._next] = self._next
        return self._next

    def _find(self, e):
        while self.parent[e] != e:
            self.parent[e] = self.parent[self.parent[e]]
            e = self.parent[e]
        return e

    def cup(self, p):
        e = self._new()
        self.ends[p:p] = [e, e]

    def cap(self, p):
        a, b = self.ends[p], self.ends[p + 1]
        self.parent[self._find(a)] = self._find(b)
        del self.ends[p:p + 2]

    def crossing(self, p, right_over: bool):
        nw, ne = self.ends[p], self.ends[p + 1]
        sw, se = self._new(), self._new()
        # strands NE-SW occupy slots 0/2, NW-SE slots 1/3
        self.cross.append(([ne, nw, sw, se], 1 if right_over else 0))
        self.ends[p], self.ends[p + 1] = sw, se

    def build(self, provenance) -> Diagram:
        if self.ends:
            raise DomainError("unclosed strands")
        cross = [([self._find(e) for e in slots], par) for slots, par in self.cross]
        occ = {}
        for c, (slots, _) in enumerate(cross):
            for s, e in enumerate(slots):
                occ.setdefault(e, []).append((c, s))
        roots = {self._find(e) for e in self.parent}
        free_loops = sum(1 for e in roots if e not in occ)
        incoming = [[None] * 4 for _ in cross]

        def other(c, s):
            a, b = occ[cross[c][0][s]]
            return b if a == (c, s) else a

        # orient each strand downward where it is first met
        for c in range(len(cross)):
            for top in (0, 1):
                if incoming[c][top] is not None:
                    continue
                cc, ss = c, top
                while incoming[cc][ss] is None:
                    incoming[cc][ss] = True
                    incoming[cc][(ss + 2) % 4] = False
                    oc, os_ = other(cc, (ss + 2) % 4)
                    cc, ss = oc, os_
        # relabel edges along components in traversal order
        labels, nxt = {}, 1
        for c in range(len(cross)):
            for s in range(4):
                e = cross[c][0][s]
                if e in labels or incoming[c][s]:
                    continue
                cc, ss = c, s
                while cross[cc][0][ss] not in labels:
                    labels[cross[cc][0][ss]] = nxt
                    nxt += 1
                    hc, hs = other(cc, ss)
                    cc, ss = hc, (hs + 2) % 4
        pd = [orient_crossing([labels[e] for e in slots], par, incoming[c])
              for c, (slots, par) in enumerate(cross)]
        return Diagram.from_pd(pd, free_loops, provenance)


def braid_closure(w: BraidWord) -> Diagram:
    """Trace closure of a braid, strands running downward.

    A positive letter ``s_i`` sends the strand at position ``i+1`` over the
    one at position ``i``.
    """
    n = w.strands
    b = _MorseBuilder()
    for k in range(n):
        b.cup(k)
    for i, s in w.letters:
        b.crossing(i - 1, right_over=(s > 0))
    for k in range(n - 1, -1, -1):
        b.cap(k)
    return b.build({"kind": "braid-closure", "braid": str(w)})


def torus_diagram(n: int) -> Diagram:
    """Closure of ``s1^n`` in the two-strand braid group: T(2, n)."""
    if n < 2:
        raise DomainError(f"torus_diagram needs n >= 2, got {n}")
    d = braid_closure(braid_word_parse(f"B2: s1^{n}"))
    d.provenance["torus"] = [2, n]
    return d


@dataclass(frozen=True)
class RationalSpec:
    twist_vector: tuple[int, ...]

    def __post_init__(self):
        tv = tuple(int(t) for t in self.twist_vector)
        object.__setattr__(self, "twist_vector", tv)
        if not tv:
            raise DomainError("twist vector is empty")
        if any(t == 0 for t in tv):
            raise DomainError("twist vector entries must be nonzero")


def rational_diagram(spec: RationalSpec | Sequence[int]) -> Diagram:
    """Numerator closure of a continued-fraction tangle, drawn as a 4-plat.

    Entries alternate between twists of the middle strands (``s2^t``) and
    twists of the left pair (``s1^t``), starting with the middle.  Plats are
    capped in pairs (1,2)(3,4) on top; the bottom caps avoid pairing the
    strands of the last twist, so no crossing is nugatory.  With this choice
    ``[a, -b]`` (``a, b > 0``) is alternating with determinant ``a*b + 1``.
    """
    if not isinstance(spec, RationalSpec):
        spec = RationalSpec(tuple(spec))
    b = _MorseBuilder()
    b.cup(0)
    b.cup(2)
    for k, t in enumerate(spec.twist_vector):
        pos = 1 if k % 2 == 0 else 0
        for _ in range(abs(t)):
            b.crossing(pos, right_over=(t > 0))
    if len(spec.twist_vector) % 2:
        b.cap(2)
        b.cap(0)
    else:
        b.cap(1)
        b.cap(0)
    return b.build({"kind": "rational", "twist_vector": list(spec.twist_vector)})


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    valid: bool
    violations: list[str]
    arcs: int
    crossings: int
    components: int

    def __bool__(self):
        return self.valid


def validate_diagram(d: Diagram) -> ValidationReport:
    """Check the structural invariants of ``d``; never raises."""
    problems = []
    arcset = set(d.arcs)
    if len(arcset) != len(d.arcs):
        problems.append("duplicate arc ids")
    ins = {a: 0 for a in arcset}
    outs = {a: 0 for a in arcset}
    for k, c in enumerate(d.crossings, 1):
        for name in ("over", "under_in", "under_out"):
            a = getattr(c, name)
            if a not in arcset:
                problems.append(f"unknown arc id {a} ({name} of crossing {k})")
        if c.sign not in (1, -1):
            problems.append(f"crossing {k} has sign {c.sign}")
        if c.under_in in ins:
            ins[c.under_in] += 1
        if c.under_out in outs:
            outs[c.under_out] += 1
    for a in sorted(arcset):
        if (ins[a], outs[a]) not in ((1, 1), (0, 0)):
            problems.append(f"arc {a} ends at {ins[a]} and starts at {outs[a]} under-passes")
    if d.pd is not None:
        try:
            info = pd_structure(d.pd)
            again = Diagram.from_pd(d.pd, d.free_loops)
            if again.crossings != d.crossings or again.arcs != d.arcs:
                problems.append("arc records disagree with the PD code")
            pieces = info.connected_pieces() if d.pd else 0
            # Euler: every connected piece is a sphere with N_i + 2 faces
            expected = len(d.pd) + 2 * pieces
            if d.pd and len(info.faces()) != expected:
                problems.append("PD code is not planar")
        except DomainError as exc:
            problems.append(f"PD code: {exc}")
    comps = _arc_components(d.arcs, d.crossings)
    if comps != d.components:
        problems.append(f"component count {d.components} should be {comps}")
    return ValidationReport(not problems, problems, len(d.arcs), len(d.crossings),
                            d.components)
