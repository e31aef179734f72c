import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from foxcol.acceptance import lemma_mismatches
from foxcol.coloring import (ColoredDiagram, Rejection, braid_coloring, count_colorings,
                             enumerate_colorings, palette_of, validate_coloring)
from foxcol.diagram import braid_closure, braid_word_parse, rational_diagram, torus_diagram, \
    validate_diagram
from foxcol.modular import DomainError
from foxcol.moves import (MoveSpec, MovePatternError, PaletteTrace, apply_move, legal_moves,
                          run_moves, teneva_reduce, teneva_search, teneva_sequence,
                          teneva_transform)


def _edge_color(cd, e):
    return cd.coloring[cd.diagram.edge_arcs[e]]


def _c(i, a, b, r):
    return (i * b - (i - 1) * a) % r


def test_movespec_rejects_unknown_kind():
    with pytest.raises(DomainError):
        MoveSpec("R4", (1,))


@pytest.mark.parametrize("variant", ["left-under", "left-over", "right-under", "right-over"])
def test_r1_add_keeps_colors(variant):
    cd = braid_coloring(3, 3, 0, 1)
    e = 1
    out, added, removed = apply_move(cd, MoveSpec("R1_add", (e,), variant))
    assert added == removed == frozenset()
    assert len(out.diagram.pd) == 4
    assert validate_coloring(out) and validate_diagram(out.diagram).valid
    kink = out.diagram.pd[-1]
    assert {_edge_color(out, x) for x in kink.edges} == {_edge_color(cd, e)}


def test_r1_round_trip():
    cd = braid_coloring(5, 5, 0, 1)
    out, _, _ = apply_move(cd, MoveSpec("R1_add", (3,), "right-over"))
    back, _, _ = apply_move(out, MoveSpec("R1_remove", (6,)))
    assert len(back.diagram.pd) == 5
    assert palette_of(back).colors == palette_of(cd).colors


def test_r2_add_new_color_is_reflection():
    cd = braid_coloring(5, 5, 0, 1)
    checked = 0
    for m in legal_moves(cd.diagram):
        if m.kind != "R2_add":
            continue
        try:
            out, trace = run_moves(cd, [m])
        except MovePatternError:
            continue
        eo, eu = m.site
        want = (2 * _edge_color(cd, eo) - _edge_color(cd, eu)) % 5
        assert set(trace.steps[0].introduced) == {want}
        assert len(out.diagram.pd) == 7
        checked += 1
    assert checked > 10


def test_r2_add_then_remove():
    cd = braid_coloring(5, 5, 0, 1)
    m = next(x for x in legal_moves(cd.diagram) if x.kind == "R2_add")
    out, _, _ = apply_move(cd, m)
    removals = [x for x in legal_moves(out.diagram) if x.kind == "R2_remove"]
    assert MoveSpec("R2_remove", (6, 7)) in removals
    back, _, _ = apply_move(out, MoveSpec("R2_remove", (6, 7)))
    assert len(back.diagram.pd) == 5
    assert palette_of(back).colors == palette_of(cd).colors


def test_r3_at_second_transformation_site():
    cd = braid_coloring(5, 5, 0, 1)
    moves = teneva_sequence(5, 2)
    out, trace = run_moves(cd, moves)
    step = trace.steps[2]
    assert step.move.kind == "R3"
    assert set(step.removed) == {4} and set(step.introduced) == {3}
    assert set(step.palette_removed) == {4}


@pytest.mark.parametrize("site, kind", [((1, 2, 3), "R3"), ((1,), "R1_remove"),
                                        ((1, 3), "R2_remove")])
def test_pattern_errors(site, kind):
    with pytest.raises(MovePatternError):
        apply_move(braid_coloring(3, 3, 0, 1), MoveSpec(kind, site))


@pytest.mark.parametrize("m", [MoveSpec("R1_add", (99,), "left-under"),
                               MoveSpec("R1_add", (1,), "up"),
                               MoveSpec("R2_add", (1, 2), "left/left")])
def test_bad_addition_sites(m):
    with pytest.raises(MovePatternError):
        apply_move(braid_coloring(3, 3, 0, 1), m)


def test_trefoil_has_no_removals():
    kinds = {m.kind for m in legal_moves(torus_diagram(3))}
    assert kinds == {"R1_add", "R2_add"}


def test_legal_moves_respects_crossing_limit():
    d = torus_diagram(4)
    assert all(m.kind not in ("R1_add", "R2_add") for m in legal_moves(d, max_crossings=4))
    assert not any(m.kind == "R2_add" for m in legal_moves(d, max_crossings=5))


@pytest.mark.parametrize("n, steps", [(3, 1), (5, 2), (7, 6), (12, 4)])
def test_sequence_shape(n, steps):
    seq = teneva_sequence(n, steps)
    assert len(seq) == steps + 1
    assert seq[0].kind == "R1_add"
    assert all(m.kind == "R3" and n + 1 in m.site for m in seq[1:])


@pytest.mark.parametrize("n, steps", [(2, 1), (5, 0), (5, 5)])
def test_sequence_domain(n, steps):
    with pytest.raises(DomainError):
        teneva_sequence(n, steps)


def test_transform_five():
    out, trace = teneva_transform(braid_coloring(5, 5, 0, 1), 2)
    assert palette_of(out).colors == {0, 1, 2, 3}
    assert trace.palette_sizes() == [5, 5, 5, 4]
    assert trace.consistent()


def test_transform_three_closed_forms():
    a, b, r = 0, 10, 30
    _, trace = teneva_transform(braid_coloring(3, r, a, b), 2)
    first, second = trace.steps[1:]
    assert set(first.introduced) == {(5 * b - 4 * a) % r}
    assert set(second.introduced) == {(6 * b - 5 * a) % r}
    assert set(second.removed) == {(2 * b - a) % r}


def test_transform_seven():
    out, trace = teneva_transform(braid_coloring(7, 7, 0, 1), 3)
    assert palette_of(out).size == 5 and trace.palette_sizes()[-1] == 5


def test_transform_needs_standard_closure():
    cd = ColoredDiagram(rational_diagram([3, -2]),
                        next(enumerate_colorings(rational_diagram([3, -2]), 7)))
    with pytest.raises(DomainError):
        teneva_transform(cd, 1)


def test_transform_even_note():
    _, trace = teneva_transform(braid_coloring(6, 6, 0, 1), 2)
    assert trace.notes and "even" in trace.notes[0]
    _, trace = teneva_transform(braid_coloring(5, 5, 0, 1), 2)
    assert trace.notes == []


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 11), st.integers(1, 4), st.data())
def test_transform_matches_closed_forms(n, m, data):
    r = n * m
    a = data.draw(st.integers(0, r - 1))
    b = (a + m * data.draw(st.integers(1, n - 1))) % r
    steps = data.draw(st.integers(1, n - 1))
    assert lemma_mismatches(n, r, a, b, steps) == []


@pytest.mark.parametrize("p", [5, 7, 11])
def test_transform_prime_minimum_at_k(p):
    k = (p - 1) // 2
    sizes = [teneva_transform(braid_coloring(p, p, 0, 1), s)[1].palette_sizes()[-1]
             for s in range(1, p)]
    assert min(sizes) == sizes[k - 1] == k + 2


@pytest.mark.parametrize("n, r, a, b, want", [(7, 21, 0, 3, 5), (15, 25, 0, 5, 4),
                                              (10, 5, 0, 1, 4), (5, 5, 2, 4, 4)])
def test_reduce_examples(n, r, a, b, want):
    out, trace = teneva_reduce(n, r, a, b)
    assert palette_of(out).size == trace.palette_sizes()[-1] <= want
    assert validate_coloring(out)
    assert not out.coloring.is_trivial


@pytest.mark.parametrize("args, err", [((9, 9, 0, 1), DomainError), ((4, 8, 0, 2), DomainError),
                                       ((5, 5, 0, 0), DomainError), ((7, 5, 0, 1), Rejection),
                                       ((5, 5, 0, 1, 5), DomainError)])
def test_reduce_errors(args, err):
    with pytest.raises(err):
        teneva_reduce(*args)


def test_reduce_block_count():
    _, trace = teneva_reduce(15, 25, 0, 5)
    assert sum(s.move.kind == "R1_add" for s in trace.steps) == 3


def test_trace_json():
    _, trace = teneva_transform(braid_coloring(5, 5, 0, 1), 2)
    data = json.loads(trace.to_json())
    assert data["initial_palette"] == [0, 1, 2, 3, 4]
    assert [s["move"] for s in data["steps"]] == ["R1_add", "R3", "R3"]
    assert data["steps"][-1]["palette_size_after"] == 4


def test_trace_inconsistent_detected():
    _, trace = teneva_transform(braid_coloring(5, 5, 0, 1), 2)
    trace.steps[-1].palette_size_after = 5
    assert not trace.consistent()
    assert PaletteTrace(frozenset({1})).consistent()


CORPUS = [torus_diagram(3), torus_diagram(4), rational_diagram([3, -2]),
          rational_diagram([2, 2]), braid_closure(braid_word_parse("B3: s1 s2^-1 s1 s2^-1"))]


@pytest.mark.parametrize("seed", range(6))
def test_random_moves_preserve_counts(seed):
    rng = random.Random(seed)
    d = CORPUS[seed % len(CORPUS)]
    r = (3, 5, 7)[seed % 3]
    cols = list(enumerate_colorings(d, r))
    cd = ColoredDiagram(d, rng.choice(cols))
    counts = {q: count_colorings(d, q) for q in range(2, 8)}
    for _ in range(15):
        m = rng.choice(list(legal_moves(cd.diagram, max_crossings=len(d.crossings) + 4)))
        try:
            out, _, _ = apply_move(cd, m)
        except MovePatternError:
            continue
        assert validate_diagram(out.diagram).valid
        assert validate_coloring(out)
        assert out.coloring.is_trivial == cd.coloring.is_trivial
        assert {q: count_colorings(out.diagram, q) for q in counts} == counts
        cd = out


def test_search_seven_coloring():
    e = rational_diagram([8, -6])
    col = next(c for c in enumerate_colorings(e, 7) if not c.is_trivial)
    res = teneva_search(ColoredDiagram(e, col))
    assert res.palette_size == 5 and res.complete
    assert res.trace.consistent()
    again, _ = run_moves(ColoredDiagram(e, col), [s.move for s in res.trace.steps])
    assert palette_of(again).size == 5


def test_search_budget_marks_incomplete():
    cd = braid_coloring(5, 5, 0, 1)
    res = teneva_search(cd, budget=20)
    assert not res.complete and res.moves_applied == 20
    assert res.palette_size <= 5


def test_search_needs_pd():
    from foxcol.diagram import CrossingRecord, Diagram
    from foxcol.coloring import Coloring
    d = Diagram.from_records([1, 2, 3], [CrossingRecord(2, 1, 3, 1), CrossingRecord(3, 2, 1, 1),
                                         CrossingRecord(1, 3, 2, 1)])
    with pytest.raises(DomainError):
        teneva_search(ColoredDiagram(d, Coloring(3, {1: 0, 2: 1, 3: 2})))
