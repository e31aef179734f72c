import itertools
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from foxcol.analysis import (BLOCKED_COLOR, CLOSED_CYCLIC, EXACT2, EXACT3, EXACT4, NO_NONTRIVIAL,
                             RANGE, classify_triple, conjecture_experiment, harary_check,
                             mincol_bounds, min_colors_of_diagram, three_color_feasible)
from foxcol.coloring import validate_coloring
from foxcol.diagram import braid_closure, braid_word_parse, rational_diagram, torus_diagram
from foxcol.modular import BudgetExceeded, DomainError, is_prime, least_common_prime_divisor
from foxcol.moves import teneva_reduce


def test_classify_closed():
    tc = classify_triple(0, 1, 2, 3)
    assert tc.kind == CLOSED_CYCLIC and tc.requires_3_divides_r and not tc.blocked


def test_classify_middle_blocked():
    tc = classify_triple(0, 1, 2, 5)
    assert tc.kind == BLOCKED_COLOR and tc.blocked == {1}


def test_classify_mod_six():
    tc = classify_triple(0, 1, 3, 6)
    assert tc.kind == BLOCKED_COLOR and tc.blocked == {0, 1, 3}
    assert classify_triple(0, 2, 4, 6).kind == CLOSED_CYCLIC


@pytest.mark.parametrize("args", [(0, 0, 1, 5), (0, 5, 1, 5), (0, 1, 2, 1)])
def test_classify_domain(args):
    with pytest.raises(DomainError):
        classify_triple(*args)


def _blocked_oracle(t, r):
    # a color is blocked if no crossing with the other two as over/under produces it
    return {x for x in t if not any((2 * u - v) % r == x for u, v in itertools.permutations(t, 2)
                                    if x not in (u, v))}


@pytest.mark.parametrize("r", range(3, 31))
def test_scan_closed_iff_three_divides(r):
    triples = list(itertools.combinations(range(r), 3))
    closed = [t for t in triples if classify_triple(*t, r).kind == CLOSED_CYCLIC]
    assert bool(closed) == three_color_feasible(r) == (r % 3 == 0)
    for t in triples:
        tc = classify_triple(*t, r)
        if tc.kind == BLOCKED_COLOR:
            assert tc.blocked == _blocked_oracle(t, r)
            # observed shapes: one blocked color, or all three
            assert len(tc.blocked) in (1, 3)
        else:
            assert all((2 * y - x) % r in t for x in t for y in t)


def test_three_color_feasible_examples():
    assert three_color_feasible(9) and three_color_feasible(6)
    assert not three_color_feasible(5)
    assert not three_color_feasible(2)
    with pytest.raises(DomainError):
        three_color_feasible(1)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 60), st.data())
def test_classify_invariance(r, data):
    a, b, c = data.draw(st.permutations(range(r)))[:3]
    t = data.draw(st.integers(0, r - 1))
    base = classify_triple(a, b, c, r)
    for perm in itertools.permutations((a, b, c)):
        assert classify_triple(*perm, r) == base
    moved = classify_triple(a + t, b + t, c + t, r)
    assert moved.kind == base.kind
    assert moved.blocked == {(x + t) % r for x in base.blocked}


def test_triple_to_dict():
    assert classify_triple(0, 1, 2, 5).to_dict() == {"kind": BLOCKED_COLOR, "blocked": [1],
                                                     "requires_3_divides_r": False}


@pytest.mark.parametrize("n, r, want", [(5, 5, 5), (4, 4, 2), (6, 4, 2), (2, 6, 2), (3, 3, 3),
                                        (9, 3, 3), (3, 9, 3), (5, 7, None)])
def test_min_colors_examples(n, r, want):
    assert min_colors_of_diagram(torus_diagram(n), r) == want


@pytest.mark.parametrize("n, r", [(5, 5), (5, 10), (10, 5), (5, 25)])
def test_min_colors_of_reduced_is_four(n, r):
    cd, _ = teneva_reduce(n, r, 0, r // 5)
    assert min_colors_of_diagram(cd.diagram, r) == 4


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
@pytest.mark.parametrize("r", [3, 5, 7, 9, 15])
def test_odd_r_on_knots_needs_more_than_two(n, r):
    got = min_colors_of_diagram(torus_diagram(n), r)
    assert got is None or got > 2
    if least_common_prime_divisor(n, r) == 3:
        assert got == 3
    p = math.gcd(n, r)
    if p > 1 and is_prime(p):
        assert got > 2


def test_min_colors_budget():
    with pytest.raises(BudgetExceeded):
        min_colors_of_diagram(torus_diagram(12), 24, cap=50)


@pytest.mark.parametrize("d, p", [(rational_diagram([8, -9]), 73), (torus_diagram(3), 3),
                                  (torus_diagram(5), 5), (rational_diagram([3, -2]), 7)])
def test_harary_instances(d, p):
    assert harary_check(d, p)


def test_harary_fails_on_nonminimal_diagram():
    # an extra kink gives a second arc of the same color
    d = braid_closure(braid_word_parse("B3: s1^3 s2"))
    assert not harary_check(d, 3)


@pytest.mark.parametrize("d, p", [(torus_diagram(3), 4), (torus_diagram(5), 3)])
def test_harary_domain(d, p):
    with pytest.raises(DomainError):
        harary_check(d, p)


@pytest.mark.parametrize("n, r, branch, lower, upper", [
    (6, 4, EXACT2, 2, 2), (9, 6, EXACT3, 3, 3), (5, 25, EXACT4, 4, 4),
    (7, 7, RANGE, 4, 5), (11, 22, RANGE, 4, 7), (5, 7, NO_NONTRIVIAL, None, None),
    (10, 15, EXACT4, 4, 4), (3, 9, EXACT3, 3, 3)])
def test_bounds_branches(n, r, branch, lower, upper):
    rep = mincol_bounds(n, r)
    assert (rep.branch, rep.lower, rep.upper) == (branch, lower, upper)
    if lower is not None:
        assert rep.lower <= rep.upper
        assert rep.exact == (branch != RANGE)


@pytest.mark.parametrize("n, r", [(6, 4), (9, 3), (5, 25), (7, 7), (13, 13), (14, 21), (15, 5)])
def test_bound_witnesses_validate(n, r):
    rep = mincol_bounds(n, r)
    assert rep.witnesses
    for w in rep.witnesses:
        assert validate_coloring(w.colored)
        assert not w.colored.coloring.is_trivial
        assert w.palette_size == rep.upper


def test_bounds_domain():
    with pytest.raises(DomainError):
        mincol_bounds(1, 5)


def test_bound_report_json():
    data = json.loads(mincol_bounds(7, 7).to_json())
    assert data["provenance"] == {"lower": "theorem", "upper": "witness"}
    assert data["witnesses"][0]["palette_size"] == 5
    assert json.loads(mincol_bounds(5, 7).to_json())["lower"] is None


def test_experiment_seven():
    rep = conjecture_experiment(3, 7, n=7)
    assert rep.best_palette == 5 and rep.bound == 5
    assert not rep.counterexample
    assert sorted(rep.by_steps) == list(range(1, 7))
    assert rep.by_steps[3] == 5
    assert rep.complete


def test_experiment_small_budget_is_incomplete():
    rep = conjecture_experiment(3, 7, move_budget=10, n=7)
    assert not rep.complete
    assert rep.moves_applied <= 10


def test_experiment_json():
    data = json.loads(conjecture_experiment(3, 7, move_budget=50, n=7).to_json())
    assert data["bound"]["provenance"] == "theorem"
    assert data["best_palette"]["provenance"] == "search"


@pytest.mark.parametrize("k, r, n", [(2, 5, 5), (4, 9, 9), (3, 5, 7)])
def test_experiment_domain(k, r, n):
    with pytest.raises(DomainError):
        conjecture_experiment(k, r, n=n)
