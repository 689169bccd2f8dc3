import pytest

from mosaicknots.errors import NotApplicable
from mosaicknots.invariants import jones, kauffman_bracket
from mosaicknots.laurent import LaurentPoly
from mosaicknots.moves import (
    MoveRule, applicable_moves, apply_move, bracket_factor, equivalent_bfs,
    load_base_rules, move_catalog, simplify, transform_placement,
)
from mosaicknots.tiles import D4, R90, Mosaic, grow, is_suitably_connected, transform
from mosaicknots.topology import counts

CLASSICAL = move_catalog("classical")
VIRTUAL = move_catalog("virtual")


def _by_kind(cat):
    out = {}
    for rule in cat:
        out[rule.kind] = out.get(rule.kind, 0) + 1
    return out


def test_catalog_sizes():
    assert _by_kind(CLASSICAL) == {"planar": 304, "R1": 16, "R2": 16, "R3": 32}
    assert len(VIRTUAL) == 408
    assert {(r.before, r.after) for r in CLASSICAL} < {(r.before, r.after) for r in VIRTUAL}


def test_catalog_closed():
    keys = {(r.before, r.after) for r in VIRTUAL}
    for r in VIRTUAL:
        assert (r.after, r.before) in keys
        for g in D4:
            assert (r.before.transformed(g), r.after.transformed(g)) in keys
        assert (r.before.mirrored(), r.after.mirrored()) in keys


def test_rules_locally_sound():
    r1 = {LaurentPoly.monomial(3, -1), LaurentPoly.monomial(-3, -1)}
    for rule in VIRTUAL:
        u = bracket_factor(rule)
        if rule.kind == "R1":
            assert u in r1
        else:
            assert u == LaurentPoly.constant(1)


def test_no_moves_on_blank():
    assert applicable_moves(Mosaic.blank(3)) == []


def _kinked_trefoil(trefoil):
    """Trefoil on a 5-mosaic with one extra R1 kink."""
    big = grow(trefoil)
    for pl in applicable_moves(big, CLASSICAL):
        rule = CLASSICAL[pl.rule]
        if rule.kind == "R1":
            out = apply_move(big, pl.rule, pl.anchor, CLASSICAL)
            if counts(out).crossings == 4:
                return out
    raise AssertionError("no kink insertion found")


def test_kink_removal_is_offered(trefoil):
    m = _kinked_trefoil(trefoil)
    removals = [pl for pl in applicable_moves(m, CLASSICAL)
                if CLASSICAL[pl.rule].kind == "R1"
                and counts(apply_move(m, pl.rule, pl.anchor)).crossings == 3]
    assert removals


def test_simplify_removes_kink(trefoil):
    m = _kinked_trefoil(trefoil)
    s = simplify(m)
    assert counts(s) == (1, 3, 0)
    assert jones(s) == jones(trefoil)


def test_simplify_circle(circle):
    assert simplify(circle) == circle


def test_simplify_never_adds_crossings(trefoil, figure_eight):
    for m in (trefoil, figure_eight):
        s = simplify(m, max_steps=200)
        assert counts(s).crossings <= counts(m).crossings
        assert jones(s) == jones(m)


def test_moves_preserve_bracket_up_to_unit(trefoil):
    b = kauffman_bracket(trefoil)
    for pl in applicable_moves(trefoil, CLASSICAL):
        out = apply_move(trefoil, pl.rule, pl.anchor)
        assert is_suitably_connected(out) == []
        assert counts(out).components == 1
        assert jones(out) == jones(trefoil)
        nb = kauffman_bracket(out)
        assert nb.span() == b.span()


def test_equivariance(trefoil):
    base = set(applicable_moves(trefoil, CLASSICAL))
    for g in D4:
        image = transform(trefoil, g)
        moved = {transform_placement(pl, g, trefoil.n, CLASSICAL) for pl in base}
        assert moved == set(applicable_moves(image, CLASSICAL))


def test_apply_errors(trefoil):
    with pytest.raises(NotApplicable):
        apply_move(trefoil, len(CLASSICAL) + 5, (0, 0))
    with pytest.raises(NotApplicable):
        apply_move(trefoil, 0, (10, 10))
    wrong = next(i for i, r in enumerate(CLASSICAL) if r.before.flat() != trefoil.tiles[0][:2] + trefoil.tiles[1][:2])
    with pytest.raises(NotApplicable):
        apply_move(trefoil, wrong, (0, 0))


def test_bfs(circle, trefoil):
    assert equivalent_bfs(circle, circle) == []
    assert equivalent_bfs(circle, grow(circle)) == [("grow",)]
    path = equivalent_bfs(trefoil, transform(trefoil, R90), max_states=5000)
    assert path is not None and len(path) >= 1


def test_bfs_budget_exhausted_returns_none(circle, trefoil):
    assert equivalent_bfs(circle, trefoil, max_states=50) is None


def test_load_base_rules_text():
    text = "kind: R1\n2\n2 1\n3 9\n->\n2\n0 0\n0 2\n"
    (rule,) = load_base_rules("#c\n" + text)
    assert isinstance(rule, MoveRule) and rule.kind == "R1"
    with pytest.raises(ValueError):
        load_base_rules("#c\nkind: R9\n1\n0\n->\n1\n0\n")
