import pytest

from oracles import skein_bracket

from mosaicknots.bounds import witness
from mosaicknots.census import CensusOptions, enumerate_mosaics
from mosaicknots.errors import NotAKnot, TooManyCrossings
from mosaicknots.invariants import (
    FIGURE_EIGHT, TREFOIL, jones, kauffman_bracket, same_up_to_mirror, span_crossing_bound,
)
from mosaicknots.laurent import DELTA, ONE
from mosaicknots.tiles import D4, FLIP, Mosaic, mirror, transform
from mosaicknots.topology import counts


def test_circle(circle):
    assert kauffman_bracket(circle) == ONE
    assert jones(circle) == ONE
    assert span_crossing_bound(circle) == 0


def test_two_circles():
    m = Mosaic.from_rows([[2, 1, 0, 0], [3, 4, 0, 0], [0, 0, 2, 1], [0, 0, 3, 4]])
    assert kauffman_bracket(m) == DELTA
    with pytest.raises(NotAKnot):
        jones(m)


def test_blank_rejected():
    with pytest.raises(NotAKnot):
        kauffman_bracket(Mosaic.blank(3))


def test_trefoil(trefoil):
    assert kauffman_bracket(trefoil).span() == 12
    assert same_up_to_mirror(jones(trefoil), TREFOIL)
    assert span_crossing_bound(trefoil) == 3


def test_figure_eight(figure_eight):
    j = jones(figure_eight)
    assert j == FIGURE_EIGHT
    assert j == j.substitute(-1)
    assert span_crossing_bound(figure_eight) == 4


def test_seven_crossing_witness():
    m = witness("7-crossing")
    assert span_crossing_bound(m) == 7


def test_state_sum_matches_skein_on_census4():
    for rec in enumerate_mosaics(4):
        if rec.components:
            assert kauffman_bracket(rec.mosaic) == skein_bracket(rec.mosaic)


def test_census4_jones_values():
    seen = {rec.jones for rec in enumerate_mosaics(4, CensusOptions(knots_only=True))}
    assert seen == {ONE, TREFOIL, TREFOIL.substitute(-1)}


def test_rotation_invariance(trefoil, figure_eight):
    for m in (trefoil, figure_eight):
        for g in D4[:4]:
            assert kauffman_bracket(transform(m, g)) == kauffman_bracket(m)


def test_reflection_inverts_A(trefoil):
    b = kauffman_bracket(trefoil)
    assert kauffman_bracket(transform(trefoil, FLIP)) == b.substitute(-1)
    assert kauffman_bracket(mirror(trefoil)) == b.substitute(-1)
    assert jones(mirror(trefoil)) == jones(trefoil).substitute(-1)


def test_crossing_limit(trefoil):
    with pytest.raises(TooManyCrossings):
        kauffman_bracket(trefoil, max_crossings=2)


def test_virtual_tiles_are_transparent():
    m = Mosaic.from_rows([[0, 2, 1, 0], [2, 11, 11, 1], [3, 11, 11, 4], [0, 3, 4, 0]])
    comps = counts(m).components
    assert comps == 2
    assert kauffman_bracket(m) == DELTA ** (comps - 1)
