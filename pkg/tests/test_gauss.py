import random

import pytest

from oracles import gauss_words, planar_by_faces

from mosaicknots.bounds import virtual_bound_check
from mosaicknots.errors import BadToken, LabelCountMismatch, NotRealizable, ParseError
from mosaicknots.gauss import (
    compile_gauss, interlacement, invert_lists, is_realizable, layout, layout_plan,
    parse_gauss, roundtrip_check,
)
from mosaicknots.invariants import FIGURE_EIGHT, TREFOIL, jones, same_up_to_mirror
from mosaicknots.tiles import Kind, Mosaic, is_suitably_connected
from mosaicknots.topology import GaussCode, GaussEntry, counts

TREFOIL_CODE = "O1U2O3U1O2U3"
FIG8_CODE = "O1U2O3U4O2U1O4U3"


def _code(labels, overs=None):
    seen = set()
    entries = []
    for i, lab in enumerate(labels):
        first = lab not in seen
        seen.add(lab)
        over = first if overs is None else (first == overs[lab])
        entries.append(GaussEntry(lab, over))
    return GaussCode(tuple(entries))


def _ou_codes(word):
    labs = sorted(set(word))
    for bits in range(2 ** len(labs)):
        yield _code(word, {lab: bool(bits >> i & 1) for i, lab in enumerate(labs)})


def test_parse():
    code = parse_gauss("O1+U2+O3+U1+O2+U3+")
    assert len(code) == 6 and code.crossing_count == 3 and code.signed
    assert parse_gauss("O1U1").crossing_count == 1
    assert len(parse_gauss("")) == 0


@pytest.mark.parametrize("text,err", [
    ("O1U2", LabelCountMismatch),
    ("O1O1", LabelCountMismatch),
    ("O1U1O1", LabelCountMismatch),
    ("O1+U1-", ParseError),
    ("O1Q2", BadToken),
    ("O0U0", BadToken),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_gauss(text)


def test_invert_lists_examples():
    assert invert_lists(_code([1, 2, 3, 1, 2, 3])).labels == [1, 3, 2, 1, 2, 3]
    assert invert_lists(GaussCode()).labels == []
    assert invert_lists(_code([1, 1])).labels == [1, 1]


def test_invert_lists_keeps_passages():
    code = parse_gauss(FIG8_CODE)
    inv = invert_lists(code)
    assert sorted(inv.entries) == sorted(code.entries)


def test_realizability_examples():
    assert is_realizable(parse_gauss(TREFOIL_CODE))
    assert is_realizable(parse_gauss(FIG8_CODE))
    assert not is_realizable(parse_gauss("O1U2U1O2"))
    assert is_realizable(GaussCode())


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_realizability_matches_face_count(c):
    for word in gauss_words(c):
        assert is_realizable(_code(word)) == planar_by_faces(word)


def test_realizability_sampled_larger():
    rng = random.Random(7)
    for c in (5, 6):
        for _ in range(60):
            word = list(range(1, c + 1)) * 2
            rng.shuffle(word)
            assert is_realizable(_code(word)) == planar_by_faces(word)


def test_interlacement_symmetric():
    g = interlacement([1, 2, 1, 3, 2, 3])
    assert g == {1: {2}, 2: {1, 3}, 3: {2}}


def test_empty_code_layout():
    assert layout(GaussCode()) == Mosaic.from_rows([[2, 1], [3, 4]])


@pytest.mark.parametrize("text,poly", [(TREFOIL_CODE, TREFOIL), (FIG8_CODE, FIGURE_EIGHT)])
def test_named_knots(text, poly):
    code = parse_gauss(text)
    m = layout(code)
    c = code.crossing_count
    assert is_suitably_connected(m) == []
    assert counts(m) == (1, c, 0)
    assert m.n <= 4 * c + 2
    assert same_up_to_mirror(jones(m), poly)
    assert roundtrip_check(code, m)


def _check_layout(code):
    c = code.crossing_count
    planar = is_realizable(code)
    m = layout(code, allow_virtual=True)
    cnt = counts(m)
    assert is_suitably_connected(m) == []
    assert cnt.components == 1 and cnt.crossings == c
    assert m.n <= 4 * c + 2
    assert (cnt.virtual_crossings == 0) == planar
    assert roundtrip_check(code, m)
    if not planar:
        with pytest.raises(NotRealizable):
            layout(code)


@pytest.mark.parametrize("c", [1, 2, 3])
def test_every_ou_code_roundtrips(c):
    for word in gauss_words(c):
        for code in _ou_codes(word):
            _check_layout(code)


def test_sampled_larger_codes_roundtrip():
    rng = random.Random(11)
    for c in (5, 6):
        for _ in range(15):
            word = list(range(1, c + 1)) * 2
            rng.shuffle(word)
            overs = {lab: rng.random() < 0.5 for lab in range(1, c + 1)}
            _check_layout(_code(word, overs).relabeled())


def test_signed_code_keeps_signs():
    m = layout(parse_gauss("O1+U2+O3+U1+O2+U3+"))
    assert roundtrip_check(parse_gauss("O1+U2+O3+U1+O2+U3+"), m)
    m2 = layout(parse_gauss("O1-U2-O3-U1-O2-U3-"))
    assert roundtrip_check(parse_gauss("O1-U2-O3-U1-O2-U3-"), m2)


def test_roundtrip_rejects_other_code():
    m = layout(parse_gauss(TREFOIL_CODE))
    assert not roundtrip_check(parse_gauss(FIG8_CODE), m)


def test_virtual_example():
    m = compile_gauss("O1U2U1O2", allow_virtual=True)
    assert m.alphabet == "virtual"
    assert any(k == Kind.TV for k in m.flat())
    assert virtual_bound_check(m)
    with pytest.raises(NotRealizable):
        compile_gauss("O1U2U1O2")


def test_plan_dimensions():
    plan = layout_plan(parse_gauss(FIG8_CODE))
    assert plan.height == 4 * 4 + 2
    assert plan.width <= 2 * 4 + 2
    assert {ch.side for ch in plan.chords} <= {"L", "R"}


def test_deterministic():
    assert compile_gauss(FIG8_CODE) == compile_gauss(FIG8_CODE)
