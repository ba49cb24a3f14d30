import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdscubes.codes import code_new
from mdscubes.errors import HoleNotSubset
from mdscubes.combine import remove_subcode
from mdscubes.holes import HoleCode, hole_cardinality, hole_verify
from mdscubes.tables import lemma1_code
from mdscubes.verify import distance_check


def part(rep, name):
    return next(p for p in rep.details if p.prop == name)


def test_cardinality_formula():
    assert hole_cardinality(6, 2, 5, 2, 4) == 4**3 + 3 * 4**2 * 2 == 160
    assert hole_cardinality(20, 4, 5, 2, 4) == 7168
    assert hole_cardinality(20, 4, 5, 2, 5) == 7936
    # no hole: the Singleton size
    assert hole_cardinality(7, 0, 5, 2, 5) == 7**3


@given(q=st.integers(2, 12), a=st.integers(1, 4), t=st.integers(1, 3))
def test_full_j_complements_a_cube(q, a, t):
    # j = d: the code is M minus an MDS code on A, so |D| = q^(d-t) - a^(d-t)
    a = min(a, q - 1)
    assert hole_cardinality(q, a, 5, t, 5) == q ** (5 - t) - a ** (5 - t)


def test_lemma1():
    h = lemma1_code()
    assert len(h) == 160
    rep = hole_verify(h)
    assert rep.passed, rep.summary()
    assert distance_check(h.code) == 3
    assert h.hole == (4, 5)
    # the top-left cell of the first block reads (a, 0)
    assert h.code.contains(np.array([[0, 0, 0, 4, 0]]))[0]


def test_lemma1_has_no_hole_vectors():
    h = lemma1_code()
    inside = np.isin(h.words, h.hole).sum(axis=1)
    assert inside.max() == 1


def test_remove_subcode_gives_full_hole(rs_codes):
    h = remove_subcode(rs_codes[5], [0])
    rep = hole_verify(h)
    assert rep.passed, rep.summary()


def test_wrong_j_fails_size(ingredients):
    f = ingredients["F"]
    rep = hole_verify(f.with_j(5))
    assert not rep.passed
    assert part(rep, "size").counterexample == {"size": 7168, "expected": 7936}


def test_dropping_a_word_fails_size():
    h = lemma1_code()
    c = code_new(6, 5, 2, h.words[1:], labels=h.code.labels)
    rep = hole_verify(HoleCode(c, h.hole, 4))
    assert not rep.passed
    assert not part(rep, "size").passed
    assert part(rep, "avoid").passed


def test_hole_word_fails_avoid():
    h = lemma1_code()
    extra = np.concatenate([h.words, [[4, 4, 0, 1, 2]]])
    c = code_new(6, 5, 2, extra)
    rep = hole_verify(HoleCode(c, h.hole, 4))
    assert not part(rep, "avoid").passed
    assert part(rep, "avoid").counterexample == (4, 4, 0, 1, 2)


def test_parameter_checks():
    h = lemma1_code()
    assert not hole_verify(h.with_j(2)).passed
    assert not hole_verify(HoleCode(h.code, (4, 9), 4)).passed


@settings(max_examples=25, deadline=None)
@given(row=st.integers(0, 159), coord=st.integers(0, 4), shift=st.integers(1, 5))
def test_corruption_breaks_lemma1(row, coord, shift):
    h = lemma1_code()
    w = h.words.astype(np.int64).copy()
    w[row, coord] = (w[row, coord] + shift) % 6
    keys = set(map(tuple, w.tolist()))
    if len(keys) < len(w):
        return
    c = code_new(6, 5, 2, w)
    assert not hole_verify(HoleCode(c, h.hole, 4)).passed


def test_repr_and_sorting():
    h = lemma1_code()
    assert HoleCode(h.code, (5, 4), 4).hole == (4, 5)
    assert "j=4" in repr(h)
    with pytest.raises(HoleNotSubset):
        HoleCode(h.code, (4, 4), 4)
