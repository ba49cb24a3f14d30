import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdscubes.codes import code_new, to_latin_cubes, to_oa_rows
from mdscubes.errors import TooLarge
from mdscubes.tables import lemma1_code
from mdscubes.verify import (
    cubes_check,
    cubes_check_code,
    distance_check,
    mds_check,
    oa_check,
)


def brute_min_distance(words):
    words = [tuple(w) for w in words]
    return min(
        sum(a != b for a, b in zip(u, v))
        for i, u in enumerate(words)
        for v in words[i + 1:]
    )


def test_repetition_code_distance():
    rep = code_new(7, 5, 4, [[a] * 5 for a in range(7)])
    assert distance_check(rep) == 5
    assert mds_check(rep).passed


def test_rs5_distance(rs_codes):
    assert distance_check(rs_codes[5]) == 3
    assert brute_min_distance(rs_codes[5].words.tolist()) == 3


def test_lemma1_distance():
    assert distance_check(lemma1_code().code) == 3


def test_distance_bound():
    c = code_new(2, 14, 1, np.indices((2,) * 14).reshape(14, -1).T)
    with pytest.raises(TooLarge):
        distance_check(c)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16])
def test_rs_pass(rs_codes, q):
    rep = mds_check(rs_codes[q], 2)
    assert rep.passed
    assert rep.counts["subsets"] == 10
    assert rep.counts["buckets"] == 10 * q**3


def test_deleted_word_fails_on_size(rs_codes):
    c = rs_codes[4]
    short = code_new(4, 5, 2, c.words[1:])
    rep = mds_check(short)
    assert not rep.passed
    assert rep.counterexample == {"size": 63, "expected": 64}


def test_workers_do_not_change_report(rs_codes):
    c = rs_codes[7]
    bad = code_new(7, 5, 2, np.vstack([c.words[1:], [[0, 0, 0, 0, 1]]]))
    for code in (c, bad):
        a, b = mds_check(code, workers=1), mds_check(code, workers=4)
        assert (a.passed, a.counterexample, a.counts) == (b.passed, b.counterexample, b.counts)


def test_oa_strengths(rs_codes):
    rows = to_oa_rows(rs_codes[4])
    assert rows.shape == (64, 5)
    assert oa_check(rows, 3).passed
    assert not oa_check(rows, 4).passed


def test_oa_trivial_cases():
    assert oa_check(np.array([[0]]), 1, q=1).passed
    rep_rows = np.array([[0, 0, 0], [1, 1, 1]])
    assert oa_check(rep_rows, 1).passed
    assert not oa_check(rep_rows, 2).passed


def test_cubes_pass_and_symmetry(rs_codes):
    pair = to_latin_cubes(rs_codes[4])
    assert cubes_check(pair).passed
    assert cubes_check(pair.swapped()).passed


def test_cubes_copy_fails(rs_codes):
    pair = to_latin_cubes(rs_codes[5])
    from mdscubes.codes import LatinCubePair

    rep = cubes_check(LatinCubePair(5, pair.f1, pair.f1.copy()))
    assert not rep.passed
    assert "axis" in rep.counterexample


def test_cubes_non_latin_fails(rs_codes):
    pair = to_latin_cubes(rs_codes[5])
    f1 = pair.f1.copy()
    f1[0, 0, 0] = f1[0, 0, 1]
    from mdscubes.codes import LatinCubePair

    rep = cubes_check(LatinCubePair(5, f1, pair.f2))
    assert not rep.passed
    assert rep.counterexample["cube"] == "f1"


def test_oracle_agreement(mds_fixtures, rs_codes):
    """mds_check(t) passes iff distance >= t+1 and |C| = q^(d-t), on small codes."""
    from mdscubes.combine import puncture

    cases = list(mds_fixtures.values()) + [lemma1_code().code, puncture(rs_codes[5], 0)]
    c = rs_codes[7]
    cases.append(code_new(7, 5, 2, np.vstack([c.words[1:], [[0, 0, 0, 1, 1]]])))
    for code in cases:
        if len(code) > 10_000:
            continue
        for t in range(1, code.d):
            expect = distance_check(code) >= t + 1 and len(code) == code.q ** (code.d - t)
            assert mds_check(code, t).passed == expect, (code, t)


def corrupt(code, row, coord, shift):
    words = code.words.astype(np.int64).copy()
    words[row, coord] = (words[row, coord] + shift) % code.q
    return code_new(code.q, code.d, code.t, words)


@pytest.mark.parametrize(
    "name", ["rs4", "rs5", "rs7", "rs8", "rs9", "rs11", "rs13", "rs16", "product20", "steiner5"]
)
def test_equivalence_triangle_holds(mds_fixtures, name):
    c = mds_fixtures[name]
    assert mds_check(c, 2).passed
    assert oa_check(to_oa_rows(c), 3, c.q).passed
    assert cubes_check_code(c).passed


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_equivalence_triangle_corruption_quick(mds_fixtures, data):
    c = mds_fixtures[data.draw(st.sampled_from(sorted(mds_fixtures)))]
    row = data.draw(st.integers(0, len(c) - 1))
    coord = data.draw(st.integers(0, 4))
    shift = data.draw(st.integers(1, c.q - 1))
    bad = corrupt(c, row, coord, shift)
    reports = [mds_check(bad, 2), oa_check(to_oa_rows(bad), 3, bad.q), cubes_check_code(bad)]
    assert [r.passed for r in reports] == [False] * 3
    assert all(r.counterexample is not None for r in reports)
