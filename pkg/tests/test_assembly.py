import numpy as np
import pytest

from mdscubes.assembly import (
    chain_for,
    check_admissible,
    new_orders,
    order4_codes,
    prop7_assemble,
    prop8_assemble,
    restrict,
    theorem1_assemble,
    theorem2_pipeline,
)
from mdscubes.codes import code_new
from mdscubes.combine import relabel_hole
from mdscubes.errors import (
    AlphabetMismatch,
    ChainNotFound,
    HoleOverlap,
    IngredientInvalid,
    NotAdmissible,
)
from mdscubes.holes import HoleCode, hole_verify
from mdscubes.fields import field_make
from mdscubes.linear import SuperChain, super_chain
from mdscubes.tables import lemma1_code, prop7_ingredients
from mdscubes.verify import distance_check, mds_check


def test_prop7_order13():
    ing = prop7_ingredients()
    c = prop7_assemble(ing["M"], ing["M1"], ing["D"], ing["E"], ing["F"])
    assert (c.q, c.d, len(c)) == (13, 4, 169)
    assert distance_check(c) == 3


def test_prop7_rejects_bad_ingredients():
    ing = prop7_ingredients()
    bad_d = code_new(3, 4, 2, ing["D"].words[1:])
    with pytest.raises(IngredientInvalid):
        prop7_assemble(ing["M"], ing["M1"], bad_d, ing["E"], ing["F"])
    e_out = code_new(4, 4, 2, [(0, 0, 0, 0)])
    with pytest.raises(AlphabetMismatch):
        prop7_assemble(ing["M"], ing["M1"], ing["D"], e_out, ing["F"])
    foreign = code_new(4, 4, 3, [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)])
    with pytest.raises(IngredientInvalid):
        prop7_assemble(ing["M"], foreign, ing["D"], ing["E"], ing["F"])


def test_prop8_without_holes():
    m4, _ = order4_codes()
    h = prop8_assemble(m4, [], m4, [])
    assert h.hole == () and len(h) == 16**3
    assert mds_check(h.code).passed


def test_prop8_one_fill():
    m4, classes = order4_codes()
    h = prop8_assemble(m4, classes[:1], m4, [lemma1_code()])
    assert (h.q, len(h), h.hole) == (18, 16**3 + 3 * 16**2 * 2, (16, 17))
    assert hole_verify(h).passed


def test_prop8_hole_slots():
    m4, classes = order4_codes()
    fills = [lemma1_code()] * 2
    h = prop8_assemble(m4, classes[:2], m4, fills, hole_slots=[[0, 2], [1, 3]], certify=False)
    assert len(h) == 7168
    with pytest.raises(HoleOverlap):
        prop8_assemble(m4, classes[:2], m4, fills, hole_slots=[[0, 1], [1, 2]])


def test_prop8_guards():
    m4, classes = order4_codes()
    with pytest.raises(IngredientInvalid):
        prop8_assemble(m4, classes[:2], m4, [lemma1_code()])
    with pytest.raises(IngredientInvalid):
        prop8_assemble(m4, [classes[0], classes[0]], m4, [lemma1_code()] * 2)
    shifted = relabel_hole(lemma1_code(), [0, 1, 2, 3, 4, 5], q=7)
    with pytest.raises(AlphabetMismatch):
        prop8_assemble(m4, classes[:1], m4, [shifted])


def test_admissibility():
    assert check_admissible(35) == [5, 7]
    assert check_admissible(8) == [8]
    for p in (4, 6, 12, 20, 3):
        with pytest.raises(NotAdmissible):
            check_admissible(p)


def test_new_orders_list():
    orders = [n for _, n in new_orders(10)]
    assert orders == [84, 132, 276, 372, 516, 564, 660, 852, 948, 1140]


def test_chain_for_35():
    ch = chain_for(35)
    assert (len(ch.M), len(ch.M1), len(ch.M2)) == (35**3, 35**2, 35)


def test_ingredients(ingredients):
    d, e, f, g = (ingredients[k] for k in "DEFG")
    assert (d.q, len(d)) == (16, 4096)
    assert e.q == 20 and len(e) == 64
    assert set(np.unique(e.words)) == {16, 17, 18, 19}
    assert (len(f), f.j, f.hole) == (7168, 4, (16, 17, 18, 19))
    assert (len(g), g.j, g.hole) == (7936, 5, (16, 17, 18, 19))


def test_theorem1_guards(ingredients):
    ch = chain_for(5)
    d, e, f, g = (ingredients[k] for k in "DEFG")
    broken = SuperChain(ch.M, ch.M1, code_new(5, 5, 4, [(1, 2, 3, 4, 0)]))
    with pytest.raises(IngredientInvalid):
        theorem1_assemble(broken, d, e, f, g)
    g_moved = HoleCode(g.code, (0, 1, 2, 3), 5)
    with pytest.raises(AlphabetMismatch):
        theorem1_assemble(ch, d, e, f, g_moved)
    e_bad = code_new(20, 5, 2, np.where(e.words == 16, 0, e.words))
    with pytest.raises(AlphabetMismatch):
        theorem1_assemble(ch, d, e_bad, f, g)


def test_theorem2_order84(mds84):
    assert (mds84.q, len(mds84)) == (84, 84**3)
    # subcodes on a block of M \ M1 and on a word of M2
    ch = chain_for(5)
    x = ch.M2.words[0].astype(int)
    sub = restrict(mds84, [[xi * 16 + y for y in range(16)] + [80, 81, 82, 83] for xi in x])
    assert sub is not None and len(sub) == 20**3


def test_theorem2_order116():
    c = theorem2_pipeline(7)
    assert (c.q, len(c)) == (116, 116**3)


def test_theorem2_rejects_order4():
    with pytest.raises(NotAdmissible):
        theorem2_pipeline(4)
    with pytest.raises(NotAdmissible):
        theorem2_pipeline(6)


def test_chain_order4_absent():
    with pytest.raises(ChainNotFound):
        super_chain(field_make(4))
