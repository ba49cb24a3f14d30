from itertools import combinations, product

import numpy as np
import pytest

from mdscubes.errors import ChainNotFound, DimensionTooLarge, NotLinear, NotSubcode
from mdscubes.fields import field_make
from mdscubes.linear import (
    bad_minor,
    coset_partition,
    kernel_enumerate,
    nested_parity,
    rs_parity,
    super_chain,
)
from mdscubes.verify import distance_check, mds_check

GF4_ADD = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def brute_kernel(matrix, q, add, mul):
    """All x in Q^d with H x = 0, by enumerating the whole space."""
    out = []
    for x in product(range(q), repeat=len(matrix[0])):
        ok = True
        for row in matrix:
            acc = 0
            for h, xi in zip(row, x):
                acc = add(acc, mul(h, xi))
            if acc:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def prime_ops(p):
    return (lambda a, b: (a + b) % p), (lambda a, b: (a * b) % p)


def gf4_ops():
    return (lambda a, b: GF4_ADD[a][b]), (lambda a, b: GF4_MUL[a][b])


def brute_distance(words):
    return min(sum(a != b for a, b in zip(u, v)) for u, v in combinations(words, 2))


def test_rs_gf5_d5_rho3():
    h = rs_parity(field_make(5), 5, 3)
    assert h.matrix.tolist() == [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]]
    expect = brute_kernel(h.matrix.tolist(), 5, *prime_ops(5))
    c = kernel_enumerate(h)
    assert len(expect) == 125
    assert sorted(map(tuple, c.words.tolist())) == sorted(expect)
    assert brute_distance(expect) == 3


def test_rs_gf4_extended():
    h = rs_parity(field_make(4), 5, 4)
    assert h.matrix.shape == (3, 5)
    expect = brute_kernel(h.matrix.tolist(), 4, *gf4_ops())
    c = kernel_enumerate(h)
    assert len(expect) == 16
    assert sorted(map(tuple, c.words.tolist())) == sorted(expect)
    assert brute_distance(expect) == 4


def test_rs_too_long():
    with pytest.raises(DimensionTooLarge, match="q\\+1"):
        rs_parity(field_make(4), 6, 3)
    with pytest.raises(DimensionTooLarge):
        rs_parity(field_make(3), 5, 3)


def test_gf7_distance5():
    h = rs_parity(field_make(7), 5, 5)
    c = kernel_enumerate(h)
    assert len(c) == 7
    assert brute_distance(c.words.tolist()) == 5


def test_zero_row_check_is_full_space():
    f = field_make(3)
    h = rs_parity(f, 3, 3).prefix(0)
    assert len(kernel_enumerate(h)) == 27


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
@pytest.mark.parametrize("rho", [3, 4, 5])
def test_kernel_size_and_exact_distance(q, rho):
    h = rs_parity(field_make(q), 5, rho)
    assert bad_minor(h.field, h.matrix) is None
    c = kernel_enumerate(h)
    assert len(c) == q ** (5 - (rho - 1))
    assert distance_check(c) == rho
    assert mds_check(c).passed


@pytest.mark.parametrize("q,sizes", [(5, (125, 25, 5)), (7, (343, 49, 7)), (8, (512, 64, 8))])
def test_super_chain(q, sizes):
    ch = super_chain(field_make(q))
    assert (len(ch.M), len(ch.M1), len(ch.M2)) == sizes
    assert ch.M2.issubset(ch.M1) and ch.M1.issubset(ch.M)
    assert [distance_check(c) for c in (ch.M, ch.M1, ch.M2)] == [3, 4, 5]


def test_row_prefix_nesting():
    h = nested_parity(field_make(7), 5, 4, min_rows=2)
    codes = [kernel_enumerate(h.prefix(k)) for k in (2, 3, 4)]
    assert codes[2].issubset(codes[1]) and codes[1].issubset(codes[0])


def test_gf4_chain_impossible():
    # every MDS(3,5,4) code is equidistant with distance 4, so it holds no
    # pair at distance 5 and no super MDS(2,5,4) chain exists
    with pytest.raises(ChainNotFound):
        super_chain(field_make(4))
    m1 = kernel_enumerate(rs_parity(field_make(4), 5, 4))
    w = m1.words.astype(int)
    dists = {int((w[i] != w[j]).sum()) for i in range(16) for j in range(i + 1, 16)}
    assert dists == {4}


def test_coset_partition_gf4():
    f = field_make(4)
    h = nested_parity(f, 5, 3, min_rows=2)
    sup, sub = kernel_enumerate(h.prefix(2)), kernel_enumerate(h)
    assert (len(sup), len(sub)) == (64, 16)
    classes = coset_partition(sub, sup, f)
    assert [len(c) for c in classes] == [16] * 4
    keys = np.concatenate([c.keys for c in classes])
    assert len(np.unique(keys)) == 64
    assert np.array_equal(np.sort(keys), sup.keys)
    assert all(distance_check(c) == 4 for c in classes)
    assert classes[0] == sub


def test_coset_partition_gf5_distance5():
    f = field_make(5)
    ch = super_chain(f)
    classes = coset_partition(ch.M2, ch.M1, f)
    assert [len(c) for c in classes] == [5] * 5
    assert all(distance_check(c) == 5 for c in classes)


def test_coset_partition_guards():
    f = field_make(5)
    ch = super_chain(f)
    with pytest.raises(NotSubcode):
        coset_partition(ch.M1, ch.M1, f)
    shifted = ch.M2.words.astype(int).copy()
    shifted[:, 0] = (shifted[:, 0] + 1) % 5
    from mdscubes.codes import code_new

    # an affine translate inside M1 is a subset of the right size but not linear
    other = coset_partition(ch.M2, ch.M1, f)[1]
    with pytest.raises(NotLinear):
        coset_partition(other, ch.M1, f)
    with pytest.raises(NotSubcode):
        coset_partition(code_new(5, 5, 4, shifted), ch.M1, f)
