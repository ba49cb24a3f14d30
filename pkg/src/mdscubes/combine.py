"""Code combinators: McNeish product, relabeling, the collapsing product, puncturing, subcode removal."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .codes import Code, _from_sorted_unique, code_new, word_keys
from .errors import (
    DimensionMismatch,
    HoleNotSubset,
    IngredientInvalid,
    NotASubcode,
    NotBijective,
    StrengthMismatch,
    StrengthTooLow,
)
from .holes import HoleCode
from .linear import SuperChain, verify_chain
from .verify import mds_check


def _canonical(q: int, d: int, t: int, words: np.ndarray) -> tuple[Code, int]:
    """Sort and deduplicate; returns the code and how many rows were duplicates."""
    keys = word_keys(words, q)
    uniq, first = np.unique(keys, return_index=True)
    return _from_sorted_unique(q, d, t, words[first]), len(words) - len(uniq)


def product(c1: Code, c2: Code, *, certify: bool = False) -> Code:
    """McNeish product over the flattened alphabet x * q2 + y."""
    if c1.d != c2.d:
        raise DimensionMismatch(f"lengths differ: {c1.d} vs {c2.d}")
    if c1.t != c2.t:
        raise StrengthMismatch(f"strengths differ: {c1.t} vs {c2.t}")
    q = c1.q * c2.q
    w = c1.words.astype(np.int64)[:, None, :] * c2.q + c2.words.astype(np.int64)[None, :, :]
    code, dup = _canonical(q, c1.d, c1.t, w.reshape(-1, c1.d))
    assert dup == 0
    if certify:
        rep = mds_check(code)
        if not rep:
            raise IngredientInvalid(f"product is not MDS: {rep.message}")
    return code


def product_chain(a: SuperChain, b: SuperChain) -> SuperChain:
    chain = SuperChain(product(a.M, b.M), product(a.M1, b.M1), product(a.M2, b.M2))
    problems = verify_chain(chain)
    if problems:
        raise IngredientInvalid("; ".join(problems))
    return chain


def relabel(c: Code, sigma: Sequence[int], q: int | None = None) -> Code:
    """Apply the symbol map ``sigma`` (old -> new); the target alphabet has ``q`` letters."""
    q = c.q if q is None else q
    sigma = np.asarray(sigma, dtype=np.int64)
    if len(sigma) != c.q or len(set(sigma.tolist())) != c.q or sigma.min() < 0 or sigma.max() >= q:
        raise NotBijective(f"sigma must map Q_{c.q} injectively into Q_{q}")
    return code_new(q, c.d, c.t, sigma[c.words])


def relabel_hole(h: HoleCode, sigma: Sequence[int], q: int | None = None) -> HoleCode:
    code = relabel(h.code, sigma, q)
    return HoleCode(code, tuple(int(sigma[a]) for a in h.hole), h.j)


def collapse_table(p: int, q: int, hole: Iterable[int]) -> np.ndarray:
    """``table[x, y]`` = π_A(x, y) as a flat index.

    Pairs with y outside A are numbered lexicographically from 0; the hole
    letters take the trailing indices p(q-|A|) + rank(y).
    """
    hole = sorted(set(hole))
    if any(a < 0 or a >= q for a in hole):
        raise HoleNotSubset(f"hole {hole} is not a subset of Q_{q}")
    if len(hole) >= q:
        raise HoleNotSubset("the hole must be a proper subset of the alphabet")
    in_hole = np.zeros(q, dtype=bool)
    in_hole[hole] = True
    rank = np.empty(q, dtype=np.int64)
    rank[~in_hole] = np.arange(q - len(hole))
    rank[in_hole] = np.arange(len(hole))
    width = q - len(hole)
    table = np.arange(p)[:, None] * width + rank[None, :]
    table[:, in_hole] = p * width + rank[in_hole]
    return table


def a_product(c1: Code, c2: Code, hole: Iterable[int]) -> tuple[Code, int]:
    """C1 ×_A C2: coordinatewise π_A image of the product.

    Returns the deduplicated code and the number of colliding pairs, which
    callers compare against the injectivity their assembly relies on.
    """
    if c1.d != c2.d:
        raise DimensionMismatch(f"lengths differ: {c1.d} vs {c2.d}")
    hole = sorted(set(int(a) for a in hole))
    table = collapse_table(c1.q, c2.q, hole)
    q = c1.q * (c2.q - len(hole)) + len(hole)
    w = table[c1.words.astype(np.int64)[:, None, :], c2.words.astype(np.int64)[None, :, :]]
    return _canonical(q, c1.d, min(c1.t, c2.t), w.reshape(-1, c1.d))


def puncture(c: Code, coord: int) -> Code:
    if c.t < 2:
        raise StrengthTooLow(f"puncturing strength {c.t} would not leave an MDS code")
    if not 0 <= coord < c.d:
        raise IndexError(f"coordinate {coord} out of range for length {c.d}")
    words = np.delete(c.words.astype(np.int64), coord, axis=1)
    out, dup = _canonical(c.q, c.d - 1, c.t - 1, words)
    if dup:
        raise StrengthTooLow(f"{dup} codewords collided after deleting coordinate {coord}")
    return out


def remove_subcode(c: Code, hole: Iterable[int]) -> HoleCode:
    """M \\ A^d, valid when M ∩ A^d is an MDS code on A with M's strength."""
    hole = sorted(set(int(a) for a in hole))
    if not hole or any(a < 0 or a >= c.q for a in hole):
        raise HoleNotSubset(f"hole {hole} is not a non-empty subset of Q_{c.q}")
    in_hole = np.zeros(c.q, dtype=bool)
    in_hole[hole] = True
    inside = in_hole[c.words].all(axis=1)
    rank = np.full(c.q, -1, dtype=np.int64)
    rank[hole] = np.arange(len(hole))
    if not inside.any():
        raise NotASubcode(f"M ∩ A^{c.d} is empty")
    sub = code_new(len(hole), c.d, c.t, rank[c.words[inside]])
    rep = mds_check(sub)
    if not rep:
        raise NotASubcode(f"M ∩ A^{c.d} is not MDS({c.t},{c.d},{len(hole)}): {rep.message}")
    rest = _from_sorted_unique(c.q, c.d, c.t, c.words[~inside])
    return HoleCode(rest, tuple(hole), c.d)
