"""Hole-filling assemblies of MDS codes and the order 16p + 4 pipeline."""

from __future__ import annotations

import logging
from functools import lru_cache, reduce
from typing import Sequence

import numpy as np

from .codes import Code, _from_sorted_unique, code_new, word_keys
from .combine import a_product, product, product_chain, relabel, relabel_hole, remove_subcode
from .errors import AlphabetMismatch, HoleOverlap, IngredientInvalid, NotAdmissible
from .fields import factorize, field_make
from .holes import HoleCode, hole_cardinality, hole_verify
from .linear import (
    SuperChain,
    coset_partition,
    kernel_enumerate,
    linear_mds,
    nested_parity,
    super_chain,
    verify_chain,
)
from .tables import lemma1_code
from .verify import mds_check

log = logging.getLogger(__name__)


def _require_mds(name: str, c: Code, t: int, d: int) -> None:
    if c.d != d:
        raise IngredientInvalid(f"{name} has length {c.d}, expected {d}")
    rep = mds_check(c, t)
    if not rep:
        raise IngredientInvalid(f"{name} is not MDS({t},{d},{c.q}): {rep.message}")


def _require_hole(name: str, h: HoleCode, j: int, d: int) -> None:
    if h.j != j or h.d != d or h.t != 2:
        raise IngredientInvalid(f"{name} must be an MDS(2,{d},q) code with {j}-A-hole, got {h!r}")
    rep = hole_verify(h)
    if not rep:
        raise IngredientInvalid(f"{name} fails the hole conditions: {rep.counterexample}")


def _difference(big: Code, small: Code) -> Code:
    keep = ~small.contains(big.words) if small.q <= big.q else np.ones(len(big), bool)
    return _from_sorted_unique(big.q, big.d, big.t, big.words[keep])


def _on_hole(name: str, e: Code, hole: Sequence[int], t: int, d: int) -> np.ndarray:
    """Ranks of E's symbols within the hole alphabet; E must live on the hole letters."""
    rank = np.full(e.q, -1, dtype=np.int64)
    rank[list(hole)] = np.arange(len(hole))
    ranks = rank[e.words]
    if (ranks < 0).any():
        raise AlphabetMismatch(f"{name} uses symbols outside the hole alphabet {tuple(hole)}")
    _require_mds(name, code_new(len(hole), d, t, ranks), t, d)
    return ranks


def _union(q: int, d: int, t: int, parts: list[tuple[str, np.ndarray]]) -> Code:
    words = np.concatenate([w for _, w in parts]).astype(np.int64)
    keys = word_keys(words, q)
    order = np.argsort(keys, kind="stable")
    if (keys[order][1:] == keys[order][:-1]).any():
        raise IngredientInvalid("assembly parts are not pairwise disjoint")
    return _from_sorted_unique(q, d, t, words[order])


def _collapse(name: str, c1: Code, c2: Code, hole: Sequence[int]) -> Code:
    out, collisions = a_product(c1, c2, hole)
    if collisions:
        raise IngredientInvalid(f"{name}: {collisions} collisions under the collapsing map")
    return out


# ---------------------------------------------------------------------------


def prop7_assemble(M: Code, M1: Code, D: Code, E: Code, F: HoleCode, certify: bool = True) -> Code:
    """C = E ∪ (M1 ×_A F) ∪ ((M \\ M1) × D), an MDS(2,4,(p-1)q+q1) code."""
    p, q, q1 = M.q, D.q, F.q
    _require_mds("M", M, 2, 4)
    _require_mds("M1", M1, 3, 4)
    if not M1.issubset(M):
        raise IngredientInvalid("M1 is not contained in M")
    _require_mds("D", D, 2, 4)
    _require_hole("F", F, 4, 4)
    if len(F.hole) != q1 - q:
        raise IngredientInvalid(f"|A|={len(F.hole)} must equal q1 - q = {q1 - q}")
    if E.q != q1:
        raise AlphabetMismatch(f"E must be written over F's alphabet of {q1} letters")
    e_ranks = _on_hole("E", E, F.hole, 2, 4)

    out_q = p * q + len(F.hole)
    parts = [
        ("E", p * q + e_ranks),
        ("M1 x_A F", _collapse("M1 x_A F", M1, F.code, F.hole).words),
        ("(M-M1) x D", product(_difference(M, M1).with_strength(2), D).words),
    ]
    code = _union(out_q, 4, 2, parts)
    if len(code) != out_q**2:
        raise IngredientInvalid(f"assembled {len(code)} words, expected {out_q ** 2}")
    if certify:
        _require_mds("assembled code", code, 2, 4)
    return code


def prop8_assemble(
    M: Code,
    classes: Sequence[Code],
    D: Code,
    fills: Sequence[HoleCode],
    hole_slots: Sequence[Sequence[int]] | None = None,
    certify: bool = True,
) -> HoleCode:
    """S = ∪ C_i ×_{A_i} F_i ∪ ((M \\ ∪C_i) × D), an MDS(2,5,(p-k)q+k q1) code with 4-B-hole.

    ``hole_slots[i]`` places the hole letters of ``fills[i]`` (in increasing
    order) at offsets within the trailing hole block of the output alphabet.
    """
    k = len(classes)
    if len(fills) != k:
        raise IngredientInvalid(f"{k} subcodes but {len(fills)} hole codes")
    if k > M.q:
        raise IngredientInvalid(f"k={k} exceeds p={M.q}")
    p, q = M.q, D.q
    _require_mds("M", M, 2, 5)
    _require_mds("D", D, 2, 5)
    a = len(fills[0].hole) if k else 0
    q1 = q + a
    for i, (c, f) in enumerate(zip(classes, fills)):
        _require_mds(f"C_{i + 1}", c, 3, 5)
        if not c.issubset(M):
            raise IngredientInvalid(f"C_{i + 1} is not contained in M")
        if f.q != q1 or len(f.hole) != a:
            raise AlphabetMismatch(f"F_{i + 1} must live on Q_{q} plus {a} hole letters")
        _require_hole(f"F_{i + 1}", f, 4, 5)
    if k:
        taken = np.concatenate([c.keys for c in classes])
        if len(np.unique(taken)) != len(taken):
            raise IngredientInvalid("the subcodes C_i are not pairwise disjoint")

    if hole_slots is None:
        hole_slots = [list(range(i * a, (i + 1) * a)) for i in range(k)]
    flat = [s for slots in hole_slots for s in slots]
    if len(set(flat)) != len(flat):
        raise HoleOverlap("hole alphabets A_i intersect")
    if len(hole_slots) != k or sorted(flat) != list(range(k * a)):
        raise IngredientInvalid(f"hole slots must partition 0..{k * a - 1}")

    base = p * q
    out_q = base + k * a
    parts = []
    rest = M
    for i, (c, f) in enumerate(zip(classes, fills)):
        part = _collapse(f"C_{i + 1} x_A F_{i + 1}", c, f.code, f.hole).words.astype(np.int64)
        remap = np.arange(base + a)
        remap[base:] = base + np.asarray(hole_slots[i])
        parts.append((f"C_{i + 1}", remap[part]))
        rest = _difference(rest, c)
    parts.append(("rest x D", product(rest.with_strength(2), D).words))
    code = _union(out_q, 5, 2, parts)
    hole = HoleCode(code, tuple(range(base, out_q)), 4)
    want = base**3 + 3 * base**2 * k * (q1 - q)
    if len(code) != want:
        raise IngredientInvalid(f"assembled {len(code)} words, expected {want}")
    if certify:
        _require_hole("assembled code", hole, 4, 5)
    return hole


def restrict(c: Code, alphabets: Sequence[Sequence[int]]) -> Code:
    """Codewords whose i-th symbol lies in ``alphabets[i]``, relabeled by position in that list."""
    size = len(alphabets[0])
    pos = np.full((c.d, c.q), -1, dtype=np.int64)
    for i, alpha in enumerate(alphabets):
        pos[i, list(alpha)] = np.arange(size)
    mapped = np.stack([pos[i, c.words[:, i]] for i in range(c.d)], axis=1)
    keep = (mapped >= 0).all(axis=1)
    return code_new(size, c.d, c.t, mapped[keep]) if keep.any() else None


def theorem1_assemble(
    chain: SuperChain,
    D: Code,
    E: Code,
    F: HoleCode,
    G: HoleCode,
    certify: bool = True,
    workers: int = 1,
) -> Code:
    """C = E ∪ (M2 ×_A G) ∪ ((M1 \\ M2) ×_A F) ∪ ((M \\ M1) × D), an MDS(2,5,(p-1)q+q1) code."""
    problems = verify_chain(chain)
    if problems:
        raise IngredientInvalid("super chain: " + "; ".join(problems))
    p, q, q1 = chain.order, D.q, F.q
    _require_mds("D", D, 2, 5)
    if G.q != q1 or G.hole != F.hole:
        raise AlphabetMismatch("F and G must share the alphabet Q_q ∪ A")
    if len(F.hole) != q1 - q:
        raise IngredientInvalid(f"|A|={len(F.hole)} must equal q1 - q = {q1 - q}")
    _require_hole("F", F, 4, 5)
    _require_hole("G", G, 5, 5)
    if E.q != q1:
        raise AlphabetMismatch(f"E must be written over the {q1}-letter alphabet of F and G")
    e_ranks = _on_hole("E", E, F.hole, 2, 5)

    A = F.hole
    base = p * q
    out_q = base + len(A)
    m1_only = _difference(chain.M1, chain.M2)
    m_only = _difference(chain.M, chain.M1)
    parts = [
        ("E", base + e_ranks),
        ("M2 x_A G", _collapse("M2 x_A G", chain.M2, G.code, A).words),
        ("(M1-M2) x_A F", _collapse("(M1-M2) x_A F", m1_only, F.code, A).words),
        ("(M-M1) x D", product(m_only.with_strength(2), D).words),
    ]
    sizes = {name: len(w) for name, w in parts}
    log.info("assembly parts: %s", sizes)
    expected = {
        "E": len(A) ** 3,
        "M2 x_A G": len(chain.M2) * len(G),
        "(M1-M2) x_A F": len(m1_only) * len(F),
        "(M-M1) x D": len(m_only) * len(D),
    }
    if sizes != expected:
        raise IngredientInvalid(f"part sizes {sizes} differ from {expected}")
    code = _union(out_q, 5, 2, parts)
    if len(code) != (p * q + q1 - q) ** 3:
        raise IngredientInvalid(f"assembled {len(code)} words, expected {(p * q + q1 - q) ** 3}")
    if certify:
        rep = mds_check(code, 2, workers=workers)
        if not rep:
            raise IngredientInvalid(f"assembled code failed verification: {rep.message}")
        _check_subcodes(code, chain, q, A)
    return code


def _check_subcodes(code: Code, chain: SuperChain, q: int, A: Sequence[int]) -> None:
    """The assembled code contains order-q and order-q1 subcodes on sampled rows."""
    base = chain.order * q
    holes = [base + i for i in range(len(A))]
    x = _difference(chain.M, chain.M1).words[0].astype(int)
    sub = restrict(code, [[xi * q + y for y in range(q)] for xi in x])
    if sub is None or not mds_check(sub, 2):
        raise IngredientInvalid(f"no order-{q} subcode over {tuple(x)} x D")
    x = chain.M2.words[0].astype(int)
    sub = restrict(code, [[xi * q + y for y in range(q)] + holes for xi in x])
    if sub is None or not mds_check(sub, 2):
        raise IngredientInvalid(f"no order-{q + len(A)} subcode E ∪ ({tuple(x)} x_A G)")


# ---------------------------------------------------------------------------
# The order 16p + 4 pipeline


def prime_power_factors(p: int) -> list[int]:
    return [r**e for r, e in sorted(factorize(p).items())]


def check_admissible(p: int) -> list[int]:
    """Prime-power factors of p, each of which must carry a linear super chain (order >= 5)."""
    if p < 5:
        raise NotAdmissible(f"p={p}: need p >= 5")
    factors = prime_power_factors(p)
    for f in factors:
        if f < 5:
            raise NotAdmissible(
                f"p={p} has prime-power factor {f}; super MDS(2,5,{f}) codes do not exist"
            )
    return factors


def chain_for(p: int) -> SuperChain:
    chains = [super_chain(field_make(f)) for f in check_admissible(p)]
    return reduce(product_chain, chains)


@lru_cache(maxsize=1)
def order4_codes() -> tuple[Code, list[Code]]:
    """MDS(2,5,4) together with its partition into four MDS(3,5,4) codes."""
    f4 = field_make(4)
    h = nested_parity(f4, 5, 3, min_rows=2)
    m4 = kernel_enumerate(h.prefix(2))
    return m4, coset_partition(kernel_enumerate(h), m4, f4)


@lru_cache(maxsize=1)
def theorem2_ingredients() -> dict[str, Code | HoleCode]:
    """D (order 16), E (order 4 on A), F (order 20, 4-A-hole), G (order 20, 5-A-hole)."""
    m4, classes = order4_codes()
    hole6 = lemma1_code()
    F = prop8_assemble(m4, classes[:2], m4, [hole6, hole6])
    A = F.hole  # 16..19

    m5 = linear_mds(field_make(5))
    g0 = remove_subcode(product(m4, m5), [x * 5 for x in range(4)])
    sigma = np.empty(20, dtype=np.int64)
    non_hole = [s for s in range(20) if s not in g0.hole]
    sigma[non_hole] = np.arange(16)
    sigma[list(g0.hole)] = A
    G = relabel_hole(g0, sigma)
    _require_hole("G", G, 5, 5)

    E = relabel(m4, A, q=20)
    D = linear_mds(field_make(16))
    return {"D": D, "E": E, "F": F, "G": G}


def theorem2_pipeline(p: int, certify: bool = True, workers: int = 1) -> Code:
    """An MDS(2,5,16p+4) code from a super MDS(2,5,p) chain."""
    chain = chain_for(p)
    ing = theorem2_ingredients()
    return theorem1_assemble(chain, ing["D"], ing["E"], ing["F"], ing["G"], certify, workers)


def new_orders(count: int) -> list[tuple[int, int]]:
    """First ``count`` orders 16p+4 reachable by the pipeline with 3 || 16p+4 (not 9 | 16p+4).

    Those orders lie outside the reach of product constructions from prime-power
    fields. Returns (p, order) pairs.
    """
    out = []
    p = 5
    while len(out) < count:
        n = 16 * p + 4
        if n % 3 == 0 and n % 9 != 0:
            try:
                check_admissible(p)
                out.append((p, n))
            except NotAdmissible:
                pass
        p += 1
    return out
