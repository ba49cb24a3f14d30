"""Codes with a j-A-hole and their four-condition verifier."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .codes import Code
from .errors import HoleNotSubset
from .report import VerifyReport
from .verify import _map, projection_index


@dataclass(frozen=True, eq=False)
class HoleCode:
    """An MDS(t, d, q) code with j-A-hole: ``code`` avoids A^d and is filled by a code on A."""

    code: Code
    hole: tuple[int, ...]
    j: int

    def __post_init__(self) -> None:
        hole = tuple(sorted(int(a) for a in self.hole))
        if len(set(hole)) != len(hole):
            raise HoleNotSubset(f"hole {hole} repeats a letter")
        object.__setattr__(self, "hole", hole)

    @property
    def q(self) -> int:
        return self.code.q

    @property
    def d(self) -> int:
        return self.code.d

    @property
    def t(self) -> int:
        return self.code.t

    @property
    def words(self) -> np.ndarray:
        return self.code.words

    def __len__(self) -> int:
        return len(self.code)

    def __repr__(self) -> str:
        return f"HoleCode(q={self.q}, d={self.d}, t={self.t}, j={self.j}, A={self.hole}, n={len(self)})"

    def with_j(self, j: int) -> HoleCode:
        return HoleCode(self.code, self.hole, j)


def hole_cardinality(q: int, a: int, d: int, t: int, j: int) -> int:
    """Size of an MDS(t, d, q) code with j-A-hole, |A| = a."""
    return sum(comb(d - t, k) * (q - a) ** (d - t - k) * a**k for k in range(j - t))


def _hole_mask(q: int, hole: tuple[int, ...]) -> np.ndarray:
    mask = np.zeros(q, dtype=bool)
    mask[list(hole)] = True
    return mask


def _cond_distance(h: HoleCode) -> VerifyReport:
    q, d, t = h.q, h.d, h.t
    w = h.words
    # distance >= t+1: no two words agree on d-t coordinates
    for coords in combinations(range(d), d - t):
        idx = projection_index(w, coords, q)
        order = np.argsort(idx, kind="stable")
        same = np.flatnonzero(idx[order][1:] == idx[order][:-1])
        if len(same):
            i, k = order[same[0]], order[same[0] + 1]
            pair = (tuple(int(s) for s in w[i]), tuple(int(s) for s in w[k]))
            return VerifyReport("distance", False, pair,
                                message=f"codewords agree on coordinates {coords}")
    # distance exactly t+1: some pair agrees on d-t-1 coordinates
    m = d - t - 1
    if m == 0:
        ok = len(w) >= 2
    else:
        ok = any(
            np.bincount(projection_index(w, coords, q)).max() >= 2
            for coords in combinations(range(d), m)
        )
    if not ok:
        return VerifyReport("distance", False, {"min_distance_exceeds": t + 1},
                            message=f"no pair at distance {t + 1}")
    return VerifyReport("distance", True, message=f"code distance {t + 1}")


def _cond_avoid(h: HoleCode) -> VerifyReport:
    budget = h.j - h.t - 1
    per_word = _hole_mask(h.q, h.hole)[h.words].sum(axis=1)
    bad = np.flatnonzero(per_word > budget)
    if len(bad):
        w = tuple(int(s) for s in h.words[bad[0]])
        return VerifyReport("avoid", False, w,
                            message=f"codeword carries {per_word[bad[0]]} hole letters (> {budget})")
    return VerifyReport("avoid", True, message=f"<= {budget} hole letters per codeword")


def _cond_cover(h: HoleCode, workers: int = 1) -> VerifyReport:
    q, d, t, j = h.q, h.d, h.t, h.j
    m = j - t  # a vector is within distance d-j+t iff it agrees on >= m coordinates
    subsets = list(combinations(range(d), m))
    tables = []
    for coords in subsets:
        tab = np.zeros(q**m, dtype=bool)
        tab[projection_index(h.words, coords, q)] = True
        tables.append(tab)
    in_hole = _hole_mask(q, h.hole)
    rest = np.indices((q,) * (d - 1)).reshape(d - 1, -1).T

    def scan(first: int):
        vecs = np.empty((len(rest), d), dtype=np.int64)
        vecs[:, 0] = first
        vecs[:, 1:] = rest
        covered = np.zeros(len(vecs), dtype=bool)
        for coords, tab in zip(subsets, tables):
            covered |= tab[projection_index(vecs, coords, q)]
        hole_vec = in_hole[vecs].all(axis=1)
        bad = np.flatnonzero(~covered & ~hole_vec)
        return tuple(int(s) for s in vecs[bad[0]]) if len(bad) else None

    if m == 0:
        return VerifyReport("cover", True, message="radius d covers everything")
    results = _map(scan, list(range(q)), workers)
    miss = next((r for r in results if r is not None), None)
    if miss is not None:
        return VerifyReport("cover", False, miss,
                            message=f"vector {miss} is farther than {d - j + t} from the code")
    return VerifyReport("cover", True, counts={"vectors": q**d},
                        message=f"all of Q^{d} minus A^{d} within distance {d - j + t}")


def _cond_size(h: HoleCode) -> VerifyReport:
    want = hole_cardinality(h.q, len(h.hole), h.d, h.t, h.j)
    ok = len(h) == want
    return VerifyReport("size", ok, None if ok else {"size": len(h), "expected": want},
                        message=f"|D|={len(h)}, formula {want}")


def hole_verify(h: HoleCode, workers: int = 1) -> VerifyReport:
    """Check the four defining conditions of an MDS(t, d, q) code with j-A-hole."""
    start = time.perf_counter()
    parts = []
    if not (h.t + 1 <= h.j <= h.d):
        parts.append(VerifyReport("parameters", False, {"j": h.j},
                                  message=f"need t+1 <= j <= d, got j={h.j}"))
    if any(a < 0 or a >= h.q for a in h.hole):
        parts.append(VerifyReport("parameters", False, {"A": h.hole},
                                  message="hole letters outside the alphabet"))
    if not parts:
        parts = [_cond_distance(h), _cond_avoid(h), _cond_cover(h, workers), _cond_size(h)]
    failed = [p for p in parts if not p.passed]
    return VerifyReport(
        "hole",
        not failed,
        counterexample=(failed[0].prop, failed[0].counterexample) if failed else None,
        counts={"codewords": len(h), "q": h.q, "A": len(h.hole), "j": h.j},
        elapsed=time.perf_counter() - start,
        details=parts,
        message=f"{h.j}-A-hole, |A|={len(h.hole)}",
    )
