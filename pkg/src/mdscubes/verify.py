"""Certification of MDS strength, code distance, OA strength and latin-cube orthogonality.

``mds_check`` counts projections into flat buckets; ``distance_check`` is a
quadratic pairwise scan that shares no code with it and serves as the oracle
on small instances.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Sequence, TypeVar

import numpy as np

from .codes import Code, LatinCubePair, check_mds_params, to_latin_cubes
from .errors import HammingBoundViolation, NotFunctional, TooLarge
from .report import VerifyReport

T = TypeVar("T")
R = TypeVar("R")

DISTANCE_BOUND = 10_000


def _map(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def projection_index(words: np.ndarray, coords: Sequence[int], q: int) -> np.ndarray:
    idx = np.zeros(len(words), dtype=np.int64)
    for c in coords:
        idx *= q
        idx += words[:, c]
    return idx


def _unflatten(b: int, m: int, q: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        b, r = divmod(b, q)
        out.append(r)
    return tuple(reversed(out))


def mds_check(c: Code, t: int | None = None, workers: int = 1) -> VerifyReport:
    """Every projection onto d - t coordinates must hit every tuple exactly once."""
    start = time.perf_counter()
    t = c.t if t is None else t
    q, d, n = c.q, c.d, len(c)
    m = d - t
    expected = q**m
    counts = {"codewords": n, "expected": expected, "subsets": 0, "buckets": 0}
    try:
        check_mds_params(t, d, q)
    except HammingBoundViolation as exc:
        return VerifyReport("mds", False, counterexample={"t": t, "d": d, "q": q},
                            counts=counts, message=str(exc))
    if m < 0 or n != expected:
        return VerifyReport(
            "mds",
            False,
            counterexample={"size": n, "expected": expected},
            counts=counts,
            elapsed=time.perf_counter() - start,
            message=f"|C|={n} but an MDS({t},{d},{q}) code has q^(d-t)={expected} words",
        )

    def one(coords: tuple[int, ...]):
        hits = np.bincount(projection_index(c.words, coords, q), minlength=expected)
        bad = np.flatnonzero(hits != 1)
        if len(bad):
            b = int(bad[0])
            return coords, _unflatten(b, m, q), int(hits[b])
        return None

    subsets = list(combinations(range(d), m))
    results = _map(one, subsets, workers)
    counts["subsets"] = len(subsets)
    counts["buckets"] = len(subsets) * expected
    failure = next((r for r in results if r is not None), None)
    elapsed = time.perf_counter() - start
    if failure is None:
        return VerifyReport("mds", True, counts=counts, elapsed=elapsed,
                            message=f"MDS({t},{d},{q}), {n} words")
    coords, tup, hits = failure
    return VerifyReport(
        "mds",
        False,
        counterexample={"coordinates": coords, "tuple": tup, "hits": hits},
        counts=counts,
        elapsed=elapsed,
        message=f"projection onto {coords} hits {tup} {hits} times",
    )


def min_distance_pair(words: np.ndarray, bound: int = DISTANCE_BOUND) -> tuple[int, int, int]:
    """Exact minimum Hamming distance by scanning all pairs; returns (dist, i, j)."""
    w = np.asarray(words)
    n = len(w)
    if n > bound:
        raise TooLarge(f"{n} words exceeds the quadratic oracle bound {bound}")
    if n < 2:
        return w.shape[1] + 1 if w.ndim == 2 else 0, 0, 0
    best = (w.shape[1] + 1, 0, 0)
    for i in range(n - 1):
        dist = np.count_nonzero(w[i + 1:] != w[i], axis=1)
        k = int(np.argmin(dist))
        if dist[k] < best[0]:
            best = (int(dist[k]), i, i + 1 + k)
    return best


def distance_check(c: Code, bound: int = DISTANCE_BOUND) -> int:
    return min_distance_pair(c.words, bound)[0]


def oa_check(rows: np.ndarray, s: int, q: int | None = None) -> VerifyReport:
    """OA_1(s, k, q): every s columns contain every s-tuple exactly once."""
    start = time.perf_counter()
    rows = np.asarray(rows, dtype=np.int64)
    if q is None:
        q = int(rows.max()) + 1 if rows.size else 1
    n, k = rows.shape
    counts = {"rows": n, "columns": k, "expected": q**s}
    if n != q**s:
        return VerifyReport("oa", False, counterexample={"rows": n, "expected": q**s},
                            counts=counts, elapsed=time.perf_counter() - start,
                            message=f"{n} rows, an OA_1({s},{k},{q}) needs {q**s}")
    for cols in combinations(range(k), s):
        uniq, mult = np.unique(rows[:, cols], axis=0, return_counts=True)
        if len(uniq) != n:
            tup = tuple(int(v) for v in uniq[np.argmax(mult)])
            return VerifyReport(
                "oa", False,
                counterexample={"columns": cols, "tuple": tup, "count": int(mult.max())},
                counts=counts, elapsed=time.perf_counter() - start,
                message=f"columns {cols} repeat {tup}",
            )
    return VerifyReport("oa", True, counts=counts, elapsed=time.perf_counter() - start,
                        message=f"OA_1({s},{k},{q})")


def _latin_failure(cube: np.ndarray, q: int):
    symbols = np.arange(q)
    for axis in range(3):
        lines = np.sort(np.moveaxis(cube, axis, -1), axis=-1)
        bad = np.argwhere((lines != symbols).any(axis=-1))
        if len(bad):
            return axis, tuple(int(v) for v in bad[0])
    return None


def cubes_check(pair: LatinCubePair) -> VerifyReport:
    """Both cubes latin, and every pair of corresponding faces orthogonal."""
    start = time.perf_counter()
    q = pair.q
    f1 = np.asarray(pair.f1, dtype=np.int64)
    f2 = np.asarray(pair.f2, dtype=np.int64)
    counts = {"q": q, "lines": 2 * 3 * q * q, "faces": 3 * q}
    if f1.shape != (q, q, q) or f2.shape != (q, q, q):
        return VerifyReport("cubes", False, counterexample={"shape": (f1.shape, f2.shape)},
                            counts=counts, message="arrays are not q x q x q")
    for name, cube in (("f1", f1), ("f2", f2)):
        if cube.min() < 0 or cube.max() >= q:
            return VerifyReport("cubes", False, counterexample={"cube": name},
                                counts=counts, message=f"{name} has symbols outside Q_q")
        fail = _latin_failure(cube, q)
        if fail:
            axis, where = fail
            return VerifyReport(
                "cubes", False,
                counterexample={"cube": name, "axis": axis, "line": where},
                counts=counts, elapsed=time.perf_counter() - start,
                message=f"{name} is not latin along axis {axis} at {where}",
            )
    pairs = f1 * q + f2
    all_pairs = np.arange(q * q)
    for axis in range(3):
        faces = np.sort(np.moveaxis(pairs, axis, 0).reshape(q, q * q), axis=1)
        bad = np.flatnonzero((faces != all_pairs).any(axis=1))
        if len(bad):
            return VerifyReport(
                "cubes", False,
                counterexample={"axis": axis, "slice": int(bad[0])},
                counts=counts, elapsed=time.perf_counter() - start,
                message=f"faces at axis {axis}, index {int(bad[0])} are not orthogonal",
            )
    return VerifyReport("cubes", True, counts=counts, elapsed=time.perf_counter() - start,
                        message=f"orthogonal latin cubes of order {q}")


def cubes_check_code(c: Code) -> VerifyReport:
    """Convert to latin cubes and check; a non-functional code fails with its bad prefix."""
    try:
        pair = to_latin_cubes(c)
    except NotFunctional as exc:
        return VerifyReport("cubes", False, counterexample=str(exc), message=str(exc))
    return cubes_check(pair)
