"""Linear MDS codes over GF(q) from (extended) Vandermonde parity-check matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .codes import Code, code_new
from .errors import ChainNotFound, DimensionTooLarge, NotLinear, NotSubcode
from .fields import Field
from .verify import mds_check


@dataclass(frozen=True, eq=False)
class ParityCheck:
    field: Field
    d: int
    matrix: np.ndarray  # r x d over the field

    @property
    def r(self) -> int:
        return self.matrix.shape[0]

    def prefix(self, rows: int) -> ParityCheck:
        return ParityCheck(self.field, self.d, self.matrix[:rows])


@dataclass(frozen=True, eq=False)
class SuperChain:
    """M2 ⊂ M1 ⊂ M with distances 5, 4, 3 (strengths 4, 3, 2)."""

    M: Code
    M1: Code
    M2: Code

    @property
    def order(self) -> int:
        return self.M.q


# ---------------------------------------------------------------------------
# Linear algebra over a table field


def rank(f: Field, mat: np.ndarray) -> int:
    a = np.array(mat, dtype=np.int64)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = f.mul[f.inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = f.sub(a[i], f.mul[a[i, c], a[r]])
        r += 1
        if r == rows:
            break
    return r


def solve_square(f: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a @ x = b for nonsingular square ``a`` (b may have several columns)."""
    n = a.shape[0]
    aug = np.concatenate([np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i, c])
        aug[[c, piv]] = aug[[piv, c]]
        aug[c] = f.mul[f.inv[aug[c, c]], aug[c]]
        for i in range(n):
            if i != c and aug[i, c]:
                aug[i] = f.sub(aug[i], f.mul[aug[i, c], aug[c]])
    return aug[:, n:]


def bad_minor(f: Field, mat: np.ndarray) -> tuple[int, ...] | None:
    """First r-subset of columns that is linearly dependent, or None."""
    r, d = mat.shape
    for cols in combinations(range(d), r):
        if rank(f, mat[:, cols]) < r:
            return cols
    return None


# ---------------------------------------------------------------------------


def vandermonde(f: Field, points: list[int], r: int) -> np.ndarray:
    out = np.ones((r, len(points)), dtype=np.int64)
    for i in range(1, r):
        out[i] = f.mul[out[i - 1], points]
    return out


def _candidates(f: Field, d: int, r: int):
    """Parity-check candidates for length d with r rows, in search order."""
    if d <= f.q:
        yield vandermonde(f, list(range(d)), r)
        return
    base = vandermonde(f, list(range(f.q)), r)
    for unit in range(r):
        ext = np.zeros((r, 1), dtype=np.int64)
        ext[unit] = 1
        yield np.concatenate([base, ext], axis=1)


def _require_length(f: Field, d: int) -> None:
    if d > f.q + 1:
        raise DimensionTooLarge(
            f"length d={d} exceeds q+1={f.q + 1}: MDS(2,d,q) requires d <= q+1 (Hamming bound)"
        )


def nested_parity(f: Field, d: int, rows: int, min_rows: int = 1) -> ParityCheck:
    """A rows x d matrix whose every top-k prefix (min_rows <= k <= rows) has the minor property."""
    _require_length(f, d)
    for cand in _candidates(f, d, rows):
        if all(bad_minor(f, cand[:k]) is None for k in range(min_rows, rows + 1)):
            return ParityCheck(f, d, cand)
    raise ChainNotFound(
        f"no extended Vandermonde matrix over GF({f.q}) keeps prefixes of "
        f"{min_rows}..{rows} rows MDS at length {d}"
    )


def rs_parity(f: Field, d: int, rho: int) -> ParityCheck:
    """(rho-1) x d parity check of a linear MDS code of length d and distance rho."""
    _require_length(f, d)
    if not 3 <= rho <= d:
        raise ValueError(f"target distance must satisfy 3 <= rho <= d, got rho={rho}, d={d}")
    r = rho - 1
    for cand in _candidates(f, d, r):
        if bad_minor(f, cand) is None:
            return ParityCheck(f, d, cand)
    raise ChainNotFound(f"no extended Vandermonde check for d={d}, rho={rho} over GF({f.q})")


def generator_matrix(h: ParityCheck) -> np.ndarray:
    """Systematic generator: first d-r coordinates free, last r solved."""
    f, d, r = h.field, h.d, h.r
    k = d - r
    gen = np.zeros((k, d), dtype=np.int64)
    gen[:, :k] = np.eye(k, dtype=np.int64)
    if r:
        hr = h.matrix[:, k:]
        hf = h.matrix[:, :k]
        # H_R x_R = -H_F x_F
        sol = solve_square(f, hr, f.neg[hf])
        gen[:, k:] = sol.T
    return gen


def kernel_enumerate(h: ParityCheck) -> Code:
    f, d = h.field, h.d
    gen = generator_matrix(h)
    k = gen.shape[0]
    msgs = np.indices((f.q,) * k).reshape(k, -1).T if k else np.zeros((1, 0), dtype=np.int64)
    words = np.zeros((len(msgs), d), dtype=np.int64)
    for i in range(k):
        words = f.add[words, f.mul[msgs[:, i : i + 1], gen[i]]]
    syn = np.zeros((len(words), h.r), dtype=np.int64)
    for col in range(d):
        syn = f.add[syn, f.mul[words[:, col : col + 1], h.matrix[:, col]]]
    assert not syn.any(), "generator does not satisfy the parity check"
    return code_new(f.q, d, h.r, words)


def linear_mds(f: Field, d: int = 5, rho: int = 3) -> Code:
    return kernel_enumerate(rs_parity(f, d, rho))


def verify_chain(chain: SuperChain) -> list[str]:
    """Problems with a super chain (empty when valid)."""
    problems = []
    for name, code, t in (("M", chain.M, 2), ("M1", chain.M1, 3), ("M2", chain.M2, 4)):
        if code.d != 5:
            problems.append(f"{name} has length {code.d}, expected 5")
            continue
        rep = mds_check(code, t)
        if not rep:
            problems.append(f"{name} is not MDS({t},5,{code.q}): {rep.message}")
    if not chain.M1.issubset(chain.M):
        problems.append("M1 is not contained in M")
    if not chain.M2.issubset(chain.M1):
        problems.append("M2 is not contained in M1")
    return problems


def super_chain(f: Field) -> SuperChain:
    """Nested linear codes [5,1,5] ⊂ [5,2,4] ⊂ [5,3,3] from one 4 x 5 check matrix."""
    h = nested_parity(f, 5, 4, min_rows=2)
    chain = SuperChain(
        kernel_enumerate(h.prefix(2)),
        kernel_enumerate(h.prefix(3)),
        kernel_enumerate(h.prefix(4)),
    )
    problems = verify_chain(chain)
    if problems:
        raise ChainNotFound("; ".join(problems))
    return chain


def coset_partition(sub: Code, sup: Code, f: Field) -> list[Code]:
    """Split ``sup`` into q disjoint translates of the linear subcode ``sub``."""
    q = f.q
    if sub.q != q or sup.q != q or sub.d != sup.d:
        raise NotSubcode("codes must share the field alphabet and length")
    if sub.t != sup.t + 1:
        raise NotSubcode(f"subcode strength {sub.t} must be one more than {sup.t}")
    if len(sup) != q * len(sub) or not sub.issubset(sup):
        raise NotSubcode(f"need sub ⊂ sup with |sup| = q|sub| ({len(sup)} vs {q}*{len(sub)})")
    for code in (sub, sup):
        w = code.words.astype(np.int64)
        if not (w == 0).all(axis=1).any():
            raise NotLinear("zero word missing")
        idx = np.linspace(0, len(w) - 1, num=min(len(w), 8), dtype=int)
        sums = f.add[w[idx][:, None, :], w[idx][None, :, :]].reshape(-1, code.d)
        if not code.contains(sums).all():
            raise NotLinear("sum of two codewords left the code")

    sub_words = sub.words.astype(np.int64)
    covered = np.zeros(len(sup), dtype=bool)
    classes = []
    while not covered.all():
        rep = sup.words[int(np.argmin(covered))].astype(np.int64)
        translate = f.add[rep, sub_words]
        mask = sup.contains(translate)
        pos = np.searchsorted(sup.keys, Code(q, sup.d, sub.t, translate).keys)
        if not mask.all() or covered[pos].any():
            raise NotLinear("translate of the subcode is not a fresh coset of the supercode")
        covered[pos] = True
        cls = code_new(q, sup.d, sub.t, translate)
        if not mds_check(cls):
            raise NotLinear("coset is not MDS at the subcode's strength")
        classes.append(cls)
    return classes
