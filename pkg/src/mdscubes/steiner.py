"""Steiner systems S(tau, 5, q) and MDS(2,5,q) codes from nested pairs S(2,5,q) ⊂ S(3,5,q)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable

import numpy as np

from .codes import Code, code_new
from .errors import DuplicatePoint, InvalidDesign, NotNested, ParseError
from .fields import field_make
from .linear import linear_mds
from .report import VerifyReport
from .verify import mds_check

STEINER_MAGIC = "#steiner v1"
BLOCK_SIZE = 5


@dataclass(frozen=True)
class SteinerDesign:
    q: int
    tau: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, q: int, tau: int, blocks: Iterable[Iterable[int]]) -> SteinerDesign:
        return cls(q, tau, tuple(tuple(sorted(int(x) for x in b)) for b in blocks))


def joint_divisibility(q: int) -> bool:
    """Necessary condition for S(2,5,q) and S(3,5,q) to exist together."""
    return q % 60 in (5, 41)


def design_validate(d: SteinerDesign) -> VerifyReport:
    counts = {"q": d.q, "tau": d.tau, "blocks": len(d.blocks)}
    for b in d.blocks:
        if len(b) != BLOCK_SIZE or len(set(b)) != BLOCK_SIZE or min(b) < 0 or max(b) >= d.q:
            return VerifyReport("steiner", False, counterexample={"block": b}, counts=counts,
                                message=f"block {b} is not 5 distinct points of Q_{d.q}")
    cover = Counter(s for b in d.blocks for s in combinations(b, d.tau))
    over = next((s for s, n in cover.items() if n > 1), None)
    if over is not None:
        return VerifyReport("steiner", False, counterexample={"subset": over, "count": cover[over]},
                            counts=counts, message=f"{over} lies in {cover[over]} blocks")
    for s in combinations(range(d.q), d.tau):
        if s not in cover:
            return VerifyReport("steiner", False, counterexample={"subset": s, "count": 0},
                                counts=counts, message=f"{s} lies in no block")
    div = joint_divisibility(d.q)
    counts["joint_divisibility"] = int(div)
    return VerifyReport("steiner", True, counts=counts,
                        message=f"S({d.tau},5,{d.q}); q mod 60 in {{5, 41}}: {div}")


def even_permutations(n: int = BLOCK_SIZE) -> list[tuple[int, ...]]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        if inversions % 2 == 0:
            out.append(perm)
    return out


def alt5_orbit(block: Iterable[int]) -> np.ndarray:
    """The 60 arrangements of the ascending block under even permutations."""
    pts = sorted(int(x) for x in block)
    if len(pts) != BLOCK_SIZE or len(set(pts)) != BLOCK_SIZE:
        raise DuplicatePoint(f"block {pts} must have 5 distinct points")
    pts = np.array(pts)
    return np.array([pts[list(perm)] for perm in even_permutations()], dtype=np.int64)


def block_code(block: Iterable[int]) -> np.ndarray:
    """The order-5 linear MDS code (which contains all constants) placed on the ascending block."""
    pts = np.array(sorted(int(x) for x in block))
    return pts[linear_mds(field_make(5)).words.astype(np.int64)]


def theorem3_assemble(d2: SteinerDesign, d3: SteinerDesign, certify: bool = True) -> Code:
    """Union over X in D3 of M_X: an order-5 code on X for X in D2, the Alt(5) orbit otherwise."""
    if d2.tau != 2 or d3.tau != 3 or d2.q != d3.q:
        raise InvalidDesign("need S(2,5,q) and S(3,5,q) on the same point set")
    for d in (d2, d3):
        rep = design_validate(d)
        if not rep:
            raise InvalidDesign(rep.message)
    in_d3 = set(d3.blocks)
    missing = [b for b in d2.blocks if b not in in_d3]
    if missing:
        raise NotNested(f"block {missing[0]} of S(2,5,q) is not a block of S(3,5,q)")

    q = d2.q
    in_d2 = set(d2.blocks)
    parts = [block_code(b) for b in d2.blocks]
    parts += [alt5_orbit(b) for b in d3.blocks if b not in in_d2]
    words = np.concatenate(parts)
    constant = (words == words[:, :1]).all(axis=1)
    consts = np.unique(words[constant], axis=0)
    words = np.concatenate([consts, words[~constant]])
    want = q + len(d2.blocks) * (5**3 - 5) + (len(d3.blocks) - len(d2.blocks)) * 60
    code = code_new(q, 5, 2, words)
    if len(code) != want or want != q**3:
        raise InvalidDesign(f"assembled {len(code)} words, bookkeeping {want}, q^3 = {q ** 3}")
    if certify:
        rep = mds_check(code)
        if not rep:
            raise InvalidDesign(f"assembled code is not MDS(2,5,{q}): {rep.message}")
    return code


def trivial_designs() -> tuple[SteinerDesign, SteinerDesign]:
    """The single-block systems S(2,5,5) = S(3,5,5)."""
    block = [(0, 1, 2, 3, 4)]
    return SteinerDesign.of(5, 2, block), SteinerDesign.of(5, 3, block)


def design_write(d: SteinerDesign, destination: str | Path) -> None:
    with open(destination, "w", newline="\n") as fh:
        fh.write(f"{STEINER_MAGIC}\ntau={d.tau} q={d.q} b={len(d.blocks)}\n")
        for b in d.blocks:
            fh.write(" ".join(map(str, b)) + "\n")


def design_read(source: str | Path) -> SteinerDesign:
    with open(source) as fh:
        lines = [ln for ln in fh.read().split("\n")]
    if lines[0] != STEINER_MAGIC:
        raise ParseError(f"missing {STEINER_MAGIC!r} magic line", 1)
    try:
        kv = dict(tok.split("=") for tok in lines[1].split())
        tau, q, b = int(kv["tau"]), int(kv["q"]), int(kv["b"])
    except (ValueError, KeyError, IndexError):
        raise ParseError("expected tau=<tau> q=<q> b=<count>", 2) from None
    blocks = []
    for i, ln in enumerate(lines[2:], start=3):
        if not ln.strip():
            continue
        try:
            pts = tuple(int(x) for x in ln.split())
        except ValueError:
            raise ParseError(f"bad block {ln!r}", i) from None
        if len(pts) != BLOCK_SIZE or list(pts) != sorted(pts):
            raise ParseError("blocks are 5 ascending integers", i)
        blocks.append(pts)
    if len(blocks) != b:
        raise ParseError(f"header declares b={b}, found {len(blocks)} blocks", 2)
    return SteinerDesign(q, tau, tuple(blocks))
