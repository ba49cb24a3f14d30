"""Codes over Q_q = {0..q-1}, the canonical file format, and representation changes.

A :class:`Code` stores its codewords as a lexicographically sorted,
duplicate-free ``(n, d)`` integer array. Symbols are plain indices; products
flatten a pair ``(x, y)`` over ``Q_q1 x Q_q2`` to ``x * q2 + y``.
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateCodeword,
    HammingBoundViolation,
    HeaderMismatch,
    LengthMismatch,
    NotFunctional,
    ParseError,
    SymbolOutOfRange,
)

if TYPE_CHECKING:
    from .holes import HoleCode

CODE_MAGIC = "#mdscode v1"
CUBES_MAGIC = "#latincubes v1"


def symbol_dtype(q: int) -> np.dtype:
    return np.dtype(np.uint8) if q <= 256 else np.dtype(np.uint16)


def word_keys(words: np.ndarray, q: int) -> np.ndarray:
    """Integer key of each word (base-q number, first coordinate most significant)."""
    keys = np.zeros(len(words), dtype=np.int64)
    for col in range(words.shape[1]):
        keys = keys * q + words[:, col].astype(np.int64)
    return keys


def check_mds_params(t: int, d: int, q: int) -> None:
    """Necessary condition for an MDS(t, d, q) code with t >= 2.

    With s = d - t free coordinates the Hamming bound plus puncturing gives
    s <= q - 1, i.e. d <= q + 1 when t = 2. A one-letter alphabet is exempt.
    """
    if t >= 2 and q >= 2 and d - t > q - 1:
        raise HammingBoundViolation(
            f"no MDS({t},{d},{q}) code: need d - t <= q - 1"
            + (f" (d <= q+1 = {q + 1}, Hamming bound)" if t == 2 else "")
        )


@dataclass(frozen=True, eq=False)
class Code:
    q: int
    d: int
    t: int
    words: np.ndarray
    labels: tuple[str, ...] | None = None

    def __len__(self) -> int:
        return len(self.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (
            (self.q, self.d, self.t) == (other.q, other.d, other.t)
            and np.array_equal(self.words, other.words)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Code(q={self.q}, d={self.d}, t={self.t}, n={len(self)})"

    @property
    def keys(self) -> np.ndarray:
        return word_keys(self.words, self.q)

    def contains(self, words: np.ndarray) -> np.ndarray:
        """Boolean membership mask for each row of ``words``."""
        words = np.asarray(words).reshape(-1, self.d)
        mine = self.keys
        theirs = word_keys(words, self.q)
        pos = np.searchsorted(mine, theirs)
        pos[pos == len(mine)] = 0
        return mine[pos] == theirs

    def issubset(self, other: Code) -> bool:
        if other.d != self.d or self.q > other.q:
            return False
        return bool(other.contains(self.words).all())

    def with_strength(self, t: int) -> Code:
        return Code(self.q, self.d, t, self.words, self.labels)

    def label(self, sym: int) -> str:
        return self.labels[sym] if self.labels else str(sym)

    def format_word(self, w: Iterable[int]) -> str:
        return "(" + ",".join(self.label(int(s)) for s in w) + ")"


def code_new(
    q: int,
    d: int,
    t: int,
    words: Sequence[Sequence[int]] | np.ndarray,
    labels: Sequence[str] | None = None,
) -> Code:
    """Validate and canonicalize a list of codewords."""
    arr = np.asarray(words, dtype=np.int64)
    if arr.size == 0:
        raise LengthMismatch("a code needs at least one codeword")
    if arr.ndim != 2 or arr.shape[1] != d:
        raise LengthMismatch(f"codewords must have length {d}, got shape {arr.shape}")
    bad = np.argwhere((arr < 0) | (arr >= q))
    if len(bad):
        r, c = bad[0]
        raise SymbolOutOfRange(f"symbol {arr[r, c]} at word {r}, coordinate {c} not in Q_{q}")
    keys = word_keys(arr, q)
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    dup = np.nonzero(keys[1:] == keys[:-1])[0]
    if len(dup):
        w = arr[order[dup[0]]]
        raise DuplicateCodeword(f"codeword {tuple(int(s) for s in w)} occurs twice")
    out = np.ascontiguousarray(arr[order], dtype=symbol_dtype(q))
    out.setflags(write=False)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != q or len(set(labels)) != q:
            raise ValueError("labels must be q distinct strings")
    return Code(q, d, t, out, labels)


def _from_sorted_unique(q: int, d: int, t: int, arr: np.ndarray) -> Code:
    out = np.ascontiguousarray(arr, dtype=symbol_dtype(q))
    out.setflags(write=False)
    return Code(q, d, t, out)


# ---------------------------------------------------------------------------
# Canonical file format


def code_dumps_header(c: Code, hole: HoleCode | None = None) -> str:
    lines = [CODE_MAGIC, f"t={c.t} d={c.d} q={c.q} n={len(c)}"]
    if hole is not None:
        lines.append(f"hole j={hole.j} A={','.join(str(a) for a in hole.hole)}")
    return "\n".join(lines) + "\n"


def code_write(c: Code | HoleCode, destination: str | Path | io.TextIOBase) -> None:
    from .holes import HoleCode

    hole = c if isinstance(c, HoleCode) else None
    code = c.code if isinstance(c, HoleCode) else c
    header = code_dumps_header(code, hole)

    def _emit(fh) -> None:
        fh.write(header)
        np.savetxt(fh, code.words, fmt="%d", delimiter=" ", newline="\n")

    if isinstance(destination, (str, Path)):
        with open(destination, "w", newline="\n") as fh:
            _emit(fh)
    else:
        _emit(destination)


def _parse_kv(line: str, lineno: int, keys: Sequence[str]) -> dict[str, str]:
    out = {}
    for tok in line.split():
        k, sep, v = tok.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {tok!r}", lineno)
        out[k] = v
    missing = [k for k in keys if k not in out]
    if missing:
        raise ParseError(f"missing header fields {missing}", lineno)
    return out


def _int(v: str, lineno: int) -> int:
    try:
        return int(v)
    except ValueError:
        raise ParseError(f"not an integer: {v!r}", lineno) from None


def code_loads(text: str) -> Code | HoleCode:
    from .holes import HoleCode

    lines = text.split("\n")
    if not lines or lines[0].rstrip("\r") != CODE_MAGIC:
        raise ParseError(f"missing {CODE_MAGIC!r} magic line", 1)
    if len(lines) < 2:
        raise ParseError("missing parameter line", 2)
    kv = _parse_kv(lines[1], 2, ("t", "d", "q", "n"))
    t, d, q, n = (_int(kv[k], 2) for k in ("t", "d", "q", "n"))
    body_start = 2
    hole = None
    if len(lines) > 2 and lines[2].startswith("hole"):
        hk = _parse_kv(lines[2][len("hole"):], 3, ("j", "A"))
        j = _int(hk["j"], 3)
        A = tuple(_int(a, 3) for a in hk["A"].split(",") if a)
        hole = (j, A)
        body_start = 3
    body = lines[body_start:]
    while body and body[-1] == "":
        body.pop()
    if not body:
        raise ParseError("empty body", body_start + 1)
    if len(body) != n:
        raise HeaderMismatch(f"header declares n={n} but body has {len(body)} lines", 2)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        flat = np.fromstring("\n".join(body), dtype=np.int64, sep=" ")
    if flat is None or flat.size != n * d or any(ln.count(" ") != d - 1 for ln in body):
        # slow path: locate the offending line
        for i, ln in enumerate(body):
            toks = ln.split(" ")
            if len(toks) != d:
                raise ParseError(f"expected {d} symbols, got {len(toks)}", body_start + 1 + i)
            for tok in toks:
                _int(tok, body_start + 1 + i)
        raise ParseError("malformed body")
    words = flat.reshape(n, d)
    bad = np.argwhere((words < 0) | (words >= q))
    if len(bad):
        r, c = bad[0]
        raise SymbolOutOfRange(
            f"line {body_start + 1 + r}: symbol {words[r, c]} not in Q_{q}"
        )
    keys = word_keys(words, q)
    nonincr = np.nonzero(keys[1:] <= keys[:-1])[0]
    if len(nonincr):
        raise ParseError(
            "codewords not in strictly increasing lexicographic order",
            body_start + 2 + int(nonincr[0]),
        )
    code = _from_sorted_unique(q, d, t, words)
    if hole is not None:
        return HoleCode(code, hole[1], hole[0])
    return code


def code_read(source: str | Path | io.TextIOBase) -> Code | HoleCode:
    if isinstance(source, (str, Path)):
        with open(source, newline="\n") as fh:
            return code_loads(fh.read())
    return code_loads(source.read())


# ---------------------------------------------------------------------------
# Latin cubes and orthogonal arrays


@dataclass(frozen=True, eq=False)
class LatinCubePair:
    q: int
    f1: np.ndarray
    f2: np.ndarray

    def swapped(self) -> LatinCubePair:
        return LatinCubePair(self.q, self.f2, self.f1)


def to_latin_cubes(c: Code) -> LatinCubePair:
    """f1[x,y,z], f2[x,y,z] are coordinates 4 and 5 of the codeword with prefix (x,y,z)."""
    check_mds_params(2, 5, c.q)
    if c.d != 5:
        raise NotFunctional(f"need length-5 codewords, got d={c.d}")
    q = c.q
    w = c.words.astype(np.int64)
    prefix = (w[:, 0] * q + w[:, 1]) * q + w[:, 2]
    counts = np.bincount(prefix, minlength=q**3)
    bad = np.nonzero(counts != 1)[0]
    if len(bad):
        b = int(bad[0])
        raise NotFunctional(
            f"prefix {(b // (q * q), (b // q) % q, b % q)} occurs {counts[b]} times"
        )
    dt = symbol_dtype(q)
    f1 = np.empty(q**3, dtype=dt)
    f2 = np.empty(q**3, dtype=dt)
    f1[prefix] = w[:, 3]
    f2[prefix] = w[:, 4]
    return LatinCubePair(q, f1.reshape(q, q, q), f2.reshape(q, q, q))


def from_latin_cubes(pair: LatinCubePair, t: int = 2) -> Code:
    q = pair.q
    x, y, z = np.indices((q, q, q)).reshape(3, -1)
    words = np.stack([x, y, z, pair.f1.ravel(), pair.f2.ravel()], axis=1)
    # np.indices enumerates prefixes lexicographically, so the array is canonical
    return _from_sorted_unique(q, 5, t, words)


def to_oa_rows(c: Code) -> np.ndarray:
    """The codewords as an |C| x d array, canonical order."""
    return np.array(c.words)


def cubes_write(pair: LatinCubePair, destination: str | Path) -> None:
    q = pair.q
    with open(destination, "w", newline="\n") as fh:
        fh.write(f"{CUBES_MAGIC}\nq={q}\n")
        for z in range(q):
            fh.write("\n")
            for x in range(q):
                fh.write(" ".join(f"{a}:{b}" for a, b in zip(pair.f1[x, :, z], pair.f2[x, :, z])))
                fh.write("\n")


def cubes_read(source: str | Path) -> LatinCubePair:
    with open(source) as fh:
        lines = fh.read().split("\n")
    if lines[0] != CUBES_MAGIC:
        raise ParseError(f"missing {CUBES_MAGIC!r} magic line", 1)
    if not lines[1].startswith("q="):
        raise ParseError("expected q=<q>", 2)
    q = _int(lines[1][2:], 2)
    rows = [(i + 1, ln) for i, ln in enumerate(lines[2:], start=2) if ln.strip()]
    if len(rows) != q * q:
        raise HeaderMismatch(f"expected {q * q} grid rows, found {len(rows)}")
    f1 = np.empty((q, q, q), dtype=np.int64)
    f2 = np.empty((q, q, q), dtype=np.int64)
    for idx, (lineno, ln) in enumerate(rows):
        z, x = divmod(idx, q)
        cells = ln.split()
        if len(cells) != q:
            raise ParseError(f"expected {q} cells", lineno)
        for y, cell in enumerate(cells):
            a, sep, b = cell.partition(":")
            if not sep:
                raise ParseError(f"bad cell {cell!r}", lineno)
            f1[x, y, z], f2[x, y, z] = _int(a, lineno), _int(b, lineno)
    return LatinCubePair(q, f1, f2)
