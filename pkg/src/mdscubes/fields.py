"""Finite fields GF(p^m) with fully materialized arithmetic tables.

Element ``i`` encodes the polynomial whose base-p digits (least significant
first) are its coefficients, so 0 and 1 are the additive and multiplicative
identities in every field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import NotPrimePower
from .report import VerifyReport


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    k = 2
    while k * k <= n:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m`` or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NotPrimePower(f"q={q} has distinct prime factors {sorted(f)}")
    ((p, m),) = f.items()
    return p, m


# Polynomials over GF(p) are coefficient tuples, lowest degree first.

def _polymod(a: list[int], b: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        if c:
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
    return a


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    m = len(poly) - 1
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = low + (1,)
            if not any(_polymod(list(poly), divisor, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficients are compared low degree first.
    """
    for low in itertools.product(range(p), repeat=m):
        poly = low + (1,)
        if low[0] == 0 and m > 1:
            continue
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


@dataclass(frozen=True, eq=False)
class Field:
    q: int
    p: int
    m: int
    modulus: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is unused and set to 0

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = int(self.mul[r, a])
        return r

    def tables_bytes(self) -> bytes:
        return b"".join(t.tobytes() for t in (self.add, self.mul, self.neg, self.inv))

    def __repr__(self) -> str:
        return f"Field(q={self.q}, modulus={self.modulus})"


def _digits(i: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(i % p)
        i //= p
    return out


def field_make(q: int) -> Field:
    p, m = prime_power(q)
    if m == 1:
        modulus: tuple[int, ...] = (0, 1)
        r = np.arange(q, dtype=np.int64)
        add = (r[:, None] + r[None, :]) % q
        mul = (r[:, None] * r[None, :]) % q
    else:
        modulus = smallest_irreducible(p, m)
        digits = np.array([_digits(i, p, m) for i in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            da = digits[a]
            for b in range(a, q):
                prod = [0] * (2 * m - 1)
                db = digits[b]
                for i in range(m):
                    if da[i]:
                        for j in range(m):
                            prod[i + j] += da[i] * db[j]
                rem = _polymod([c % p for c in prod], modulus, p)
                rem += [0] * (m - len(rem))
                mul[a, b] = mul[b, a] = int(np.dot(rem, weights))
    neg = np.argmin(add, axis=1)  # the unique b with a + b == 0
    inv = np.zeros(q, dtype=np.int64)
    nz_rows, nz_cols = np.nonzero(mul[1:, 1:] == 1)
    inv[nz_rows + 1] = nz_cols + 1
    tables = [np.ascontiguousarray(t, dtype=np.int64) for t in (add, mul, neg, inv)]
    for t in tables:
        t.setflags(write=False)
    return Field(q, p, m, modulus, *tables)


def field_axiom_check(f: Field, bound: int = 64) -> VerifyReport:
    """Exhaustively check the field axioms on the tables of ``f``."""
    if f.q > bound:
        return VerifyReport("field", False, message=f"q={f.q} exceeds bound {bound}")
    q = f.q
    add, mul = f.add, f.mul
    r = np.arange(q)
    a, b, c = r[:, None, None], r[None, :, None], r[None, None, :]

    checks = [
        ("closure", lambda: np.argwhere((add < 0) | (add >= q) | (mul < 0) | (mul >= q))),
        ("additive commutativity", lambda: np.argwhere(add != add.T)),
        ("multiplicative commutativity", lambda: np.argwhere(mul != mul.T)),
        ("additive associativity", lambda: np.argwhere(add[add[a, b], c] != add[a, add[b, c]])),
        ("multiplicative associativity", lambda: np.argwhere(mul[mul[a, b], c] != mul[a, mul[b, c]])),
        ("distributivity", lambda: np.argwhere(mul[a, add[b, c]] != add[mul[a, b], mul[a, c]])),
        ("additive identity", lambda: np.argwhere(add[0] != r)),
        ("multiplicative identity", lambda: np.argwhere(mul[1] != r)),
        ("additive inverse", lambda: np.argwhere(add[r, f.neg] != 0)),
        ("multiplicative inverse", lambda: np.argwhere(mul[r[1:], f.inv[1:]] != 1) + 1),
    ]
    details = []
    for name, find in checks:
        bad = find()
        ok = len(bad) == 0
        details.append(VerifyReport(name, ok, None if ok else tuple(int(v) for v in bad[0])))
    failed = [d for d in details if not d.passed]
    return VerifyReport(
        "field",
        not failed,
        counterexample=(failed[0].prop, failed[0].counterexample) if failed else None,
        counts={"q": q},
        details=details,
        message=f"violated: {failed[0].prop}" if failed else "",
    )
