"""Hand-transcribed square tables: the order-6 hole code and the order-13 POLS example."""

from __future__ import annotations

from .codes import Code, code_new
from .holes import HoleCode

# Order-6 code with 4-{a,b}-hole. Each block is one value of the third
# coordinate (in the order 0,1,2,3,a,b); within a block the row and column are
# the first two coordinates, the left square gives coordinate 4 and the right
# square coordinate 5. A dot marks an empty cell.
HOLE6_SYMBOLS = ("0", "1", "2", "3", "a", "b")

HOLE6_BLOCKS = """
a b 2 3 0 1 | 0 1 b a 3 2
1 0 b a 2 3 | a b 0 1 2 3
b a 0 1 3 2 | 3 2 a b 1 0
3 2 a b 1 0 | b a 3 2 0 1
0 3 1 2 . . | 2 0 1 3 . .
2 1 3 0 . . | 1 3 2 0 . .

1 0 a b 3 2 | b a 1 0 2 3
b a 2 3 1 0 | 1 0 a b 3 2
3 2 b a 0 1 | a b 2 3 0 1
a b 0 1 2 3 | 2 3 b a 1 0
2 1 3 0 . . | 0 2 3 1 . .
0 3 1 2 . . | 3 1 0 2 . .

2 3 b a 1 0 | a b 3 2 1 0
a b 1 0 3 2 | 3 2 b a 0 1
0 1 a b 2 3 | b a 0 1 3 2
b a 3 2 0 1 | 0 1 a b 2 3
3 0 2 1 . . | 1 3 2 0 . .
1 2 0 3 . . | 2 0 1 3 . .

b a 1 0 2 3 | 2 3 a b 0 1
2 3 a b 0 1 | b a 2 3 1 0
a b 3 2 1 0 | 1 0 b a 2 3
0 1 b a 3 2 | a b 1 0 3 2
1 2 0 3 . . | 3 1 0 2 . .
3 0 2 1 . . | 0 2 3 1 . .

0 2 3 1 . . | 1 2 0 3 . .
3 1 0 2 . . | 2 1 3 0 . .
1 3 2 0 . . | 0 3 1 2 . .
2 0 1 3 . . | 3 0 2 1 . .
. . . . . . | . . . . . .
. . . . . . | . . . . . .

3 1 0 2 . . | 3 0 2 1 . .
0 2 3 1 . . | 0 3 1 2 . .
2 0 1 3 . . | 2 1 3 0 . .
1 3 2 0 . . | 1 2 0 3 . .
. . . . . . | . . . . . .
. . . . . . | . . . . . .
"""


def _square_pairs(text: str) -> list[tuple[list[list[str]], list[list[str]]]]:
    blocks = []
    for chunk in text.strip().split("\n\n"):
        left, right = [], []
        for line in chunk.strip().splitlines():
            lpart, rpart = line.split("|")
            left.append(lpart.split())
            right.append(rpart.split())
        blocks.append((left, right))
    return blocks


def squares_to_words(
    blocks: list[tuple[list[list[str]], list[list[str]]]],
    index: dict[str, int],
) -> list[tuple[int, ...]]:
    """Codewords (row, col, [block,] left, right) from paired squares; dots are skipped."""
    words = []
    multi = len(blocks) > 1
    for z, (left, right) in enumerate(blocks):
        for x, (lrow, rrow) in enumerate(zip(left, right)):
            for y, (a, b) in enumerate(zip(lrow, rrow)):
                if a == "." or b == ".":
                    continue
                head = (x, y, z) if multi else (x, y)
                words.append(head + (index[a], index[b]))
    return words


def lemma1_code() -> HoleCode:
    """The order-6 MDS(2,5,6) code with 4-{a,b}-hole (160 codewords)."""
    index = {s: i for i, s in enumerate(HOLE6_SYMBOLS)}
    words = squares_to_words(_square_pairs(HOLE6_BLOCKS), index)
    code = code_new(6, 5, 2, words, labels=HOLE6_SYMBOLS)
    return HoleCode(code, (index["a"], index["b"]), 4)


# The order-13 example: M is the order-4 POLS below with M1 its main diagonal,
# D is an order-3 POLS on {b,c,e}, F is an order-4 pair on {a,b,c,e} with the
# cell (a,a) removed, and E is the single word (a,a,a,a).
POLS4 = """
0 1 2 3 | 0 1 2 3
3 2 1 0 | 2 3 0 1
1 0 3 2 | 3 2 1 0
2 3 0 1 | 1 0 3 2
"""

POLS3_BCE = """
b c e | b c e
c e b | e b c
e b c | c e b
"""

HOLE4_ABCE = """
a b c e | b a e c
c e a b | a b c e
b a e c | c e a b
e c b . | e c b .
"""

# Row and column labels of F: printed positions 0..3 are b, c, e, a.
HOLE4_SYMBOLS = ("b", "c", "e", "a")

POLS13_LEFT = """
a  0b 0c 1b 1c 1e 2b 2c 2e 3b 3c 3e 0e
0c 0e a  1c 1e 1b 2c 2e 2b 3c 3e 3b 0b
0b a  0e 1e 1b 1c 2e 2b 2c 3e 3b 3c 0c
3b 3c 3e a  2b 2c 1b 1c 1e 0b 0c 0e 2e
3c 3e 3b 2c 2e a  1c 1e 1b 0c 0e 0b 2b
3e 3b 3c 2b a  2e 1e 1b 1c 0e 0b 0c 2c
1b 1c 1e 0b 0c 0e a  3b 3c 2b 2c 2e 3e
1c 1e 1b 0c 0e 0b 3c 3e a  2c 2e 2b 3b
1e 1b 1c 0e 0b 0c 3b a  3e 2e 2b 2c 3c
2b 2c 2e 3b 3c 3e 0b 0c 0e a  1b 1c 1e
2c 2e 2b 3c 3e 3b 0c 0e 0b 1c 1e a  1b
2e 2b 2c 3e 3b 3c 0e 0b 0c 1b a  1e 1c
0e 0c 0b 2e 2c 2b 3e 3c 3b 1e 1b 1c a
"""

POLS13_RIGHT = """
0b a  0e 1b 1c 1e 2b 2c 2e 3b 3c 3e 0c
a  0b 0c 1e 1b 1c 2e 2b 2c 3e 3b 3c 0e
0c 0e a  1c 1e 1b 2c 2e 2b 3c 3e 3b 0b
2b 2c 2e 3b a  3e 0b 0c 0e 1b 1c 1e 3c
2e 2b 2c a  3b 3c 0e 0b 0c 1e 1b 1c 3e
2c 2e 2b 3c 3e a  0c 0e 0b 1c 1e 1b 3b
3b 3c 3e 2b 2c 2e 1b a  1e 0b 0c 0e 1c
3e 3b 3c 2e 2b 2c a  1b 1c 0e 0b 0c 1e
3c 3e 3b 2c 2e 2b 1c 1e a  0c 0e 0b 1b
1b 1c 1e 0b 0c 0e 3b 3c 3e 2b a  2e 2c
1e 1b 1c 0e 0b 0c 3e 3b 3c a  2b 2c 2e
1c 1e 1b 0c 0e 0b 3c 3e 3b 2c 2e a  2b
0e 0c 0b 3e 3c 3b 1e 1c 1b 2e 2b 2c a
"""

# Symbols "xy" (x in 0..3, y in b,c,e) flatten to 3x + rank(y); "a" is 12.
# Row and column i carry the label POLS13_SYMBOLS[i].
POLS13_SYMBOLS = tuple(f"{x}{y}" for x in "0123" for y in "bce") + ("a",)

# As printed, the last row of each square repeats column symbols: the fourth
# block reads "1e 1b 1c" (left) and "2e 2b 2c" (right) where every other
# block of that row runs e, c, b. Swapping these two cells in each square
# restores the latin property.
POLS13_ERRATA = ((12, 10), (12, 11))


def pols13_squares(erratum: bool = True) -> tuple[list[list[str]], list[list[str]]]:
    left = [ln.split() for ln in POLS13_LEFT.strip().splitlines()]
    right = [ln.split() for ln in POLS13_RIGHT.strip().splitlines()]
    if erratum:
        (r0, c0), (r1, c1) = POLS13_ERRATA
        for sq in (left, right):
            sq[r0][c0], sq[r1][c1] = sq[r1][c1], sq[r0][c0]
    return left, right


def pols13_code(erratum: bool = True) -> Code:
    """The order-13 square pair as a length-4 code over 13 symbols.

    With ``erratum=False`` the table is taken verbatim; that version is not latin.
    """
    index = {s: i for i, s in enumerate(POLS13_SYMBOLS)}
    left, right = pols13_squares(erratum)
    words = squares_to_words([(left, right)], index)
    return code_new(13, 4, 2, words, labels=POLS13_SYMBOLS)


def prop7_ingredients() -> dict[str, Code | HoleCode]:
    """Ingredients of the order-13 example: M ⊃ M1 (p=4), D (q=3), E on A={a}, F (q1=4)."""
    m = code_new(4, 4, 2, squares_to_words(_square_pairs(POLS4), {str(i): i for i in range(4)}))
    diag = m.words[m.words[:, 0] == m.words[:, 1]]
    m1 = code_new(4, 4, 3, diag)
    bce = {"b": 0, "c": 1, "e": 2}
    d = code_new(3, 4, 2, squares_to_words(_square_pairs(POLS3_BCE), bce))
    # F lives on {b, c, e, a} = indices 0, 1, 2, 3 so its non-hole part matches D
    index = {s: i for i, s in enumerate(HOLE4_SYMBOLS)}
    f = HoleCode(
        code_new(4, 4, 2, squares_to_words(_square_pairs(HOLE4_ABCE), index), labels=HOLE4_SYMBOLS),
        (index["a"],),
        4,
    )
    e = code_new(4, 4, 2, [(3, 3, 3, 3)], labels=HOLE4_SYMBOLS)
    return {"M": m, "M1": m1, "D": d, "E": e, "F": f}
