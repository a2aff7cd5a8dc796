"""Small dense matrices over an exact ring (Fraction or RatFunc).

Matrices are tuples of row tuples; column ``j`` is the image of basis vector
``j``.  Products skip zero entries, which keeps the seminormal matrices (at
most two nonzeros per column) cheap to multiply.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

Matrix = tuple[tuple, ...]


def zeros(d: int, zero=Fraction(0)) -> Matrix:
    return tuple(tuple(zero for _ in range(d)) for _ in range(d))


def identity(d: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def diagonal(values: Sequence, zero=Fraction(0)) -> Matrix:
    d = len(values)
    return tuple(tuple(values[i] if i == j else zero for j in range(d)) for i in range(d))


def from_columns(d: int, columns: Iterable[dict], zero=Fraction(0)) -> Matrix:
    """Build a matrix from sparse columns ``{row: value}``."""
    rows = [[zero] * d for _ in range(d)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def _zero_of(a: Matrix):
    return a[0][0] * 0 if a and a[0] else Fraction(0)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d, m = len(a), len(b[0]) if b else 0
    zero = _zero_of(a)
    out = [[zero] * m for _ in range(d)]
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if x == 0:
                continue
            for j, y in enumerate(b[k]):
                if y != 0:
                    acc[j] = acc[j] + x * y
    return tuple(tuple(r) for r in out)


def mat_prod(mats: Iterable[Matrix], d: int | None = None, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    out = None
    for m in mats:
        out = m if out is None else mat_mul(out, m)
    if out is None:
        return identity(d, one, zero)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in a)


def mat_map(f: Callable, a: Matrix) -> Matrix:
    return tuple(tuple(f(x) for x in r) for r in a)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def first_difference(a: Matrix, b: Matrix):
    """The first ``(i, j)`` where the matrices differ, or ``None``."""
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return i, j
    return None


def trace(a: Matrix):
    total = _zero_of(a)
    for i in range(len(a)):
        total = total + a[i][i]
    return total


def is_diagonal(a: Matrix) -> bool:
    return all(x == 0 for i, r in enumerate(a) for j, x in enumerate(r) if i != j)


def diag_entries(a: Matrix) -> list:
    return [a[i][i] for i in range(len(a))]


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int] | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return tuple(tuple(a[i][j] for j in cols) for i in rows)


def commute(a: Matrix, b: Matrix) -> bool:
    return mat_eq(mat_mul(a, b), mat_mul(b, a))


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a), _zero_of(a) + 1, _zero_of(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def to_strings(a: Matrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in a]
