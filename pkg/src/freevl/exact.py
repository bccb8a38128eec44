"""Small exact-arithmetic helpers shared across modules."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are rejected to stay exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Row rank by Gauss-Jordan elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Some ``x`` with ``sum(x[j] * columns[j]) == target``, or ``None`` if no solution exists."""
    n = len(columns)
    dim = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(dim)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, dim) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        p = aug[r][col]
        aug[r] = [x / p for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == dim:
            break
    if any(aug[i][n] != 0 for i in range(r, dim)):
        return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x
