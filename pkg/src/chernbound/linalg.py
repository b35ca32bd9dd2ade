"""Exact row reduction over Q with first-nonzero pivoting.

Rank and span membership run fraction-free on integer rows (denominators
cleared, each row divided by its content); solving uses Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[Fraction]]


def _copy(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def echelon(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _integral(row: Sequence) -> list[int]:
    fr = [Fraction(x) for x in row]
    scale = lcm(*(x.denominator for x in fr)) if fr else 1
    return _primitive([int(x * scale) for x in fr])


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    return [x // g for x in row] if g > 1 else row


class Span:
    """Row space of a rational matrix, kept in integer echelon form."""

    def __init__(self, rows: Sequence[Sequence] = ()):
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for row in rows:
            self.add(row)

    def _reduce(self, v: list[int]) -> list[int]:
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f:
                p = row[c]
                v = _primitive([p * a - f * b for a, b in zip(v, row)])
        return v

    def add(self, row: Sequence) -> bool:
        """Insert a row; return True if it enlarged the span."""
        v = self._reduce(_integral(row))
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        self.rows.append(v)
        self.pivots.append(c)
        return True

    def __contains__(self, v: Sequence) -> bool:
        return not any(self._reduce(_integral(v)))

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(rows: Sequence[Sequence]) -> int:
    return Span(rows).rank


def in_span(rows: Sequence[Sequence], v: Sequence) -> bool:
    return v in Span(rows)


def solve_left(rows: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Coefficients ``x`` with ``sum(x[i] * rows[i]) == v``, or None.

    When the rows are dependent, free coefficients are set to zero.
    """
    nrows = len(rows)
    if nrows == 0:
        return [] if not any(v) else None
    ncols = len(rows[0])
    # transpose: columns of the system are the given rows
    aug = [[Fraction(rows[i][c]) for i in range(nrows)] + [Fraction(v[c])] for c in range(ncols)]
    red, pivots = echelon(aug)
    if nrows in pivots:
        return None
    x = [Fraction(0)] * nrows
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return x


def inverse(rows: Sequence[Sequence]) -> Matrix | None:
    """Inverse of a square matrix, or None if it is singular."""
    size = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(rows)]
    red, pivots = echelon(aug)
    if pivots[:size] != list(range(size)):
        return None
    return [row[size:] for row in red]


def span_basis(rows: Sequence[Sequence]) -> Matrix:
    return echelon(rows)[0]
