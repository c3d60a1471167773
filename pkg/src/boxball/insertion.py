"""Schensted row bumping, its inverse, rectification, and Knuth equivalence."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Iterable, Sequence
from typing import NamedTuple

from .tableau import SemiStandardTableau, TableauError


class InsertionOutcome(NamedTuple):
    tableau: SemiStandardTableau
    new_cell: tuple[int, int]  # 1-based (row, column) of the added box


def _check_letter(a: int, n: int) -> None:
    if not 1 <= a <= n:
        raise TableauError(f"letter {a} outside 1..{n}")


def _bump(rows: list[list[int]], a: int) -> tuple[int, int]:
    """Row-insert ``a`` into mutable rows; return the 1-based cell of the new box.

    At each row the incoming letter replaces the leftmost entry strictly
    larger than it (equal entries are passed over) and the replaced entry
    drops to the next row; with nothing larger, the letter lands at the end.
    """
    r = 0
    while True:
        if r == len(rows):
            rows.append([a])
            return r + 1, 1
        row = rows[r]
        if row[-1] <= a:
            row.append(a)
            return r + 1, len(row)
        i = bisect_right(row, a)
        a, row[i] = row[i], a
        r += 1


def insert_letter(t: SemiStandardTableau, a: int) -> InsertionOutcome:
    _check_letter(int(a), t.n)
    rows = [list(row) for row in t.rows]
    cell = _bump(rows, int(a))
    return InsertionOutcome(SemiStandardTableau(rows, t.n, validate=False), cell)


def insert_word(t: SemiStandardTableau, word: Iterable[int]) -> SemiStandardTableau:
    """Fold of :func:`insert_letter` over the word, left to right."""
    rows = [list(row) for row in t.rows]
    for a in word:
        _check_letter(int(a), t.n)
        _bump(rows, int(a))
    return SemiStandardTableau(rows, t.n, validate=False)


def outer_corners(t: SemiStandardTableau) -> list[tuple[int, int]]:
    """Cells (1-based) whose removal leaves a partition shape."""
    shape = t.shape
    return [
        (r + 1, length)
        for r, length in enumerate(shape)
        if r + 1 == len(shape) or shape[r + 1] < length
    ]


def uninsert(t: SemiStandardTableau, corner: tuple[int, int]) -> tuple[SemiStandardTableau, int]:
    """Reverse one row insertion, removing the box at ``corner``.

    The removed value climbs row by row, each time swapping with the
    rightmost entry strictly smaller than it; the letter ejected from the
    first row is returned alongside the shrunken tableau.
    """
    if corner not in outer_corners(t):
        raise ValueError(f"{corner} is not an outer corner of shape {t.shape}")
    r, _ = corner
    rows = [list(row) for row in t.rows]
    v = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop()
    for i in range(r - 2, -1, -1):
        row = rows[i]
        j = bisect_left(row, v) - 1
        v, row[j] = row[j], v
    return SemiStandardTableau(rows, t.n, validate=False), v


def rectify(word: Iterable[int], n: int | None = None) -> SemiStandardTableau:
    """Tableau obtained by row-inserting the word into the empty tableau."""
    letters = tuple(int(a) for a in word)
    if n is None:
        n = max(letters, default=1)
    return insert_word(SemiStandardTableau.empty(n), letters)


def knuth_equivalent(u: Iterable[int], v: Iterable[int]) -> bool:
    """Words are Knuth-equivalent exactly when their rectifications agree."""
    return rectify(u).rows == rectify(v).rows


def tableau_from_row_word(word: Sequence[int], shape: Sequence[int], n: int) -> SemiStandardTableau:
    """Rebuild the tableau of a known shape from its row word; validates."""
    shape = tuple(shape)
    if sum(shape) != len(word):
        raise TableauError(f"word length {len(word)} does not fill shape {shape}")
    rows: list[tuple[int, ...]] = []
    pos = 0
    for length in reversed(shape):
        rows.append(tuple(word[pos:pos + length]))
        pos += length
    return SemiStandardTableau(tuple(reversed(rows)), n)
