"""Seeded random generators for states, tableaux, words, and soliton data.

Everything draws from a caller-supplied ``random.Random`` so that checks are
reproducible from a single integer seed across platforms.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .bbs import BbsState
from .soliton import Soliton, SolitonConfig
from .tableau import SemiStandardTableau, Word, enumerate_tableaux


@lru_cache(maxsize=None)
def _rectangles(k: int, l: int, n: int) -> tuple[SemiStandardTableau, ...]:
    return tuple(enumerate_tableaux((l,) * k, n))


def random_column(rng: random.Random, k: int, n: int) -> SemiStandardTableau:
    return SemiStandardTableau.column(sorted(rng.sample(range(1, n + 1), k)), n)


def random_state(rng: random.Random, n: int, k: int, max_support: int) -> BbsState:
    support = rng.randint(0, max_support)
    cols = [random_column(rng, k, n) for _ in range(support)]
    return BbsState(n, k, rng.randint(0, 3), cols)


def random_rect_tableau(rng: random.Random, k: int, l: int, n: int) -> SemiStandardTableau:
    return rng.choice(_rectangles(k, l, n))


def random_word(rng: random.Random, max_len: int, n: int) -> Word:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))


def random_soliton_internal(rng: random.Random, k: int, d: int, n: int) -> SemiStandardTableau:
    """Internal tableau with the top k-1 rows in 1..k and the bottom row above k."""
    rows: tuple[tuple[int, ...], ...] = ()
    if k >= 2:
        rows = random_rect_tableau(rng, k - 1, d, k).rows
    bottom = tuple(sorted(rng.randint(k + 1, n) for _ in range(d)))
    return SemiStandardTableau(rows + (bottom,), n)


def random_soliton(rng: random.Random, k: int, d: int, n: int, phase: int) -> Soliton:
    return Soliton(phase, random_soliton_internal(rng, k, d, n))


def random_two_soliton_config(rng: random.Random, max_len: int = 4) -> SolitonConfig:
    """Well-separated pair with the longer soliton on the left."""
    k = rng.randint(1, 3)
    n = rng.randint(k + 2, min(k + 4, 6))
    d1 = rng.randint(2, max_len)
    d2 = rng.randint(1, d1 - 1)
    c1 = rng.randint(0, 2)
    c2 = c1 + d1 + d2 + rng.randint(0, 2)
    return SolitonConfig(
        n, k,
        (random_soliton(rng, k, d1, n, c1), random_soliton(rng, k, d2, n, c2)),
    )
