"""Shared fixtures: text shorthands and the worked states used across modules."""

from __future__ import annotations

import pytest

from boxball import BbsState, SemiStandardTableau, parse_state


def T(text: str, n: int) -> SemiStandardTableau:
    return SemiStandardTableau.parse(text, n)


def knuth_neighbors(w: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All words one elementary Knuth transposition away (both directions)."""
    out = []
    for i in range(len(w) - 2):
        p, q, r = w[i], w[i + 1], w[i + 2]
        if q < p <= r or r < p <= q:
            out.append(w[:i] + (p, r, q) + w[i + 3:])
        if p <= r < q or q <= r < p:
            out.append(w[:i] + (q, p, r) + w[i + 3:])
    return out


# Three-soliton state whose six evolution steps and scattering data are known
# in full, with the displayed states at every time step.
THREE_SOLITON_TEXT = "n=6 k=3 offset=0\n2/3/5 2/3/4 2/3/4 . . . 2/3/6 1/2/4 . . . 1/3/5\n"

THREE_SOLITON_TRAJECTORY = [
    (0, "2/3/5 2/3/4 2/3/4 . . . 2/3/6 1/2/4 . . . 1/3/5"),
    (3, "2/3/5 2/3/4 2/3/4 . . 2/3/6 1/2/4 . . 1/3/5"),
    (6, "2/3/5 2/3/4 2/3/4 . 2/3/6 1/2/4 . 1/3/5"),
    (9, "2/3/5 2/3/4 . 2/3/6 2/3/4 1/4/5"),
    (11, "2/3/5 2/3/4 . . 2/4/6 2/3/5 1/3/4"),
    (13, "2/3/5 2/3/4 . 1/2/4 . 2/3/6 2/3/5 1/3/4"),
    (15, "2/3/5 . 2/3/4 1/2/4 . . 2/3/6 2/3/5 1/3/4"),
]

INTRO_K1_TEXT = "n=3 k=1 offset=0\n3 3 2\n"
INTRO_K2_TEXT = "n=4 k=2 offset=0\n2/4 2/4 1/3\n"

SPECTRUM_TEXTS = {
    "a": "n=6 k=2 offset=0\n2/4 1/6\n",
    "b": "n=5 k=2 offset=0\n2/4 3/5 2/5\n",
    "c": "n=5 k=2 offset=0\n2/4 1/3 2/4 3/5 2/5\n",
}


@pytest.fixture
def three_soliton_state() -> BbsState:
    return parse_state(THREE_SOLITON_TEXT)


@pytest.fixture
def intro_k1_state() -> BbsState:
    return parse_state(INTRO_K1_TEXT)


@pytest.fixture
def intro_k2_state() -> BbsState:
    return parse_state(INTRO_K2_TEXT)
