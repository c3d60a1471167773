"""Command-line interface: evolve states, inspect conserved data, run
scattering experiments, and drive seeded invariant checks.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from . import sampling
from .bbs import (
    BbsState,
    StateParseError,
    energy_e,
    evolve,
    format_state,
    format_trajectory,
    parse_state,
    soliton_spectrum,
    vacuum_column,
)
from .insertion import knuth_equivalent, rectify
from .rmatrix import apply_r, oracle_r, yang_baxter_holds
from .soliton import SolitonDetectionError, detect, run_experiment
from .tableau import SemiStandardTableau, TableauError, enumerate_tableaux, restrict

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

INVARIANTS = ("energy", "commute", "yang-baxter", "r-oracle", "knuth")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    l: int = 1
    steps: int | None = None
    input: str | None = None
    seed: int = 0
    trials: int = 100
    invariant: str | None = None
    render: bool = False
    left: str | None = None
    right: str | None = None
    alphabet: int | None = None

    def validate(self) -> None:
        if self.l < 1:
            raise UsageError("--l must be at least 1")
        if self.steps is not None and self.steps < 0:
            raise UsageError("--steps must be nonnegative")
        if self.trials < 1:
            raise UsageError("--trials must be at least 1")


def _load_state(path: str | None) -> BbsState:
    if not path:
        raise UsageError("--input is required")
    with open(path, encoding="utf-8") as fh:
        return parse_state(fh.read())


# -- rendering ----------------------------------------------------------------


def render_diagram(states) -> str:
    """Stacked-digit picture, one block of k text rows per step (a single row
    when k = 1), vacuum drawn as '.'; wide cells when letters exceed 9."""
    base = min(s.offset for s in states)
    hi = max(s.offset + len(s.columns) for s in states)
    hi = max(hi, base + 1)
    k = states[0].k
    width = 1
    for s in states:
        for col in s.columns:
            for row in col.rows:
                width = max(width, len(str(row[0])))
    joiner = "" if width == 1 else " "
    blocks = []
    for s in states:
        vac = vacuum_column(s.k, s.n)
        rows = []
        for r in range(k):
            cells = []
            for pos in range(base, hi):
                col = s.column_at(pos)
                cells.append("." if col == vac else str(col.rows[r][0]))
            rows.append(joiner.join(cell.rjust(width) for cell in cells))
        blocks.append("\n".join(rows))
    sep = "\n" if k == 1 else "\n\n"
    return sep.join(blocks) + "\n"


# -- commands -------------------------------------------------------------


def cmd_evolve(cfg: RunConfig) -> int:
    state = _load_state(cfg.input)
    steps = 1 if cfg.steps is None else cfg.steps
    states = [state]
    for _ in range(steps):
        state, _ = evolve(state, cfg.l)
        states.append(state)
    sys.stdout.write(format_trajectory(states))
    if cfg.render:
        sys.stdout.write("\n")
        sys.stdout.write(render_diagram(states))
    return EXIT_OK


def cmd_energy(cfg: RunConfig) -> int:
    state = _load_state(cfg.input)
    print(f"E_{cfg.l}={energy_e(state, cfg.l)}")
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    state = _load_state(cfg.input)
    for d, count in sorted(soliton_spectrum(state).items()):
        print(f"N_{d}={count}")
    return EXIT_OK


def cmd_rmatrix(cfg: RunConfig) -> int:
    if not cfg.left or not cfg.right:
        raise UsageError("--left and --right are required")
    n = cfg.alphabet
    if n is None:
        letters = [int(tok) for text in (cfg.left, cfg.right) for tok in text.replace("/", " ").split()]
        n = max(letters)
    x = SemiStandardTableau.parse(cfg.left, n)
    y = SemiStandardTableau.parse(cfg.right, n)
    res = apply_r(x, y)
    print(f"left_out = {res.left_out}")
    print(f"right_out = {res.right_out}")
    print(f"H = {res.energy}")
    return EXIT_OK


def _pair_initial_phases(initial, outgoing):
    """Match each outgoing soliton to an unused initial soliton of its length."""
    used = [False] * len(initial)
    phases = []
    for s in outgoing:
        for i, s0 in enumerate(initial):
            if not used[i] and s0.length == s.length:
                used[i] = True
                phases.append(s0.phase)
                break
        else:
            phases.append(None)
    return phases


def cmd_scatter(cfg: RunConfig) -> int:
    state = _load_state(cfg.input)
    try:
        initial = detect(state)
    except SolitonDetectionError as exc:
        print(f"detection failure: {exc}")
        return EXIT_FAIL
    result = run_experiment(initial, cfg.l, cfg.steps)
    sys.stdout.write(format_trajectory(result.states))
    print()
    if result.observed is None:
        print(f"no soliton decomposition after {result.steps_run} steps")
        return EXIT_FAIL
    starts = _pair_initial_phases(initial.solitons, result.predicted)
    ok = len(result.observed) == len(result.predicted)
    for j, pred in enumerate(result.predicted):
        obs = result.observed[j] if j < len(result.observed) else None
        if obs is None:
            print(f"soliton {j + 1}: missing (predicted phase={pred.phase} d={pred.length})")
            ok = False
            continue
        print(f"soliton {j + 1}: phase={obs.phase} d={obs.length} internal={obs.internal}")
        delta = "?" if starts[j] is None else pred.phase - starts[j]
        match = obs == pred
        ok = ok and match
        print(
            f"delta={delta} predicted=({pred.phase}, {pred.internal}) "
            f"observed=({obs.phase}, {obs.internal}) match={'true' if match else 'false'}"
        )
    return EXIT_OK if ok else EXIT_FAIL


# -- seeded invariant checks ------------------------------------------------


def _inv_energy(rng, trials):
    for _ in range(trials):
        k = rng.randint(1, 3)
        n = rng.randint(k + 1, 5)
        p = sampling.random_state(rng, n, k, 10)
        l, lp = rng.randint(1, 4), rng.randint(1, 4)
        ok = energy_e(evolve(p, lp)[0], l) == energy_e(p, l)
        yield ok, None if ok else format_state(p) + f"l={l} l'={lp}\n"


def _inv_commute(rng, trials):
    for _ in range(trials):
        k = rng.randint(1, 3)
        n = rng.randint(k + 1, 5)
        p = sampling.random_state(rng, n, k, 10)
        l, lp = rng.randint(1, 4), rng.randint(1, 4)
        ok = evolve(evolve(p, l)[0], lp)[0] == evolve(evolve(p, lp)[0], l)[0]
        yield ok, None if ok else format_state(p) + f"l={l} l'={lp}\n"


def _inv_yang_baxter(rng, trials):
    for _ in range(trials):
        k = rng.randint(1, 2)
        n = rng.randint(k + 1, 4)
        x, y, z = (
            sampling.random_rect_tableau(rng, k, rng.randint(1, 3), n)
            for _ in range(3)
        )
        ok = yang_baxter_holds(x, y, z)
        detail = f"n={n}\nx = {x}\ny = {y}\nz = {z}\n"
        yield ok, None if ok else detail


def _inv_r_oracle(rng, trials):
    # Exhaustive over small shapes; the trial budget is ignored.
    for n in (2, 3):
        for k in range(1, min(2, n - 1) + 1):
            for kp in range(1, min(2, n - 1) + 1):
                for l in (1, 2):
                    for lp in (1, 2):
                        for x in enumerate_tableaux((l,) * k, n):
                            for y in enumerate_tableaux((lp,) * kp, n):
                                ok = apply_r(x, y) == oracle_r(x, y)
                                detail = f"n={n}\nx = {x}\ny = {y}\n"
                                yield ok, None if ok else detail


def _inv_knuth(rng, trials):
    for _ in range(trials):
        n = rng.randint(2, 4)
        w = sampling.random_word(rng, 8, n)
        v = w
        for _ in range(rng.randint(0, 4)):
            moves = _knuth_neighbors(v)
            if not moves:
                break
            v = rng.choice(moves)
        ok = rectify(w, n).rows == rectify(v, n).rows and all(
            knuth_equivalent(restrict(w, 1, j), restrict(v, 1, j))
            for j in range(1, n + 1)
        )
        yield ok, None if ok else f"w = {w}\nv = {v}\n"


def _knuth_neighbors(w):
    out = []
    for i in range(len(w) - 2):
        p, q, r = w[i], w[i + 1], w[i + 2]
        if q < p <= r or r < p <= q:
            out.append(w[:i] + (p, r, q) + w[i + 3:])
        if p <= r < q or q <= r < p:
            out.append(w[:i] + (q, p, r) + w[i + 3:])
    return out


_INVARIANT_RUNNERS = {
    "energy": _inv_energy,
    "commute": _inv_commute,
    "yang-baxter": _inv_yang_baxter,
    "r-oracle": _inv_r_oracle,
    "knuth": _inv_knuth,
}


def cmd_check(cfg: RunConfig) -> int:
    if cfg.invariant not in _INVARIANT_RUNNERS:
        raise UsageError(f"unknown invariant {cfg.invariant!r}; choose from {', '.join(INVARIANTS)}")
    rng = random.Random(cfg.seed)
    passed = total = 0
    for idx, (ok, detail) in enumerate(_INVARIANT_RUNNERS[cfg.invariant](rng, cfg.trials), 1):
        total += 1
        if ok:
            passed += 1
        else:
            print(f"trial {idx}: FAIL")
            if detail:
                sys.stdout.write(detail if detail.endswith("\n") else detail + "\n")
    verdict = "PASS" if passed == total else "FAIL"
    print(f"check invariant={cfg.invariant} seed={cfg.seed}: {verdict} {passed}/{total}")
    return EXIT_OK if passed == total else EXIT_FAIL


_DISPATCH = {
    "evolve": cmd_evolve,
    "energy": cmd_energy,
    "spectrum": cmd_spectrum,
    "scatter": cmd_scatter,
    "rmatrix": cmd_rmatrix,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxball",
        description="Box-ball systems on column crystals: evolution, scattering, and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evolve", help="apply the carrier evolution repeatedly")
    ev.add_argument("--input", required=True, help="state file")
    ev.add_argument("--l", type=int, default=1, help="carrier width")
    ev.add_argument("--steps", type=int, default=1)
    ev.add_argument("--render", action="store_true", help="append an ASCII diagram")

    en = sub.add_parser("energy", help="conserved energy of a state")
    en.add_argument("--input", required=True)
    en.add_argument("--l", type=int, default=1)

    spect = sub.add_parser("spectrum", help="soliton counts per length")
    spect.add_argument("--input", required=True)

    sc = sub.add_parser("scatter", help="scattering experiment: predicted vs observed")
    sc.add_argument("--input", required=True)
    sc.add_argument("--l", type=int, default=1)
    sc.add_argument("--steps", type=int, default=None,
                    help="evolution steps (default: run until fully scattered)")

    rm = sub.add_parser("rmatrix", help="apply the combinatorial R to a pair")
    rm.add_argument("--left", required=True, help="tableau text form")
    rm.add_argument("--right", required=True)
    rm.add_argument("--n", type=int, default=None, dest="alphabet",
                    help="alphabet bound (default: largest letter present)")

    ck = sub.add_parser("check", help="seeded invariant verification")
    ck.add_argument("--invariant", required=True, choices=INVARIANTS)
    ck.add_argument("--trials", type=int, default=100)
    ck.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    cfg = RunConfig(
        command=args.command,
        l=getattr(args, "l", 1),
        steps=getattr(args, "steps", None),
        input=getattr(args, "input", None),
        seed=getattr(args, "seed", 0),
        trials=getattr(args, "trials", 100),
        invariant=getattr(args, "invariant", None),
        render=getattr(args, "render", False),
        left=getattr(args, "left", None),
        right=getattr(args, "right", None),
        alphabet=getattr(args, "alphabet", None),
    )
    try:
        cfg.validate()
        return _DISPATCH[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StateParseError, TableauError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
