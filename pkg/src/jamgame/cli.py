"""Command-line front end: equilibrium queries, sweeps, simulation runs.

Subcommands::

    jamgame nash CONFIG [--brd] [--tol T] [--max-iter N] [--start-x X --start-y Y]
    jamgame stackelberg CONFIG [--approx] [--x-tol W]
    jamgame sweep CONFIG --figure ID [--param NAME] --log-range A B N [--out PATH]
    jamgame simulate CONFIG --out PATH [--seed K]

All output is CSV with a header row; floats are printed with shortest
round-trip precision (repr).  Exit codes: 0 ok, 2 config/usage error,
3 game-invariant violation, 4 I/O error.  The environment variable
JAMGAME_THREADS caps sweep parallelism (0 or unset = auto).
"""

from __future__ import annotations

import argparse
import os
import secrets
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from .belief import UniformPrior, efficiency, xi_opt
from .best_response import best_response_jammer, best_response_target, thresholds
from .config import dump_config, game_params_from_config, read_config
from .errors import ConfigError, JamGameError
from .model import GameParams, StrategyProfile, utilities_xy
from .nash import DEFAULT_MAX_ITER, DEFAULT_TOL, brd, nash_closed_form
from .sim import RNG_ALGORITHM, SimConfig, run_sim, updates_to_equilibrium
from .stackelberg import (
    improvement_report,
    leader_utility,
    stackelberg_approx,
    stackelberg_exact,
)

__all__ = ["main", "FIGURE_COLUMNS"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVARIANT = 3
EXIT_IO = 4


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv(rows, header, out) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")


def _max_workers() -> int:
    raw = os.environ.get("JAMGAME_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# nash

def _cmd_nash(args) -> int:
    cfg = read_config(args.config)
    p = game_params_from_config(cfg)
    res = nash_closed_form(p)
    th = thresholds(p)
    _csv(
        [(res.profile.x, res.profile.y, res.regime.value, res.utilities.u_t,
          res.utilities.u_j, th.c_t_tilde, th.c_t_max)],
        ["x_ne", "y_ne", "regime", "u_t", "u_j", "c_t_tilde", "c_t_max"],
        sys.stdout,
    )
    if args.brd:
        start = StrategyProfile(
            x=args.start_x if args.start_x is not None else 2.0 * p.delta,
            y=args.start_y if args.start_y is not None else 0.0,
        )
        trace = brd(p, start, tol=args.tol, max_iter=args.max_iter)
        sys.stdout.write("\n")
        _csv(
            [(i, s.x, s.y) for i, s in enumerate(trace.iterates)],
            ["iteration", "x", "y"],
            sys.stdout,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# stackelberg

def _cmd_stackelberg(args) -> int:
    cfg = read_config(args.config)
    p = game_params_from_config(cfg)
    se = stackelberg_exact(p, x_tol=args.x_tol)
    rep = improvement_report(p)
    header = ["x_se", "y_se", "u_t_se", "u_t_ne", "improved"]
    row = [se.profile.x, se.profile.y, rep.u_t_se, rep.u_t_ne, rep.improved]
    if args.approx:
        approx = stackelberg_approx(p)
        ratio = float(leader_utility(p, approx.profile.x)) / float(
            leader_utility(p, se.profile.x)
        )
        header.append("accuracy_ratio")
        row.append(ratio)
    _csv([tuple(row)], header, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep

FIGURE_COLUMNS = {
    "brX": ["y", "x_best"],
    "brY": ["x", "y_best"],
    "neX": ["c_t", "x_ne"],
    "neY": ["c_t", "y_ne"],
    "seX": ["c_t", "x_ne", "x_se"],
    "seY": ["c_t", "y_ne", "y_se"],
    "payoffs": ["c_t", "u_t_ne", "u_j_ne", "u_t_se", "u_j_se", "improved"],
    "approx": ["c_t", "x_se", "x_se_approx", "u_t_se", "u_t_se_approx", "accuracy_ratio"],
    "efficiency": ["c_t", "xi_opt", "e_xi_opt", "e_xi_mean", "e_xi_max", "e_xi_min"],
    "comparison": [
        "c_t", "u_t_ne", "u_j_ne", "u_t_se", "u_j_se",
        "u_t_case_a", "u_j_case_a", "u_t_case_b", "u_j_case_b",
    ],
}

_DEFAULT_SWEEP_PARAM = {"brX": "y", "brY": "x"}


def _sweep_row(figure: str, p: GameParams, value: float, extra: dict) -> tuple:
    if figure == "brX":
        return (value, float(best_response_target(p, value)))
    if figure == "brY":
        return (value, float(best_response_jammer(p, value)))

    if figure == "neX":
        ne = nash_closed_form(p)
        return (p.c_t, ne.profile.x)
    if figure == "neY":
        ne = nash_closed_form(p)
        return (p.c_t, ne.profile.y)
    if figure == "seX":
        return (p.c_t, nash_closed_form(p).profile.x, stackelberg_exact(p).profile.x)
    if figure == "seY":
        return (p.c_t, nash_closed_form(p).profile.y, stackelberg_exact(p).profile.y)
    if figure == "payoffs":
        rep = improvement_report(p)
        return (p.c_t, rep.u_t_ne, rep.u_j_ne, rep.u_t_se, rep.u_j_se, rep.improved)
    if figure == "approx":
        se = stackelberg_exact(p)
        ap = stackelberg_approx(p)
        u_se = float(leader_utility(p, se.profile.x))
        u_ap = float(leader_utility(p, ap.profile.x))
        return (p.c_t, se.profile.x, ap.profile.x, u_se, u_ap, u_ap / u_se)
    if figure == "efficiency":
        prior: UniformPrior = extra["prior"]
        opt = extra["xi_opt"]
        xi_mean = 0.5 * (prior.xi_min + prior.xi_max)
        return (
            p.c_t,
            opt,
            efficiency(p, opt),
            efficiency(p, xi_mean),
            efficiency(p, prior.xi_max),
            efficiency(p, prior.xi_min),
        )
    if figure == "comparison":
        rep = improvement_report(p)
        x_naive = float(best_response_target(p, 0.0))
        y_naive = float(best_response_jammer(p, x_naive))
        # Case A: target ignores the jammer (assumes y ~ 0) and gets jammed.
        u_t_a, u_j_a = utilities_xy(p, x_naive, y_naive)
        # Case B: jammer assumes a naive target; the target best-responds.
        u_t_b, u_j_b = utilities_xy(p, float(best_response_target(p, y_naive)), y_naive)
        return (
            p.c_t, rep.u_t_ne, rep.u_j_ne, rep.u_t_se, rep.u_j_se,
            float(u_t_a), float(u_j_a), float(u_t_b), float(u_j_b),
        )
    raise ConfigError(f"unknown figure id {figure!r}")


def _cmd_sweep(args) -> int:
    cfg = read_config(args.config)
    p0 = game_params_from_config(cfg)
    if args.figure not in FIGURE_COLUMNS:
        raise ConfigError(
            f"unknown figure id {args.figure!r}; choose from {sorted(FIGURE_COLUMNS)}"
        )
    a, b, n = args.log_range
    n = int(n)
    if not (n >= 2 and 0 < a < b):
        raise ConfigError("--log-range needs 0 < a < b and n >= 2")
    param = args.param or _DEFAULT_SWEEP_PARAM.get(args.figure, "c_t")

    ratio = (b / a) ** (1.0 / (n - 1))
    values = [a * ratio**k for k in range(n)]
    values[-1] = b

    extra: dict = {}
    if args.figure == "efficiency":
        prior = UniformPrior(
            xi_min=cfg.get("xi_min", 1e5), xi_max=cfg.get("xi_max", 1e9)
        )
        extra = {"prior": prior, "xi_opt": xi_opt(p0, prior)}

    def point(v: float) -> tuple:
        if param in ("x", "y"):
            return _sweep_row(args.figure, p0, v, extra)
        if param != "c_t":
            raise ConfigError(f"unsupported sweep parameter {param!r}")
        return _sweep_row(args.figure, replace(p0, c_t=v), v, extra)

    with ThreadPoolExecutor(max_workers=_max_workers()) as pool:
        rows = list(pool.map(point, values))

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                _csv(rows, FIGURE_COLUMNS[args.figure], fh)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        _csv(rows, FIGURE_COLUMNS[args.figure], sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate

def _cmd_simulate(args) -> int:
    cfg = read_config(args.config)
    p = game_params_from_config(cfg)
    seed = args.seed if args.seed is not None else secrets.randbits(63)
    sim_cfg = SimConfig(
        params=p,
        total_cycles=int(cfg.get("total_cycles", 200)),
        update_period_cycles=int(cfg.get("update_period_cycles", 10)),
        rng_seed=seed,
    )
    trace = run_sim(sim_cfg)

    lines = [
        "# jamgame simulation trace",
        f"# seed={seed}",
        f"# rng={RNG_ALGORITHM}",
        f"# update_period_cycles={sim_cfg.update_period_cycles}",
        f"# total_cycles={sim_cfg.total_cycles}",
        f"# params={dump_config(cfg).strip().replace(chr(10), '; ')}",
    ]
    body = [
        ",".join(["update", "cycle", "x", "y", "x_est_by_jammer", "y_est_by_target"])
    ]
    for h in trace.strategy_history:
        cycle = h.update_index * sim_cfg.update_period_cycles
        body.append(
            ",".join(
                _fmt(v)
                for v in (h.update_index, cycle, h.x, h.y,
                          h.x_estimated_by_jammer, h.y_estimated_by_target)
            )
        )
    body.append("")
    body.append(",".join(["cycle", "silence_s", "jam_s", "bits", "jam_energy_j"]))
    for ev in trace.events:
        body.append(
            ",".join(
                _fmt(v)
                for v in (ev.index, ev.silence_drawn, ev.jam_drawn,
                          ev.bits_conveyed, ev.jam_energy)
            )
        )
    payload = "\n".join(lines + body) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    final = trace.strategy_history[-1]
    _csv(
        [(final.x, final.y, updates_to_equilibrium(trace, p))],
        ["final_x", "final_y", "updates_to_ne"],
        sys.stdout,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jamgame", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_nash = sub.add_parser("nash", help="closed-form Nash equilibrium (optionally BRD trace)")
    p_nash.add_argument("config")
    p_nash.add_argument("--brd", action="store_true", help="also emit the dynamics trace")
    p_nash.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_nash.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p_nash.add_argument("--start-x", type=float, default=None, help="default 2*delta")
    p_nash.add_argument("--start-y", type=float, default=None, help="default 0")
    p_nash.set_defaults(fn=_cmd_nash)

    p_se = sub.add_parser("stackelberg", help="Stackelberg equilibrium of the committed game")
    p_se.add_argument("config")
    p_se.add_argument("--approx", action="store_true")
    p_se.add_argument("--x-tol", type=float, default=None)
    p_se.set_defaults(fn=_cmd_stackelberg)

    p_sw = sub.add_parser("sweep", help="parameter sweep to CSV, one figure id per schema")
    p_sw.add_argument("config")
    p_sw.add_argument("--figure", required=True)
    p_sw.add_argument("--param", default=None)
    p_sw.add_argument("--log-range", nargs=3, type=float, required=True, metavar=("A", "B", "N"))
    p_sw.add_argument("--out", default=None)
    p_sw.set_defaults(fn=_cmd_sweep)

    p_sim = sub.add_parser("simulate", help="cycle-level simulation, trace to CSV file")
    p_sim.add_argument("config")
    p_sim.add_argument("--seed", type=int, default=None)
    p_sim.add_argument("--out", required=True)
    p_sim.set_defaults(fn=_cmd_simulate)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except JamGameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
