"""Command-line front end.

Subcommands:
  run         one network (matrix file or generator flags), print the cycle report
  experiment  one TOML config -> CSV / JSON / SVG outputs
  oracle      exact small-n cycle inventory as JSON
  verify      run the structural property suite; exit 1 on any violation
  paper-grid  run every cell of a named preset figure

Exit codes: 0 success, 1 verify violation, 2 usage/config error.
The env var CVHNN_SEED supplies a master seed when --seed is absent
(an explicit config seed still wins over the env var).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .core import Network
from .cycles import EnergyMode, check_energy_monotone, detect_cycle_brent, detect_cycle_hashed
from .dynamics import run_serial_to_fixpoint, run_serial_trajectory, step_parallel
from .grids import FIGURES, REFERENCE_MODES, all_cells, cell_spec
from .harness import (
    BraidedHermitian,
    BraidedSkewHermitian,
    ExperimentSpec,
    Hermitian,
    Histogram,
    SkewHermitian,
    aggregate,
    draw_weights,
    emit_csv,
    emit_json_summary,
    emit_svg_histogram,
    family_from_table,
    family_label,
    load_experiment_config,
    load_network_json,
    run_instances,
)
from .oracle import ORACLE_LIMIT, functional_graph_cycles
from .structure import (
    ThresholdMode,
    gen_hermitian,
    gen_skew_hermitian,
    gen_state,
    gen_threshold,
    realify_network,
    stream_rng,
)

__all__ = ["cli_main", "main"]

_STRUCTURE_CHOICES = (
    "hermitian", "skew-hermitian", "braided-hermitian", "braided-skew-hermitian",
    "rect", "polar",
)


def _env_seed() -> int | None:
    raw = os.environ.get("CVHNN_SEED")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise SystemExit(f"CVHNN_SEED must be an integer, got {raw!r}") from exc


def _resolve_seed(flag: int | None, default: int = 0) -> int:
    if flag is not None:
        return flag
    env = _env_seed()
    return default if env is None else env


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvhnn",
        description="Structured complex-valued Hopfield dynamics: run, census, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_network_source(p):
        p.add_argument("--matrix", type=Path, help="JSON network file {re, im, t_re, t_im}")
        p.add_argument("--structure", choices=_STRUCTURE_CHOICES, help="generate weights instead")
        p.add_argument("--n", type=int, help="network size for generated weights")
        p.add_argument("--sym-a", dest="sym_a"); p.add_argument("--sign-a", dest="sign_a")
        p.add_argument("--sym-b", dest="sym_b"); p.add_argument("--sign-b", dest="sign_b")
        p.add_argument("--sym-g", dest="sym_g"); p.add_argument("--sym-p", dest="sym_p")
        p.add_argument("--threshold", choices=["zero", "uniform-scaled"], default="zero")

    p_run = sub.add_parser("run", help="single network: detect the cycle from a random start")
    add_network_source(p_run)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--cap", type=int, default=100_000)
    p_run.add_argument("--engine", choices=["brent", "hashed"], default="brent")

    p_exp = sub.add_parser("experiment", help="run one TOML experiment config")
    p_exp.add_argument("--config", type=Path, required=True)
    p_exp.add_argument("--trials", type=int, default=None)
    p_exp.add_argument("--seed", type=int, default=None)
    p_exp.add_argument("--cap", type=int, default=None)
    p_exp.add_argument("--out", type=Path, default=Path("."))
    p_exp.add_argument("--format", choices=["csv", "json", "svg", "all"], default="all")
    p_exp.add_argument("--jobs", type=int, default=1)

    p_orc = sub.add_parser("oracle", help=f"exact cycle inventory (n <= {ORACLE_LIMIT})")
    add_network_source(p_orc)
    p_orc.add_argument("--seed", type=int, default=None)
    p_orc.add_argument("--out", type=Path, default=None, help="write JSON here (default stdout)")

    p_ver = sub.add_parser("verify", help="structural property suite; exit 1 on violation")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--trials", type=int, default=300, help="instances per property check")

    p_grid = sub.add_parser("paper-grid", help="run all cells of a preset figure")
    p_grid.add_argument("--figure", required=True, choices=sorted(FIGURES) + ["all"])
    p_grid.add_argument("--trials", type=int, default=2000)
    p_grid.add_argument("--seed", type=int, default=None)
    p_grid.add_argument("--cap", type=int, default=100_000)
    p_grid.add_argument("--out", type=Path, default=None, help="write per-cell outputs here")
    p_grid.add_argument("--format", choices=["csv", "json", "svg", "all"], default="json")
    p_grid.add_argument("--jobs", type=int, default=1)
    return parser


def _network_from_args(args, rng) -> tuple[Network, str]:
    """Build the network named by --matrix or the generator flags."""
    if args.matrix is not None and args.structure is not None:
        raise SystemExit("pass either --matrix or --structure, not both")
    if args.matrix is not None:
        net = load_network_json(args.matrix)
        return net, f"matrix:{args.matrix.name}"
    if args.structure is None:
        raise SystemExit("a network source is required: --matrix PATH or --structure NAME --n K")
    if args.n is None or args.n < 1:
        raise SystemExit("--structure needs --n >= 1")
    table = {"structure": args.structure}
    for key in ("sym_a", "sign_a", "sym_b", "sign_b", "sym_g", "sym_p"):
        value = getattr(args, key)
        if value is not None:
            table[key] = value
    try:
        family = family_from_table(table)
    except (KeyError, ValueError) as exc:
        raise SystemExit(f"bad structure flags: {exc}") from exc
    weights = draw_weights(family, args.n, rng)
    thresholds = gen_threshold(args.n, ThresholdMode(args.threshold), rng)
    return Network(weights, thresholds), family_label(family)


def _cmd_run(args) -> int:
    seed = _resolve_seed(args.seed)
    rng = stream_rng(seed, 0)
    net, label = _network_from_args(args, rng)
    s0 = gen_state(net.n, rng)
    detect = detect_cycle_brent if args.engine == "brent" else detect_cycle_hashed
    report = detect(net, s0, args.cap)
    print(f"network: {label}  n={net.n}  seed={seed}")
    print(f"cycle: {report}")
    return 0


def _emit_all(hist: Histogram, rows, spec: ExperimentSpec, out_dir: Path, fmt: str, stem: str) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt in ("csv", "all"):
        runs = out_dir / f"{stem}_runs.csv"
        emit_csv(rows, runs, spec=spec)
        written.append(runs)
        histcsv = out_dir / f"{stem}_hist.csv"
        emit_csv(hist, histcsv)
        written.append(histcsv)
    if fmt in ("json", "all"):
        summary = out_dir / f"{stem}_summary.json"
        emit_json_summary(hist, summary)
        written.append(summary)
    if fmt in ("svg", "all"):
        svg = out_dir / f"{stem}_hist.svg"
        emit_svg_histogram(hist, svg)
        written.append(svg)
    return written


def _hist_line(hist: Histogram, name: str) -> str:
    mode = "-" if hist.mode_period is None else str(hist.mode_period)
    mean = "-" if hist.mean_period is None else f"{hist.mean_period:.2f}"
    std = "-" if hist.stddev_period is None else f"{hist.stddev_period:.2f}"
    return (f"{name:<10} trials={hist.trials:<6} mode L={mode:<4} "
            f"Pr[mode]={hist.mode_probability:.4f} mean={mean:<8} std={std:<8} "
            f"unresolved={hist.unresolved}")


def _cmd_experiment(args) -> int:
    fallback = _resolve_seed(None)
    try:
        spec = load_experiment_config(args.config, seed=args.seed, trials=args.trials,
                                      cap=args.cap, fallback_seed=fallback)
    except (OSError, ValueError, KeyError) as exc:
        print(f"bad config {args.config}: {exc}", file=sys.stderr)
        return 2
    rows = run_instances(spec, jobs=args.jobs)
    hist = aggregate(rows, spec)
    stem = spec.name or args.config.stem
    written = _emit_all(hist, rows, spec, args.out, args.format, stem)
    print(_hist_line(hist, stem))
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_oracle(args) -> int:
    seed = _resolve_seed(args.seed)
    rng = stream_rng(seed, 0)
    net, label = _network_from_args(args, rng)
    if net.n > ORACLE_LIMIT:
        print(f"oracle supports n <= {ORACLE_LIMIT}, got n={net.n}", file=sys.stderr)
        return 2
    inventory = functional_graph_cycles(net)
    payload = {"network": label, "seed": seed, **inventory.to_dict()}
    text = json.dumps(payload, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {args.out}")
    periods = sorted({c.period for c in inventory.cycles})
    print(f"cycles: {len(inventory.cycles)}  periods: {periods}", file=sys.stderr)
    return 0


def _verify_checks(seed: int, trials: int):
    """Yield (name, passed, detail) for each structural property."""
    # serial convergence + strict energy descent on Hermitian nonneg-diagonal nets
    bad = 0
    descent_bad = 0
    for k in range(trials):
        rng = stream_rng(seed, k)
        n = int(rng.integers(5, 21))
        net = Network(gen_hermitian(n, rng=rng), gen_threshold(n, ThresholdMode.UNIFORM_SCALED, rng))
        s0 = gen_state(n, rng)
        _, _, converged = run_serial_to_fixpoint(net, s0, max_sweeps=10_000)
        if not converged:
            bad += 1
        traj = run_serial_trajectory(net, s0, max_sweeps=10_000)
        if check_energy_monotone(net, traj, EnergyMode.SERIAL_ENERGY):
            descent_bad += 1
    yield "hermitian-serial-converges", bad == 0, f"{bad}/{trials} non-converged"
    yield "hermitian-serial-energy-descent", descent_bad == 0, f"{descent_bad}/{trials} with violations"

    # parallel Hermitian periods <= 2
    bad = 0
    for k in range(trials):
        rng = stream_rng(seed + 1, k)
        n = int(rng.integers(5, 31))
        net = Network(gen_hermitian(n, diag_nonneg=False, rng=rng),
                      gen_threshold(n, ThresholdMode.UNIFORM_SCALED, rng))
        report = detect_cycle_brent(net, gen_state(n, rng), 100_000)
        if not report.resolved or report.period > 2:
            bad += 1
    yield "hermitian-parallel-L<=2", bad == 0, f"{bad}/{trials} above 2"

    # skew-Hermitian, zero thresholds: periods divide 4
    bad = 0
    for k in range(trials):
        rng = stream_rng(seed + 2, k)
        n = int(rng.integers(5, 41))
        net = Network(gen_skew_hermitian(n, rng))
        report = detect_cycle_brent(net, gen_state(n, rng), 100_000)
        if not report.resolved or 4 % report.period != 0:
            bad += 1
    yield "skew-hermitian-L-divides-4", bad == 0, f"{bad}/{trials} off"

    # braided families, zero thresholds: periods divide 8
    for offset, family, name in ((3, BraidedHermitian(), "braided-hermitian-L-divides-8"),
                                 (4, BraidedSkewHermitian(), "braided-skew-L-divides-8")):
        bad = 0
        for k in range(trials):
            rng = stream_rng(seed + offset, k)
            n = int(rng.integers(5, 41))
            net = Network(draw_weights(family, n, rng))
            report = detect_cycle_brent(net, gen_state(n, rng), 100_000)
            if not report.resolved or 8 % report.period != 0:
                bad += 1
        yield name, bad == 0, f"{bad}/{trials} off"

    # realification: complex parallel trajectory == real block-matrix trajectory
    bad = 0
    for k in range(max(1, trials // 3)):
        rng = stream_rng(seed + 5, k)
        n = int(rng.integers(2, 13))
        net = Network(draw_weights(Hermitian() if k % 2 else SkewHermitian(), n, rng),
                      gen_threshold(n, ThresholdMode.UNIFORM_SCALED, rng))
        w, t = realify_network(net)
        s = gen_state(n, rng)
        x = np.concatenate([s.real, s.imag])
        for _ in range(32):
            s = step_parallel(net, s)
            field = np.cumsum(w * x[None, :], axis=1)[:, -1] - t
            x = np.where(field >= 0, 1.0, -1.0)
            if not (np.array_equal(s.real, x[:n]) and np.array_equal(s.imag, x[n:])):
                bad += 1
                break
    yield "realification-trajectory-equality", bad == 0, f"{bad} mismatching networks"

    # detector agreement
    bad = 0
    families = (Hermitian(), SkewHermitian(), BraidedHermitian(), BraidedSkewHermitian())
    for k in range(trials):
        rng = stream_rng(seed + 6, k)
        n = int(rng.integers(5, 31))
        net = Network(draw_weights(families[k % 4], n, rng),
                      gen_threshold(n, ThresholdMode.UNIFORM_SCALED if k % 3 == 0 else ThresholdMode.ZERO, rng))
        s0 = gen_state(n, rng)
        a = detect_cycle_brent(net, s0, 100_000)
        b = detect_cycle_hashed(net, s0, 100_000)
        if a.resolved and b.resolved:
            if (a.period, a.transient) != (b.period, b.transient):
                bad += 1
        elif a.resolved != b.resolved:
            bad += 1
    yield "brent-hashed-agreement", bad == 0, f"{bad}/{trials} disagreements"


def _cmd_verify(args) -> int:
    seed = _resolve_seed(args.seed)
    failures = 0
    for name, passed, detail in _verify_checks(seed, args.trials):
        status = "ok" if passed else "FAIL"
        print(f"[{status}] {name}: {detail}")
        if not passed:
            failures += 1
    print(f"verify: {failures} violation(s)" if failures else "verify: all properties hold")
    return 1 if failures else 0


def _cmd_paper_grid(args) -> int:
    figures = sorted(FIGURES) if args.figure == "all" else [args.figure]
    base_seed = args.seed if args.seed is not None else _env_seed()
    cells = all_cells()
    print(f"{'cell':<10} {'result':<80}")
    for fig in figures:
        for cell in FIGURES[fig]:
            idx = cells.index(cell)
            master = None if base_seed is None else base_seed + 7919 * idx
            spec = cell_spec(cell, trials=args.trials, cap=args.cap, master_seed=master)
            rows = run_instances(spec, jobs=args.jobs)
            hist = aggregate(rows, spec)
            line = _hist_line(hist, cell.name)
            if cell.name in REFERENCE_MODES:
                ref_l, ref_p = REFERENCE_MODES[cell.name]
                line += f"  [reference: L={ref_l} Pr={ref_p:.2f}]"
            print(line)
            if args.out is not None:
                _emit_all(hist, rows, spec, args.out, args.format, cell.name)
    return 0


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "paper-grid":
            return _cmd_paper_grid(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return int(exc.code or 0)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable: unknown subcommand")


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
