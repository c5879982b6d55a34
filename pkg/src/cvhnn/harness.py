"""Config-driven Monte-Carlo census of cycle lengths.

An experiment is: a weight-matrix family, a threshold mode, a trial count,
a network-size range, a step cap, and a master seed.  Instance k derives
its own rng stream from (master_seed, k), draws (n, M, T, s0) in that
order, and runs the constant-memory cycle detector.  Because every
instance owns its stream, the result set is identical for any execution
order or worker count, and aggregation is a plain count merge.

Emitters write CSV (raw rows or histogram), a JSON summary, and a
standalone SVG bar chart; all outputs are byte-deterministic for a fixed
(spec, master_seed).
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import Network
from .cycles import detect_cycle_brent
from .structure import (
    PolarSpec,
    RealMatrixSpec,
    SignKind,
    SymmetryKind,
    ThresholdMode,
    gen_braided_hermitian,
    gen_braided_skew_hermitian,
    gen_hermitian,
    gen_polar,
    gen_real_constrained,
    gen_skew_hermitian,
    gen_state,
    gen_threshold,
    stream_rng,
)

__all__ = [
    "BraidedHermitian",
    "BraidedSkewHermitian",
    "ExperimentSpec",
    "Hermitian",
    "Histogram",
    "InstanceResult",
    "PolarGrid",
    "RectGrid",
    "SkewHermitian",
    "StructureFamily",
    "aggregate",
    "draw_weights",
    "emit_csv",
    "emit_json_summary",
    "emit_svg_histogram",
    "family_from_table",
    "family_label",
    "load_experiment_config",
    "load_network_json",
    "run_experiment",
    "run_instance",
    "run_instances",
    "spec_from_table",
]


class StructureFamily:
    """Base class for weight-family recipes (which generator, which knobs)."""

    __slots__ = ()


@dataclass(frozen=True)
class Hermitian(StructureFamily):
    sign_re: SignKind = SignKind.ARBITRARY
    sign_im: SignKind = SignKind.ARBITRARY
    diag_nonneg: bool = True


@dataclass(frozen=True)
class SkewHermitian(StructureFamily):
    pass


@dataclass(frozen=True)
class BraidedHermitian(StructureFamily):
    pass


@dataclass(frozen=True)
class BraidedSkewHermitian(StructureFamily):
    pass


@dataclass(frozen=True)
class RectGrid(StructureFamily):
    """M = A + Bi with independent symmetry/sign constraints on A and B."""

    sym_a: SymmetryKind
    sign_a: SignKind
    sym_b: SymmetryKind
    sign_b: SignKind


@dataclass(frozen=True)
class PolarGrid(StructureFamily):
    """M_ij = G_ij e^{i P_ij} with symmetry constraints on G and P."""

    sym_g: SymmetryKind
    sym_p: SymmetryKind


def family_label(family: StructureFamily) -> str:
    if isinstance(family, Hermitian):
        return "hermitian"
    if isinstance(family, SkewHermitian):
        return "skew-hermitian"
    if isinstance(family, BraidedHermitian):
        return "braided-hermitian"
    if isinstance(family, BraidedSkewHermitian):
        return "braided-skew-hermitian"
    if isinstance(family, RectGrid):
        return f"rect:{family.sym_a.value}/{family.sym_b.value}"
    if isinstance(family, PolarGrid):
        return f"polar:{family.sym_g.value}/{family.sym_p.value}"
    raise TypeError(f"unknown structure family: {family!r}")


def draw_weights(family: StructureFamily, n: int, rng: np.random.Generator) -> np.ndarray:
    """One weight matrix of the family's distribution at size n."""
    if isinstance(family, Hermitian):
        return gen_hermitian(n, family.sign_re, family.sign_im, family.diag_nonneg, rng)
    if isinstance(family, SkewHermitian):
        return gen_skew_hermitian(n, rng)
    if isinstance(family, BraidedHermitian):
        a = gen_real_constrained(RealMatrixSpec(n, SymmetryKind.ARBITRARY, SignKind.ARBITRARY), rng)
        return gen_braided_hermitian(a)
    if isinstance(family, BraidedSkewHermitian):
        a = gen_real_constrained(RealMatrixSpec(n, SymmetryKind.ARBITRARY, SignKind.ARBITRARY), rng)
        return gen_braided_skew_hermitian(a)
    if isinstance(family, RectGrid):
        a = gen_real_constrained(RealMatrixSpec(n, family.sym_a, family.sign_a), rng)
        b = gen_real_constrained(RealMatrixSpec(n, family.sym_b, family.sign_b), rng)
        return a + 1j * b
    if isinstance(family, PolarGrid):
        return gen_polar(PolarSpec(n, family.sym_g, family.sym_p), rng)
    raise TypeError(f"unknown structure family: {family!r}")


@dataclass(frozen=True)
class ExperimentSpec:
    """Everything one experiment cell needs; hashable and picklable."""

    family: StructureFamily
    threshold_mode: ThresholdMode = ThresholdMode.ZERO
    trials: int = 2000
    n_range: tuple[int, int] = (5, 70)
    cap: int = 100_000
    master_seed: int = 0
    name: str = ""

    def __post_init__(self):
        lo, hi = self.n_range
        if not (1 <= lo <= hi <= 512):
            raise ValueError(f"n_range must satisfy 1 <= lo <= hi <= 512, got {self.n_range}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.cap < 1:
            raise ValueError("cap must be >= 1")


@dataclass(frozen=True)
class InstanceResult:
    period: int | None  # None = unresolved within the cap
    transient: int | None
    n: int
    steps_executed: int


def run_instance(spec: ExperimentSpec, k: int) -> InstanceResult:
    """Instance k of the experiment, fully determined by (spec, k).

    Draw order within stream k: network size n, weights M, thresholds T,
    start state s0.
    """
    if not 0 <= k < spec.trials:
        raise ValueError(f"instance index {k} out of range for trials={spec.trials}")
    rng = stream_rng(spec.master_seed, k)
    lo, hi = spec.n_range
    n = int(rng.integers(lo, hi + 1))
    m = draw_weights(spec.family, n, rng)
    t = gen_threshold(n, spec.threshold_mode, rng)
    s0 = gen_state(n, rng)
    report = detect_cycle_brent(Network(m, t), s0, spec.cap)
    return InstanceResult(report.period, report.transient, n, report.steps_executed)


def _run_block(args: tuple[ExperimentSpec, int, int]) -> list[InstanceResult]:
    spec, start, stop = args
    return [run_instance(spec, k) for k in range(start, stop)]


def run_instances(spec: ExperimentSpec, jobs: int = 1) -> list[InstanceResult]:
    """All trial results, ordered by instance index, for any worker count."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1:
        return [run_instance(spec, k) for k in range(spec.trials)]
    block = max(1, math.ceil(spec.trials / (jobs * 4)))
    blocks = [(spec, lo, min(lo + block, spec.trials)) for lo in range(0, spec.trials, block)]
    out: list[InstanceResult] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_run_block, blocks):
            out.extend(chunk)
    return out


@dataclass(frozen=True)
class Histogram:
    """Cycle-length census for one experiment cell.

    counts maps resolved period -> occurrences; unresolved runs are a
    separate bucket.  mean/stddev cover resolved runs only (population
    stddev); mode ties break toward the smallest period.
    """

    counts: dict[int, int]
    unresolved: int
    trials: int
    mode_period: int | None
    mode_probability: float
    mean_period: float | None
    stddev_period: float | None
    spec: ExperimentSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if sum(self.counts.values()) + self.unresolved != self.trials:
            raise ValueError("histogram counts do not add up to trials")


def aggregate(results: list[InstanceResult], spec: ExperimentSpec | None = None) -> Histogram:
    """Order-independent count merge plus summary statistics.

    Statistics use exact integer sums and fsum, so they do not depend on
    accumulation order or platform reduction strategy.
    """
    counts: dict[int, int] = {}
    unresolved = 0
    periods: list[int] = []
    for r in results:
        if r.period is None:
            unresolved += 1
        else:
            counts[r.period] = counts.get(r.period, 0) + 1
            periods.append(r.period)
    counts = dict(sorted(counts.items()))
    if counts:
        best = max(counts.values())
        mode_period = min(p for p, c in counts.items() if c == best)
        mode_probability = counts[mode_period] / len(results)
        mean = sum(periods) / len(periods)
        var = math.fsum((p - mean) ** 2 for p in periods) / len(periods)
        stddev = math.sqrt(var)
    else:
        mode_period, mode_probability, mean, stddev = None, 0.0, None, None
    return Histogram(
        counts=counts,
        unresolved=unresolved,
        trials=len(results),
        mode_period=mode_period,
        mode_probability=mode_probability,
        mean_period=mean,
        stddev_period=stddev,
        spec=spec,
    )


def run_experiment(spec: ExperimentSpec, jobs: int = 1) -> Histogram:
    """Run every instance and aggregate; identical output for any jobs value."""
    return aggregate(run_instances(spec, jobs), spec)


# ---------------------------------------------------------------------------
# emission


def _spec_echo(spec: ExperimentSpec | None) -> dict | None:
    if spec is None:
        return None
    fam = spec.family
    sign_a = fam.sign_a.value if isinstance(fam, RectGrid) else ""
    sign_b = fam.sign_b.value if isinstance(fam, RectGrid) else ""
    return {
        "name": spec.name,
        "structure": family_label(fam),
        "sign_a": sign_a,
        "sign_b": sign_b,
        "threshold_mode": spec.threshold_mode.value,
        "trials": spec.trials,
        "n_min": spec.n_range[0],
        "n_max": spec.n_range[1],
        "cap": spec.cap,
        "master_seed": spec.master_seed,
    }


def emit_csv(obj, path, spec: ExperimentSpec | None = None) -> None:
    """Write a histogram table or raw per-instance rows as UTF-8 CSV, LF endings.

    Histogram: columns period,count,probability with an extra period=-1 row
    iff any run was unresolved.  Raw rows: one line per instance with the
    spec's structure columns; unresolved instances carry period=-1 and
    transient=-1.
    """
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if isinstance(obj, Histogram):
            writer.writerow(["period", "count", "probability"])
            rows = dict(obj.counts)
            if obj.unresolved > 0:
                rows[-1] = obj.unresolved
            for period in sorted(rows):
                writer.writerow([period, rows[period], rows[period] / obj.trials])
            return
        echo = _spec_echo(spec)
        if echo is None:
            raise ValueError("raw-row emission needs the experiment spec for the structure columns")
        writer.writerow(["instance_id", "n", "structure", "sign_a", "sign_b",
                         "threshold_mode", "period", "transient", "steps_executed"])
        for k, r in enumerate(obj):
            period = -1 if r.period is None else r.period
            transient = -1 if r.transient is None else r.transient
            writer.writerow([k, r.n, echo["structure"], echo["sign_a"], echo["sign_b"],
                             echo["threshold_mode"], period, transient, r.steps_executed])


def emit_json_summary(histogram: Histogram, path) -> None:
    """Fixed-key-order JSON summary; byte-identical for identical histograms."""
    payload = {
        "spec": _spec_echo(histogram.spec),
        "trials": histogram.trials,
        "counts": {str(p): c for p, c in sorted(histogram.counts.items())},
        "unresolved": histogram.unresolved,
        "mode_period": histogram.mode_period,
        "mode_probability": histogram.mode_probability,
        "mean_period": histogram.mean_period,
        "stddev_period": histogram.stddev_period,
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8", newline="\n")


def emit_svg_histogram(histogram: Histogram, path, max_display_period: int = 32) -> None:
    """Standalone SVG bar chart: probability per period.

    Periods above max_display_period collapse into one overflow bar;
    unresolved runs render as a final bar labeled with the infinity sign.
    Layout is a pure function of the histogram, so output is deterministic.
    """
    bars: list[tuple[str, float]] = []
    overflow = 0
    for period, count in sorted(histogram.counts.items()):
        if period <= max_display_period:
            bars.append((str(period), count / histogram.trials))
        else:
            overflow += count
    if overflow:
        bars.append((f">{max_display_period}", overflow / histogram.trials))
    if histogram.unresolved:
        bars.append(("∞", histogram.unresolved / histogram.trials))
    if not bars:
        bars.append(("-", 0.0))

    width, height = 640, 360
    left, right, top, bottom = 50, 15, 30, 40
    plot_w, plot_h = width - left - right, height - top - bottom
    slot = plot_w / len(bars)
    bar_w = slot * 0.8
    title = histogram.spec.name if histogram.spec and histogram.spec.name else "cycle-length histogram"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" font-family="sans-serif" '
        f'font-size="14">{title}</text>',
    ]
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        y = top + plot_h * (1 - frac)
        parts.append(f'<line x1="{left}" y1="{y:.1f}" x2="{width - right}" y2="{y:.1f}" '
                     f'stroke="#cccccc" stroke-width="1"/>')
        parts.append(f'<text x="{left - 6}" y="{y + 4:.1f}" text-anchor="end" '
                     f'font-family="sans-serif" font-size="11">{frac:.2f}</text>')
    for idx, (label, prob) in enumerate(bars):
        x = left + idx * slot + (slot - bar_w) / 2
        bar_h = plot_h * prob
        y = top + plot_h - bar_h
        parts.append(f'<rect x="{x:.1f}" y="{y:.1f}" width="{bar_w:.1f}" height="{bar_h:.1f}" '
                     f'fill="#4878a8"/>')
        parts.append(f'<text x="{x + bar_w / 2:.1f}" y="{height - bottom + 16}" '
                     f'text-anchor="middle" font-family="sans-serif" font-size="11">{label}</text>')
    parts.append(f'<line x1="{left}" y1="{top + plot_h}" x2="{width - right}" y2="{top + plot_h}" '
                 f'stroke="black" stroke-width="1"/>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# TOML configs

_FAMILY_TOKENS = {
    "hermitian": Hermitian,
    "skew-hermitian": SkewHermitian,
    "braided-hermitian": BraidedHermitian,
    "braided-skew-hermitian": BraidedSkewHermitian,
}


def family_from_table(table: dict) -> StructureFamily:
    """Family from string tokens (config table or CLI flags).

    structure selects the family; rect additionally needs sym_a/sign_a/
    sym_b/sign_b, polar needs sym_g/sym_p.
    """
    structure = table.get("structure")
    if structure in _FAMILY_TOKENS:
        return _FAMILY_TOKENS[structure]()
    if structure == "rect":
        return RectGrid(
            sym_a=SymmetryKind(table["sym_a"]),
            sign_a=SignKind(table["sign_a"]),
            sym_b=SymmetryKind(table["sym_b"]),
            sign_b=SignKind(table["sign_b"]),
        )
    if structure == "polar":
        return PolarGrid(sym_g=SymmetryKind(table["sym_g"]), sym_p=SymmetryKind(table["sym_p"]))
    raise ValueError(f"unknown structure token: {structure!r}")


def spec_from_table(table: dict, *, seed: int | None = None, trials: int | None = None,
                    cap: int | None = None, fallback_seed: int = 0) -> ExperimentSpec:
    """ExperimentSpec from a parsed [experiment] table, with optional overrides.

    Seed precedence: the explicit override, then the table's seed, then
    fallback_seed (the CLI passes the CVHNN_SEED env value there).
    """
    resolved_seed = seed if seed is not None else table.get("seed", fallback_seed)
    return ExperimentSpec(
        family=family_from_table(table),
        threshold_mode=ThresholdMode(table.get("threshold", "zero")),
        trials=trials if trials is not None else int(table.get("trials", 2000)),
        n_range=(int(table.get("n_min", 5)), int(table.get("n_max", 70))),
        cap=cap if cap is not None else int(table.get("cap", 100_000)),
        master_seed=int(resolved_seed),
        name=str(table.get("name", "")),
    )


def load_experiment_config(path, *, seed: int | None = None, trials: int | None = None,
                           cap: int | None = None, fallback_seed: int = 0) -> ExperimentSpec:
    """Parse a one-experiment TOML file (table [experiment]) into a spec."""
    try:
        import tomllib
    except ModuleNotFoundError:  # python < 3.11
        import tomli as tomllib
    raw = Path(path).read_bytes()
    doc = tomllib.loads(raw.decode("utf-8"))
    table = doc.get("experiment")
    if not isinstance(table, dict):
        raise ValueError(f"config {path} is missing the [experiment] table")
    return spec_from_table(table, seed=seed, trials=trials, cap=cap, fallback_seed=fallback_seed)


def load_network_json(path) -> Network:
    """Network from a JSON file {"re": [[..]], "im": [[..]], "t_re": [..], "t_im": [..]}.

    The threshold arrays are optional and default to zero.
    """
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    re = np.asarray(doc["re"], dtype=np.float64)
    im = np.asarray(doc["im"], dtype=np.float64)
    if re.shape != im.shape:
        raise ValueError(f"re/im shape mismatch: {re.shape} vs {im.shape}")
    n = re.shape[0]
    t_re = np.asarray(doc.get("t_re", np.zeros(n)), dtype=np.float64)
    t_im = np.asarray(doc.get("t_im", np.zeros(n)), dtype=np.float64)
    return Network(re + 1j * im, t_re + 1j * t_im)
