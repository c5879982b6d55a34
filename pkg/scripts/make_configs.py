#!/usr/bin/env python3
"""Regenerate configs/: one TOML experiment file per bundled census cell.

Every file round-trips through load_experiment_config to the exact spec
that `cvhnn paper-grid` builds for the same cell, including the stable
per-cell default seed.
"""

from __future__ import annotations

import sys
from pathlib import Path

from cvhnn.grids import all_cells, cell_spec
from cvhnn.harness import BraidedHermitian, BraidedSkewHermitian, PolarGrid, RectGrid, SkewHermitian


def family_tokens(family) -> dict[str, str]:
    if isinstance(family, SkewHermitian):
        return {"structure": "skew-hermitian"}
    if isinstance(family, BraidedHermitian):
        return {"structure": "braided-hermitian"}
    if isinstance(family, BraidedSkewHermitian):
        return {"structure": "braided-skew-hermitian"}
    if isinstance(family, RectGrid):
        return {
            "structure": "rect",
            "sym_a": family.sym_a.value,
            "sign_a": family.sign_a.value,
            "sym_b": family.sym_b.value,
            "sign_b": family.sign_b.value,
        }
    if isinstance(family, PolarGrid):
        return {"structure": "polar", "sym_g": family.sym_g.value, "sym_p": family.sym_p.value}
    raise TypeError(f"unknown family: {family!r}")


def render(cell) -> str:
    spec = cell_spec(cell)
    lines = ["[experiment]", f'name = "{cell.name}"']
    for key, value in family_tokens(cell.family).items():
        lines.append(f'{key} = "{value}"')
    lines += [
        f'threshold = "{cell.threshold_mode.value}"',
        f"trials = {spec.trials}",
        f"n_min = {spec.n_range[0]}",
        f"n_max = {spec.n_range[1]}",
        f"cap = {spec.cap}",
        f"seed = {spec.master_seed}",
    ]
    return "\n".join(lines) + "\n"


def main() -> int:
    out_dir = Path(__file__).resolve().parent.parent / "configs"
    out_dir.mkdir(exist_ok=True)
    for cell in all_cells():
        (out_dir / f"{cell.name}.toml").write_text(render(cell), encoding="utf-8", newline="\n")
    print(f"wrote {len(all_cells())} configs to {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
