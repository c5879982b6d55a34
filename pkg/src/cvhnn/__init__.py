"""Structured complex-valued Hopfield network dynamics.

Neurons take quadrant states {+1+i, +1-i, -1+i, -1-i} and update through a
split-sign activation of their complex local field.  The package provides:

- the value model and both energy functions (`core`)
- generators and classifiers for structured weight families, plus the
  complex-to-real block-matrix equivalence (`structure`)
- serial and parallel dynamics (`dynamics`)
- transient/period detection for parallel orbits (`cycles`)
- an exhaustive small-n ground-truth enumerator (`oracle`)
- a reproducible Monte-Carlo census harness with CSV/JSON/SVG emission and
  a CLI (`harness`, `grids`, `cli`)
"""

from .core import (
    QUAD_STATES,
    Network,
    StructureTag,
    energy_parallel,
    energy_serial,
    local_field,
    local_fields,
    sign_real,
    split_sign,
    split_sign_vector,
)
from .cycles import CycleReport, EnergyMode, check_energy_monotone, detect_cycle_brent, detect_cycle_hashed
from .dynamics import (
    ScanOrder,
    Trajectory,
    run_parallel,
    run_serial_to_fixpoint,
    run_serial_trajectory,
    step_parallel,
    step_serial,
    sweep_serial,
)
from .grids import FIGURES, CellDef, all_cells, cell_by_name, cell_spec
from .harness import (
    BraidedHermitian,
    BraidedSkewHermitian,
    ExperimentSpec,
    Hermitian,
    Histogram,
    InstanceResult,
    PolarGrid,
    RectGrid,
    SkewHermitian,
    StructureFamily,
    aggregate,
    draw_weights,
    emit_csv,
    emit_json_summary,
    emit_svg_histogram,
    family_from_table,
    family_label,
    load_experiment_config,
    load_network_json,
    run_experiment,
    run_instance,
    run_instances,
    spec_from_table,
)
from .oracle import (
    ORACLE_LIMIT,
    CycleInventory,
    CycleRecord,
    decode_state,
    encode_state,
    exhaustive_agreement,
    functional_graph_cycles,
    successor_table,
)
from .structure import (
    PolarSpec,
    RealMatrixSpec,
    SeededRng,
    SignKind,
    SymmetryKind,
    ThresholdMode,
    classify,
    compose_weights,
    gen_braided_hermitian,
    gen_braided_skew_hermitian,
    gen_hermitian,
    gen_polar,
    gen_real_constrained,
    gen_skew_hermitian,
    gen_state,
    gen_threshold,
    realify,
    realify_network,
    stream_rng,
)

__version__ = "0.1.0"

__all__ = [
    "FIGURES",
    "ORACLE_LIMIT",
    "QUAD_STATES",
    "BraidedHermitian",
    "BraidedSkewHermitian",
    "CellDef",
    "CycleInventory",
    "CycleRecord",
    "CycleReport",
    "EnergyMode",
    "ExperimentSpec",
    "Hermitian",
    "Histogram",
    "InstanceResult",
    "Network",
    "PolarGrid",
    "PolarSpec",
    "RealMatrixSpec",
    "RectGrid",
    "ScanOrder",
    "SeededRng",
    "SignKind",
    "SkewHermitian",
    "StructureFamily",
    "StructureTag",
    "SymmetryKind",
    "ThresholdMode",
    "Trajectory",
    "aggregate",
    "all_cells",
    "cell_by_name",
    "cell_spec",
    "check_energy_monotone",
    "classify",
    "compose_weights",
    "decode_state",
    "detect_cycle_brent",
    "detect_cycle_hashed",
    "draw_weights",
    "emit_csv",
    "emit_json_summary",
    "emit_svg_histogram",
    "encode_state",
    "energy_parallel",
    "energy_serial",
    "exhaustive_agreement",
    "family_from_table",
    "family_label",
    "functional_graph_cycles",
    "gen_braided_hermitian",
    "gen_braided_skew_hermitian",
    "gen_hermitian",
    "gen_polar",
    "gen_real_constrained",
    "gen_skew_hermitian",
    "gen_state",
    "gen_threshold",
    "load_experiment_config",
    "load_network_json",
    "local_field",
    "local_fields",
    "realify",
    "realify_network",
    "run_experiment",
    "run_instance",
    "run_instances",
    "run_parallel",
    "run_serial_to_fixpoint",
    "run_serial_trajectory",
    "sign_real",
    "spec_from_table",
    "split_sign",
    "split_sign_vector",
    "step_parallel",
    "step_serial",
    "stream_rng",
    "successor_table",
    "sweep_serial",
]
