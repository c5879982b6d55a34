"""Exhaustive small-N ground truth for the parallel dynamics.

At n <= ORACLE_LIMIT the full state space (4^n states) is enumerable, so the
parallel update becomes an explicit successor array over integer state
codes.  Walking that functional graph yields every cycle, its exact minimal
period, and the basin size (number of start states whose orbit reaches it).
The sampling detectors in `cycles` are validated against this module.

State codes are base-4 digit strings: digit j is (Re(s_j) < 0) + 2*(Im(s_j) < 0),
so the code equals the little-endian integer reading of `core.pack_state`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Network, _fields_batch
from .cycles import detect_cycle_brent, detect_cycle_hashed

__all__ = [
    "ORACLE_LIMIT",
    "CycleInventory",
    "CycleRecord",
    "decode_state",
    "encode_state",
    "exhaustive_agreement",
    "functional_graph_cycles",
    "successor_table",
]

#: largest n the oracle will enumerate (4^10 codes, ~8 MB successor array)
ORACLE_LIMIT = 10

_BATCH = 8192  # codes per successor-table slab; bounds the (m, n, n) temporary


def _check_n(n: int) -> None:
    if not 1 <= n <= ORACLE_LIMIT:
        raise ValueError(f"oracle supports 1 <= n <= {ORACLE_LIMIT}, got {n}")


def encode_state(s: np.ndarray) -> int:
    """Integer code in [0, 4^n) of a state vector."""
    s = np.asarray(s, dtype=np.complex128)
    _check_n(s.shape[0])
    digits = (s.real < 0).astype(np.int64) + 2 * (s.imag < 0).astype(np.int64)
    return int(np.sum(digits << (2 * np.arange(s.shape[0], dtype=np.int64))))


def decode_state(code: int, n: int) -> np.ndarray:
    """State vector whose code is the given integer (inverse of encode_state)."""
    _check_n(n)
    if not 0 <= code < 4**n:
        raise ValueError(f"code {code} out of range [0, 4^{n})")
    digits = (code >> (2 * np.arange(n, dtype=np.int64))) & 3
    re = 1.0 - 2.0 * (digits & 1)
    im = 1.0 - 2.0 * (digits >> 1)
    return re + 1j * im


def _all_states(codes: np.ndarray, n: int) -> np.ndarray:
    digits = (codes[:, None] >> (2 * np.arange(n, dtype=np.int64))[None, :]) & 3
    return (1.0 - 2.0 * (digits & 1)) + 1j * (1.0 - 2.0 * (digits >> 1))


def successor_table(net: Network) -> np.ndarray:
    """succ[code] = code of step_parallel applied to the decoded state.

    Computed in slabs with the same per-row summation order as the scalar
    step kernel, so the table is bitwise faithful to the sampled dynamics.
    """
    n = net.n
    _check_n(n)
    m = 4**n
    shifts = (2 * np.arange(n, dtype=np.int64))[None, :]
    succ = np.empty(m, dtype=np.int64)
    for lo in range(0, m, _BATCH):
        codes = np.arange(lo, min(lo + _BATCH, m), dtype=np.int64)
        states = _all_states(codes, n)
        f = _fields_batch(net.weights, net.thresholds, states)
        digits = (f.real < 0).astype(np.int64) + 2 * (f.imag < 0).astype(np.int64)
        succ[codes] = np.sum(digits << shifts, axis=1)
    return succ


@dataclass(frozen=True)
class CycleRecord:
    period: int
    representative: int  # smallest state code on the cycle
    basin_size: int      # states whose orbit reaches this cycle (cycle included)


@dataclass(frozen=True)
class CycleInventory:
    """Every cycle of the parallel dynamics, with exact periods and basins.

    cycle_index[code] is the cycle each start state eventually reaches;
    cycles are sorted by representative code.  Basin sizes always sum to
    total_states = 4^n.
    """

    n: int
    total_states: int
    cycles: tuple[CycleRecord, ...]
    cycle_index: np.ndarray

    def period_of_start(self, code: int) -> int:
        """Exact period of the cycle reached from the given start code."""
        return self.cycles[int(self.cycle_index[code])].period

    def periods(self) -> list[int]:
        return [c.period for c in self.cycles]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_states": self.total_states,
            "cycles": [
                {"period": c.period, "representative": c.representative,
                 "basin_size": c.basin_size}
                for c in self.cycles
            ],
        }


def functional_graph_cycles(net: Network) -> CycleInventory:
    """Walk the successor array once, extracting every cycle and basin.

    Each unvisited code is walked to the first node that is either on the
    current path (a new cycle) or already assigned; all path nodes drain
    into that cycle.
    """
    succ = successor_table(net)
    m = succ.shape[0]
    cycle_id = np.full(m, -1, dtype=np.int64)
    status = np.zeros(m, dtype=np.uint8)  # 0 new, 1 on current path, 2 done
    pos = np.zeros(m, dtype=np.int64)     # index within the current path
    periods: list[int] = []
    reps: list[int] = []

    for start in range(m):
        if status[start] != 0:
            continue
        path: list[int] = []
        v = start
        while status[v] == 0:
            status[v] = 1
            pos[v] = len(path)
            path.append(v)
            v = int(succ[v])
        if status[v] == 1:  # closed a fresh cycle at path position pos[v]
            nodes = path[pos[v]:]
            target = len(periods)
            periods.append(len(nodes))
            reps.append(min(nodes))
        else:
            target = int(cycle_id[v])
        for u in path:
            cycle_id[u] = target
            status[u] = 2

    basins = np.bincount(cycle_id, minlength=len(periods))
    order = np.argsort(np.asarray(reps, dtype=np.int64))
    remap = np.empty(len(periods), dtype=np.int64)
    remap[order] = np.arange(len(periods))
    records = tuple(
        CycleRecord(period=periods[i], representative=reps[i], basin_size=int(basins[i]))
        for i in order
    )
    inv_index = remap[cycle_id]
    inv_index.flags.writeable = False
    return CycleInventory(n=net.n, total_states=m, cycles=records, cycle_index=inv_index)


def exhaustive_agreement(net: Network, cap: int = 100_000, engine: str = "brent") -> bool:
    """True iff the sampling detector's period matches the oracle from every start.

    Runs the chosen detector (brent by default, hashed optionally) on all
    4^n start states and compares each resolved period against the period
    of the cycle that start drains into.  Any unresolved run counts as
    disagreement.
    """
    if engine not in ("brent", "hashed"):
        raise ValueError(f"unknown engine: {engine!r}")
    detect = detect_cycle_brent if engine == "brent" else detect_cycle_hashed
    inventory = functional_graph_cycles(net)
    for code in range(inventory.total_states):
        report = detect(net, decode_state(code, net.n), cap)
        if not report.resolved:
            return False
        if report.period != inventory.period_of_start(code):
            return False
    return True
