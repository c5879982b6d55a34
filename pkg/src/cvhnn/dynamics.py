"""Serial and parallel update dynamics.

Parallel mode recomputes every component from the same previous state:

    S_i(t+1) = split_sign( sum_j M_ij S_j(t) - T_i )

Serial mode updates one component at a time, threading the evolving state
through the sweep.  Both modes are pure functions of their inputs, so
trajectories are bit-reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import Network, _fields_arrays, local_field, split_sign, split_sign_vector

__all__ = [
    "ScanOrder",
    "Trajectory",
    "run_parallel",
    "run_serial_to_fixpoint",
    "run_serial_trajectory",
    "step_parallel",
    "step_serial",
    "sweep_serial",
]


class ScanOrder(enum.Enum):
    """Serial visit schedule for one sweep."""

    CYCLIC = "cyclic"                       # 0, 1, ..., n-1 every sweep
    RANDOM_PER_SWEEP = "random-per-sweep"   # fresh seeded permutation per sweep


@dataclass(frozen=True)
class Trajectory:
    """A (steps+1, n) array of visited states; row 0 is the initial state."""

    states: np.ndarray
    mode: str

    def __post_init__(self):
        if self.states.ndim != 2 or self.states.shape[0] < 1:
            raise ValueError("trajectory needs at least the initial state")

    def __len__(self) -> int:
        return self.states.shape[0]

    def __getitem__(self, t: int) -> np.ndarray:
        return self.states[t]


def step_parallel(net: Network, s: np.ndarray) -> np.ndarray:
    """One synchronous step: all components updated from the same input s."""
    s = np.asarray(s, dtype=np.complex128)
    if s.shape != (net.n,):
        raise ValueError(f"state has shape {s.shape}, expected ({net.n},)")
    return split_sign_vector(_fields_arrays(net.weights, net.thresholds, s))


def step_serial(net: Network, s: np.ndarray, i: int) -> np.ndarray:
    """One asynchronous step: component i replaced, all others unchanged."""
    s = np.asarray(s, dtype=np.complex128)
    if s.shape != (net.n,):
        raise ValueError(f"state has shape {s.shape}, expected ({net.n},)")
    if not 0 <= i < net.n:
        raise IndexError(f"neuron index {i} out of range for n={net.n}")
    out = s.copy()
    out[i] = split_sign(local_field(net, s, i))
    return out


def sweep_serial(net: Network, s: np.ndarray, order) -> tuple[np.ndarray, bool]:
    """Apply step_serial once per neuron in the given visit order.

    The state evolves within the sweep (each step sees its predecessors'
    updates).  Returns the final state and whether any component changed.
    """
    order = np.asarray(order)
    if sorted(order.tolist()) != list(range(net.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    current = np.asarray(s, dtype=np.complex128).copy()
    changed = False
    for i in order.tolist():
        new_i = split_sign(local_field(net, current, i))
        if new_i != current[i]:
            changed = True
            current[i] = new_i
    return current, changed


def _orders(net: Network, policy: ScanOrder, rng: np.random.Generator | None):
    if policy is ScanOrder.CYCLIC:
        base = np.arange(net.n)
        while True:
            yield base
    else:
        if rng is None:
            raise ValueError("random-per-sweep scan order requires an rng")
        while True:
            yield rng.permutation(net.n)


def run_serial_to_fixpoint(
    net: Network,
    s0: np.ndarray,
    order_policy: ScanOrder = ScanOrder.CYCLIC,
    max_sweeps: int = 10_000,
    rng: np.random.Generator | None = None,
) -> tuple[np.ndarray, int, bool]:
    """Sweep until a full pass changes nothing, or the sweep budget runs out.

    A state unchanged by every component's update is stable by definition,
    so "one sweep with zero changes" is the convergence test.  Returns
    (final state, sweeps used, converged flag).
    """
    if max_sweeps < 1:
        raise ValueError("max_sweeps must be >= 1")
    current = np.asarray(s0, dtype=np.complex128).copy()
    gen = _orders(net, order_policy, rng)
    for sweep in range(1, max_sweeps + 1):
        current, changed = sweep_serial(net, current, next(gen))
        if not changed:
            return current, sweep, True
    return current, max_sweeps, False


def run_serial_trajectory(
    net: Network,
    s0: np.ndarray,
    order_policy: ScanOrder = ScanOrder.CYCLIC,
    max_sweeps: int = 100,
    rng: np.random.Generator | None = None,
) -> Trajectory:
    """Per-step serial trajectory (one row per single-neuron update).

    Stops after the first sweep that changes nothing, or after max_sweeps.
    Unchanged steps still append a row, so consecutive rows are always one
    step_serial application apart.
    """
    current = np.asarray(s0, dtype=np.complex128).copy()
    rows = [current.copy()]
    gen = _orders(net, order_policy, rng)
    for _ in range(max_sweeps):
        changed = False
        for i in next(gen).tolist():
            new_i = split_sign(local_field(net, current, i))
            if new_i != current[i]:
                changed = True
                current[i] = new_i
            rows.append(current.copy())
        if not changed:
            break
    return Trajectory(states=np.vstack(rows), mode="serial")


def run_parallel(net: Network, s0: np.ndarray, max_steps: int) -> Trajectory:
    """Iterate step_parallel for max_steps steps, recording every state.

    Plain bounded iteration; cycle-aware early termination lives in the
    detectors, which drive step_parallel directly.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    s = np.asarray(s0, dtype=np.complex128)
    rows = np.empty((max_steps + 1, net.n), dtype=np.complex128)
    rows[0] = s
    for t in range(1, max_steps + 1):
        s = step_parallel(net, s)
        rows[t] = s
    return Trajectory(states=rows, mode="parallel")
