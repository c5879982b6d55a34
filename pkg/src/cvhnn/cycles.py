"""Cycle detection for parallel-mode orbits, and energy-descent auditing.

The parallel update is a deterministic self-map on a finite set (4^N
states), so every orbit is eventually periodic: a transient of length mu
followed by a cycle of minimal period lambda.  Two detectors recover
(lambda, mu):

- hashed: stores every visited state; resolves at the first revisit, after
  exactly mu + lambda steps.  Memory O(mu + lambda), transient for free.
- brent: teleporting-tortoise scheme, O(1) memory, more steps.  The default
  engine for bulk runs.

Both report the same (period, transient) whenever both resolve; an orbit
that does not resolve within the step budget is reported Unresolved with
steps_executed = cap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import Network, energy_parallel, energy_serial, pack_state
from .dynamics import Trajectory, step_parallel

__all__ = [
    "DESCENT_TOL",
    "CycleReport",
    "EnergyMode",
    "check_energy_monotone",
    "detect_cycle_brent",
    "detect_cycle_hashed",
]

#: strict-descent slack for energy audits
DESCENT_TOL = 1e-12


@dataclass(frozen=True)
class CycleReport:
    """Outcome of one cycle hunt.

    period and transient are both set (resolved) or both None (unresolved
    within the budget).  steps_executed counts parallel-step applications;
    an unresolved report always has steps_executed equal to the cap.
    """

    period: int | None
    transient: int | None
    steps_executed: int

    @property
    def resolved(self) -> bool:
        return self.period is not None

    def __str__(self) -> str:
        if not self.resolved:
            return f"unresolved after {self.steps_executed} steps"
        return (f"period {self.period}, transient {self.transient} "
                f"({self.steps_executed} steps executed)")


def detect_cycle_hashed(net: Network, s0: np.ndarray, cap: int = 100_000) -> CycleReport:
    """Visited-state map detector.

    The first revisited state is the cycle entry point, so the revisit
    times give transient and minimal period directly.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    s = np.asarray(s0, dtype=np.complex128)
    seen = {pack_state(s): 0}
    for t in range(1, cap + 1):
        s = step_parallel(net, s)
        key = pack_state(s)
        first = seen.get(key)
        if first is not None:
            return CycleReport(period=t - first, transient=first, steps_executed=t)
        seen[key] = t
    return CycleReport(period=None, transient=None, steps_executed=cap)


def detect_cycle_brent(net: Network, s0: np.ndarray, cap: int = 100_000) -> CycleReport:
    """Brent's constant-memory detector.

    cap budgets the period-search phase; once the period is known, the
    transient phase needs at most transient + period further steps, which
    the successful search already bounds.  steps_executed therefore may
    exceed cap on resolved runs and exactly equals cap on unresolved ones.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    s0 = np.asarray(s0, dtype=np.complex128)

    # phase 1: find the minimal period
    power = lam = 1
    tortoise = s0
    tortoise_key = pack_state(tortoise)
    hare = step_parallel(net, s0)
    steps = 1
    while pack_state(hare) != tortoise_key:
        if power == lam:  # teleport: tortoise jumps to the hare
            tortoise = hare
            tortoise_key = pack_state(tortoise)
            power *= 2
            lam = 0
        if steps >= cap:
            return CycleReport(period=None, transient=None, steps_executed=cap)
        hare = step_parallel(net, hare)
        steps += 1
        lam += 1

    # phase 2: find the transient; runners lam apart meet at the cycle entry
    tortoise = s0
    hare = s0
    for _ in range(lam):
        hare = step_parallel(net, hare)
        steps += 1
    mu = 0
    while pack_state(tortoise) != pack_state(hare):
        tortoise = step_parallel(net, tortoise)
        hare = step_parallel(net, hare)
        steps += 2
        mu += 1
    return CycleReport(period=lam, transient=mu, steps_executed=steps)


class EnergyMode(enum.Enum):
    SERIAL_ENERGY = "serial-energy"
    PARALLEL_PAIR_ENERGY = "parallel-pair-energy"


def check_energy_monotone(net: Network, trajectory: Trajectory, mode: EnergyMode) -> list[int]:
    """Indices where the energy-descent discipline fails along a trajectory.

    SERIAL_ENERGY flags every step t whose state changed without the serial
    energy dropping by more than DESCENT_TOL.  PARALLEL_PAIR_ENERGY flags
    every t where the consecutive-pair energy rose by more than DESCENT_TOL.
    An empty list is a clean audit.
    """
    states = trajectory.states
    violations: list[int] = []
    if mode is EnergyMode.SERIAL_ENERGY:
        e = [energy_serial(net, states[t]) for t in range(len(states))]
        for t in range(len(states) - 1):
            if np.array_equal(states[t + 1], states[t]):
                continue
            if e[t + 1] >= e[t] - DESCENT_TOL:
                violations.append(t)
        return violations
    if mode is EnergyMode.PARALLEL_PAIR_ENERGY:
        pair = [energy_parallel(net, states[t + 1], states[t]) for t in range(len(states) - 1)]
        for t in range(1, len(states) - 1):
            if pair[t] > pair[t - 1] + DESCENT_TOL:
                violations.append(t)
        return violations
    raise ValueError(f"unknown energy mode: {mode!r}")
