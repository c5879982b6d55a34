"""Value model for quadrant-state complex Hopfield networks.

Neuron states live on the four quadrant points {+1+i, +1-i, -1+i, -1-i}.
A network is a complex weight matrix M plus a complex threshold vector T;
the local field of neuron i in state S is sum_j M[i,j]*S[j] - T[i].

All sums here (local fields, energy quadratic forms) accumulate in
ascending index order with a single accumulator, so results are
bit-reproducible.  numpy's ``cumsum`` is a strict sequential accumulation,
which makes the vectorized kernels below bitwise identical to a plain
left-to-right loop; tests pin that equivalence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "QUAD_STATES",
    "Network",
    "StructureTag",
    "as_state_vector",
    "energy_parallel",
    "energy_serial",
    "is_quad_state",
    "local_field",
    "local_fields",
    "pack_state",
    "sign_real",
    "split_sign",
    "split_sign_vector",
]

#: The four admissible neuron states.
QUAD_STATES = (1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j)


class StructureTag(enum.Enum):
    """Structural classes a weight matrix may belong to (not exclusive)."""

    HERMITIAN = "hermitian"
    SKEW_HERMITIAN = "skew-hermitian"
    BRAIDED_HERMITIAN = "braided-hermitian"
    BRAIDED_SKEW_HERMITIAN = "braided-skew-hermitian"
    SYMMETRIC_COMPLEX = "symmetric-complex"
    ANTISYMMETRIC_COMPLEX = "antisymmetric-complex"
    UNSTRUCTURED = "unstructured"


def sign_real(x: float) -> int:
    """Real sign with the tie sent up: +1 for x >= 0, -1 for x < 0.

    Comparisons are exact on the raw double; no epsilon is applied.
    Raises ValueError for non-finite input.
    """
    x = float(x)
    if not np.isfinite(x):
        raise ValueError(f"sign_real requires a finite value, got {x!r}")
    return 1 if x >= 0 else -1


def split_sign(z: complex) -> complex:
    """Split-sign activation: sign_real applied to Re and Im independently.

    Maps any finite complex number onto one of the four quadrant states.
    """
    z = complex(z)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError(f"split_sign requires a finite value, got {z!r}")
    return complex(sign_real(z.real), sign_real(z.imag))


def split_sign_vector(z: np.ndarray) -> np.ndarray:
    """Vectorized split sign.  Rejects non-finite fields (no saturation rule)."""
    z = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(z)):
        raise ValueError("split_sign_vector requires finite values")
    re = np.where(z.real >= 0, 1.0, -1.0)
    im = np.where(z.imag >= 0, 1.0, -1.0)
    return re + 1j * im


def is_quad_state(z: complex) -> bool:
    """True iff z is exactly one of the four quadrant states."""
    z = complex(z)
    return abs(z.real) == 1.0 and abs(z.imag) == 1.0


def as_state_vector(values) -> np.ndarray:
    """Validate and convert to a complex128 state vector.

    Every component must be exactly one of the four quadrant states and the
    vector must be non-empty.
    """
    s = np.asarray(values, dtype=np.complex128)
    if s.ndim != 1 or s.size == 0:
        raise ValueError("state vector must be a non-empty 1-d array")
    if not (np.all(np.abs(s.real) == 1.0) and np.all(np.abs(s.imag) == 1.0)):
        raise ValueError("state components must be in {+1+i, +1-i, -1+i, -1-i}")
    return s


def pack_state(s: np.ndarray) -> bytes:
    """Canonical 2-bit packing of a state vector, little-endian bit order.

    Neuron j contributes bits (2j, 2j+1): bit 2j set iff Re < 0, bit 2j+1
    set iff Im < 0.  Exact and injective, so packed bytes are usable as
    hash keys for visited-state maps.
    """
    bits = np.empty(2 * len(s), dtype=np.uint8)
    bits[0::2] = s.real < 0
    bits[1::2] = s.imag < 0
    return np.packbits(bits, bitorder="little").tobytes()


@dataclass(frozen=True, eq=False)
class Network:
    """A complex-valued Hopfield network: weights M (n x n) and thresholds T (n).

    Immutable; arrays are copied and marked read-only on construction.
    All entries must be finite.
    """

    weights: np.ndarray
    thresholds: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.complex128, copy=True)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] == 0:
            raise ValueError(f"weights must be a non-empty square matrix, got shape {w.shape}")
        n = w.shape[0]
        if self.thresholds is None:
            t = np.zeros(n, dtype=np.complex128)
        else:
            t = np.array(self.thresholds, dtype=np.complex128, copy=True)
        if t.shape != (n,):
            raise ValueError(f"thresholds must have length {n}, got shape {t.shape}")
        if not (np.all(np.isfinite(w)) and np.all(np.isfinite(t))):
            raise ValueError("network entries must all be finite")
        w.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "thresholds", t)

    @property
    def n(self) -> int:
        return self.weights.shape[0]


def _ordered_sum(values: np.ndarray) -> complex:
    # strict ascending-index accumulation; cumsum is sequential (pinned by test)
    return complex(np.cumsum(values)[-1]) if len(values) else 0j


def _fields_arrays(weights: np.ndarray, thresholds: np.ndarray, s: np.ndarray) -> np.ndarray:
    # all local fields at once; row i reduces M[i,:]*s in ascending j order
    return np.cumsum(weights * s, axis=1)[:, -1] - thresholds


def _fields_batch(weights: np.ndarray, thresholds: np.ndarray, states: np.ndarray) -> np.ndarray:
    # states: (m, n) batch; result (m, n); same per-element add order as above
    prod = states[:, None, :] * weights[None, :, :]
    return np.cumsum(prod, axis=2)[:, :, -1] - thresholds


def _check_state(net: Network, s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=np.complex128)
    if s.shape != (net.n,):
        raise ValueError(f"state has shape {s.shape}, expected ({net.n},)")
    return s


def local_fields(net: Network, s: np.ndarray) -> np.ndarray:
    """All N local fields sum_j M[i,j]*s[j] - T[i] for the given state."""
    return _fields_arrays(net.weights, net.thresholds, _check_state(net, s))


def local_field(net: Network, s: np.ndarray, i: int) -> complex:
    """Local field of neuron i: sum_j M[i,j]*s[j] - T[i], ascending-j order.

    Neuron indices are 0-based.
    """
    s = _check_state(net, s)
    if not 0 <= i < net.n:
        raise IndexError(f"neuron index {i} out of range for n={net.n}")
    return _ordered_sum(net.weights[i] * s) - complex(net.thresholds[i])


def energy_serial(net: Network, s: np.ndarray) -> float:
    """Serial-mode energy  E_S(S) = -Re(S* M S - 2 S* T).

    Bounded on the finite state set; strictly decreases under serial updates
    that change the state when M is Hermitian with non-negative diagonal.
    """
    s = _check_state(net, s)
    ms = _fields_arrays(net.weights, np.zeros(net.n, dtype=np.complex128), s)
    quad = _ordered_sum(np.conj(s) * ms)
    lin = _ordered_sum(np.conj(s) * net.thresholds)
    return -(quad - 2.0 * lin).real


def energy_parallel(net: Network, s1: np.ndarray, s2: np.ndarray) -> float:
    """Parallel-mode pair energy  E_P(S1, S2) = -Re(S1* M S2 - (S1+S2)* T).

    Coincides exactly with energy_serial when S1 == S2 (same summation
    order throughout).
    """
    s1 = _check_state(net, s1)
    s2 = _check_state(net, s2)
    ms2 = _fields_arrays(net.weights, np.zeros(net.n, dtype=np.complex128), s2)
    quad = _ordered_sum(np.conj(s1) * ms2)
    lin = _ordered_sum(np.conj(s1 + s2) * net.thresholds)
    return -(quad - lin).real
