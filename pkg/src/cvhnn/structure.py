"""Structured weight-matrix and threshold generators, classification, realification.

Families covered: Hermitian (M* = M), skew-Hermitian (M* = -M), braided
Hermitian (M = A + A^T i), braided skew-Hermitian (M = A - A^T i), the
rectangular-form grid M = A + Bi with independent symmetry/sign constraints
on A and B, and the polar-form grid M_ij = G_ij e^{i P_ij}.

Every generator is a pure function of (spec, rng).  Randomness comes from a
counter-based generator keyed by (seed, stream), so instance k of a
Monte-Carlo run can use stream k and the result set is identical whether
instances run sequentially or in parallel.

Mirrored entries are produced by transposition and negation only, so
symmetry relations hold exactly (bitwise), and `classify` defaults to
tolerance 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import Network, StructureTag

__all__ = [
    "PolarSpec",
    "RealMatrixSpec",
    "SeededRng",
    "SignKind",
    "SymmetryKind",
    "ThresholdMode",
    "classify",
    "compose_weights",
    "gen_braided_hermitian",
    "gen_braided_skew_hermitian",
    "gen_hermitian",
    "gen_polar",
    "gen_real_constrained",
    "gen_skew_hermitian",
    "gen_state",
    "gen_threshold",
    "realify",
    "realify_network",
    "stream_rng",
]

_MASK64 = (1 << 64) - 1


class SymmetryKind(enum.Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    ARBITRARY = "arbitrary"


class SignKind(enum.Enum):
    """Sign constraint on generated real entries: the uniform draw interval."""

    POSITIVE = "positive"      # [0, 1]
    NEGATIVE = "negative"      # [-1, 0]
    ARBITRARY = "arbitrary"    # [-1, 1]

    @property
    def interval(self) -> tuple[float, float]:
        return {"positive": (0.0, 1.0),
                "negative": (-1.0, 0.0),
                "arbitrary": (-1.0, 1.0)}[self.value]


class ThresholdMode(enum.Enum):
    ZERO = "zero"
    #: real and imaginary parts each uniform on [-n, n]
    UNIFORM_SCALED = "uniform-scaled"


@dataclass(frozen=True)
class RealMatrixSpec:
    """Recipe for one real constrained matrix (the A or B factor)."""

    n: int
    symmetry: SymmetryKind
    sign: SignKind

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"matrix size must be >= 1, got {self.n}")


@dataclass(frozen=True)
class PolarSpec:
    """Recipe for a polar-form matrix M_ij = G_ij * exp(i P_ij)."""

    n: int
    magnitude_symmetry: SymmetryKind
    phase_symmetry: SymmetryKind

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"matrix size must be >= 1, got {self.n}")


def stream_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream).

    Distinct streams are statistically independent, so Monte-Carlo instance
    k can use stream k and produce the same draws regardless of execution
    order or parallelism.  Identical (seed, stream) yields an identical
    draw sequence on every platform.
    """
    key = ((seed & _MASK64) << 64) | (stream & _MASK64)
    return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class SeededRng:
    """Value form of an rng handle: a (seed, stream) pair."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        return stream_rng(self.seed, self.stream)


def _shape_real(u: np.ndarray, symmetry: SymmetryKind) -> np.ndarray:
    """Impose a symmetry pattern on a freshly drawn square block.

    Mirroring uses transposition (and negation for the antisymmetric case)
    so the symmetry relation holds bitwise, not just within tolerance.
    """
    if symmetry is SymmetryKind.SYMMETRIC:
        upper = np.triu(u)  # diagonal stays sign-constrained
        return upper + np.triu(u, 1).T
    if symmetry is SymmetryKind.ANTISYMMETRIC:
        upper = np.triu(u, 1)  # zero diagonal forced by A^T = -A
        return upper - upper.T
    return u


def gen_real_constrained(spec: RealMatrixSpec, rng: np.random.Generator) -> np.ndarray:
    """Real n x n matrix satisfying the given symmetry and sign constraints.

    The sign interval applies to the upper triangle (including the diagonal
    for symmetric matrices); mirrored entries follow from the symmetry.
    Arbitrary symmetry applies the interval to all n^2 entries.
    """
    lo, hi = spec.sign.interval
    u = rng.uniform(lo, hi, size=(spec.n, spec.n))
    return _shape_real(u, spec.symmetry)


def compose_weights(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """M = A + B*i from two same-shape square real matrices."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a + 1j * b


def gen_braided_hermitian(a: np.ndarray) -> np.ndarray:
    """M = A + A^T i.  Satisfies M^T = i * conj(M) exactly."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return compose_weights(a, a.T)


def gen_braided_skew_hermitian(a: np.ndarray) -> np.ndarray:
    """M = A - A^T i.  Satisfies M^T = -i * conj(M) exactly."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return compose_weights(a, -a.T)


def gen_hermitian(
    n: int,
    sign_re: SignKind = SignKind.ARBITRARY,
    sign_im: SignKind = SignKind.ARBITRARY,
    diag_nonneg: bool = True,
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """Random Hermitian matrix: symmetric real part, antisymmetric imaginary part.

    The diagonal is real by construction; it is redrawn from [0, 1] when
    diag_nonneg (the serial-convergence hypothesis) and from [-1, 1]
    otherwise, independent of sign_re.
    """
    if rng is None:
        raise ValueError("an rng is required")
    a = gen_real_constrained(RealMatrixSpec(n, SymmetryKind.SYMMETRIC, sign_re), rng)
    lo = 0.0 if diag_nonneg else -1.0
    np.fill_diagonal(a, rng.uniform(lo, 1.0, size=n))
    b = gen_real_constrained(RealMatrixSpec(n, SymmetryKind.ANTISYMMETRIC, sign_im), rng)
    return compose_weights(a, b)


def gen_skew_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random skew-Hermitian matrix, components uniform on [-1, 1].

    Real part antisymmetric, imaginary part symmetric; the diagonal is pure
    imaginary with parts drawn from [-1, 1] like every other component.
    """
    a = gen_real_constrained(RealMatrixSpec(n, SymmetryKind.ANTISYMMETRIC, SignKind.ARBITRARY), rng)
    b = gen_real_constrained(RealMatrixSpec(n, SymmetryKind.SYMMETRIC, SignKind.ARBITRARY), rng)
    return compose_weights(a, b)


def gen_polar(spec: PolarSpec, rng: np.random.Generator) -> np.ndarray:
    """Polar-form matrix M_ij = G_ij * (cos P_ij + i sin P_ij).

    Magnitudes G are drawn on [0, 1] and phases P on [-pi, pi], each shaped
    by its own symmetry kind.  An antisymmetric G carries negative "magnitudes"
    below the diagonal and a zero diagonal; the construction keeps them as-is.
    """
    g = _shape_real(rng.uniform(0.0, 1.0, size=(spec.n, spec.n)), spec.magnitude_symmetry)
    p = _shape_real(rng.uniform(-np.pi, np.pi, size=(spec.n, spec.n)), spec.phase_symmetry)
    return g * (np.cos(p) + 1j * np.sin(p))


def gen_threshold(n: int, mode: ThresholdMode, rng: np.random.Generator | None = None) -> np.ndarray:
    """Threshold vector: all zeros, or components uniform on [-n, n].

    UNIFORM_SCALED draws the real parts (length-n vector) first, then the
    imaginary parts; the interval scales with the network size.
    """
    if mode is ThresholdMode.ZERO:
        return np.zeros(n, dtype=np.complex128)
    if rng is None:
        raise ValueError("an rng is required for uniform-scaled thresholds")
    bound = float(n)
    re = rng.uniform(-bound, bound, size=n)
    im = rng.uniform(-bound, bound, size=n)
    return re + 1j * im


def gen_state(n: int, rng: np.random.Generator) -> np.ndarray:
    """State vector uniform over the 4^n quadrant-state combinations.

    Two independent fair sign bits per neuron: real-part bits drawn first,
    then imaginary-part bits.
    """
    re = 1.0 - 2.0 * rng.integers(0, 2, size=n)
    im = 1.0 - 2.0 * rng.integers(0, 2, size=n)
    return re + 1j * im


def classify(m: np.ndarray, tol: float = 0.0) -> set[StructureTag]:
    """Structural tags of a square complex matrix.

    Comparisons are exact by default (tol=0), which the generators warrant
    because mirrored entries are produced by transposition, not recomputation.
    Pass tol > 0 for matrices built from rounded trigonometry (polar form).
    A matrix may carry several tags; the zero matrix carries all six.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")

    def close(x: np.ndarray, y: np.ndarray) -> bool:
        if tol == 0.0:
            return bool(np.all(x == y))
        return bool(np.all(np.abs(x - y) <= tol))

    mh = np.conj(m.T)
    tags = set()
    if close(mh, m):
        tags.add(StructureTag.HERMITIAN)
    if close(mh, -m):
        tags.add(StructureTag.SKEW_HERMITIAN)
    if close(m.imag, m.real.T):
        tags.add(StructureTag.BRAIDED_HERMITIAN)
    if close(m.imag, -m.real.T):
        tags.add(StructureTag.BRAIDED_SKEW_HERMITIAN)
    if close(m.T, m):
        tags.add(StructureTag.SYMMETRIC_COMPLEX)
    if close(m.T, -m):
        tags.add(StructureTag.ANTISYMMETRIC_COMPLEX)
    if not tags:
        tags.add(StructureTag.UNSTRUCTURED)
    return tags


def realify(m: np.ndarray) -> np.ndarray:
    """Real 2n x 2n block matrix [[A, -B], [B, A]] for M = A + Bi.

    The parallel dynamics of the complex network with weights M coincide,
    component for component, with the real sign dynamics of this block
    matrix acting on the stacked vector [Re(S); Im(S)].  For skew-Hermitian
    M the result is antisymmetric.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    a, b = m.real, m.imag
    return np.block([[a, -b], [b, a]])


def realify_network(net: Network) -> tuple[np.ndarray, np.ndarray]:
    """Realified weights plus the stacked threshold vector [Re(T); Im(T)]."""
    return realify(net.weights), np.concatenate([net.thresholds.real, net.thresholds.imag])
