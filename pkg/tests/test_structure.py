"""Generators, classification, realification, and draw determinism."""

import numpy as np
import pytest

from cvhnn.core import Network, StructureTag
from cvhnn.dynamics import step_parallel
from cvhnn.structure import (
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

# worked 4x4 example: a fixed real matrix and its two braided compositions
A4 = np.array([
    [-3.0, -2.0, 1.0, 5.0],
    [4.0, 6.0, -1.0, -4.0],
    [8.0, -2.0, 7.0, 10.0],
    [-7.0, 6.0, 2.0, 5.0],
])

BRAIDED_H4 = np.array([
    [-3 - 3j, -2 + 4j, 1 + 8j, 5 - 7j],
    [4 - 2j, 6 + 6j, -1 - 2j, -4 + 6j],
    [8 + 1j, -2 - 1j, 7 + 7j, 10 + 2j],
    [-7 + 5j, 6 - 4j, 2 + 10j, 5 + 5j],
])

BRAIDED_S4 = np.array([
    [-3 + 3j, -2 - 4j, 1 - 8j, 5 + 7j],
    [4 + 2j, 6 - 6j, -1 + 2j, -4 - 6j],
    [8 - 1j, -2 + 1j, 7 - 7j, 10 - 2j],
    [-7 - 5j, 6 + 4j, 2 - 10j, 5 - 5j],
])


def test_symmetric_generation_is_exact():
    rng = stream_rng(201, 0)
    for sign in SignKind:
        m = gen_real_constrained(RealMatrixSpec(7, SymmetryKind.SYMMETRIC, sign), rng)
        assert np.array_equal(m, m.T)  # bitwise, no tolerance
        lo, hi = sign.interval
        assert m.min() >= lo and m.max() <= hi


def test_antisymmetric_generation_is_exact():
    rng = stream_rng(202, 0)
    m = gen_real_constrained(RealMatrixSpec(6, SymmetryKind.ANTISYMMETRIC, SignKind.POSITIVE), rng)
    assert np.array_equal(m, -m.T)
    assert np.all(np.diag(m) == 0.0)
    upper = m[np.triu_indices(6, 1)]
    assert upper.min() >= 0.0 and upper.max() <= 1.0
    lower = m[np.tril_indices(6, -1)]
    assert lower.min() >= -1.0 and lower.max() <= 0.0


def test_arbitrary_generation_covers_whole_matrix():
    rng = stream_rng(203, 0)
    m = gen_real_constrained(RealMatrixSpec(5, SymmetryKind.ARBITRARY, SignKind.NEGATIVE), rng)
    assert m.min() >= -1.0 and m.max() <= 0.0
    assert not np.array_equal(m, m.T)


def test_golden_matrix_pinned():
    """Fixed (seed, stream, spec) must reproduce these exact doubles forever."""
    m = gen_real_constrained(RealMatrixSpec(2, SymmetryKind.ARBITRARY, SignKind.ARBITRARY),
                             stream_rng(42, 0))
    expected = np.array([
        [0.8318160123844875, 0.6170893674407134],
        [0.7587462027445784, -0.6369559831993579],
    ])
    assert np.array_equal(m, expected)


def test_invalid_spec_rejected():
    with pytest.raises(ValueError):
        RealMatrixSpec(0, SymmetryKind.SYMMETRIC, SignKind.POSITIVE)
    with pytest.raises(ValueError):
        PolarSpec(-1, SymmetryKind.SYMMETRIC, SymmetryKind.SYMMETRIC)


def test_compose_weights():
    eye = np.eye(2)
    zero = np.zeros((2, 2))
    assert np.array_equal(compose_weights(eye, zero), eye.astype(complex))
    assert np.array_equal(compose_weights(zero, eye), 1j * eye)
    with pytest.raises(ValueError):
        compose_weights(np.zeros((2, 2)), np.zeros((3, 3)))
    with pytest.raises(ValueError):
        compose_weights(np.zeros((2, 3)), np.zeros((2, 3)))


def test_braided_hermitian_worked_example():
    assert np.array_equal(gen_braided_hermitian(A4), BRAIDED_H4)


def test_braided_skew_hermitian_worked_example():
    assert np.array_equal(gen_braided_skew_hermitian(A4), BRAIDED_S4)


def test_braided_trivial_cases():
    assert np.array_equal(gen_braided_hermitian(np.zeros((3, 3))), np.zeros((3, 3), complex))
    assert np.array_equal(gen_braided_hermitian(np.array([[1.0]])), np.array([[1 + 1j]]))
    assert np.array_equal(gen_braided_skew_hermitian(np.array([[1.0]])), np.array([[1 - 1j]]))
    with pytest.raises(ValueError):
        gen_braided_hermitian(np.zeros((2, 3)))


def test_braided_transpose_identities_hold_exactly():
    """M^T = i*conj(M) for the braided Hermitian family; -i*conj(M) for skew."""
    rng = stream_rng(204, 0)
    for _ in range(1000):
        a = rng.uniform(-1, 1, size=(5, 5))
        m = gen_braided_hermitian(a)
        assert np.array_equal(m.T, 1j * np.conj(m))
        assert StructureTag.BRAIDED_HERMITIAN in classify(m)
        m = gen_braided_skew_hermitian(a)
        assert np.array_equal(m.T, -1j * np.conj(m))
        assert StructureTag.BRAIDED_SKEW_HERMITIAN in classify(m)


def test_gen_hermitian_structure():
    rng = stream_rng(205, 0)
    m = gen_hermitian(8, rng=rng)
    assert np.array_equal(np.conj(m.T), m)
    assert np.all(m.imag.diagonal() == 0.0)
    assert m.real.diagonal().min() >= 0.0
    m = gen_hermitian(8, diag_nonneg=False, rng=rng)
    assert np.array_equal(np.conj(m.T), m)
    assert m.real.diagonal().min() >= -1.0
    m1 = gen_hermitian(1, rng=stream_rng(205, 1))
    assert m1.shape == (1, 1) and m1[0, 0].imag == 0.0


def test_gen_skew_hermitian_structure():
    rng = stream_rng(206, 0)
    m = gen_skew_hermitian(8, rng)
    assert np.array_equal(np.conj(m.T), -m)
    assert np.all(m.real.diagonal() == 0.0)
    assert np.abs(m.real).max() <= 1.0 and np.abs(m.imag).max() <= 1.0
    m1 = gen_skew_hermitian(1, stream_rng(206, 1))
    assert m1[0, 0].real == 0.0 and -1.0 <= m1[0, 0].imag <= 1.0


def test_polar_symmetric_magnitude_antisymmetric_phase_is_hermitian():
    rng = stream_rng(207, 0)
    for _ in range(50):
        m = gen_polar(PolarSpec(6, SymmetryKind.SYMMETRIC, SymmetryKind.ANTISYMMETRIC), rng)
        assert StructureTag.HERMITIAN in classify(m, tol=1e-12)


def test_polar_antisymmetric_pair_is_skew_hermitian():
    rng = stream_rng(208, 0)
    for _ in range(50):
        m = gen_polar(PolarSpec(6, SymmetryKind.ANTISYMMETRIC, SymmetryKind.ANTISYMMETRIC), rng)
        assert StructureTag.SKEW_HERMITIAN in classify(m, tol=1e-12)


def test_polar_zero_magnitude_gives_exact_zero_entries():
    rng = stream_rng(209, 0)
    m = gen_polar(PolarSpec(5, SymmetryKind.ANTISYMMETRIC, SymmetryKind.ARBITRARY), rng)
    assert np.all(np.diag(m) == 0j)  # antisymmetric G zeroes the diagonal


def test_classify_examples():
    n = 3
    zero_tags = classify(np.zeros((n, n), dtype=complex))
    assert zero_tags == {
        StructureTag.HERMITIAN,
        StructureTag.SKEW_HERMITIAN,
        StructureTag.BRAIDED_HERMITIAN,
        StructureTag.BRAIDED_SKEW_HERMITIAN,
        StructureTag.SYMMETRIC_COMPLEX,
        StructureTag.ANTISYMMETRIC_COMPLEX,
    }
    assert classify(np.array([[1j]])) == {StructureTag.SKEW_HERMITIAN, StructureTag.SYMMETRIC_COMPLEX}
    assert StructureTag.BRAIDED_HERMITIAN in classify(BRAIDED_H4)
    assert classify(np.array([[1 + 1j, 2], [9, 1]])) == {StructureTag.UNSTRUCTURED}
    with pytest.raises(ValueError):
        classify(np.zeros((2, 3)))


def test_realify_examples():
    assert np.array_equal(realify(np.array([[1.0 + 0j]])), np.array([[1, 0], [0, 1]]))
    assert np.array_equal(realify(np.array([[1j]])), np.array([[0, -1], [1, 0]]))
    m = gen_skew_hermitian(5, stream_rng(210, 0))
    w = realify(m)
    assert np.array_equal(w.T, -w)
    with pytest.raises(ValueError):
        realify(np.zeros((2, 3)))


def test_realify_blocks():
    m = np.array([[1 + 2j, 3 - 1j], [0 + 1j, -2 + 0j]])
    w = realify(m)
    assert np.array_equal(w[:2, :2], m.real)
    assert np.array_equal(w[2:, 2:], m.real)
    assert np.array_equal(w[:2, 2:], -m.imag)
    assert np.array_equal(w[2:, :2], m.imag)


def test_realified_dynamics_tracks_complex_dynamics():
    """One-step equality of the stacked real update and the complex update."""
    rng = stream_rng(211, 0)
    for _ in range(50):
        n = int(rng.integers(2, 10))
        net = Network(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)),
                      rng.normal(size=n) + 1j * rng.normal(size=n))
        w, t = realify_network(net)
        s = gen_state(n, rng)
        x = np.concatenate([s.real, s.imag])
        s_next = step_parallel(net, s)
        field = np.cumsum(w * x[None, :], axis=1)[:, -1] - t
        x_next = np.where(field >= 0, 1.0, -1.0)
        assert np.array_equal(s_next.real, x_next[:n])
        assert np.array_equal(s_next.imag, x_next[n:])


def test_gen_threshold_modes():
    assert np.array_equal(gen_threshold(5, ThresholdMode.ZERO), np.zeros(5, complex))
    t = gen_threshold(10, ThresholdMode.UNIFORM_SCALED, stream_rng(212, 0))
    assert np.abs(t.real).max() <= 10.0 and np.abs(t.imag).max() <= 10.0
    with pytest.raises(ValueError):
        gen_threshold(5, ThresholdMode.UNIFORM_SCALED)


def test_golden_threshold_pinned():
    t = gen_threshold(3, ThresholdMode.UNIFORM_SCALED, stream_rng(42, 1))
    expected = np.array([
        -0.5711857017388784 + 1.335612135153501j,
        2.5037934763510643 + 0.972486289963646j,
        0.23509376799761927 - 0.1395780059283238j,
    ])
    assert np.array_equal(t, expected)


def test_stream_rng_determinism_and_stream_separation():
    a = stream_rng(5, 3).uniform(size=8)
    b = stream_rng(5, 3).uniform(size=8)
    c = stream_rng(5, 4).uniform(size=8)
    d = stream_rng(6, 3).uniform(size=8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)
    assert np.array_equal(SeededRng(5, 3).generator().uniform(size=8), a)


def test_generation_determinism_end_to_end():
    spec = RealMatrixSpec(9, SymmetryKind.ANTISYMMETRIC, SignKind.ARBITRARY)
    m1 = gen_real_constrained(spec, stream_rng(11, 7))
    m2 = gen_real_constrained(spec, stream_rng(11, 7))
    assert m1.tobytes() == m2.tobytes()


def test_gen_state_is_on_the_lattice():
    rng = stream_rng(213, 0)
    s = gen_state(50, rng)
    assert np.all(np.abs(s.real) == 1.0) and np.all(np.abs(s.imag) == 1.0)
    # both component signs actually vary
    assert len({(v.real, v.imag) for v in s}) > 1
