#!/usr/bin/env python3
"""Weight-matrix structure: generators, the classifier, and realification.

Different algebraic families of weight matrices force different long-run
behavior, so the package ships a generator per family and an exact
classifier to audit what a given matrix actually is.
"""

import numpy as np

from cvhnn import (
    Network,
    PolarSpec,
    RealMatrixSpec,
    SignKind,
    StructureTag,
    SymmetryKind,
    classify,
    gen_braided_hermitian,
    gen_hermitian,
    gen_polar,
    gen_real_constrained,
    gen_skew_hermitian,
    realify_network,
    stream_rng,
)

rng = stream_rng(7, 0)

print("Hermitian (conjugate-transpose symmetric, non-negative diagonal):")
m = gen_hermitian(4, rng=rng)
print(np.array_str(m, precision=3, suppress_small=True))
print(f"  tags: {sorted(t.name for t in classify(m))}\n")

print("skew-Hermitian (conjugate-transpose antisymmetric):")
m = gen_skew_hermitian(4, rng)
print(f"  tags: {sorted(t.name for t in classify(m))}")
print(f"  M + M*^T == 0: {np.array_equal(m, -m.conj().T)}\n")

# Braided matrices interleave a real matrix with its own transpose on the
# imaginary axis: M = A + i A^T.  They satisfy M^T = i * conj(M) exactly.
a = rng.uniform(-1.0, 1.0, size=(4, 4))
m = gen_braided_hermitian(a)
print("braided Hermitian, M = A + i A^T:")
print(f"  tags: {sorted(t.name for t in classify(m))}")
print(f"  M^T == i * conj(M): {np.array_equal(m.T, 1j * m.conj())}\n")

# Component-wise construction: draw real A and B under independent symmetry
# and sign constraints, then set M = A + iB ...
spec_a = RealMatrixSpec(4, SymmetryKind.SYMMETRIC, SignKind.POSITIVE)
spec_b = RealMatrixSpec(4, SymmetryKind.ANTISYMMETRIC, SignKind.ARBITRARY)
m = gen_real_constrained(spec_a, rng) + 1j * gen_real_constrained(spec_b, rng)
print("A symmetric positive + i * (B antisymmetric):")
print(f"  tags: {sorted(t.name for t in classify(m, tol=1e-12))}\n")

# ... or polar construction: M_ij = G_ij * exp(i P_ij).  Symmetric gains with
# antisymmetric phases also land exactly on the Hermitian family.
m = gen_polar(PolarSpec(4, SymmetryKind.SYMMETRIC, SymmetryKind.ANTISYMMETRIC), rng)
print("polar, G symmetric and P antisymmetric:")
print(f"  tags: {sorted(t.name for t in classify(m, tol=1e-12))}\n")

# Any complex network is equivalent to a real network of twice the size via
# the block matrix W = [[A, -B], [B, A]] acting on stacked (real, imag) parts.
net = Network(gen_skew_hermitian(3, rng))
w, t = realify_network(net)
print(f"realification: n={net.n} complex -> {w.shape[0]}x{w.shape[1]} real block matrix")
print(f"  upper-left block == Re(M):  {np.array_equal(w[:3, :3], net.weights.real)}")
print(f"  upper-right block == -Im(M): {np.array_equal(w[:3, 3:], -net.weights.imag)}")
