#!/usr/bin/env python3
"""The value model: quadrant states, the split-sign update, and both energies.

Walks one tiny network through a few updates by hand, printing every local
field, and confirms the two energy functions agree where they must.
"""

import numpy as np

from cvhnn import (
    Network,
    energy_parallel,
    energy_serial,
    local_field,
    split_sign,
    step_parallel,
    step_serial,
)

# Each neuron holds one of four quadrant values.  The update computes the
# complex local field  f_i = sum_j M_ij s_j - T_i  and maps it back onto the
# lattice by taking the sign of the real and imaginary parts independently
# (zero counts as positive).
print("split-sign examples:")
for z in (3.0 + 0.2j, -1.0 + 0.0j, 0.0 - 2.0j, -0.0 + 5.0j):
    print(f"  split_sign({z:+}) = {split_sign(z):+}")

# A two-neuron network: neuron 0 excites neuron 1, neuron 1 rotates neuron 0.
weights = np.array([[0.0 + 0.0j, 1.0j],
                    [1.0 + 0.0j, 0.0j]])
thresholds = np.array([0.25 + 0.0j, -0.5j])
net = Network(weights, thresholds)

state = np.array([1.0 + 1.0j, -1.0 + 1.0j])
print(f"\nstart state: {state}")
for i in range(net.n):
    print(f"  local field of neuron {i}: {local_field(net, state, i):+}")

# Parallel mode updates every neuron from the same snapshot.
after_parallel = step_parallel(net, state)
print(f"parallel step: {after_parallel}")

# Serial mode touches exactly one neuron per step.
after_serial = step_serial(net, state, 0)
print(f"serial step on neuron 0: {after_serial}")

# Two energies watch these dynamics.  The serial energy drives asynchronous
# convergence; the pair energy generalizes it to consecutive parallel states
# and collapses to the serial energy on the diagonal, exactly.
e_s = energy_serial(net, state)
e_pair = energy_parallel(net, state, state)
print(f"\nserial energy:          {e_s}")
print(f"pair energy (s, s):     {e_pair}")
print(f"bit-identical diagonal: {e_s == e_pair}")
print(f"pair energy (s, next):  {energy_parallel(net, state, after_parallel)}")
