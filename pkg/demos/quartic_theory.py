"""Quartic quantum theory: qudits carried by N^2-dimensional density matrices.

Run with ``python3 demos/quartic_theory.py``.
"""

from __future__ import annotations

import numpy as np

from hoi import qqt
from hoi.sorkin import validate_experiment

N = 3
p00 = np.zeros((N * N, N * N))
p00[0, 0] = 1

print("maximally mixed is a state:", qqt.is_qqt_state(np.eye(N * N) / N**2, N))
print("|00><00| is a state:", qqt.is_qqt_state(p00, N))
print("N|00><00| is an effect:", qqt.is_qqt_effect(N * p00, N), qqt.effect_bounds(N * p00, N))

for variant in ("superquantum", "quantum"):
    exp = qqt.qqt_slit_experiment(N, variant)
    print(f"{variant}: violations={len(validate_experiment(exp))}, "
          f"I_{N}={qqt.qqt_interference(N, variant):+.3f}")
print("superquantum I_N for N=2..6:", [round(qqt.qqt_interference(n)) for n in range(2, 7)])

rng = np.random.default_rng(2)
s = qqt.random_qqt_states(N, rng, 1)[0]
print("decohered random state:\n", np.round(qqt.qqt_hyperdecohere(s, N), 3))

rep = qqt.qqt_swap_counterexample(2)
print(f"swap: before valid={rep.before_valid}, after lambda_max={rep.lambda_max:.3f}, valid={rep.is_valid}")
print("parameter counts:", qqt.qqt_parameter_count(2), qqt.qqt_parameter_count(3))
