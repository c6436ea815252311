"""Multi-slit interference: quantum theory stops at second order.

Run with ``python3 demos/sorkin_hierarchy.py``.
"""

from __future__ import annotations

import numpy as np

from hoi.numerics import random_density
from hoi.sorkin import quantum_slit_experiment, sorkin_I, uniform_screen, validate_experiment

rng = np.random.default_rng(0)

# Two slits, detector tuned to the uniform superposition: pure second-order interference.
exp2 = quantum_slit_experiment(2)
print("I_2 on the uniform superposition:", sorkin_I(2, exp2, uniform_screen(2)).value)

# From three slits upward the alternating sum vanishes for every state.
for n in range(3, 7):
    exp = quantum_slit_experiment(n)
    assert validate_experiment(exp) == []
    worst = max(abs(sorkin_I(n, exp, random_density(n, rng)).value) for _ in range(50))
    print(f"max |I_{n}| over 50 random states: {worst:.2e}")

# Breaking a slit effect shows up as a face violation.
broken = exp2.with_effect({0}, np.zeros((2, 2)))
for v in validate_experiment(broken):
    print("violation:", v)
