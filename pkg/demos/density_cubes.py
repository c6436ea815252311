"""Density cubes: a three-index generalisation of the qutrit density matrix.

Run with ``python3 demos/density_cubes.py``.
"""

from __future__ import annotations

import numpy as np

from hoi import densitycube as dc

np.set_printoptions(precision=4, suppress=True)
canon = dc.canonical_cubes()

print("C-coordinates of the rotated basis rho_1..rho_3:")
for r in canon.rho:
    print("  ", r)
print("physical basis:", dc.is_physical_basis(canon.rho))

# T rotates the diagonal basis into the rotated one and keeps cubes Hermitian.
T = dc.constant_T()
print("T q_1 == rho_1:", np.allclose(T @ canon.q[0], canon.rho[0]))
print("T report:", dc.validate_transformation(T, list(canon.rho)))

# T' satisfies the same axioms but turns rho_1 into something non-Hermitian.
Tp = dc.constant_Tprime()
image = Tp @ canon.rho[0]
print("T' rho_1 =", image)
print("violated conditions:", [c for c, _ in dc.hermitian_violations(dc.cvec_to_cube(image))])

# Quantum states sit inside the cube space, and hyper-decoherence strips the
# third-order part back off.
rng = np.random.default_rng(1)
rho = np.diag([0.5, 0.3, 0.2]) + 0.05 * np.array([[0, 1, 0], [1, 0, 1j], [0, -1j, 0]])
cube = dc.embed_quantum(rho)
print("D(E(rho)) == rho:", np.allclose(dc.hyperdecohere(cube), rho))
print("D(rho_1) =\n", dc.hyperdecohere(dc.cvec_to_cube(canon.rho[0])).real)

# Two cubes that each look positive against every quantum effect still pair negatively.
cv = dc.counterexample_cv()
c, v = dc.cvec_to_cube(cv.c), dc.cvec_to_cube(cv.v)
print("(c, v) =", cv.inner, "= -55/256 ?", np.isclose(cv.inner, -55 / 256))
print("min against quantum states:", dc.min_inner_against_quantum(c, rng), dc.min_inner_against_quantum(v, rng))
print("real parameters (all, unit trace):", dc.dc_parameter_count(rng))
