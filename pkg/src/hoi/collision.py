"""The three collision problem: decide whether ``f: {0,1,2} -> {0,1}`` is constant.

Both a standard phase oracle and a density-cube oracle are simulated. The
error after one query is the worst-case overlap between the post-query
state and the state reached when ``f`` is constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .densitycube import OMEGA, SQRT3, cube_inner, hermitian_cube

PHI = np.ones(3, dtype=complex) / SQRT3


@dataclass(frozen=True)
class TritBitFunction:
    values: tuple[int, int, int]

    def __post_init__(self):
        if len(self.values) != 3 or any(v not in (0, 1) for v in self.values):
            raise ValueError(f"expected three bits, got {self.values!r}")

    @property
    def all_equal(self) -> bool:
        return len(set(self.values)) == 1

    @property
    def weight(self) -> int:
        return sum(self.values)


def all_functions() -> list[TritBitFunction]:
    return [TritBitFunction(v) for v in product((0, 1), repeat=3)]


@dataclass(frozen=True)
class TaggedDCState:
    psi: np.ndarray
    n: int

    def __post_init__(self):
        psi = np.asarray(self.psi, dtype=complex)
        if psi.shape != (3,) or abs(np.linalg.norm(psi) - 1.0) > 1e-12:
            raise ValueError("psi must be a normalized 3-vector")
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "n", self.n % 3)


def qt_oracle(f: TritBitFunction, psi) -> np.ndarray:
    signs = np.array([(-1) ** b for b in f.values], dtype=complex)
    return signs * np.asarray(psi, dtype=complex)


def qt_overlap(f: TritBitFunction, phi=PHI) -> float:
    return float(abs(np.vdot(phi, qt_oracle(f, phi))) ** 2)


def qt_collision_error() -> float:
    return max(qt_overlap(f) for f in all_functions() if not f.all_equal)


def dc_associate(s: TaggedDCState) -> np.ndarray:
    """Density cube attached to a tagged pure qutrit state."""
    c = s.psi
    k = 1.0 / np.sqrt(6.0)
    diag = [(1 - abs(ci) ** 2) / 2 for ci in c]
    re, im = {}, {}
    for a, b in ((0, 1), (0, 2), (1, 2)):
        z = np.conj(c[a]) * c[b]
        re[(a, b)] = -k * z.real
        im[(a, b)] = -k * z.imag
    return hermitian_cube(diag, re, im, OMEGA ** s.n / (2 * SQRT3))


def dc_pair_inner_closed(phi, n: int, psi, m: int) -> float:
    ov = abs(np.vdot(phi, psi)) ** 2
    return 0.25 * (1 + ov) + 0.5 * np.cos(2 * np.pi * (n - m) / 3)


def dc_pair_inner(phi, n: int, psi, m: int) -> tuple[float, float]:
    """``(tensor contraction, closed form)`` for two associated cubes."""
    a = dc_associate(TaggedDCState(phi, n))
    b = dc_associate(TaggedDCState(psi, m))
    return cube_inner(a, b).real, dc_pair_inner_closed(phi, n, psi, m)


def dc_oracle(f: TritBitFunction, s: TaggedDCState) -> TaggedDCState:
    return TaggedDCState(qt_oracle(f, s.psi), s.n + f.weight)


def dc_collision_errors() -> list[tuple[TritBitFunction, float, float]]:
    """Per non-constant ``f``: tensor-path and closed-form error after one query."""
    start = TaggedDCState(PHI, 0)
    rows = []
    for f in all_functions():
        if f.all_equal:
            continue
        out = dc_oracle(f, start)
        tensor, closed = dc_pair_inner(start.psi, start.n, out.psi, out.n)
        rows.append((f, tensor, closed))
    return rows


def dc_collision_error() -> float:
    return max(tensor for _, tensor, _ in dc_collision_errors())
