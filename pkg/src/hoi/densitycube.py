"""Density cubes for a three-level system.

A cube is a ``(3, 3, 3)`` complex array ``rho[i, j, k]``; entry ``rho[i]``
is the i-th displayed matrix and ``rho[i, j, k]`` its ``(j, k)`` entry.
Indices are 0-based here; the displayed 1-based labels 1, 2, 3 map to 0, 1, 2.

Besides the full 27-entry representation, cubes in the five-dimensional
C-span are handled through their coordinates ``(a1, ..., a5)`` (a "cvec").
Hermitian members of that span have the form ``(p1, p2, p3, z, conj(z))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .numerics import ATOL, eigvalsh_desc, is_hermitian, is_unitary, random_density

OMEGA = np.exp(2j * np.pi / 3)
SQRT3 = np.sqrt(3.0)

# Cyclic and anticyclic orderings of three distinct indices.
CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
ANTICYCLIC = ((0, 2, 1), (1, 0, 2), (2, 1, 0))
PAIRS = ((0, 1), (0, 2), (1, 2))


def _third_order_mask() -> np.ndarray:
    mask = np.zeros((3, 3, 3), dtype=bool)
    for idx in permutations(range(3)):
        mask[idx] = True
    return mask


THIRD_ORDER = _third_order_mask()


# -- inner product and Hermiticity -------------------------------------------


def cube_inner(rho, sigma) -> complex:
    """Full contraction ``sum_ijk conj(rho_ijk) sigma_ijk``."""
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    return complex(np.vdot(rho.ravel(), sigma.ravel()))


def hermitian_violations(rho, tol: float = ATOL) -> list[tuple[int, float]]:
    """List ``(condition, magnitude)`` for each failed cube condition.

    Conditions, numbered 1 to 4:

    1. entries with exactly two equal indices are real and equal across all
       orderings of those indices;
    2. the three cyclic third-order entries agree and are the complex
       conjugates of the three anticyclic ones;
    3. the diagonal sums to one;
    4. diagonal entries are real and non-negative.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3, 3):
        raise ValueError(f"expected a (3, 3, 3) cube, got shape {rho.shape}")
    out: list[tuple[int, float]] = []

    worst = 0.0
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            vals = [rho[i, i, j], rho[i, j, i], rho[j, i, i]]
            worst = max(worst, max(abs(v.imag) for v in vals))
            worst = max(worst, max(abs(v - vals[0]) for v in vals))
    if worst > tol:
        out.append((1, float(worst)))

    ref = rho[CYCLIC[0]]
    worst = max(abs(rho[idx] - ref) for idx in CYCLIC)
    worst = max(worst, max(abs(rho[idx] - np.conj(ref)) for idx in ANTICYCLIC))
    if worst > tol:
        out.append((2, float(worst)))

    diag = np.array([rho[i, i, i] for i in range(3)])
    if abs(diag.sum() - 1.0) > tol:
        out.append((3, float(abs(diag.sum() - 1.0))))

    worst = max(float(np.max(np.abs(diag.imag))), float(np.max(-diag.real)))
    if worst > tol:
        out.append((4, worst))
    return out


def is_hermitian_cube(rho, tol: float = ATOL) -> tuple[bool, list[tuple[int, float]]]:
    violations = hermitian_violations(rho, tol)
    return not violations, violations


def hermitian_cube(diag, pair_re, pair_im, third: complex) -> np.ndarray:
    """Assemble a cube satisfying conditions 1 and 2 from its free parameters.

    ``pair_re[(a, b)]`` fills the ``aab`` class and ``pair_im[(a, b)]`` the
    ``abb`` class for ``a < b``; ``third`` is the common cyclic entry.
    """
    rho = np.zeros((3, 3, 3), dtype=complex)
    for i in range(3):
        rho[i, i, i] = diag[i]
    for a, b in PAIRS:
        x = pair_re.get((a, b), 0.0)
        y = pair_im.get((a, b), 0.0)
        rho[a, a, b] = rho[a, b, a] = rho[b, a, a] = x
        rho[b, b, a] = rho[b, a, b] = rho[a, b, b] = y
    for idx in CYCLIC:
        rho[idx] = third
    for idx in ANTICYCLIC:
        rho[idx] = np.conj(third)
    return rho


def random_hermitian_cube(rng: np.random.Generator, normalized: bool = True) -> np.ndarray:
    diag = rng.random(3)
    if normalized:
        diag /= diag.sum()
    re = {pq: rng.normal() for pq in PAIRS}
    im = {pq: rng.normal() for pq in PAIRS}
    third = complex(rng.normal(), rng.normal())
    return hermitian_cube(diag, re, im, third)


# -- the C-basis -------------------------------------------------------------


def c_basis() -> np.ndarray:
    """The five basis cubes ``C^(1..5)`` stacked to shape ``(5, 3, 3, 3)``."""
    basis = np.zeros((5, 3, 3, 3), dtype=complex)
    for n in range(3):
        basis[n, n, n, n] = 1.0
    for idx in CYCLIC:
        basis[3][idx] = 1.0 / SQRT3
    for idx in ANTICYCLIC:
        basis[4][idx] = 1.0 / SQRT3
    return basis


_C = c_basis()


def cvec_to_cube(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.shape != (5,):
        raise ValueError(f"expected 5 coordinates, got shape {v.shape}")
    return np.tensordot(v, _C, axes=1)


def cube_to_cvec(rho, tol: float = ATOL) -> np.ndarray:
    """Coordinates of a cube in the C-span; raises if the cube lies outside it."""
    rho = np.asarray(rho, dtype=complex)
    v = np.array([np.vdot(_C[n].ravel(), rho.ravel()) for n in range(5)])
    residual = np.max(np.abs(rho - cvec_to_cube(v)))
    if residual > tol:
        raise ValueError(f"not in C-span (residual {residual:.3g})")
    return v


def is_hermitian_cvec(v, tol: float = ATOL) -> bool:
    v = np.asarray(v, dtype=complex)
    return bool(np.max(np.abs(v[:3].imag)) <= tol and abs(v[4] - np.conj(v[3])) <= tol)


@dataclass(frozen=True)
class CanonicalCubes:
    rho_cubes: tuple[np.ndarray, ...]  # rho^(1..3) as displayed cubes
    q: tuple[np.ndarray, ...]  # D0 in C-coordinates
    rho: tuple[np.ndarray, ...]  # D in C-coordinates


def _displayed_cube(j: int) -> np.ndarray:
    # j in {1, 2, 3}; phase w = omega^(j-1)
    w = OMEGA ** (j - 1)
    e = 1.0 / (2 * SQRT3)
    d = [(1 - (j == m)) / 2 for m in (1, 2, 3)]
    m1 = [[d[0], 0, 0], [0, 0, w * e], [0, np.conj(w) * e, 0]]
    m2 = [[0, 0, np.conj(w) * e], [0, d[1], 0], [w * e, 0, 0]]
    m3 = [[0, w * e, 0], [np.conj(w) * e, 0, 0], [0, 0, d[2]]]
    return np.array([m1, m2, m3], dtype=complex)


def canonical_cubes() -> CanonicalCubes:
    w, wc = OMEGA, np.conj(OMEGA)
    q = tuple(np.eye(5, dtype=complex)[n] for n in range(3))
    rho = (
        0.5 * np.array([0, 1, 1, 1, 1], dtype=complex),
        0.5 * np.array([1, 0, 1, w, wc], dtype=complex),
        0.5 * np.array([1, 1, 0, wc, w], dtype=complex),
    )
    return CanonicalCubes(tuple(_displayed_cube(j) for j in (1, 2, 3)), q, rho)


def unit_diagonal_cube() -> np.ndarray:
    return cvec_to_cube([1, 1, 1, 0, 0])


def is_physical_basis(cubes, tol: float = ATOL) -> bool:
    """Pairwise orthonormal under ``cube_inner`` and summing to the unit diagonal."""
    cubes = [np.asarray(c, dtype=complex) for c in cubes]
    if any(c.shape == (5,) for c in cubes):
        cubes = [cvec_to_cube(c) if c.shape == (5,) else c for c in cubes]
    for i, a in enumerate(cubes):
        for j, b in enumerate(cubes):
            if abs(cube_inner(a, b) - (i == j)) > tol:
                return False
    return bool(np.max(np.abs(sum(cubes) - unit_diagonal_cube())) <= tol)


# -- transformations on the C-span -------------------------------------------


def constant_T() -> np.ndarray:
    w, wc = OMEGA, np.conj(OMEGA)
    return 0.5 * np.array(
        [
            [0, 1, 1, 1, 1],
            [1, 0, 1, wc, w],
            [1, 1, 0, w, wc],
            [1, w, wc, 1, 0],
            [1, wc, w, 0, 1],
        ],
        dtype=complex,
    )


def constant_Tprime() -> np.ndarray:
    w, wc = OMEGA, np.conj(OMEGA)
    r = SQRT3
    return 0.5 * np.array(
        [
            [0, 1, 1, (1 + r) / 2, (-1 + r) / 2],
            [1, 0, 1, (wc + r * w) / 2, (-w + r * wc) / 2],
            [1, 1, 0, (w + r * wc) / 2, (-wc + r * w) / 2],
            [1, w, wc, 0.5, r / 2],
            [1, wc, w, r / 2, -0.5],
        ],
        dtype=complex,
    )


def apply_cvec_transform(m, v) -> np.ndarray:
    return np.asarray(m, dtype=complex) @ np.asarray(v, dtype=complex)


@dataclass
class TransformReport:
    unitary: bool
    maps_physical_basis: bool
    preserves_hermiticity: bool
    hermiticity_failures: list[int] = field(default_factory=list)

    @property
    def passes_axioms(self) -> bool:
        # Linearity and subspace invariance hold for any 5x5 matrix acting on
        # C-coordinates, so only the remaining two axioms need checking.
        return self.unitary and self.maps_physical_basis

    @property
    def ok(self) -> bool:
        return self.passes_axioms and self.preserves_hermiticity


def validate_transformation(m, samples, tol: float = ATOL) -> TransformReport:
    """Check a C-span transformation against unitarity, the D0 image and samples.

    ``hermiticity_failures`` holds indices into ``samples`` whose image is
    not of the form ``(r1, r2, r3, w, conj(w))`` with real ``r``.
    """
    m = np.asarray(m, dtype=complex)
    q = canonical_cubes().q
    image = [apply_cvec_transform(m, qi) for qi in q]
    failures = [
        k
        for k, s in enumerate(samples)
        if not is_hermitian_cvec(apply_cvec_transform(m, s), tol)
    ]
    return TransformReport(
        unitary=is_unitary(m, tol),
        maps_physical_basis=is_physical_basis(image, tol),
        preserves_hermiticity=not failures,
        hermiticity_failures=failures,
    )


# -- embedding of qutrit states and hyper-decoherence --------------------------

_EMBED = np.sqrt(2.0 / 3.0)


def _check_density(rho, tol: float) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3):
        raise ValueError("not a quantum state: expected a 3x3 matrix")
    if not is_hermitian(rho, tol):
        raise ValueError("not a quantum state: not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValueError("not a quantum state: trace is not 1")
    if eigvalsh_desc(0.5 * (rho + rho.conj().T))[-1] < -tol:
        raise ValueError("not a quantum state: negative eigenvalue")
    return rho


def embed_matrix(h) -> np.ndarray:
    """Linear embedding of any Hermitian 3x3 matrix; no state checks."""
    h = np.asarray(h, dtype=complex)
    diag = [h[i, i].real for i in range(3)]
    re = {(a, b): _EMBED * h[a, b].real for a, b in PAIRS}
    im = {(a, b): _EMBED * h[a, b].imag for a, b in PAIRS}
    return hermitian_cube(diag, re, im, 0.0)


def embed_quantum(rho, tol: float = ATOL) -> np.ndarray:
    """Embed a qutrit density matrix as a cube with no third-order part."""
    return embed_matrix(_check_density(rho, tol))


def split_orders(rho) -> tuple[np.ndarray, np.ndarray]:
    """Split into the all-distinct-index part and the remainder."""
    rho = np.asarray(rho, dtype=complex)
    third = np.where(THIRD_ORDER, rho, 0)
    return third, rho - third


def hyperdecohere(rho) -> np.ndarray:
    """Drop third-order terms and invert the embedding on what is left."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        out[i, i] = rho[i, i, i]
    scale = 1.0 / _EMBED
    for a, b in PAIRS:
        out[a, b] = scale * (rho[a, a, b] + 1j * rho[a, b, b])
        out[b, a] = np.conj(out[a, b])
    return out


def qt_inner(rho, sigma) -> complex:
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    return complex(np.vdot(rho.ravel(), sigma.ravel()))


# -- relative-positivity counterexample ----------------------------------------


@dataclass(frozen=True)
class CounterexampleCV:
    c: np.ndarray
    v: np.ndarray
    inner: float


def counterexample_cv() -> CounterexampleCV:
    c = 0.5 * np.array([1, 1, 0, 1, 1], dtype=complex)
    r = np.sqrt(595.0)
    v = np.array([10, 10, 236, -(65 + 1j * r), -(65 - 1j * r)], dtype=complex) / 256
    inner = cube_inner(cvec_to_cube(c), cvec_to_cube(v))
    return CounterexampleCV(c, v, inner.real)


def min_inner_against_quantum(cube, rng: np.random.Generator, samples: int = 1000) -> float:
    """Smallest ``(cube, E[sigma])`` over random qutrit densities ``sigma``."""
    return min(
        cube_inner(cube, embed_matrix(random_density(3, rng))).real for _ in range(samples)
    )


# -- parameter counting -----------------------------------------------------


def dc_parameter_count(
    rng: np.random.Generator | None = None, samples: int = 200
) -> tuple[int, int]:
    """Real dimension of the Hermitian-cube space and of its normalized slice.

    The first number is the numerical rank of ``samples`` random Hermitian
    cubes viewed as real vectors; the second removes the trace constraint.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    rows = []
    for _ in range(samples):
        c = random_hermitian_cube(rng, normalized=False).ravel()
        rows.append(np.concatenate([c.real, c.imag]))
    rank = int(np.linalg.matrix_rank(np.array(rows), tol=1e-9))
    return rank, rank - 1
