"""Quartic quantum theory.

An ``N``-level system is carried by an ``N^2``-dimensional density matrix
whose largest eigenvalue is at most ``1/N``. That set is the convex hull of
the unitary orbit of ``(1/N) I (x) |0><0|``. Effects are every Hermitian
operator whose pairing with all such states lies in ``[0, 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .numerics import (
    ATOL,
    eig_hermitian,
    eigvalsh_desc,
    haar_unitary,
    is_hermitian,
    partial_trace,
    permutation_unitary,
    tensor_product,
)
from .sorkin import QUANTUM, SlitExperiment, nonempty_subsets, sorkin_I

Variant = Literal["superquantum", "quantum"]


def _check_shape(m, N: int) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (N * N, N * N):
        raise ValueError(f"expected a {N * N}x{N * N} matrix for N={N}, got {m.shape}")
    return m


def ket(N: int, i: int) -> np.ndarray:
    v = np.zeros(N, dtype=complex)
    v[i] = 1.0
    return v


def proj(N: int, i: int) -> np.ndarray:
    return np.outer(ket(N, i), ket(N, i))


def initial_state(N: int) -> np.ndarray:
    return tensor_product(np.eye(N) / N, proj(N, 0))


def is_qqt_state(rho, N: int, tol: float = ATOL) -> bool:
    rho = _check_shape(rho, N)
    if not is_hermitian(rho, tol):
        return False
    if abs(np.trace(rho) - 1.0) > tol:
        return False
    w = eigvalsh_desc(rho)
    return bool(w[-1] >= -tol and w[0] <= 1.0 / N + tol)


def effect_bounds(e, N: int) -> tuple[float, float]:
    """Exact ``(min, max)`` of ``Tr(e s)`` over all states.

    Extreme states are rank-``N`` projectors scaled by ``1/N``, so the bounds
    are the means of the ``N`` smallest and ``N`` largest eigenvalues.
    """
    e = _check_shape(e, N)
    if not is_hermitian(e):
        raise ValueError("not Hermitian")
    w = eigvalsh_desc(e)
    return float(w[-N:].sum() / N), float(w[:N].sum() / N)


def is_qqt_effect(e, N: int, tol: float = ATOL) -> bool:
    lo, hi = effect_bounds(e, N)
    return lo >= -tol and hi <= 1.0 + tol


def random_qqt_states(
    N: int, rng: np.random.Generator, size: int, mix: int = 3
) -> np.ndarray:
    """Random states as mixtures of ``mix`` random unitary-orbit points."""
    s0 = initial_state(N)
    u = haar_unitary(N * N, rng, size=size * mix)
    orbit = u @ s0 @ np.conj(np.swapaxes(u, -1, -2))
    weights = rng.dirichlet(np.ones(mix), size=size)
    return np.einsum("bk,bkij->bij", weights, orbit.reshape(size, mix, N * N, N * N))


# -- slit experiments ----------------------------------------------------------


def qqt_slit_experiment(N: int, variant: Variant = "superquantum") -> SlitExperiment:
    """``N``-slit experiment on an ``N``-level system.

    Subset effects sum ``|ij><ij|`` over open slits ``i`` and all ``j``.
    The superquantum variant replaces singleton effects with ``N |ii><ii|``.
    """
    if not 2 <= N <= 6:
        raise ValueError(f"N={N} outside the supported range [2, 6]")
    if variant not in ("superquantum", "quantum"):
        raise ValueError(f"unknown variant {variant!r}")
    eye = np.eye(N)
    effects = {}
    for subset in nonempty_subsets(N):
        effects[subset] = tensor_product(sum(proj(N, i) for i in subset), eye)
        if variant == "superquantum" and len(subset) == 1:
            (i,) = subset
            effects[subset] = N * tensor_product(proj(N, i), proj(N, i))
    faces = [[tensor_product(proj(N, i), eye) / N] for i in range(N)]
    return SlitExperiment(N, tensor_product(eye, eye), faces, effects)


def qqt_witness_state(N: int) -> np.ndarray:
    """``(1/N) sum_i |ii><ii|``: a state at which the superquantum sum is nonzero."""
    if N < 2:
        raise ValueError("N must be at least 2")
    return sum(tensor_product(proj(N, i), proj(N, i)) for i in range(N)) / N


def qqt_interference(N: int, variant: Variant = "superquantum") -> float:
    exp = qqt_slit_experiment(N, variant)
    return sorkin_I(N, exp, qqt_witness_state(N), QUANTUM).value


# -- hyper-decoherence and composites -----------------------------------------------


def qqt_hyperdecohere(rho, N: int) -> np.ndarray:
    """Trace out the second ``N``-level factor."""
    return partial_trace(_check_shape(rho, N), N, N, "second")


@dataclass(frozen=True)
class SwapReport:
    marginal: np.ndarray
    is_valid: bool
    lambda_max: float
    before_valid: bool
    swap_unitary: np.ndarray


def qqt_swap_counterexample(N: int = 2) -> SwapReport:
    """Swap the middle factors of ``A1 A2 B1 B2`` and discard ``B``.

    Before the swap each half is ``(1/N)|0><0| (x) I``; afterwards the A
    half is the pure state ``|00><00|``.
    """
    p0 = proj(N, 0)
    eye = np.eye(N)
    s_ab = tensor_product(tensor_product(tensor_product(p0, eye), p0), eye) / N**2
    u = permutation_unitary((N, N, N, N), (0, 2, 1, 3))
    swapped = u @ s_ab @ u.conj().T
    before = partial_trace(s_ab, N * N, N * N, "second")
    marginal = partial_trace(swapped, N * N, N * N, "second")
    lam = float(eig_hermitian(marginal).eigenvalues[0])
    return SwapReport(
        marginal=marginal,
        is_valid=is_qqt_state(marginal, N),
        lambda_max=lam,
        before_valid=is_qqt_state(before, N),
        swap_unitary=u,
    )


def qqt_parameter_count(
    N: int, rng: np.random.Generator | None = None, samples: int | None = None
) -> int:
    """Numerical rank of the real span of sampled states.

    Samples are unitary-orbit points of the initial state together with
    mixtures of them; at least ``4 N^4`` are drawn.
    """
    if not 2 <= N <= 3:
        raise ValueError(f"N={N} outside the supported range [2, 3]")
    rng = np.random.default_rng(0) if rng is None else rng
    samples = 4 * N**4 if samples is None else max(samples, 4 * N**4)
    n_orbit = samples // 2
    s0 = initial_state(N)
    u = haar_unitary(N * N, rng, size=n_orbit)
    orbit = u @ s0 @ np.conj(np.swapaxes(u, -1, -2))
    mixed = random_qqt_states(N, rng, samples - n_orbit)
    states = np.concatenate([orbit, mixed]).reshape(samples, -1)
    rows = np.concatenate([states.real, states.imag], axis=1)
    return int(np.linalg.matrix_rank(rows, tol=1e-9))
