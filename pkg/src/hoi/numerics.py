"""Dense complex linear algebra used throughout the package.

Matrices are plain ``numpy`` complex arrays. Composite systems use the
row-major basis ordering ``|ij> -> i * dim_b + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

ATOL = 1e-10
EIG_TOL = 1e-9


def as_matrix(a, *, square: bool = True) -> np.ndarray:
    """Coerce ``a`` to a read-only complex matrix, rejecting non-finite entries."""
    m = np.array(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    m.setflags(write=False)
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(a, -1, -2))


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b``."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(
    m, dim_a: int, dim_b: int, which: Literal["first", "second"] = "second"
) -> np.ndarray:
    """Trace out one factor of a bipartite operator on ``C^dim_a (x) C^dim_b``.

    ``which`` names the factor that is traced out; the marginal on the
    other factor is returned.
    """
    m = np.asarray(m, dtype=complex)
    n = dim_a * dim_b
    if m.shape != (n, n):
        raise ValueError(
            f"incompatible factorization: shape {m.shape} vs {dim_a}x{dim_b}"
        )
    t = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if which == "second":
        return np.einsum("ijkj->ik", t)
    if which == "first":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"which must be 'first' or 'second', got {which!r}")


def swap_factors(m, dim_a: int, dim_b: int) -> np.ndarray:
    """Conjugate a bipartite operator by the swap ``|ij> -> |ji>``."""
    m = np.asarray(m, dtype=complex)
    t = m.reshape(dim_a, dim_b, dim_a, dim_b).transpose(1, 0, 3, 2)
    return t.reshape(dim_a * dim_b, dim_a * dim_b)


def permutation_unitary(dims: tuple[int, ...], perm: tuple[int, ...]) -> np.ndarray:
    """Unitary sending factor ``k`` of ``(x)_k C^dims[k]`` to slot ``perm[k]``."""
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"not a permutation: {perm}")
    total = int(np.prod(dims))
    out_dims = [0] * len(dims)
    for k, p in enumerate(perm):
        out_dims[p] = dims[k]
    u = np.zeros((total, total), dtype=complex)
    for col, idx in enumerate(np.ndindex(*dims)):
        out_idx = [0] * len(dims)
        for k, p in enumerate(perm):
            out_idx[p] = idx[k]
        row = np.ravel_multi_index(out_idx, out_dims)
        u[row, col] = 1.0
    return u


def is_hermitian(h, tol: float = ATOL) -> bool:
    h = np.asarray(h, dtype=complex)
    return bool(np.linalg.norm(h - dagger(h)) <= tol * max(1.0, np.linalg.norm(h)))


def is_unitary(u, tol: float = ATOL) -> bool:
    """True iff ``||U^dag U - I||_F <= tol``."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    return bool(np.linalg.norm(dagger(u) @ u - np.eye(u.shape[0])) <= tol)


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # columns

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues[..., None, :]) @ dagger(v)


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    # Tournament schedule: every pair (p, q) appears in exactly one round and
    # pairs within a round are disjoint, so a round is one block rotation.
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = []
        for k in range(m // 2):
            p, q = players[k], players[m - 1 - k]
            if p < n and q < n:
                pairs.append((min(p, q), max(p, q)))
        rounds.append(pairs)
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def _jacobi(a: np.ndarray, tol: float, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi on a stack of Hermitian matrices of shape ``(b, n, n)``."""
    b, n, _ = a.shape
    a = a.copy()
    v = np.broadcast_to(np.eye(n, dtype=complex), (b, n, n)).copy()
    rounds = _round_robin(n)
    scale = np.maximum(np.linalg.norm(a, axis=(1, 2)), 1e-300)
    eye = np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.linalg.norm(np.where(eye, 0, a), axis=(1, 2))
        if np.all(off <= tol * scale):
            break
        for pairs in rounds:
            p = np.array([pq[0] for pq in pairs])
            q = np.array([pq[1] for pq in pairs])
            apq = a[:, p, q]
            app = a[:, p, p].real
            aqq = a[:, q, q].real
            mag = np.abs(apq)
            active = mag > 1e-300
            phase = np.where(active, apq / np.where(active, mag, 1.0), 1.0)
            with np.errstate(all="ignore"):
                theta = (aqq - app) / (2.0 * mag)
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(1.0 + theta * theta))
            t = np.where(theta == 0, 1.0, t)
            t = np.where(active, t, 0.0)
            c = (1.0 / np.sqrt(1.0 + t * t))[:, :, None]
            s = t[:, :, None] * c
            pc = np.conj(phase)[:, :, None]
            # J = diag(1, e^{-i phi}) [[c, s], [-s, c]] on each (p, q) block;
            # rows by J^dag, then columns by J.
            ap, aq = a[:, p, :], a[:, q, :]
            a[:, p, :] = c * ap - s * np.conj(pc) * aq
            a[:, q, :] = s * ap + c * np.conj(pc) * aq
            ap, aq = a[:, :, p], a[:, :, q]
            cs, ss, ps = np.swapaxes(c, 1, 2), np.swapaxes(s, 1, 2), np.swapaxes(pc, 1, 2)
            a[:, :, p] = cs * ap - ss * ps * aq
            a[:, :, q] = ss * ap + cs * ps * aq
            vp, vq = v[:, :, p], v[:, :, q]
            v[:, :, p] = cs * vp - ss * ps * vq
            v[:, :, q] = ss * vp + cs * ps * vq
    return np.real(np.diagonal(a, axis1=1, axis2=2)).copy(), v


def eig_hermitian(h, tol: float = 1e-10, max_sweeps: int = 60) -> EigenDecomposition:
    """Eigen-decomposition of a Hermitian matrix (or a stack of them).

    Uses cyclic Jacobi rotations with a round-robin pair ordering. Eigenvalues
    come back sorted in descending order, eigenvectors as matching columns.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("matrix has non-finite entries")
    lead = h.shape[:-2]
    n = h.shape[-1]
    flat = h.reshape(-1, n, n)
    skew = np.linalg.norm(flat - dagger(flat), axis=(1, 2))
    if np.any(skew > tol * np.maximum(1.0, np.linalg.norm(flat, axis=(1, 2)))):
        raise ValueError("not Hermitian")
    herm = 0.5 * (flat + dagger(flat))
    w, v = _jacobi(herm, tol=1e-15, max_sweeps=max_sweeps)
    order = np.argsort(-w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    return EigenDecomposition(w.reshape(*lead, n), v.reshape(*lead, n, n))


def eigvalsh_desc(h) -> np.ndarray:
    return eig_hermitian(h).eigenvalues


# -- sampling ---------------------------------------------------------------


def haar_unitary(n: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    shape = (n, n) if size is None else (size, n, n)
    z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def random_pure_state(n: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return psi / np.linalg.norm(psi)


def random_density(n: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Mixture of ``rank`` Haar-random pure states with uniform random weights."""
    rank = n if rank is None else rank
    weights = rng.random(rank)
    weights /= weights.sum()
    rho = np.zeros((n, n), dtype=complex)
    for w in weights:
        psi = random_pure_state(n, rng)
        rho += w * np.outer(psi, psi.conj())
    return rho


def random_hermitian(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * 0.5 * (g + dagger(g))
