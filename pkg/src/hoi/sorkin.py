"""Slit experiments and the alternating-sum interference hierarchy.

A theory is described only by how effects pair with states, so the same
machinery evaluates quantum theory and the quartic extension. Effects and
states are opaque handles as far as this module is concerned.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

import numpy as np

from .numerics import ATOL, eigvalsh_desc, is_hermitian

MAX_SLITS = 12


@dataclass(frozen=True)
class TheoryPairing:
    pair: Callable[[Any, Any], float]
    is_state: Callable[[Any], bool] | None = None


def trace_pairing(effect, state) -> float:
    """``Tr(e s)`` for Hermitian matrix effects and states."""
    return float(np.einsum("ij,ji->", np.asarray(effect), np.asarray(state)).real)


QUANTUM = TheoryPairing(trace_pairing)


def nonempty_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(1, n + 1) for c in combinations(range(n), k)]


@dataclass
class SlitExperiment:
    """An ``n``-slit experiment: screen effect, faces and subset effects.

    Slits are labelled ``0 .. n-1``. ``faces[i]`` lists states passing
    slit ``i`` with certainty; ``effects[I]`` is the effect with only the
    slits in ``I`` open, and the all-open entry must be the screen effect.
    """

    n: int
    screen: Any
    faces: Sequence[Sequence[Any]]
    effects: Mapping[frozenset[int], Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one slit")
        if len(self.faces) != self.n:
            raise ValueError(f"expected {self.n} faces, got {len(self.faces)}")
        effects = dict(self.effects)
        full = frozenset(range(self.n))
        effects.setdefault(full, self.screen)
        missing = [s for s in nonempty_subsets(self.n) if s not in effects]
        if missing:
            raise ValueError(f"missing subset effects: {sorted(map(sorted, missing))[:4]}")
        self.effects = effects

    def effect(self, subset) -> Any:
        return self.effects[frozenset(subset)]

    def with_effect(self, subset, effect) -> SlitExperiment:
        effects = dict(self.effects)
        effects[frozenset(subset)] = effect
        screen = effect if frozenset(subset) == frozenset(range(self.n)) else self.screen
        return SlitExperiment(self.n, screen, self.faces, effects)


@dataclass(frozen=True)
class Violation:
    subset: frozenset[int]
    face: int
    state: int
    magnitude: float
    kind: str  # "open" for a listed state in F_I, "blocked" for one outside it

    def __str__(self):
        return (
            f"I={sorted(s + 1 for s in self.subset)} face={self.face + 1} "
            f"state={self.state} {self.kind} |dev|={self.magnitude:.3g}"
        )


def validate_experiment(
    exp: SlitExperiment, theory: TheoryPairing = QUANTUM, tol: float = ATOL
) -> list[Violation]:
    """Check each subset effect on the listed face states.

    On states from an open slit the subset effect must agree with the screen
    effect; on states from a closed slit it must vanish.
    """
    out = []
    pair = theory.pair
    for subset, effect in exp.effects.items():
        for face_idx, face in enumerate(exp.faces):
            for state_idx, s in enumerate(face):
                if face_idx in subset:
                    dev = abs(pair(effect, s) - pair(exp.screen, s))
                    kind = "open"
                else:
                    dev = abs(pair(effect, s))
                    kind = "blocked"
                if dev > tol:
                    out.append(Violation(subset, face_idx, state_idx, dev, kind))
    out.sort(key=lambda v: (len(v.subset), sorted(v.subset), v.face, v.state))
    return out


@dataclass(frozen=True)
class InterferenceValue:
    order: int
    value: float


def sorkin_I(
    n: int, exp: SlitExperiment, state: Any, theory: TheoryPairing = QUANTUM
) -> InterferenceValue:
    """Alternating sum ``sum_I (-1)^(n-|I|) (e_I | s)`` over nonempty subsets."""
    if not 2 <= n <= MAX_SLITS:
        raise ValueError(f"subset enumeration limit: n={n} not in [2, {MAX_SLITS}]")
    if n != exp.n:
        raise ValueError(f"order {n} does not match a {exp.n}-slit experiment")
    total = 0.0
    for subset in nonempty_subsets(n):
        total += (-1) ** (n - len(subset)) * theory.pair(exp.effects[subset], state)
    return InterferenceValue(n, float(total))


# -- quantum reference experiment -------------------------------------------


def uniform_screen(n: int) -> np.ndarray:
    eta = np.ones(n, dtype=complex) / np.sqrt(n)
    return np.outer(eta, eta.conj())


def is_quantum_effect(e, tol: float = ATOL) -> bool:
    e = np.asarray(e, dtype=complex)
    if e.ndim != 2 or e.shape[0] != e.shape[1] or not is_hermitian(e, tol):
        return False
    w = eigvalsh_desc(e)
    return bool(w[-1] >= -tol and w[0] <= 1 + tol)


def subset_projector(n: int, subset) -> np.ndarray:
    p = np.zeros((n, n), dtype=complex)
    for i in subset:
        p[i, i] = 1.0
    return p


def quantum_slit_experiment(n: int, screen=None) -> SlitExperiment:
    """Quantum ``n``-slit experiment; closing slits projects onto the open ones.

    The subset effect is ``P_I E P_I`` so that pairing with ``rho`` gives
    ``Tr(E P_I rho P_I)``. Faces are the basis projectors ``|i><i|``.
    """
    screen = uniform_screen(n) if screen is None else np.asarray(screen, dtype=complex)
    if screen.shape != (n, n) or not is_quantum_effect(screen):
        raise ValueError("invalid effect")
    effects = {}
    for subset in nonempty_subsets(n):
        p = subset_projector(n, subset)
        effects[subset] = p @ screen @ p
    faces = [[subset_projector(n, [i])] for i in range(n)]
    return SlitExperiment(n, screen, faces, effects)
