from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from hoi import qqt
from hoi.numerics import haar_unitary, is_unitary, random_density, tensor_product
from hoi.sorkin import validate_experiment


def brute_force_I(N, variant):
    """Exact alternating sum on the witness state using diagonal bookkeeping.

    The witness state puts weight 1/N on each |ii>; an open-subset effect
    sum_{i in I, j}|ij><ij| collects |I|/N of it, a superquantum singleton
    N|ii><ii| collects exactly 1.
    """
    total = Fraction(0)
    for k in range(1, N + 1):
        for subset in combinations(range(N), k):
            if k == 1 and variant == "superquantum":
                val = Fraction(1)
            else:
                val = Fraction(k, N)
            total += (-1) ** (N - k) * val
    return total


# -- states ---------------------------------------------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_state_examples(N):
    d = N * N
    assert qqt.is_qqt_state(np.eye(d) / d, N)
    assert not qqt.is_qqt_state(tensor_product(qqt.proj(N, 0), qqt.proj(N, 0)), N)
    assert qqt.is_qqt_state(qqt.qqt_witness_state(N), N)
    assert qqt.is_qqt_state(qqt.initial_state(N), N)


def test_state_rejects_bad_trace_and_non_hermitian():
    assert not qqt.is_qqt_state(np.eye(4) / 2, 2)
    m = np.eye(4) / 4
    m[0, 1] = 0.1
    assert not qqt.is_qqt_state(m, 2)


def test_state_shape_error():
    with pytest.raises(ValueError):
        qqt.is_qqt_state(np.eye(3) / 3, 2)


def test_membership_invariance(rng):
    N = 2
    states = qqt.random_qqt_states(N, rng, 10_000)
    u = haar_unitary(N * N, rng, size=10_000)
    rotated = u @ states @ np.conj(np.swapaxes(u, -1, -2))
    w = rng.uniform(size=(10_000, 1, 1))
    mixed = w * states + (1 - w) * rotated[::-1]
    for batch in (states, rotated, mixed):
        lam = np.linalg.eigvalsh(batch)
        assert lam[:, -1].max() <= 1 / N + 1e-10
        assert lam[:, 0].min() >= -1e-10
    for s in mixed[:200]:
        assert qqt.is_qqt_state(s, N)


def test_random_states_unit_trace(rng):
    s = qqt.random_qqt_states(3, rng, 50)
    assert np.allclose(np.trace(s, axis1=1, axis2=2), 1)


# -- effects ------------------------------------------------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_effect_examples(N):
    d = N * N
    p00 = tensor_product(qqt.proj(N, 0), qqt.proj(N, 0))
    assert qqt.is_qqt_effect(N * p00, N)
    assert qqt.effect_bounds(N * p00, N) == pytest.approx((0, 1))
    assert not qqt.is_qqt_effect(2 * np.eye(d), N)
    assert not qqt.is_qqt_effect((N + 0.5) * p00, N)
    for k in range(1, N + 1):
        for subset in combinations(range(N), k):
            e = tensor_product(sum(qqt.proj(N, i) for i in subset), np.eye(N))
            assert qqt.is_qqt_effect(e, N)


def test_effect_not_hermitian():
    e = np.zeros((4, 4))
    e[0, 1] = 1
    with pytest.raises(ValueError, match="not Hermitian"):
        qqt.effect_bounds(e, 2)


def test_quantum_effect_not_bound_by_unit_eigenvalue():
    # 2|00><00| exceeds 1 as an operator yet is a valid effect for N = 2.
    p = tensor_product(qqt.proj(2, 0), qqt.proj(2, 0))
    assert np.linalg.eigvalsh(2 * p).max() == 2
    assert qqt.is_qqt_effect(2 * p, 2)


@pytest.mark.parametrize("N", [2, 3])
def test_effect_bounds_against_sampling(rng, N):
    d = N * N
    states = qqt.random_qqt_states(N, rng, 10_000)
    for _ in range(5):
        h = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        e = (h + h.conj().T) / 4 + 0.5 * np.eye(d)
        lo, hi = qqt.effect_bounds(e, N)
        vals = np.einsum("ij,bji->b", e, states).real
        assert vals.min() >= lo - 1e-9 and vals.max() <= hi + 1e-9
        # Extremal states attain the bound: (1/N) projector on the top-N eigenvectors.
        w, v = np.linalg.eigh(e)
        top = v[:, -N:] @ v[:, -N:].conj().T / N
        assert qqt.is_qqt_state(top, N)
        assert np.trace(e @ top).real == pytest.approx(hi, abs=1e-10)
        verdict = qqt.is_qqt_effect(e, N)
        if vals.min() < -1e-9 or vals.max() > 1 + 1e-9:
            assert not verdict


# -- slit experiments -------------------------------------------------------------------


@pytest.mark.parametrize("N", [2, 3, 4, 5])
@pytest.mark.parametrize("variant", ["superquantum", "quantum"])
def test_experiment_validates(N, variant):
    assert validate_experiment(qqt.qqt_slit_experiment(N, variant)) == []


def test_face_values():
    exp = qqt.qqt_slit_experiment(3)
    f1, f2 = exp.faces[0][0], exp.faces[1][0]
    e1 = exp.effect({0})
    assert np.trace(e1 @ f1).real == pytest.approx(1)
    assert np.trace(exp.screen @ f1).real == pytest.approx(1)
    assert np.trace(e1 @ f2).real == 0


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_superquantum_interference(N):
    exact = brute_force_I(N, "superquantum")
    assert exact == (-1) ** N * (1 - N)
    assert abs(qqt.qqt_interference(N) - exact) <= 1e-10


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_quantum_interference(N):
    assert brute_force_I(N, "quantum") == 0
    assert abs(qqt.qqt_interference(N, "quantum")) <= 1e-12


def test_i3_i4():
    assert qqt.qqt_interference(3) == pytest.approx(2, abs=1e-10)
    assert qqt.qqt_interference(4) == pytest.approx(-3, abs=1e-10)


def test_experiment_range():
    with pytest.raises(ValueError):
        qqt.qqt_slit_experiment(7)
    with pytest.raises(ValueError):
        qqt.qqt_slit_experiment(3, "classical")


@pytest.mark.parametrize("N", [2, 3])
def test_witness_state(N):
    w = qqt.qqt_witness_state(N)
    assert np.trace(w) == 1
    assert np.linalg.eigvalsh(w).max() == pytest.approx(1 / N)


# -- hyper-decoherence --------------------------------------------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_decohere_initial(N):
    assert np.allclose(qqt.qqt_hyperdecohere(qqt.initial_state(N), N), np.eye(N) / N)


@pytest.mark.parametrize("N", [2, 3])
def test_decohere_right_inverse(rng, N):
    for _ in range(20):
        rho = random_density(N, rng)
        s = tensor_product(rho, np.eye(N) / N)
        assert qqt.is_qqt_state(s, N)
        assert np.max(np.abs(qqt.qqt_hyperdecohere(s, N) - rho)) <= 1e-12


def test_decohere_outputs_states(rng):
    for s in qqt.random_qqt_states(3, rng, 100):
        out = qqt.qqt_hyperdecohere(s, 3)
        assert np.allclose(out, out.conj().T)
        assert np.trace(out) == pytest.approx(1)
        assert np.linalg.eigvalsh(out).min() >= -1e-10


# -- composites and parameter count ------------------------------------------------------------


def test_swap_counterexample():
    rep = qqt.qqt_swap_counterexample(2)
    p00 = tensor_product(qqt.proj(2, 0), qqt.proj(2, 0))
    assert np.allclose(rep.marginal, p00)
    assert rep.lambda_max == pytest.approx(1)
    assert not rep.is_valid
    assert rep.before_valid
    assert is_unitary(rep.swap_unitary)


def test_swap_counterexample_n3():
    rep = qqt.qqt_swap_counterexample(3)
    assert rep.lambda_max == pytest.approx(1) and not rep.is_valid and rep.before_valid


@pytest.mark.slow
@pytest.mark.parametrize("N, K", [(2, 16), (3, 81)])
def test_parameter_count(N, K):
    assert qqt.qqt_parameter_count(N, np.random.default_rng(1)) == K == N**4


def test_parameter_count_saturates():
    rng = np.random.default_rng(2)
    assert qqt.qqt_parameter_count(2, rng, samples=200) == 16


def test_parameter_count_range():
    with pytest.raises(ValueError):
        qqt.qqt_parameter_count(4)
