import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoi.numerics import random_density
from hoi.qqt import qqt_slit_experiment
from hoi.sorkin import (
    QUANTUM,
    SlitExperiment,
    nonempty_subsets,
    quantum_slit_experiment,
    sorkin_I,
    trace_pairing,
    uniform_screen,
    validate_experiment,
)


def literal_I2(exp, s):
    p = trace_pairing
    return p(exp.screen, s) - p(exp.effect({0}), s) - p(exp.effect({1}), s)


def literal_I3(exp, s):
    p, e = trace_pairing, exp.effect
    return (
        p(exp.screen, s)
        - p(e({0, 1}), s) - p(e({1, 2}), s) - p(e({2, 0}), s)
        + p(e({0}), s) + p(e({1}), s) + p(e({2}), s)
    )


def test_subset_count():
    assert len(nonempty_subsets(4)) == 15


def test_I2_uniform_superposition():
    # By hand: 1 - 1/4 - 1/4.
    exp = quantum_slit_experiment(2)
    assert sorkin_I(2, exp, uniform_screen(2)).value == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_quantum_higher_orders_vanish(rng, n):
    exp = quantum_slit_experiment(n)
    for _ in range(100 if n <= 4 else 20):
        assert abs(sorkin_I(n, exp, random_density(n, rng)).value) <= 1e-12


def test_expansions_agree(rng):
    e2, e3 = quantum_slit_experiment(2), quantum_slit_experiment(3)
    for _ in range(50):
        s2, s3 = random_density(2, rng), random_density(3, rng)
        assert abs(sorkin_I(2, e2, s2).value - literal_I2(e2, s2)) <= 1e-14
        assert abs(sorkin_I(3, e3, s3).value - literal_I3(e3, s3)) <= 1e-14


def test_random_screen_effect(rng):
    # Any valid screen effect, not just the uniform projector.
    screen = 0.7 * random_density(3, rng)
    exp = quantum_slit_experiment(3, screen)
    assert validate_experiment(exp) == []
    assert abs(sorkin_I(3, exp, random_density(3, rng)).value) <= 1e-12


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quantum_experiment_validates(n):
    assert validate_experiment(quantum_slit_experiment(n)) == []


def test_zero_effect_is_flagged():
    exp = quantum_slit_experiment(3).with_effect({0}, np.zeros((3, 3)))
    v = validate_experiment(exp)
    assert v and v[0].subset == frozenset({0}) and v[0].face == 0 and v[0].kind == "open"
    assert v[0].magnitude == pytest.approx(1 / 3)


def test_blocked_violation():
    exp = quantum_slit_experiment(2).with_effect({0}, np.eye(2) / 2)
    kinds = {(v.face, v.kind) for v in validate_experiment(exp)}
    assert (1, "blocked") in kinds


def test_invalid_screen():
    with pytest.raises(ValueError, match="invalid effect"):
        quantum_slit_experiment(2, 2 * np.eye(2))
    with pytest.raises(ValueError, match="invalid effect"):
        quantum_slit_experiment(3, np.eye(2))


def test_enumeration_limit():
    exp = quantum_slit_experiment(2)
    with pytest.raises(ValueError, match="subset enumeration limit"):
        sorkin_I(1, exp, np.eye(2) / 2)
    with pytest.raises(ValueError, match="subset enumeration limit"):
        sorkin_I(13, exp, np.eye(2) / 2)


def test_missing_effects_rejected():
    with pytest.raises(ValueError, match="missing subset effects"):
        SlitExperiment(2, np.eye(2), [[np.eye(2)], [np.eye(2)]], {})


def test_qqt_experiment_validates():
    assert validate_experiment(qqt_slit_experiment(3, "superquantum"), QUANTUM) == []


@settings(max_examples=40, deadline=None)
@given(st.floats(0, 1), st.integers(0, 2**31 - 1))
def test_linear_in_state(alpha, seed):
    rng = np.random.default_rng(seed)
    for exp, n in ((quantum_slit_experiment(3), 3), (qqt_slit_experiment(3), 9)):
        s, t = random_density(n, rng), random_density(n, rng)
        k = exp.n
        mixed = sorkin_I(k, exp, alpha * s + (1 - alpha) * t).value
        split = alpha * sorkin_I(k, exp, s).value + (1 - alpha) * sorkin_I(k, exp, t).value
        assert abs(mixed - split) <= 1e-12
