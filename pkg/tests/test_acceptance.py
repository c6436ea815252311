"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line straight to the
terminal, bypassing capture, so the summary is visible in a plain run.
"""

import json
import subprocess
import sys
from contextlib import contextmanager

import numpy as np
import pytest

from hoi import collision as coll
from hoi import densitycube as dc
from hoi import qqt
from hoi.numerics import is_unitary, random_density
from hoi.sorkin import quantum_slit_experiment, sorkin_I, uniform_screen, validate_experiment


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def check(n, title):
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            with capsys.disabled():
                print(f"\ncriterion {n} [{title}]: {status}")

    return check


def test_quantum_baseline(criterion):
    rng = np.random.default_rng(101)
    with criterion(1, "quantum baseline"):
        for n in (3, 4):
            exp = quantum_slit_experiment(n)
            worst = max(abs(sorkin_I(n, exp, random_density(n, rng)).value) for _ in range(100))
            assert worst <= 1e-12
        i2 = sorkin_I(2, quantum_slit_experiment(2), uniform_screen(2)).value
        assert abs(i2 - 0.5) <= 1e-12


def test_density_cube_algebra(criterion):
    with criterion(2, "density cube algebra"):
        canon = dc.canonical_cubes()
        gram = np.array([[dc.cube_inner(a, b) for b in canon.rho_cubes] for a in canon.rho_cubes])
        assert np.max(np.abs(gram - np.eye(3))) <= 1e-12
        assert dc.is_physical_basis(canon.rho)
        T = dc.constant_T()
        assert is_unitary(T, 1e-12)
        for q, r in zip(canon.q, canon.rho):
            assert np.max(np.abs(dc.apply_cvec_transform(T, q) - r)) <= 1e-12
        Tp = dc.constant_Tprime()
        rep = dc.validate_transformation(Tp, [canon.q[0], *canon.rho])
        assert rep.passes_axioms
        image = dc.apply_cvec_transform(Tp, canon.rho[0])
        assert not dc.is_hermitian_cvec(image)
        assert not dc.is_hermitian_cube(dc.cvec_to_cube(image))[0]
        rounded = np.array([0.9, 0.03 - 0.2j, 0.03 + 0.2j, 0.09, -0.2])
        assert np.max(np.abs(image - rounded)) <= 5e-2


def test_embedding_and_decoherence(criterion):
    rng = np.random.default_rng(303)
    with criterion(3, "embedding and hyper-decoherence"):
        canon = dc.canonical_cubes()
        d_cubes = [dc.cvec_to_cube(r) for r in canon.rho]
        iso = de = adj = 0.0
        for _ in range(1000):
            r, s = random_density(3, rng), random_density(3, rng)
            er, es = dc.embed_quantum(r), dc.embed_quantum(s)
            iso = max(iso, abs(dc.qt_inner(r, s) - dc.cube_inner(er, es)))
            de = max(de, np.max(np.abs(dc.hyperdecohere(er) - r)))
            w = rng.dirichlet(np.ones(4))
            cube = w[0] * er + sum(a * b for a, b in zip(w[1:], d_cubes))
            adj = max(adj, abs(dc.qt_inner(dc.hyperdecohere(cube), s) - dc.cube_inner(cube, es)))
        assert iso <= 1e-12 and de <= 1e-12 and adj <= 1e-12
        out = dc.hyperdecohere(d_cubes[0])
        assert np.max(np.abs(out - np.diag([0, 0.5, 0.5]))) <= 1e-12


def test_counterexample(criterion):
    rng = np.random.default_rng(404)
    with criterion(4, "(c, v) counterexample"):
        cv = dc.counterexample_cv()
        c, v = dc.cvec_to_cube(cv.c), dc.cvec_to_cube(cv.v)
        assert abs(dc.cube_inner(c, v) - (-55 / 256)) <= 1e-12
        for cube in (c, v):
            assert dc.min_inner_against_quantum(cube, rng, samples=1000) >= -1e-12


def test_collision(criterion):
    with criterion(5, "collision problem"):
        q = coll.qt_collision_error()
        assert abs(q - 1 / 9) <= 1e-12
        rows = coll.dc_collision_errors()
        assert all(abs(t - c) <= 1e-12 for _, t, c in rows)
        d = coll.dc_collision_error()
        assert q - d > 0.05
        out = subprocess.run(
            [sys.executable, "-m", "hoi", "reproduce", "collision", "--format", "json"],
            capture_output=True, text=True, check=True,
        ).stdout
        (err,) = [r for r in json.loads(out) if r["id"] == "COLL-ERR"]
        assert err["status"] == "DISCREPANCY"
        assert err["expected"] == pytest.approx(1 / 32)
        assert abs(err["computed"] - d) <= 1e-12


def test_qqt_interference(criterion):
    with criterion(6, "QQT interference"):
        for N in (2, 3, 4):
            assert abs(qqt.qqt_interference(N, "superquantum") - (-1) ** N * (1 - N)) <= 1e-10
            assert abs(qqt.qqt_interference(N, "quantum")) <= 1e-12
            for variant in ("superquantum", "quantum"):
                assert validate_experiment(qqt.qqt_slit_experiment(N, variant)) == []
        assert abs(qqt.qqt_interference(3) - 2) <= 1e-10
        assert abs(qqt.qqt_interference(4) + 3) <= 1e-10


def test_qqt_structure(criterion):
    rng = np.random.default_rng(707)
    with criterion(7, "QQT structure"):
        for N in (2, 3):
            p00 = np.zeros((N * N, N * N))
            p00[0, 0] = 1
            assert not qqt.is_qqt_state(p00, N)
            assert qqt.is_qqt_state(np.eye(N * N) / N**2, N)
            assert qqt.is_qqt_effect(N * p00, N)
        for N in (2, 3):
            states = qqt.random_qqt_states(N, rng, 10_000)
            for _ in range(4):
                h = rng.normal(size=(N * N,) * 2) + 1j * rng.normal(size=(N * N,) * 2)
                e = (h + h.conj().T) / 4 + 0.5 * np.eye(N * N)
                lo, hi = qqt.effect_bounds(e, N)
                vals = np.einsum("ij,bji->b", e, states).real
                assert vals.min() >= lo - 1e-9 and vals.max() <= hi + 1e-9
        assert qqt.qqt_parameter_count(2) == 16
        assert qqt.qqt_parameter_count(3) == 81
        rep = qqt.qqt_swap_counterexample(2)
        assert abs(rep.lambda_max - 1) <= 1e-10 and rep.lambda_max > 1 / 2
        assert not rep.is_valid


def test_determinism(criterion):
    cmd = [sys.executable, "-m", "hoi", "reproduce", "all", "--seed", "42", "--format", "json"]
    with criterion(8, "determinism"):
        runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
        assert runs[0].stdout == runs[1].stdout
        assert all(r.returncode == 0 for r in runs)
        data = json.loads(runs[0].stdout)
        assert sum(r["status"] == "DISCREPANCY" for r in data) == 1
