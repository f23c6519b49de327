import math

import numpy as np
import pytest

from fricke import algebra, charvar, dodeca

SQRT5 = math.sqrt(5.0)


@pytest.fixture(scope="module")
def data():
    return dodeca.build_dodeca()


def test_build_j0(data):
    expected = algebra.make(1, -1, 1, 1) / math.sqrt(2)
    assert algebra.norm_inf(data.j0 - expected) <= 1e-12


def test_build_g23(data):
    expected = (-1j / math.sqrt(2)) * algebra.make(1, 1, 1, -1)
    assert algebra.norm_inf(data.generators[(2, 3)] - expected) <= 1e-12


def test_tr_j1(data):
    assert abs(algebra.trace(data.J[0]) - (1 - SQRT5) / 2) <= 1e-12


def test_conjugation_chain(data):
    j0_inv = algebra.inverse(data.j0)
    for prev, nxt in zip(data.J[:-1], data.J[1:]):
        assert algebra.norm_inf(nxt - data.j0 @ prev @ j0_inv) <= 1e-12


def test_j0_fourth_power_commutes_with_j1(data):
    j4 = algebra.power(data.j0, 4)
    J1 = data.J[0]
    assert algebra.norm_inf(j4 @ J1 - J1 @ j4) <= 1e-9


def test_rsr_check_dodeca(data):
    rep = dodeca.rsr_check(*data.J, charvar.Weight(3, 10))
    assert rep.is_real and rep.is_symmetric and rep.is_rectangular
    assert rep.product_is_identity
    assert rep.order_k == 10 and rep.genus == 4


def test_rsr_check_identity_quadruple():
    rep = dodeca.rsr_check(
        algebra.IDENTITY,
        algebra.IDENTITY,
        algebra.IDENTITY,
        algebra.IDENTITY,
        charvar.Weight(3, 10),
    )
    assert rep.product_is_identity
    assert not rep.is_symmetric  # tr Id = 2 != 2 cos(3 pi / 5)
    assert not rep.is_real  # product traces are 2, not < -2
    assert rep.is_rectangular  # trivially equal traces


def test_rsr_check_perturbation_breaks_rectangular(data):
    J1, J2, J3, J4 = data.J
    bump = algebra.make(1e-3, 0, 0, -1e-3)
    J3p = J3 + bump @ J3  # order-1e-3 perturbation, still near SL2
    rep = dodeca.rsr_check(J1, J2, J3p, J4, charvar.Weight(3, 10))
    assert not rep.is_rectangular


def test_rsr_trace_flags_conjugation_invariant(data):
    rng = np.random.default_rng(3)
    m = rng.normal(size=(2, 2))
    while abs(np.linalg.det(m)) < 0.2:
        m = rng.normal(size=(2, 2))
    g = m / math.sqrt(abs(np.linalg.det(m)))
    if np.linalg.det(g) < 0:
        g = algebra.make(1, 0, 0, -1) @ g
    g_inv = algebra.inverse(g)
    conj = [g @ J @ g_inv for J in data.J]
    rep = dodeca.rsr_check(*conj, charvar.Weight(3, 10), tol=1e-8)
    assert rep.is_symmetric and rep.is_rectangular and rep.product_is_identity
    assert rep.is_real  # real conjugator keeps entries real


def test_verify_theorem91_all_pass():
    checks = dodeca.verify_theorem91()
    failing = {k: v for k, v in checks.items() if v[0] > v[1]}
    assert not failing, failing


def test_verify_theorem91_key_values():
    checks = dodeca.verify_theorem91()
    assert checks["tr_J3J1"][0] <= 1e-9
    assert checks["J4J3J2J1_id"][0] <= 1e-9
    assert checks["torus_fricke"][0] <= 1e-8
    assert checks["eta_locus"][0] <= 1e-8
