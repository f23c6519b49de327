import math

import numpy as np
import pytest

from fricke import spingraft as sg


def test_graft_spin_table():
    assert sg.graft_spin(sg.SpinClass(1, 1), "y") == sg.SpinClass(-1, 1)
    assert sg.graft_spin(sg.SpinClass(1, 1), "x") == sg.SpinClass(1, -1)
    s = sg.SpinClass(-1, 1)
    assert sg.graft_spin(sg.graft_spin(s, "y"), "y") == s
    with pytest.raises(sg.SpinGraftError):
        sg.graft_spin(s, "z")


def test_graft_spin_generates_klein_four_group():
    orbits = set()
    for s in sg.ALL_SPIN_CLASSES:
        reached = {s}
        frontier = [s]
        while frontier:
            cur = frontier.pop()
            for c in "xy":
                nxt = sg.graft_spin(cur, c)
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        orbits.add(frozenset(reached))
    assert orbits == {frozenset(sg.ALL_SPIN_CLASSES)}
    # the two flips commute and are involutions
    for s in sg.ALL_SPIN_CLASSES:
        assert sg.graft_spin(sg.graft_spin(s, "x"), "y") == sg.graft_spin(
            sg.graft_spin(s, "y"), "x"
        )


def test_quadratic_form_intersection_correction():
    s = sg.SpinClass(1, 1)
    assert s.quadratic_form(1, 0) == 1
    assert s.quadratic_form(0, 1) == 1
    assert s.quadratic_form(1, 1) == -1


def test_spin_to_chi_dictionary():
    tau = 2.0
    assert sg.spin_to_chi(sg.SpinClass(1, 1), tau) == 0
    assert sg.spin_to_chi(sg.SpinClass(-1, 1), tau) == 0.5j * math.pi
    assert abs(sg.spin_to_chi(sg.SpinClass(1, -1), tau) - math.pi / 4) <= 1e-15
    assert abs(
        sg.spin_to_chi(sg.SpinClass(-1, -1), tau) - (math.pi / 4 + 0.5j * math.pi)
    ) <= 1e-15


@pytest.mark.parametrize("tau", [0.5, 1.0, 2.0])
def test_spin_holonomies_match(tau):
    """Oracle: line integral of the unitary connection along both loops."""
    assert sg.verify_spin_dictionary(tau, tol=1e-10) <= 1e-10
    s = sg.SpinClass(-1, 1)
    hx, hy = sg.line_holonomies(sg.spin_to_chi(s, tau), tau)
    assert abs(hx + 1.0) <= 1e-12 and abs(hy - 1.0) <= 1e-12


def test_spin_example_tau_two():
    hx, hy = sg.line_holonomies(sg.spin_to_chi(sg.SpinClass(1, -1), 2.0), 2.0)
    assert abs(hy + 1.0) <= 1e-12 and abs(hx - 1.0) <= 1e-12


def test_hopf_modulus_contract():
    assert sg.hopf_modulus(1.0) > sg.hopf_modulus(2.0)
    assert sg.hopf_modulus(1e6) < 1e-4
    assert sg.hopf_modulus(1e-6) > 1e4
    assert abs(sg.hopf_modulus(2 * math.pi) - 1.0) <= 1e-15
    with pytest.raises(sg.NonPositiveInput):
        sg.hopf_modulus(0.0)


def test_graft_modulus_limits():
    # tau_Y -> infinity: result -> tau
    assert abs(sg.graft_modulus(1.3, 1e-9) - 1.3) <= 1e-6
    # tau = tau_Y: harmonic mean gives tau/2
    tau = sg.hopf_modulus(2.0)
    assert abs(sg.graft_modulus(tau, 2.0) - tau / 2.0) <= 1e-12
    with pytest.raises(sg.NonPositiveInput):
        sg.graft_modulus(-1.0, 1.0)


def test_graft_modulus_monotone_in_tau():
    for ell in (0.5, 1.0, 3.0):
        assert sg.graft_modulus(2.0, ell) > sg.graft_modulus(1.0, ell)


def test_graft_modulus_strictly_decreasing_iteration():
    tau = 3.0
    seen = [tau]
    for _ in range(12):
        tau = sg.graft_modulus(tau, 1.7)
        assert 0.0 < tau < seen[-1]
        seen.append(tau)


def test_graft_modulus_injective_on_grid():
    ell = 2.2
    grid = np.linspace(0.2, 5.0, 60)
    images = [sg.graft_modulus(t, ell) for t in grid]
    assert all(b > a for a, b in zip(images, images[1:]))
    assert len({round(v, 12) for v in images}) == len(images)


def test_graft_state_accumulates():
    state = sg.GraftState(2.0, sg.SpinClass(1, 1))
    state = state.graft("y", 1.0).graft("x", 1.0)
    assert state.n_x == 1 and state.n_y == 1
    assert state.spin == sg.SpinClass(-1, -1)
    assert state.tau < 2.0


def test_spin_parse():
    assert sg.SpinClass.parse("+,-") == sg.SpinClass(1, -1)
    with pytest.raises(sg.SpinGraftError):
        sg.SpinClass.parse("+0,-")
