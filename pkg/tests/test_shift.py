import numpy as np
import pytest

from chernatom.closed_forms import ClosedForm, eval_closed_form
from chernatom.green import GreenComponents
from chernatom.qwz import ModelParams
from chernatom.shift import (
    CIRCULAR_LEFT,
    CIRCULAR_RIGHT,
    PARALLEL_X,
    PERPENDICULAR,
    Polarization,
    contract_resonant,
    imag_axis_conductivity_fn,
    nonresonant_shift,
    polarization,
    resonant_shift,
    shift_curve,
    total_shift,
)


def test_polarization_lookup():
    assert polarization("perp") is PERPENDICULAR
    assert polarization("perpendicular") is PERPENDICULAR
    assert polarization("par") is PARALLEL_X
    assert polarization("circ+") is CIRCULAR_RIGHT
    assert polarization("circ-") is CIRCULAR_LEFT
    with pytest.raises(ValueError):
        polarization("diagonal")


def test_polarization_normalization_enforced():
    with pytest.raises(ValueError):
        Polarization("bad", (1.0 + 0j, 1.0 + 0j, 0j))


def test_contraction_reductions():
    g = GreenComponents(
        eta=1.0,
        gxx=complex(0.3, -0.2),
        gxy=complex(-0.1, 0.4),
        gzz=complex(0.7, 0.1),
    )
    assert contract_resonant(g, PERPENDICULAR) == pytest.approx(-0.75 * 0.7)
    assert contract_resonant(g, PARALLEL_X) == pytest.approx(-0.75 * 0.3)
    assert contract_resonant(g, CIRCULAR_RIGHT) == pytest.approx(-0.75 * (0.3 + 0.4))
    assert contract_resonant(g, CIRCULAR_LEFT) == pytest.approx(-0.75 * (0.3 - 0.4))


def test_resonant_matches_closed_form():
    for name, pol in (
        ("perpendicular", PERPENDICULAR),
        ("circular_left", CIRCULAR_LEFT),
    ):
        r = resonant_shift(pol, 1.0, 1.3, nondispersive_chern=1)
        ref = eval_closed_form(ClosedForm(name, "nondispersive_full", chern=1), 1.3)
        assert r.resonant == pytest.approx(ref, rel=1e-9)
        assert r.dispersive is False
        assert r.nonresonant is None
        assert r.total is None


def test_nonresonant_frozen_values():
    # frozen from a dense-trapezoid double integral (k_par, then xi)
    circ = nonresonant_shift("excited", CIRCULAR_RIGHT, 1.9, 1.0, nondispersive_chern=1)
    perp = nonresonant_shift("excited", PERPENDICULAR, 1.9, 1.0, nondispersive_chern=1)
    assert circ == pytest.approx(0.0018203705567643406, rel=5e-4)
    assert perp == pytest.approx(2.4530039487545033e-05, rel=2e-3)


def test_ground_is_minus_excited():
    args = (CIRCULAR_RIGHT, 1.9, 2.0)
    exc = nonresonant_shift("excited", *args, nondispersive_chern=1)
    gnd = nonresonant_shift("ground", *args, nondispersive_chern=1)
    assert gnd == -exc


def test_total_shift_composition():
    r = total_shift(CIRCULAR_RIGHT, 1.9, 1.5, nondispersive_chern=1)
    exc = nonresonant_shift("excited", CIRCULAR_RIGHT, 1.9, 1.5, nondispersive_chern=1)
    assert r.nonresonant == pytest.approx(2.0 * exc, rel=1e-12)
    assert r.total == pytest.approx(r.resonant + r.nonresonant)
    bare = total_shift(
        CIRCULAR_RIGHT, 1.9, 1.5, nondispersive_chern=1, include_nonresonant=False
    )
    assert bare.nonresonant is None
    assert bare.resonant == pytest.approx(r.resonant)


def test_shift_curve():
    etas = [1.0, 2.0, 3.0]
    out = shift_curve(etas, PERPENDICULAR, 1.0, nondispersive_chern=-1)
    assert [r.eta for r in out] == etas
    assert all(r.polarization == "perpendicular" for r in out)
    assert all(r.nonresonant is None for r in out)


def test_dispersive_metadata():
    r = resonant_shift(PARALLEL_X, 1.9, 2.0, p=ModelParams(u=-1.0))
    assert r.dispersive is True
    assert r.u_over_t == -1.0
    assert r.omega10_over_t == 1.9


def test_imag_axis_conductivity_fn():
    fn = imag_axis_conductivity_fn(1.9, nondispersive_chern=1)
    assert fn(0.5) is fn(2.0)
    fn = imag_axis_conductivity_fn(1.9, p=ModelParams(u=1.0))
    s = fn(1.0 / 1.9)
    assert s.regime == "imaginary_axis"
    assert s.omega_over_t == pytest.approx(1.0)
    with pytest.raises(ValueError):
        imag_axis_conductivity_fn(1.9)
    with pytest.raises(ValueError):
        imag_axis_conductivity_fn(0.0, nondispersive_chern=1)


def test_argument_validation():
    with pytest.raises(ValueError):
        resonant_shift(PERPENDICULAR, 1.9, 0.0, nondispersive_chern=1)
    with pytest.raises(ValueError):
        nonresonant_shift("virtual", PERPENDICULAR, 1.9, 1.0, nondispersive_chern=1)
    with pytest.raises(ValueError):
        resonant_shift(PERPENDICULAR, 1.9, 1.0)  # neither p nor chern
