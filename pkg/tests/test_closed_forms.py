import numpy as np
import pytest

from chernatom.closed_forms import (
    FAR_FIELD_MIN_ETA,
    NEAR_FIELD_MAX_ETA,
    REGIMES,
    ClosedForm,
    eval_closed_form,
    green_far_field,
)
from chernatom.kubo import FINE_STRUCTURE, SheetConductivity, nondispersive_conductivity


def test_validation():
    with pytest.raises(ValueError):
        ClosedForm("diagonal", "nondispersive_full", chern=1)
    with pytest.raises(ValueError):
        ClosedForm("perpendicular", "asymptotic", chern=1)
    with pytest.raises(ValueError):
        ClosedForm("perpendicular", "nondispersive_full")  # chern missing
    with pytest.raises(ValueError):
        ClosedForm("perpendicular", "dispersive_far_lowhigh")  # sxx_im missing
    ClosedForm("parallel_x", "dispersive_far_lowhigh")  # sxx_im not needed here


def test_dispersive_near_values():
    eta = 1e-3
    perp = ClosedForm("perpendicular", "dispersive_near")
    par = ClosedForm("parallel_x", "dispersive_near")
    assert eval_closed_form(perp, eta) == pytest.approx(-1.5 / eta**3)
    assert eval_closed_form(par, eta) == pytest.approx(-0.75 / eta**3)


def test_dispersive_far_values():
    eta = 25.0
    par = ClosedForm("circular_left", "dispersive_far_lowhigh")
    assert eval_closed_form(par, eta) == pytest.approx(0.375 * np.cos(eta) / eta)
    perp = ClosedForm("perpendicular", "dispersive_far_lowhigh", sxx_im=-0.049)
    assert eval_closed_form(perp, eta) == pytest.approx(
        0.75 * (-0.049) * np.sin(eta) / eta
    )


def test_nondispersive_full_values():
    s = FINE_STRUCTURE
    a = s * s / (1.0 + s * s)
    b = s / (1.0 + s * s)
    eta = 1.3
    rigid = np.cos(eta) + eta * np.sin(eta)
    lateral = ((eta * eta - 1.0) * np.cos(eta) - eta * np.sin(eta)) / eta**3
    cf = lambda pol: ClosedForm(pol, "nondispersive_full", chern=1)
    assert eval_closed_form(cf("perpendicular"), eta) == pytest.approx(
        -1.5 * a * rigid / eta**3
    )
    assert eval_closed_form(cf("parallel_x"), eta) == pytest.approx(0.75 * a * lateral)
    right = eval_closed_form(cf("circular_right"), eta)
    left = eval_closed_form(cf("circular_left"), eta)
    assert 0.5 * (right + left) == pytest.approx(0.75 * a * lateral)
    assert 0.5 * (right - left) == pytest.approx(0.75 * b * rigid / eta**2)


def test_near_limit_consistent_with_full():
    eta = 1e-3
    assert eta <= NEAR_FIELD_MAX_ETA
    for pol in ("perpendicular", "parallel_x"):
        full = eval_closed_form(ClosedForm(pol, "nondispersive_full", chern=1), eta)
        near = eval_closed_form(ClosedForm(pol, "nondispersive_near", chern=1), eta)
        assert near == pytest.approx(full, rel=1e-5)


def test_near_limit_sign_even_in_chern():
    eta = 1e-3
    for pol in ("perpendicular", "circular_right"):
        plus = eval_closed_form(ClosedForm(pol, "nondispersive_near", chern=1), eta)
        minus = eval_closed_form(ClosedForm(pol, "nondispersive_near", chern=-1), eta)
        assert plus == minus


def test_far_limit_consistent_with_full():
    eta = 40.0
    assert eta >= FAR_FIELD_MIN_ETA
    for pol in ("perpendicular", "parallel_x", "circular_right"):
        full = eval_closed_form(ClosedForm(pol, "nondispersive_full", chern=1), eta)
        far = eval_closed_form(ClosedForm(pol, "nondispersive_far", chern=1), eta)
        # subleading terms are down by one power of eta
        assert abs(full - far) <= 2.0 / eta * max(abs(far), abs(full), 1e-12)


def test_regimes_tuple():
    assert len(REGIMES) == 5
    assert "nondispersive_full" in REGIMES


def test_green_far_field_values():
    sig = SheetConductivity(
        1.9, complex(0.003, -0.049), complex(-0.0494, 0.0), "low"
    )
    eta = 100.0
    g = green_far_field(eta, sig)
    phase = np.exp(1j * eta)
    assert g.gxx == pytest.approx(-phase / (2.0 * eta))
    sxx, sxy = sig.sxx, sig.sxy
    assert g.gxy == pytest.approx(
        -(sxy / sxx) * (eta * eta - 2.0 + 2j * eta) * phase / eta**3
    )
    assert g.gzz == pytest.approx(
        (1j / eta**2) * ((sxx * sxx + sxy * sxy) / sxx) * (1.0 - 1j * eta) * phase
    )


def test_green_far_field_degenerate_conductivity():
    g = green_far_field(50.0, nondispersive_conductivity(1))
    assert np.isfinite(g.gxx.real)
    assert np.isnan(g.gxy.real) and np.isnan(g.gzz.real)
    zero = SheetConductivity(1.0, 0.0j, 0.0j, "test")
    g = green_far_field(50.0, zero)
    assert g.gxy == 0.0 and g.gzz == 0.0


def test_argument_validation():
    with pytest.raises(ValueError):
        eval_closed_form(ClosedForm("perpendicular", "dispersive_near"), 0.0)
    with pytest.raises(ValueError):
        green_far_field(-1.0, nondispersive_conductivity(1))
