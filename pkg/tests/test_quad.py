import numpy as np
import pytest

from chernatom._quad import integrate_adaptive
from chernatom.errors import QuadratureToleranceError


def test_polynomial_exact():
    val = integrate_adaptive(lambda t: 3.0 * t * t, 0.0, 2.0)
    assert val == pytest.approx(8.0, rel=1e-12)


def test_oscillatory_phase():
    val = integrate_adaptive(
        lambda t: np.exp(1j * t), 0.0, 20.0 * np.pi, max_width=np.pi / 4
    )
    assert abs(val) < 1e-10


def test_empty_interval():
    assert integrate_adaptive(lambda t: t, 1.0, 1.0) == 0.0


def test_unresolved_pole_raises():
    with pytest.raises(QuadratureToleranceError):
        integrate_adaptive(lambda t: 1.0 / (t - 0.5 + 1e-12j), 0.0, 1.0)


def test_narrow_feature_resolved_with_min_width():
    # a Lorentzian of width 1e-4 integrates fine once min_width allows it
    f = lambda t: 1e-4 / ((t - 0.5) ** 2 + 1e-8)
    val = integrate_adaptive(f, 0.0, 1.0, min_width=1e-7)
    assert val == pytest.approx(2.0 * np.arctan(0.5 / 1e-4), rel=1e-8)
