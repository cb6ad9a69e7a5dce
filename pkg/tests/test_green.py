import numpy as np
import pytest

from chernatom.green import (
    GreenComponents,
    OscQuadConfig,
    green_imag_axis,
    green_reflected,
    green_reflected_kspace,
    integrand_profile,
)
from chernatom.kubo import SheetConductivity, nondispersive_conductivity

# frozen dispersive conductivity at omega10/t = 1.9, u/t = -1 (default grid)
SIGMA_19 = SheetConductivity(
    1.9,
    complex(2.621277541094265e-07, -0.04901693240539124),
    complex(-0.0493984713811515, -2.61870278384101e-07),
    "low",
)


def test_matches_kspace_route_dispersive():
    # a lossy sheet keeps the guided-mode pole far enough off the path for
    # the adaptive k_par route to resolve it without regularization
    sig = SheetConductivity(
        1.9, complex(0.02, -0.049), complex(-0.0494, 1e-4), "low"
    )
    for eta in (0.5, 2.0, 7.0):
        a = green_reflected(eta, sig)
        b = green_reflected_kspace(eta, sig)
        for f in ("gxx", "gxy", "gzz"):
            x, y = getattr(a, f), getattr(b, f)
            assert abs(x - y) <= 1e-9 * max(1e-3, abs(x))


def test_matches_kspace_route_nondispersive():
    sig = nondispersive_conductivity(1)
    a = green_reflected(1.0, sig)
    b = green_reflected_kspace(1.0, sig)
    for f in ("gxx", "gxy", "gzz"):
        assert abs(getattr(a, f) - getattr(b, f)) < 1e-10


def test_imag_axis_frozen_value():
    # frozen from a dense-trapezoid evaluation of the same k_par integrals
    g = green_imag_axis(1.0, 1.0, nondispersive_conductivity(1))
    assert g.gxx.real == pytest.approx(5.876710611544329e-05, rel=1e-6)
    assert g.gxy.real == pytest.approx(0.005368806070017071, rel=1e-6)
    assert g.gzz.real == pytest.approx(7.835614149269914e-05, rel=1e-6)


def test_imag_axis_is_real():
    # on the imaginary axis the conductivity itself is real
    sig = SheetConductivity(
        1.0, complex(0.0037033694458812466), complex(0.005903484475979475), "imaginary_axis"
    )
    g = green_imag_axis(0.7, 0.3, sig)
    for f in ("gxx", "gxy", "gzz"):
        assert getattr(g, f).imag == 0.0


def test_imag_axis_large_frequency_cutoff():
    cfg = OscQuadConfig()
    g = green_imag_axis(2.0, cfg.evanescent_cutoff, SIGMA_19, cfg)
    assert g.gxx == g.gxy == g.gzz == 0.0


def test_parts_decomposition():
    g = green_reflected(1.5, SIGMA_19)
    assert g.parts is not None
    assert g.gxx == g.parts["g1"] + g.parts["h1"]
    assert g.gxy == g.parts["g2"] + g.parts["h2"]
    assert g.gzz == g.parts["g3"] + g.parts["h3"]


def test_integrand_profile_shape():
    ks = np.array([0.0, 0.5, 1.0, 1.2, 3.0])
    vals = integrand_profile(1.0, SIGMA_19, ks)
    assert vals.shape == ks.shape
    assert np.all(np.isfinite(vals))
    assert vals[0] == 0.0
    # evanescent tail decays like exp(-2 eta sqrt(k^2 - 1))
    assert abs(vals[-1]) < abs(vals[3])


def test_surface_mode_regularization_is_stable():
    # lossless reactive sheet with a guided-mode pole on the evanescent path:
    # the dissipative regularization must give an epsilon-independent result
    sig = SheetConductivity(10.0, 0.00286838j, 1.73e-4, "high")
    eta = 1e-3
    base = green_reflected(eta, sig)
    damped = green_reflected(
        eta, SheetConductivity(10.0, 1e-7 + 0.00286838j, 1.73e-4, "high")
    )
    assert damped.gzz.real == pytest.approx(base.gzz.real, rel=5e-3)


def test_argument_validation():
    with pytest.raises(ValueError):
        green_reflected(0.0, SIGMA_19)
    with pytest.raises(ValueError):
        green_imag_axis(1.0, 0.0, SIGMA_19)
    with pytest.raises(ValueError):
        green_reflected_kspace(-1.0, SIGMA_19)
    with pytest.raises(ValueError):
        OscQuadConfig(panel_width=0.0)
    with pytest.raises(ValueError):
        OscQuadConfig(rel_tol=-1e-9)
