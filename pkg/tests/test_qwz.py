import numpy as np
import pytest

from chernatom.errors import DegenerateGapError, SingularKPointError
from chernatom.qwz import (
    KPoint,
    ModelParams,
    band_gap_edges,
    chern_number,
    current_matrix_elements,
    d_vector,
)


def _eigen_matrix_elements(kx, ky, p):
    """Independent oracle: current matrix elements from explicit eigenvectors."""
    t, a = p.t, p.a
    dx = t * np.sin(kx * a)
    dy = t * np.sin(ky * a)
    dz = t * (np.cos(kx * a) + np.cos(ky * a)) + p.u
    ham = np.array([[dz, dx - 1j * dy], [dx + 1j * dy, -dz]])
    _, vecs = np.linalg.eigh(ham)
    lo, hi = vecs[:, 0], vecs[:, 1]
    jx = t * a * np.array(
        [[-np.sin(kx * a), np.cos(kx * a)], [np.cos(kx * a), np.sin(kx * a)]]
    )
    jy = t * a * np.array(
        [[-np.sin(ky * a), -1j * np.cos(ky * a)], [1j * np.cos(ky * a), np.sin(ky * a)]]
    )
    jx_pm = hi.conj() @ jx @ lo
    jx_mp = lo.conj() @ jx @ hi
    jy_mp = lo.conj() @ jy @ hi
    return (jx_pm * jx_mp).real, (jx_pm * jy_mp).imag


def test_d_vector_components():
    p = ModelParams(u=0.5)
    k = KPoint(0.3, -1.1)
    d = d_vector(k, p)
    assert d.dx == pytest.approx(np.sin(0.3))
    assert d.dy == pytest.approx(np.sin(-1.1))
    assert d.dz == pytest.approx(np.cos(0.3) + np.cos(-1.1) + 0.5)
    assert d.d == pytest.approx(np.sqrt(d.dx**2 + d.dy**2 + d.dz**2))


def test_band_gap_edges():
    assert band_gap_edges(ModelParams(u=1.0)) == (2.0, 6.0)
    assert band_gap_edges(ModelParams(u=-1.0)) == (2.0, 6.0)
    lo, hi = band_gap_edges(ModelParams(u=0.5, t=2.0))
    assert lo == pytest.approx(7.0)
    assert hi == pytest.approx(9.0)


@pytest.mark.parametrize(
    "u,expected", [(1.0, 1), (-1.0, -1), (0.5, 1), (-1.9, -1), (3.0, 0), (-3.0, 0)]
)
def test_chern_number_phases(u, expected):
    assert chern_number(ModelParams(u=u), grid_n=64) == expected


def test_chern_number_grid_independent():
    p = ModelParams(u=1.0)
    assert chern_number(p, grid_n=32) == chern_number(p, grid_n=128) == 1


@pytest.mark.parametrize("u", [0.0, 2.0, -2.0])
def test_chern_number_critical_u_raises(u):
    with pytest.raises(DegenerateGapError):
        chern_number(ModelParams(u=u), grid_n=64)


def test_chern_number_rejects_tiny_grid():
    with pytest.raises(ValueError):
        chern_number(ModelParams(u=1.0), grid_n=4)


def test_model_params_validation():
    with pytest.raises(ValueError):
        ModelParams(u=1.0, t=0.0)
    with pytest.raises(ValueError):
        ModelParams(u=1.0, a=-1.0)
    with pytest.raises(ValueError):
        ModelParams(u=1.0, beta_inverse=0.1)


def test_matrix_elements_frozen_values():
    p = ModelParams(u=1.0)
    re_jxjx, im_jxjy = current_matrix_elements(KPoint(np.pi / 2, np.pi / 2), p)
    assert re_jxjx == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert im_jxjy == pytest.approx(0.0, abs=1e-12)
    re_jxjx, im_jxjy = current_matrix_elements(KPoint(0.7, -1.3), p)
    assert re_jxjx == pytest.approx(0.878194786121917, rel=1e-12)
    assert im_jxjy == pytest.approx(0.5286883602290523, rel=1e-12)


def test_matrix_elements_match_eigenvector_oracle():
    rng = np.random.default_rng(7)
    p = ModelParams(u=-1.0)
    for _ in range(25):
        kx, ky = rng.uniform(-np.pi, np.pi, size=2)
        if np.hypot(np.sin(kx), np.sin(ky)) < 1e-3:
            continue
        got = current_matrix_elements(KPoint(float(kx), float(ky)), p)
        want = _eigen_matrix_elements(kx, ky, p)
        assert got[0] == pytest.approx(want[0], rel=1e-10, abs=1e-12)
        assert got[1] == pytest.approx(want[1], rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("k", [KPoint(0.0, 0.0), KPoint(np.pi, 0.0), KPoint(np.pi, np.pi)])
def test_matrix_elements_singular_points_raise(k):
    with pytest.raises(SingularKPointError):
        current_matrix_elements(k, ModelParams(u=1.0))
