"""Dimensionless sheet conductivity from the Kubo formula.

The longitudinal and Hall components are Brillouin-zone integrals of the
interband current matrix elements,

    sigma_xx(w) =  int d2k/(2pi)^2  Re<jx jx>/(2d) [ pi (delta(w-2d) + delta(w+2d))
                                                     + 2iw / (w^2 - 4d^2) ],
    sigma_xy(w) = -int d2k/(2pi)^2  Im<jx jy>/(2d) [ 4d / (4d^2 - w^2)
                                                     + i pi (delta(w-2d) - delta(w+2d)) ],

in units e = hbar = t = a = 1 and with the zero-temperature occupation
factor already applied.  Delta functions are broadened to normalized
Gaussians and the principal-value resolvents get a small imaginary shift;
both widths live in QuadratureConfig.  The dimensionless tensor reported
everywhere downstream is sigma_tilde = 2*pi*sigma/c = 2*pi*alpha*sigma.

On the imaginary frequency axis (w = i xi) the delta terms drop and the
resolvents become smooth real functions, so no broadening is applied there.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace

import numpy as np
from scipy.constants import alpha as FINE_STRUCTURE

from .errors import ConvergenceError
from .qwz import ModelParams, band_gap_edges, _d_components, _matrix_element_combinations

__all__ = [
    "FINE_STRUCTURE",
    "QuadratureConfig",
    "SheetConductivity",
    "conductivity",
    "conductivity_imag_axis",
    "nondispersive_conductivity",
    "van_hove_scan",
    "save_conductivity_table",
    "load_conductivity_table",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Brillouin-zone quadrature knobs.

    bz_grid_n points per axis on a midpoint grid (even, so no point lands on
    the sin kx = sin ky = 0 lines); broadenings are in units of t.
    """

    bz_grid_n: int = 600
    delta_broadening: float = 0.02
    pv_broadening: float = 0.02
    convergence_factor: float = 2.0

    def __post_init__(self):
        if self.bz_grid_n <= 0 or self.bz_grid_n % 2:
            raise ValueError("bz_grid_n must be a positive even integer")
        if min(self.delta_broadening, self.pv_broadening, self.convergence_factor) <= 0:
            raise ValueError("broadenings and convergence_factor must be positive")


@dataclass(frozen=True)
class SheetConductivity:
    """Dimensionless conductivity tensor at one frequency.

    sxx and sxy are sigma_tilde_xx and sigma_tilde_xy; the omitted entries
    follow from sigma_yy = sigma_xx and sigma_yx = -sigma_xy.  For
    regime == "imaginary_axis" the frequency field holds xi/t and both
    components are real.
    """

    omega_over_t: float
    sxx: complex
    sxy: complex
    regime: str


def classify_regime(omega_over_t: float, p: ModelParams) -> str:
    lo, hi = band_gap_edges(p)
    w = omega_over_t * p.t
    if omega_over_t == 0.0:
        return "static"
    if w < lo:
        return "low"
    if w > hi:
        return "high"
    return "intermediate"


def _midpoint_grid(p: ModelParams, n: int):
    ks = (-np.pi + (np.arange(n) + 0.5) * (2.0 * np.pi / n)) / p.a
    kx, ky = np.meshgrid(ks, ks, indexing="ij")
    return kx, ky


def _bz_fields(p: ModelParams, n: int):
    kx, ky = _midpoint_grid(p, n)
    dx, dy, dz = _d_components(kx, ky, p)
    d = np.sqrt(dx * dx + dy * dy + dz * dz)
    re_jxjx, im_jxjy = _matrix_element_combinations(kx, ky, p)
    weight = (2.0 * np.pi / (n * p.a)) ** 2 / (2.0 * np.pi) ** 2
    return d, re_jxjx, im_jxjy, weight


def _gauss_delta(x, width):
    return np.exp(-0.5 * (x / width) ** 2) / (width * np.sqrt(2.0 * np.pi))


def _conductivity_raw(omega: float, p: ModelParams, q: QuadratureConfig, n: int):
    """sigma_xx, sigma_xy (natural units) at real frequency omega (units of t)."""
    d, re_jxjx, im_jxjy, weight = _bz_fields(p, n)
    two_d = 2.0 * d
    width = q.delta_broadening * p.t
    deltas_sum = _gauss_delta(omega - two_d, width) + _gauss_delta(omega + two_d, width)
    deltas_diff = _gauss_delta(omega - two_d, width) - _gauss_delta(omega + two_d, width)
    resolvent = np.real(1.0 / (omega**2 - two_d**2 + 1j * q.pv_broadening * p.t * omega))

    sxx_re = np.pi * np.sum(re_jxjx / two_d * deltas_sum) * weight
    sxx_im = 2.0 * omega * np.sum(re_jxjx / two_d * resolvent) * weight
    sxy_re = 2.0 * np.sum(im_jxjy * resolvent) * weight
    sxy_im = -np.pi * np.sum(im_jxjy / two_d * deltas_diff) * weight
    return complex(sxx_re, sxx_im), complex(sxy_re, sxy_im)


def _conductivity_imag_raw(xi: float, p: ModelParams, q: QuadratureConfig, n: int):
    """sigma_xx(i xi), sigma_xy(i xi) (natural units, real valued)."""
    d, re_jxjx, im_jxjy, weight = _bz_fields(p, n)
    two_d = 2.0 * d
    sxx = np.sum(re_jxjx / two_d * 2.0 * xi / (xi**2 + two_d**2)) * weight
    sxy = -np.sum(im_jxjy * 2.0 / (xi**2 + two_d**2)) * weight
    return complex(sxx), complex(sxy)


_cache: dict = {}
_cache_lock = threading.Lock()


def _cached(key, compute):
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    value = compute()
    with _cache_lock:
        _cache.setdefault(key, value)
    return value


def conductivity(
    omega_over_t: float,
    p: ModelParams,
    q: QuadratureConfig = QuadratureConfig(),
    check_convergence: bool = False,
) -> SheetConductivity:
    """Dimensionless conductivity tensor at real frequency hbar*omega/t.

    With check_convergence the grid is refined by convergence_factor and a
    relative change above 1e-3 in either component raises ConvergenceError.
    """
    if omega_over_t < 0:
        raise ValueError("omega_over_t must be non-negative")
    key = ("real", omega_over_t, p, q.bz_grid_n, q.delta_broadening, q.pv_broadening)
    sxx, sxy = _cached(
        key, lambda: _conductivity_raw(omega_over_t * p.t, p, q, q.bz_grid_n)
    )
    if check_convergence:
        n_fine = 2 * round(q.convergence_factor * q.bz_grid_n / 2)
        fxx, fxy = _conductivity_raw(omega_over_t * p.t, p, q, n_fine)
        scale = max(abs(fxx), abs(fxy), FINE_STRUCTURE / (2 * np.pi))
        if max(abs(fxx - sxx), abs(fxy - sxy)) > 1e-3 * scale:
            raise ConvergenceError(
                f"BZ quadrature not converged at omega/t={omega_over_t}"
            )
    scale = 2.0 * np.pi * FINE_STRUCTURE
    return SheetConductivity(
        omega_over_t, scale * sxx, scale * sxy, classify_regime(omega_over_t, p)
    )


def conductivity_imag_axis(
    xi_over_t: float,
    p: ModelParams,
    q: QuadratureConfig = QuadratureConfig(),
    check_convergence: bool = False,
) -> SheetConductivity:
    """Dimensionless conductivity on the imaginary frequency axis, at hbar*xi/t.

    The integrand is smooth and manifestly real, so no broadening enters.
    """
    if xi_over_t <= 0:
        raise ValueError("xi_over_t must be positive")
    key = ("imag", xi_over_t, p, q.bz_grid_n)
    sxx, sxy = _cached(key, lambda: _conductivity_imag_raw(xi_over_t * p.t, p, q, q.bz_grid_n))
    if check_convergence:
        n_fine = 2 * round(q.convergence_factor * q.bz_grid_n / 2)
        fxx, fxy = _conductivity_imag_raw(xi_over_t * p.t, p, q, n_fine)
        scale = max(abs(fxx), abs(fxy), FINE_STRUCTURE / (2 * np.pi))
        if max(abs(fxx - sxx), abs(fxy - sxy)) > 1e-3 * scale:
            raise ConvergenceError(f"BZ quadrature not converged at xi/t={xi_over_t}")
    scale = 2.0 * np.pi * FINE_STRUCTURE
    return SheetConductivity(xi_over_t, scale * sxx, scale * sxy, "imaginary_axis")


def nondispersive_conductivity(chern: int) -> SheetConductivity:
    """Static-limit tensor: sigma_xx = 0 and sigma_xy = C * alpha exactly."""
    if chern not in (-1, 1):
        raise ValueError("Chern number must be +1 or -1")
    return SheetConductivity(0.0, 0.0 + 0.0j, chern * FINE_STRUCTURE + 0.0j, "static")


def van_hove_scan(
    omega_grid,
    p: ModelParams,
    q: QuadratureConfig = QuadratureConfig(),
) -> tuple[list[SheetConductivity], list[float]]:
    """Conductivity along a sorted frequency grid plus the local maxima
    of |Im sigma_xx| (the van Hove peaks)."""
    omega_grid = np.asarray(omega_grid, dtype=float)
    if omega_grid.ndim != 1 or np.any(np.diff(omega_grid) <= 0):
        raise ValueError("omega_grid must be strictly increasing")
    table = [conductivity(w, p, q) for w in omega_grid]
    mag = np.array([abs(s.sxx.imag) for s in table])
    peaks = [
        float(omega_grid[i])
        for i in range(1, len(mag) - 1)
        if mag[i] >= mag[i - 1] and mag[i] > mag[i + 1]
    ]
    return table, peaks


_TABLE_HEADER = "# omega_over_t, re_sxx, im_sxx, re_sxy, im_sxy"


def save_conductivity_table(path, table) -> None:
    """Plain-text cache: one record per frequency, columns as in the header."""
    with open(path, "w") as fh:
        fh.write(_TABLE_HEADER + "\n")
        for s in table:
            fh.write(
                f"{s.omega_over_t:.17g},{s.sxx.real:.17g},{s.sxx.imag:.17g},"
                f"{s.sxy.real:.17g},{s.sxy.imag:.17g}\n"
            )


def load_conductivity_table(path, p: ModelParams | None = None) -> list[SheetConductivity]:
    rows = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    out = []
    for w, rxx, ixx, rxy, ixy in rows:
        regime = classify_regime(w, p) if p is not None else "unknown"
        out.append(SheetConductivity(float(w), complex(rxx, ixx), complex(rxy, ixy), regime))
    return out
