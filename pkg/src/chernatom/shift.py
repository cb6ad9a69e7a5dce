"""Frequency shift of a two-level atom facing the anomalous-Hall sheet.

The observable line shift splits into a resonant part, the real-frequency
reflected Green tensor contracted with the transition-dipole polarization
vector, and a nonresonant part, an integral of the (real) imaginary-axis
Green tensor weighted by the atomic resolvent.

All shifts are dimensionless: normalized by the free-space decay
constant of the transition, so the perpendicular near-field divergence
approaches -3/(2 eta^3) independently of the material parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .green import GreenComponents, OscQuadConfig, green_imag_axis, green_reflected
from .kubo import (
    QuadratureConfig,
    SheetConductivity,
    conductivity,
    conductivity_imag_axis,
    nondispersive_conductivity,
)
from .qwz import ModelParams

__all__ = [
    "Polarization",
    "PERPENDICULAR",
    "PARALLEL_X",
    "CIRCULAR_RIGHT",
    "CIRCULAR_LEFT",
    "polarization",
    "ShiftResult",
    "contract_resonant",
    "resonant_shift",
    "nonresonant_shift",
    "total_shift",
    "shift_curve",
    "imag_axis_conductivity_fn",
]

_SQ2 = np.sqrt(2.0)


@dataclass(frozen=True)
class Polarization:
    """Unit polarization vector n of the dipole transition."""

    kind: str
    n: tuple[complex, complex, complex]

    def __post_init__(self):
        norm = sum(abs(c) ** 2 for c in self.n)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError("polarization vector must be normalized")


PERPENDICULAR = Polarization("perpendicular", (0j, 0j, 1 + 0j))
PARALLEL_X = Polarization("parallel_x", (1 + 0j, 0j, 0j))
CIRCULAR_RIGHT = Polarization("circular_right", (-1 / _SQ2 + 0j, -1j / _SQ2, 0j))
CIRCULAR_LEFT = Polarization("circular_left", (-1 / _SQ2 + 0j, 1j / _SQ2, 0j))

_ALIASES = {
    "perpendicular": PERPENDICULAR,
    "perp": PERPENDICULAR,
    "parallel_x": PARALLEL_X,
    "par": PARALLEL_X,
    "circular_right": CIRCULAR_RIGHT,
    "circ+": CIRCULAR_RIGHT,
    "circular_left": CIRCULAR_LEFT,
    "circ-": CIRCULAR_LEFT,
}


def polarization(name: str) -> Polarization:
    """Look up a polarization by canonical name or CLI alias."""
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(
            f"unknown polarization {name!r}; choose from {sorted(_ALIASES)}"
        ) from None


@dataclass(frozen=True)
class ShiftResult:
    """Dimensionless frequency shift at one atom-surface distance.

    nonresonant, when present, is the excited-minus-ground difference of the
    imaginary-axis contributions, so total is the observable line shift.
    """

    eta: float
    resonant: float
    nonresonant: float | None
    polarization: str
    omega10_over_t: float
    u_over_t: float | None
    dispersive: bool

    @property
    def total(self) -> float | None:
        if self.nonresonant is None:
            return None
        return self.resonant + self.nonresonant


def _green_matrix(g: GreenComponents) -> np.ndarray:
    return np.array(
        [
            [g.gxx, g.gxy, 0.0],
            [-g.gxy, g.gxx, 0.0],
            [0.0, 0.0, g.gzz],
        ],
        dtype=complex,
    )


def contract_resonant(g: GreenComponents, pol: Polarization) -> float:
    """-(3/8) n_a n_b* (G_ab + G_ba*), the resonant shift contraction.

    Reduces to -(3/4) Re G_zz (perpendicular), -(3/4) Re G_xx (parallel) and
    -(3/4)(Re G_xx +- Im G_xy) (circular right/left).
    """
    n = np.asarray(pol.n, dtype=complex)
    mat = _green_matrix(g)
    val = np.einsum("a,b,ab->", n, n.conj(), mat + mat.conj().T)
    return float(-0.375 * val.real)


def _imag_axis_contraction(g: GreenComponents, pol: Polarization, x: float) -> float:
    """Imaginary-axis kernel S(x): symmetric part of G(i xi) weighted by |n|^2
    components plus the antisymmetric (Hall) part entering with one factor of
    x for circular polarizations."""
    nx, ny, nz = pol.n
    w_plane = abs(nx) ** 2 + abs(ny) ** 2
    w_anti = 2.0 * (ny * np.conj(nx)).imag
    return (
        w_plane * g.gxx.real
        + abs(nz) ** 2 * g.gzz.real
        + w_anti * x * g.gxy.real
    )


def imag_axis_conductivity_fn(
    omega10_over_t: float,
    p: ModelParams | None = None,
    q: QuadratureConfig = QuadratureConfig(),
    nondispersive_chern: int | None = None,
) -> Callable[[float], SheetConductivity]:
    """Conductivity along the imaginary axis as a function of x = xi/omega10.

    With nondispersive_chern set, the frequency-independent quantized tensor
    is used instead of the band-structure evaluation.
    """
    if omega10_over_t <= 0:
        raise ValueError("omega10_over_t must be positive")
    if nondispersive_chern is not None:
        fixed = nondispersive_conductivity(nondispersive_chern)
        return lambda x: fixed
    if p is None:
        raise ValueError("either model parameters or nondispersive_chern required")
    return lambda x: conductivity_imag_axis(x * omega10_over_t, p, q)


def _resolve_sigma(
    omega10_over_t: float,
    p: ModelParams | None,
    nondispersive_chern: int | None,
    q: QuadratureConfig,
):
    if nondispersive_chern is not None:
        sigma_res = nondispersive_conductivity(nondispersive_chern)
    elif p is not None:
        sigma_res = conductivity(omega10_over_t, p, q)
    else:
        raise ValueError("either model parameters or nondispersive_chern required")
    sigma_fn = imag_axis_conductivity_fn(omega10_over_t, p, q, nondispersive_chern)
    return sigma_res, sigma_fn


# Gauss-Legendre nodes reused on every decade panel of the xi integral
_GL_X, _GL_W = np.polynomial.legendre.leggauss(24)


def _nonresonant_excited(
    eta: float,
    pol: Polarization,
    sigma_fn: Callable[[float], SheetConductivity],
    cfg: OscQuadConfig,
    x_min: float = 1e-4,
    x_max: float = 1e3,
) -> float:
    """(3/4pi) int_0^inf dx S(x)/(1+x^2) on [0, x_min] plus log-spaced decades.

    The integrand decays like exp(-x*eta) times an algebraic tail; the cutoff
    x_max leaves a relative truncation error far below quadrature tolerance.
    """

    def f(x):
        g = green_imag_axis(eta, x, sigma_fn(x), cfg)
        return _imag_axis_contraction(g, pol, x) / (1.0 + x * x)

    n_dec = int(np.ceil(np.log10(x_max / x_min)))
    edges = np.concatenate(([0.0], np.geomspace(x_min, x_max, n_dec + 1)))
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        half, mid = 0.5 * (hi - lo), 0.5 * (hi + lo)
        nodes = mid + half * _GL_X
        total += half * np.sum(_GL_W * np.array([f(x) for x in nodes]))
    return 0.75 / np.pi * total


def resonant_shift(
    pol: Polarization,
    omega10_over_t: float,
    eta: float,
    p: ModelParams | None = None,
    nondispersive_chern: int | None = None,
    q: QuadratureConfig = QuadratureConfig(),
    cfg: OscQuadConfig = OscQuadConfig(),
) -> ShiftResult:
    """Resonant shift: conductivity at omega10, Green tensor, contraction."""
    if eta <= 0:
        raise ValueError("eta must be positive")
    sigma_res, _ = _resolve_sigma(omega10_over_t, p, nondispersive_chern, q)
    res = contract_resonant(green_reflected(eta, sigma_res, cfg), pol)
    return ShiftResult(
        eta=eta,
        resonant=res,
        nonresonant=None,
        polarization=pol.kind,
        omega10_over_t=omega10_over_t,
        u_over_t=None if p is None else p.u / p.t,
        dispersive=nondispersive_chern is None,
    )


def nonresonant_shift(
    state: str,
    pol: Polarization,
    omega10_over_t: float,
    eta: float,
    p: ModelParams | None = None,
    nondispersive_chern: int | None = None,
    q: QuadratureConfig = QuadratureConfig(),
    cfg: OscQuadConfig = OscQuadConfig(),
) -> float:
    """Nonresonant shift of one atomic level (dimensionless).

    The ground-state value is the negative of the excited-state one; their
    difference is the nonresonant part of the line shift.
    """
    if state not in ("excited", "ground"):
        raise ValueError("state must be 'excited' or 'ground'")
    if eta <= 0:
        raise ValueError("eta must be positive")
    _, sigma_fn = _resolve_sigma(omega10_over_t, p, nondispersive_chern, q)
    val = _nonresonant_excited(eta, pol, sigma_fn, cfg)
    return val if state == "excited" else -val


def total_shift(
    pol: Polarization,
    omega10_over_t: float,
    eta: float,
    p: ModelParams | None = None,
    nondispersive_chern: int | None = None,
    q: QuadratureConfig = QuadratureConfig(),
    cfg: OscQuadConfig = OscQuadConfig(),
    include_nonresonant: bool = True,
) -> ShiftResult:
    """Full line shift; with include_nonresonant=False the nonresonant field
    stays empty and total is undefined."""
    out = resonant_shift(pol, omega10_over_t, eta, p, nondispersive_chern, q, cfg)
    if not include_nonresonant:
        return out
    excited = nonresonant_shift(
        "excited", pol, omega10_over_t, eta, p, nondispersive_chern, q, cfg
    )
    ground = -excited
    return ShiftResult(
        eta=out.eta,
        resonant=out.resonant,
        nonresonant=excited - ground,
        polarization=out.polarization,
        omega10_over_t=out.omega10_over_t,
        u_over_t=out.u_over_t,
        dispersive=out.dispersive,
    )


def shift_curve(
    etas,
    pol: Polarization,
    omega10_over_t: float,
    p: ModelParams | None = None,
    nondispersive_chern: int | None = None,
    q: QuadratureConfig = QuadratureConfig(),
    cfg: OscQuadConfig = OscQuadConfig(),
    include_nonresonant: bool = False,
) -> list[ShiftResult]:
    """Shift versus distance at fixed transition frequency.

    Conductivity evaluations are cached across distances, so the cost is
    dominated by the Green-tensor quadratures.
    """
    return [
        total_shift(
            pol,
            omega10_over_t,
            float(eta),
            p,
            nondispersive_chern,
            q,
            cfg,
            include_nonresonant=include_nonresonant,
        )
        for eta in np.asarray(etas, dtype=float)
    ]
