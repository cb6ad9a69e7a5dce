"""Two-band tight-binding model of the anomalous-Hall sheet.

The Bloch Hamiltonian is H(k) = d(k) . sigma on a square lattice, with

    d_x = t sin(kx a),  d_y = t sin(ky a),  d_z = t (cos(kx a) + cos(ky a)) + u.

The signed gap parameter u selects the topological phase: the lower band
carries Chern number +1 for 0 < u < 2t, -1 for -2t < u < 0 and 0 outside
|u| < 2t.  Everything here is a pure function of (k, parameters); energies
are in units of the hopping t and lengths in units of the lattice constant a.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGapError, SingularKPointError

__all__ = [
    "ModelParams",
    "KPoint",
    "DVector",
    "d_vector",
    "band_gap_edges",
    "chern_number",
    "current_matrix_elements",
]

_SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Hopping t, signed gap parameter u, lattice constant a.

    beta_inverse is the temperature; only the zero-temperature limit is
    supported (step-function band occupations).
    """

    u: float
    t: float = 1.0
    a: float = 1.0
    beta_inverse: float = 0.0

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError("hopping t must be positive")
        if self.a <= 0:
            raise ValueError("lattice constant a must be positive")
        if self.beta_inverse != 0.0:
            raise ValueError("only zero temperature is supported")


@dataclass(frozen=True)
class KPoint:
    """Crystal momentum in the first Brillouin zone, components in [-pi/a, pi/a)."""

    kx: float
    ky: float


@dataclass(frozen=True)
class DVector:
    dx: float
    dy: float
    dz: float
    d: float


def _d_components(kx, ky, p: ModelParams):
    """Vectorized d-vector components; kx, ky may be arrays."""
    dx = p.t * np.sin(kx * p.a)
    dy = p.t * np.sin(ky * p.a)
    dz = p.t * (np.cos(kx * p.a) + np.cos(ky * p.a)) + p.u
    return dx, dy, dz


def d_vector(k: KPoint, p: ModelParams) -> DVector:
    """d-vector and its norm at one k-point."""
    dx, dy, dz = _d_components(k.kx, k.ky, p)
    return DVector(float(dx), float(dy), float(dz), float(np.sqrt(dx * dx + dy * dy + dz * dz)))


def band_gap_edges(p: ModelParams) -> tuple[float, float]:
    """Minimum and maximum direct band gap, (2(2t-|u|), 2(2t+|u|)).

    These two energies separate the low, intermediate and high frequency
    regimes of the sheet conductivity.
    """
    return 2.0 * (2.0 * p.t - abs(p.u)), 2.0 * (2.0 * p.t + abs(p.u))


def chern_number(p: ModelParams, grid_n: int = 64) -> int:
    """Chern number of the lower band by the lattice link-variable method.

    The Berry flux through each plaquette of a grid_n x grid_n momentum grid
    is the phase of the product of the four overlap link variables; the sum
    of the fluxes is 2*pi times an exact integer for any gapped u.

    Raises DegenerateGapError when the gap closes on the grid (u at one of
    the critical values 0, +-2t).
    """
    if grid_n < 8:
        raise ValueError("grid_n must be at least 8")
    ks = -np.pi / p.a + np.arange(grid_n) * (2.0 * np.pi / (p.a * grid_n))
    kxg, kyg = np.meshgrid(ks, ks, indexing="ij")
    dx, dy, dz = _d_components(kxg, kyg, p)
    d = np.sqrt(dx * dx + dy * dy + dz * dz)
    if np.min(d) < 1e-9 * p.t:
        raise DegenerateGapError(
            f"gap closes on the grid (min |d| = {np.min(d):.3e}); u is critical"
        )

    ham = np.empty(kxg.shape + (2, 2), dtype=complex)
    ham[..., 0, 0] = dz
    ham[..., 1, 1] = -dz
    ham[..., 0, 1] = dx - 1j * dy
    ham[..., 1, 0] = dx + 1j * dy
    _, vecs = np.linalg.eigh(ham)
    lower = vecs[..., :, 0]

    link_x = np.einsum("ijk,ijk->ij", lower.conj(), np.roll(lower, -1, axis=0))
    link_y = np.einsum("ijk,ijk->ij", lower.conj(), np.roll(lower, -1, axis=1))
    plaquette = (
        link_x
        * np.roll(link_y, -1, axis=0)
        * np.roll(link_x, -1, axis=1).conj()
        * link_y.conj()
    )
    total = np.angle(plaquette).sum() / (2.0 * np.pi)
    c = int(np.rint(total))
    if abs(total - c) > 1e-6:
        raise DegenerateGapError(f"Berry flux sum {total} is not an integer")
    return c


def _matrix_element_combinations(kx, ky, p: ModelParams):
    """Closed forms for Re<+|jx|-><-|jx|+> and Im<+|jx|-><-|jy|+>.

    Vectorized over kx, ky.  Units: e = hbar = 1, so the products carry
    (t a)^2.  Undefined where dx = dy = 0 (caller must mask those points).
    """
    t, a = p.t, p.a
    dx, dy, dz = _d_components(kx, ky, p)
    d2 = dx * dx + dy * dy + dz * dz
    d = np.sqrt(d2)
    dxy2 = dx * dx + dy * dy
    skx, sky = np.sin(kx * a), np.sin(ky * a)
    ckx, cky = np.cos(kx * a), np.cos(ky * a)
    c2sum = np.cos(2 * kx * a) + np.cos(2 * ky * a)

    im_jxjy = (t**3 * a**2 / (4.0 * d * dxy2)) * (
        (ckx * sky**2 + cky * skx**2) * (2.0 * (dxy2 + t**2) - t**2 * c2sum)
        + 4.0 * t * dz * ckx * cky * (skx**2 + sky**2)
    )
    re_jxjx = ((t * a) ** 2 / (16.0 * d2 * dxy2)) * (
        skx**2
        * (t**2 * c2sum - 2.0 * (dxy2 + t**2))
        * (t**2 * c2sum - 2.0 * (dxy2 + t**2) - 8.0 * t * dz * ckx)
        + 4.0 * t**2 * dz**2 * np.sin(2 * kx * a) ** 2
        + 16.0 * t**2 * d2 * ckx**2 * sky**2
    )
    return re_jxjx, im_jxjy


def current_matrix_elements(k: KPoint, p: ModelParams) -> tuple[float, float]:
    """Interband current-operator combinations entering the conductivity.

    Returns (Re<+|jx|-><-|jx|+>, Im<+|jx|-><-|jy|+>) between the upper (+)
    and lower (-) band at k, in units e = hbar = 1.

    Raises SingularKPointError at the high-symmetry points with
    dx^2 + dy^2 below tolerance, where the closed forms are indeterminate.
    """
    dx, dy, _ = _d_components(k.kx, k.ky, p)
    if dx * dx + dy * dy <= _SINGULAR_TOL * p.t**2:
        raise SingularKPointError(f"dx^2+dy^2 vanishes at k=({k.kx}, {k.ky})")
    re_jxjx, im_jxjy = _matrix_element_combinations(k.kx, k.ky, p)
    return float(re_jxjx), float(im_jxjy)
