"""Reflected dyadic Green tensor of the conductive sheet at coincident points.

Only the independent entries are computed: G_xx = G_yy, G_xy = -G_yx and
G_zz, all made dimensionless by (c/omega10)^3 and parametrized by the
dimensionless atom-surface distance eta = 2 omega10 z0 / c.

At the transition frequency each component splits into a propagating part
with an oscillatory integrand over the phase variable t = kz_tilde * eta,
t in [0, eta], plus an evanescent part with an exponentially decaying
integrand over t = ell * eta (kz_tilde = i ell), truncated at t_max.  Both
integrands are evaluated in the algebraically cancelled form (multiplied
through by t/eta) so the t -> 0 endpoint is finite.

On the imaginary frequency axis all integrands are real and decaying; those
components are integrated directly over the parallel wavevector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from ._quad import integrate_adaptive
from .fresnel import _coefficients, kz_branch
from .kubo import SheetConductivity

__all__ = [
    "OscQuadConfig",
    "GreenComponents",
    "green_reflected",
    "green_imag_axis",
    "green_reflected_kspace",
    "integrand_profile",
]


@dataclass(frozen=True)
class OscQuadConfig:
    """Quadrature knobs for the Green-tensor integrals.

    panel_width bounds the phase advance per Gauss panel on the oscillatory
    segment; evanescent_cutoff truncates the decaying segment with error
    below exp(-cutoff) of scale.
    """

    panel_width: float = np.pi / 4.0
    rel_tol: float = 1e-9
    evanescent_cutoff: float = 60.0
    max_subdivisions: int = 4000

    def __post_init__(self):
        if not (0 < self.panel_width <= np.pi / 2):
            raise ValueError("panel_width must lie in (0, pi/2]")
        if min(self.rel_tol, self.evanescent_cutoff, self.max_subdivisions) <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class GreenComponents:
    eta: float
    gxx: complex
    gxy: complex
    gzz: complex
    parts: dict | None = None


def _regularize_sxx(
    eta: float, sxx: complex, sxy: complex, t_max: float, min_width: float
) -> complex:
    """Dissipative regularization of the evanescent surface-mode pole.

    The evanescent denominator tau(1+s2)+i(tau^2-1)sxx has a zero at real
    tau when the reactive conductivity is lossless: a guided TM mode at
    tau > 1 for Im sigma_xx > 0, a TE mode just beyond the light line
    (tau ~ |Im sigma_xx| < 1) for Im sigma_xx < 0.  Physically the pole
    sits off the path by the residual dissipation Re sigma_xx -> 0+
    (passivity).  If that loss leaves the pole narrower than quadrature can
    resolve, add just enough real conductivity to widen it to a resolvable
    Lorentzian; the induced error is O(width^2), far below quadrature
    tolerance.
    """
    s_im = sxx.imag
    if s_im == 0:
        return sxx
    s2 = sxx * sxx + sxy * sxy
    b = 1.0 + s2.real
    root = np.sqrt(b * b + 4.0 * s_im * s_im)
    # positive root of s_im*tau^2 - b*tau - s_im = 0 for either sign of s_im
    tau_star = (b + root) / (2.0 * s_im) if s_im > 0 else (b - root) / (2.0 * s_im)
    if tau_star * eta >= t_max:
        return sxx
    d_re = abs(b - 2.0 * tau_star * s_im)
    d_im = abs(tau_star * s2.imag + (tau_star**2 - 1.0) * sxx.real)
    width_t = eta * d_im / d_re
    width_req = 50.0 * min_width
    if width_t >= width_req:
        return sxx
    eps = width_req * d_re / (eta * abs(tau_star**2 - 1.0))
    return sxx + eps


def _gh_parts(eta: float, sxx: complex, sxy: complex, cfg: OscQuadConfig):
    """The six propagating/evanescent integrals at the transition frequency."""
    min_width = 1e-6
    sxx = _regularize_sxx(eta, sxx, sxy, cfg.evanescent_cutoff, min_width)
    s2 = sxx * sxx + sxy * sxy

    def g_den(tau):
        return tau * (1.0 + s2) + (1.0 + tau * tau) * sxx

    def h_den(tau):
        return tau * (1.0 + s2) + 1j * (tau * tau - 1.0) * sxx

    def g1(t):
        tau = t / eta
        num = tau * (1.0 + tau * tau) * s2 + (1.0 + tau**4) * sxx
        return num / g_den(tau) * np.exp(1j * t)

    def g2(t):
        tau = t / eta
        return t * tau * sxy / g_den(tau) * np.exp(1j * t)

    def g3(t):
        tau = t / eta
        num = (1.0 - tau * tau) * (tau * s2 + tau * tau * sxx)
        return num / g_den(tau) * np.exp(1j * t)

    def h1(t):
        tau = t / eta
        num = tau * (1.0 - tau * tau) * s2 - 1j * (1.0 + tau**4) * sxx
        return num / h_den(tau) * np.exp(-t)

    def h2(t):
        tau = t / eta
        return t * tau * sxy / h_den(tau) * np.exp(-t)

    def h3(t):
        tau = t / eta
        num = (1.0 + tau * tau) * (tau * s2 + 1j * tau * tau * sxx)
        return num / h_den(tau) * np.exp(-t)

    kw = dict(
        rel_tol=cfg.rel_tol,
        max_subdivisions=cfg.max_subdivisions,
        min_width=min_width,
    )
    # the propagating integrand varies on the scale t ~ eta*|sxx| near t = 0,
    # so its resolution floor must shrink with the interval
    osc = dict(kw, max_width=cfg.panel_width)
    osc["min_width"] = min(min_width, 1e-4 * eta)
    t_max = cfg.evanescent_cutoff
    parts = {
        "g1": -0.5j / eta * integrate_adaptive(g1, 0.0, eta, **osc),
        "g2": -1j / eta**2 * integrate_adaptive(g2, 0.0, eta, **osc),
        "g3": 1j / eta * integrate_adaptive(g3, 0.0, eta, **osc),
        "h1": -0.5 / eta * integrate_adaptive(h1, 0.0, t_max, max_width=1.0, **kw),
        "h2": -1j / eta**2 * integrate_adaptive(h2, 0.0, t_max, max_width=1.0, **kw),
        "h3": 1.0 / eta * integrate_adaptive(h3, 0.0, t_max, max_width=1.0, **kw),
    }
    return parts


def green_reflected(
    eta: float, sigma: SheetConductivity, cfg: OscQuadConfig = OscQuadConfig()
) -> GreenComponents:
    """Reflected Green tensor at the transition frequency (omega = omega10).

    sigma must be the sheet conductivity evaluated at that same frequency.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    parts = _gh_parts(eta, complex(sigma.sxx), complex(sigma.sxy), cfg)
    return GreenComponents(
        eta=eta,
        gxx=parts["g1"] + parts["h1"],
        gxy=parts["g2"] + parts["h2"],
        gzz=parts["g3"] + parts["h3"],
        parts=parts,
    )


def green_imag_axis(
    eta: float,
    xi_over_omega10: float,
    sigma_at_ixi: SheetConductivity,
    cfg: OscQuadConfig = OscQuadConfig(),
) -> GreenComponents:
    """Reflected Green tensor at imaginary frequency omega = i*xi.

    With kz = i (xi^2/omega10^2 + k_par^2)^(1/2) every integrand is real and
    exponentially decaying, so the components come out real (Schwarz
    reflection); tiny imaginary residues are rounding noise.
    """
    if eta <= 0 or xi_over_omega10 <= 0:
        raise ValueError("eta and xi_over_omega10 must be positive")
    x = xi_over_omega10
    sxx, sxy = complex(sigma_at_ixi.sxx), complex(sigma_at_ixi.sxy)
    cut = cfg.evanescent_cutoff / eta
    if x >= cut:
        return GreenComponents(eta, 0.0j, 0.0j, 0.0j)
    k_max = np.sqrt(cut * cut - x * x)
    rho = 1j * x

    def fields(kp):
        kappa = np.sqrt(x * x + kp * kp)
        r_ss, r_ps, r_pp, *_ = _coefficients(1j * kappa, rho, sxx, sxy)
        damp = np.exp(-kappa * eta)
        fxx = 0.5 * (kp / kappa) * (-x * x * r_ss + kappa * kappa * r_pp) * damp
        fxy = -x * kp * r_ps * damp
        fzz = (kp**3 / kappa) * r_pp * damp
        return fxx, fxy, fzz

    kw = dict(
        rel_tol=cfg.rel_tol,
        max_width=max(1.0, k_max / 16.0),
        max_subdivisions=cfg.max_subdivisions,
    )
    gxx = integrate_adaptive(lambda kp: fields(kp)[0], 0.0, k_max, **kw)
    gxy = integrate_adaptive(lambda kp: fields(kp)[1], 0.0, k_max, **kw)
    gzz = integrate_adaptive(lambda kp: fields(kp)[2], 0.0, k_max, **kw)
    return GreenComponents(eta, gxx, gxy, gzz)


def _kspace_integrands(k_par, eta: float, sigma: SheetConductivity, omega_ratio: float):
    """Per-k_par integrands of the three components at real frequency."""
    kz = kz_branch(float(k_par), omega_ratio)
    sxx, sxy = complex(sigma.sxx), complex(sigma.sxy)
    r_ss, r_ps, r_pp, *_ = _coefficients(kz, complex(omega_ratio), sxx, sxy)
    phase = np.exp(1j * kz * eta)
    fxx = 0.5j * (k_par / kz) * (omega_ratio**2 * r_ss - kz * kz * r_pp) * phase
    fxy = 1j * k_par * omega_ratio * r_ps * phase
    fzz = 1j * (k_par**3 / kz) * r_pp * phase
    return fxx, fxy, fzz


def green_reflected_kspace(
    eta: float,
    sigma: SheetConductivity,
    omega_ratio: float = 1.0,
    cfg: OscQuadConfig = OscQuadConfig(),
) -> GreenComponents:
    """Independent evaluation route: direct k_par integration without the
    phase-variable substitution.

    Slower and only integrably singular at the light line; kept as a
    cross-check of green_reflected and for general omega/omega10 ratios.
    Unreliable when Re sigma_xx is so small that a guided-mode pole sits
    unresolvably close to the integration path (green_reflected regularizes
    that case explicitly; this route does not).
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    k_light = omega_ratio
    k_max = np.sqrt(k_light**2 + (cfg.evanescent_cutoff / eta) ** 2)

    def piece(idx, a, b):
        re = quad(
            lambda kp: _kspace_integrands(kp, eta, sigma, omega_ratio)[idx].real,
            a, b, limit=400, epsabs=1e-12, epsrel=1e-9,
        )[0]
        im = quad(
            lambda kp: _kspace_integrands(kp, eta, sigma, omega_ratio)[idx].imag,
            a, b, limit=400, epsabs=1e-12, epsrel=1e-9,
        )[0]
        return complex(re, im)

    comps = [piece(i, 0.0, k_light) + piece(i, k_light, k_max) for i in range(3)]
    return GreenComponents(eta, comps[0], comps[1], comps[2])


def integrand_profile(eta: float, sigma: SheetConductivity, k_par_grid) -> np.ndarray:
    """Re g1 + Im g2 of the k_par-resolved integrands of G_xx and G_xy.

    This combination (times -3/4) is the per-mode contribution to the shift
    of a right circularly polarized transition; it decays like
    exp(-2 eta sqrt(k_par^2 - 1)) beyond the light line.
    """
    k_par_grid = np.asarray(k_par_grid, dtype=float)
    out = np.empty_like(k_par_grid)
    for i, kp in enumerate(k_par_grid):
        if kp == 1.0:
            # integrable 1/kz singularity on the light line; sample just off it
            kp = 1.0 - 1e-9
        fxx, fxy, _ = _kspace_integrands(kp, eta, sigma, 1.0)
        out[i] = fxx.real + fxy.imag
    return out
