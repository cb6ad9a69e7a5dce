"""Reflection and transmission of a free-standing conductive sheet.

For a sheet with longitudinal conductivity sigma_xx = sigma_yy and Hall
conductivity sigma_xy = -sigma_yx, the four reflection and four
transmission amplitudes at parallel wavevector k_par and frequency omega
share the denominator

    Delta = 1 + (kz/rho + rho/kz) s_xx + s_xx^2 + s_xy^2,

with s = 2*pi*sigma/c the dimensionless conductivity, rho = omega/omega10,
kz = (rho^2 - k_par^2)^(1/2) (k_par in units of omega10/c) and the branch
Re kz >= 0, Im kz >= 0.  The module evaluates the algebraically cancelled
form (numerator and denominator multiplied by kz), which stays finite on
the light line kz = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SurfaceModeResonanceError
from .kubo import SheetConductivity

__all__ = ["ReflectionSet", "kz_branch", "reflection_set", "reflection_set_restored"]

_DELTA_TOL = 1e-12


@dataclass(frozen=True)
class ReflectionSet:
    r_ss: complex
    r_sp: complex
    r_ps: complex
    r_pp: complex
    t_ss: complex
    t_sp: complex
    t_ps: complex
    t_pp: complex
    delta: complex
    k_par_norm: float
    kz_norm: complex


def kz_branch(k_par_norm: float, omega_ratio: float) -> complex:
    """Normal wavevector ck_z/omega10 with Re >= 0 and Im >= 0.

    Real and positive below the light line (k_par < omega/omega10),
    positive imaginary in the evanescent sector.
    """
    if k_par_norm < 0:
        raise ValueError("k_par_norm must be non-negative")
    val = omega_ratio**2 - k_par_norm**2
    if val >= 0:
        return complex(np.sqrt(val), 0.0)
    return complex(0.0, np.sqrt(-val))


def _coefficients(kz: complex, rho: complex, sxx: complex, sxy: complex):
    """All eight amplitudes from the kz-cancelled forms.

    Valid for complex kz and rho, so the same code serves the real axis and
    the imaginary axis (kz = i*kappa, rho = i*xi/omega10).
    """
    s2 = sxx * sxx + sxy * sxy
    if sxx == 0:
        # purely Hall sheet: every kz factor cancels and the amplitudes are
        # angle independent, including on the light line kz = 0
        inv = 1.0 / (1.0 + s2)
        r_pp = s2 * inv
        r_ps = -sxy * inv
        return -r_pp, r_ps, r_pp, inv, r_ps, inv, kz * (1.0 + s2)
    den = kz * (1.0 + s2) + (kz * kz / rho + rho) * sxx
    r_pp = (kz * s2 + (kz * kz / rho) * sxx) / den
    r_ss = -(kz * s2 + rho * sxx) / den
    r_ps = -kz * sxy / den
    t_ss = (kz + (kz * kz / rho) * sxx) / den
    t_pp = (kz + rho * sxx) / den
    t_ps = r_ps
    return r_ss, r_ps, r_pp, t_ss, t_ps, t_pp, den


def reflection_set(
    k_par_norm: float, omega_ratio: float, sigma: SheetConductivity
) -> ReflectionSet:
    """Reflection and transmission amplitudes at one (k_par, omega).

    Raises SurfaceModeResonanceError when the common denominator Delta is
    numerically zero (a surface-mode pole hit exactly); the caller should
    perturb k_par_norm instead of clamping.
    """
    if omega_ratio <= 0:
        raise ValueError("omega_ratio must be positive")
    kz = kz_branch(k_par_norm, omega_ratio)
    sxx, sxy = complex(sigma.sxx), complex(sigma.sxy)
    try:
        r_ss, r_ps, r_pp, t_ss, t_ps, t_pp, den = _coefficients(kz, omega_ratio, sxx, sxy)
    except ZeroDivisionError:
        # the cancelled denominator kz*Delta vanished identically
        raise SurfaceModeResonanceError(
            f"surface-mode pole at k_par={k_par_norm}, omega_ratio={omega_ratio}"
        ) from None
    if kz != 0:
        delta = den / kz
        if abs(delta) < _DELTA_TOL:
            raise SurfaceModeResonanceError(
                f"surface-mode pole at k_par={k_par_norm}, omega_ratio={omega_ratio}"
            )
    else:
        s2 = sxx * sxx + sxy * sxy
        delta = 1.0 + s2 if sxx == 0 else complex(np.inf)
    return ReflectionSet(
        r_ss=r_ss, r_sp=r_ps, r_ps=r_ps, r_pp=r_pp,
        t_ss=t_ss, t_sp=t_ps, t_ps=t_ps, t_pp=t_pp,
        delta=delta, k_par_norm=k_par_norm, kz_norm=kz,
    )


def reflection_set_restored(
    k_par: float, omega: float, sigma_xx: complex, sigma_xy: complex, c: float = 1.0
) -> ReflectionSet:
    """Dimension-restored amplitudes, written directly in terms of
    2*pi*sigma/c and (1 - (c k_par/omega)^2)^(+-1/2).

    Independent (uncancelled) evaluation route used to cross-check
    reflection_set; it is singular on the light line by construction.
    """
    sxx = 2.0 * np.pi * sigma_xx / c
    sxy = 2.0 * np.pi * sigma_xy / c
    val = 1.0 - (c * k_par / omega) ** 2
    root = complex(np.sqrt(val)) if val >= 0 else complex(0.0, np.sqrt(-val))
    s2 = sxx * sxx + sxy * sxy
    delta = 1.0 + (root + 1.0 / root) * sxx + s2
    r_ss = -(s2 + sxx / root) / delta
    r_ps = -sxy / delta
    r_pp = (s2 + root * sxx) / delta
    t_ss = (1.0 + root * sxx) / delta
    t_pp = (1.0 + sxx / root) / delta
    return ReflectionSet(
        r_ss=r_ss, r_sp=r_ps, r_ps=r_ps, r_pp=r_pp,
        t_ss=t_ss, t_sp=r_ps, t_ps=r_ps, t_pp=t_pp,
        delta=delta, k_par_norm=c * k_par / omega, kz_norm=root,
    )
