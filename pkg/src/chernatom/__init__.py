"""Casimir-Polder frequency shifts of an excited atom above an anomalous-Hall sheet.

Pipeline: two-band lattice model (qwz) -> Kubo sheet conductivity (kubo) ->
sheet reflection amplitudes (fresnel) -> reflected dyadic Green tensor
(green) -> polarization-contracted frequency shifts (shift), with
closed-form oracles (closed_forms) and a CSV-producing command line (cli).
"""

from .closed_forms import ClosedForm, REGIMES, eval_closed_form, green_far_field
from .errors import (
    ChernAtomError,
    ConvergenceError,
    DegenerateGapError,
    QuadratureToleranceError,
    SingularKPointError,
    SurfaceModeResonanceError,
)
from .fresnel import ReflectionSet, kz_branch, reflection_set, reflection_set_restored
from .green import (
    GreenComponents,
    OscQuadConfig,
    green_imag_axis,
    green_reflected,
    green_reflected_kspace,
    integrand_profile,
)
from .kubo import (
    FINE_STRUCTURE,
    QuadratureConfig,
    SheetConductivity,
    conductivity,
    conductivity_imag_axis,
    load_conductivity_table,
    nondispersive_conductivity,
    save_conductivity_table,
    van_hove_scan,
)
from .qwz import (
    DVector,
    KPoint,
    ModelParams,
    band_gap_edges,
    chern_number,
    current_matrix_elements,
    d_vector,
)
from .shift import (
    CIRCULAR_LEFT,
    CIRCULAR_RIGHT,
    PARALLEL_X,
    PERPENDICULAR,
    Polarization,
    ShiftResult,
    contract_resonant,
    imag_axis_conductivity_fn,
    nonresonant_shift,
    polarization,
    resonant_shift,
    shift_curve,
    total_shift,
)

__version__ = "1.0.0"

__all__ = [
    "ChernAtomError",
    "ConvergenceError",
    "DegenerateGapError",
    "QuadratureToleranceError",
    "SingularKPointError",
    "SurfaceModeResonanceError",
    "ModelParams",
    "KPoint",
    "DVector",
    "d_vector",
    "band_gap_edges",
    "chern_number",
    "current_matrix_elements",
    "FINE_STRUCTURE",
    "QuadratureConfig",
    "SheetConductivity",
    "conductivity",
    "conductivity_imag_axis",
    "nondispersive_conductivity",
    "van_hove_scan",
    "save_conductivity_table",
    "load_conductivity_table",
    "ReflectionSet",
    "kz_branch",
    "reflection_set",
    "reflection_set_restored",
    "GreenComponents",
    "OscQuadConfig",
    "green_reflected",
    "green_imag_axis",
    "green_reflected_kspace",
    "integrand_profile",
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
    "ClosedForm",
    "REGIMES",
    "eval_closed_form",
    "green_far_field",
    "__version__",
]
