"""Squeezing dynamics near quantum critical points of the transverse-field
one-axis-twisting model and the Dicke model, in the large-spin boson theory."""

from .errors import ConsistencyError, ConvergenceFailure, CriticalSingularity, DomainError, SchemaError
from .params import (
    DickeParams,
    OatParams,
    Phase,
    classify_phase,
    delta_to_psi,
    detuning_convert,
    dicke_order_parameters,
    oat_order_parameter,
    phase_boundary_samples,
    psi_to_delta,
    xi_from_side,
)
from .oat import (
    oat_abc,
    oat_bogoliubov_angle,
    oat_boson_coefficients,
    oat_mode,
    oat_series_zeta,
    oat_squeezing_period,
    oat_timeseries,
    oat_zeta_s,
)
from .dicke import (
    dicke_abc_photon,
    dicke_abc_photon_exchange,
    dicke_abc_spin,
    dicke_bogoliubov,
    dicke_boson_coefficients,
    dicke_timeseries,
    dicke_zeta,
)
from .fit import ScalingFit, SweepRecord, extract_period, extract_zeta_min, fit_affine_square, fit_powerlaw
from .sweep import RunConfig, run_sweep

__version__ = "0.1.0"
