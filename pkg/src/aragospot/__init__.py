"""Arago-spot diffraction of matter waves around an opaque disc, plus the
chained solar-neutrino estimation pipeline built on top of it."""

from .bessel import bessel_j0
from .constants import Constants, DimensionError, Quantity, Unit, constants_profile
from .fresnel import (
    DEFAULT_QUADRATURE,
    DiffractionScenario,
    HalfMaxNotFoundError,
    IntensityProfile,
    NonCentralPeakError,
    OracleRefusalError,
    QuadratureConvergenceError,
    QuadratureSettings,
    amplitude,
    arago_width,
    fwhm,
    inclination_factor,
    intensity_profile,
    linearized_path_length,
    on_axis_amplitude_closed_form,
    oracle_amplitude,
    path_length,
    smoothness_bound,
)
from .kinematics import (
    KickAccumulation,
    accumulate,
    aligned_log10_probability,
    heisenberg_kick,
    sector_probability,
    velocity_change,
)
from .neutrino import (
    NeutrinoModel,
    NeutrinoSpecies,
    arago_contrast,
    de_broglie_wavelength,
    diffracted_rate,
    interaction_fraction,
    pp_chain_species,
    solar_neutrino_model,
    total_pass_rate,
)
from .pipeline import (
    APRIL_2024_ECLIPSE,
    EclipseEvent,
    PipelineError,
    PipelineReport,
    ReportEntry,
    neutrino_count,
    run_paper_pipeline,
    totality_duration,
)

__version__ = "0.1.0"

__all__ = [
    "APRIL_2024_ECLIPSE",
    "Constants",
    "DEFAULT_QUADRATURE",
    "DiffractionScenario",
    "DimensionError",
    "EclipseEvent",
    "HalfMaxNotFoundError",
    "IntensityProfile",
    "KickAccumulation",
    "NeutrinoModel",
    "NeutrinoSpecies",
    "NonCentralPeakError",
    "OracleRefusalError",
    "PipelineError",
    "PipelineReport",
    "Quantity",
    "QuadratureConvergenceError",
    "QuadratureSettings",
    "ReportEntry",
    "Unit",
    "accumulate",
    "aligned_log10_probability",
    "amplitude",
    "arago_contrast",
    "arago_width",
    "bessel_j0",
    "constants_profile",
    "de_broglie_wavelength",
    "diffracted_rate",
    "fwhm",
    "heisenberg_kick",
    "inclination_factor",
    "intensity_profile",
    "interaction_fraction",
    "linearized_path_length",
    "neutrino_count",
    "on_axis_amplitude_closed_form",
    "oracle_amplitude",
    "path_length",
    "pp_chain_species",
    "run_paper_pipeline",
    "sector_probability",
    "smoothness_bound",
    "solar_neutrino_model",
    "totality_duration",
    "total_pass_rate",
    "velocity_change",
]
