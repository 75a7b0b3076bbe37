"""Batch renderer for diffraction-profile CSVs."""

from .render import (
    FigureSpec,
    RenderResult,
    SidecarMismatchError,
    central_fwhm,
    format_width,
    read_profile_csv,
    read_sidecar_fwhm,
    render_profile,
)

__version__ = "0.1.0"

__all__ = [
    "FigureSpec",
    "RenderResult",
    "SidecarMismatchError",
    "central_fwhm",
    "format_width",
    "read_profile_csv",
    "read_sidecar_fwhm",
    "render_profile",
]
