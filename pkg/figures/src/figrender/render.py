"""Render intensity-profile CSVs into annotated raster figures.

Consumes exactly the profile CSV contract of the `arago` command line
(header ``r_m,intensity_rel``, numeric rows) and, optionally, a sidecar
JSON carrying the reference width (``{"fwhm_m": ...}``, as emitted by
``arago fwhm --format json``).  The width drawn on the figure is always
recomputed from the CSV itself -- strict central peak, half-maximum
crossings located by linear interpolation between the bracketing
samples, the same definition the command line uses -- and then checked
against the sidecar when one is given; a disagreement above 1 % means a
stale artifact and fails loudly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

CSV_HEADER = "r_m,intensity_rel"
SIDECAR_KEY = "fwhm_m"
MISMATCH_LIMIT = 0.01


class SidecarMismatchError(RuntimeError):
    """Recomputed width disagrees with the sidecar beyond the 1 % limit."""


@dataclass(frozen=True)
class FigureSpec:
    input_csv: str
    output_image: str
    scenario_json: str | None = None
    annotate_fwhm: bool = True
    x_label: str = "r [m]"
    y_label: str = "relative intensity"


@dataclass
class RenderResult:
    output_image: str
    fwhm_m: float | None
    annotation: str | None
    warnings: list[str] = field(default_factory=list)


def read_profile_csv(path: str) -> tuple[list[float], list[float]]:
    """Parse the profile CSV contract; errors carry the offending line number."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise ValueError(f"cannot read {path!r}: {exc}") from exc
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(
            f"{path}:1: expected header {CSV_HEADER!r}, got "
            f"{(lines[0] if lines else '')!r}"
        )
    radii: list[float] = []
    intensity: list[float] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected two comma-separated fields")
        try:
            r = float(parts[0])
            v = float(parts[1])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-numeric row {line!r}") from None
        if not (math.isfinite(r) and math.isfinite(v)):
            raise ValueError(f"{path}:{lineno}: non-finite row {line!r}")
        if radii and r <= radii[-1]:
            raise ValueError(f"{path}:{lineno}: radii must be strictly increasing")
        radii.append(r)
        intensity.append(v)
    if len(radii) < 3:
        raise ValueError(f"{path}: profile needs at least 3 rows, got {len(radii)}")
    return radii, intensity


def central_fwhm(radii: list[float], intensity: list[float]) -> tuple[float, float, float]:
    """Width of the central peak and its two half-maximum crossings.

    Requires a strict maximum at the middle sample (r = 0) with at least
    two samples on each side; raises ValueError otherwise.
    """
    n = len(radii)
    centre = n // 2
    if n < 5:
        raise ValueError("grid too coarse: need at least two samples on each side")
    if radii[centre] != 0.0:
        raise ValueError("profile grid does not sample r = 0")
    peak = intensity[centre]
    if any(v >= peak for i, v in enumerate(intensity) if i != centre):
        raise ValueError("no strict maximum at r = 0")
    half = 0.5 * peak

    def interpolate(i_in: int, i_out: int) -> float:
        r_in, r_out = radii[i_in], radii[i_out]
        y_in, y_out = intensity[i_in], intensity[i_out]
        return r_in + (half - y_in) * (r_out - r_in) / (y_out - y_in)

    right = None
    for i in range(centre + 1, n):
        if intensity[i] < half:
            right = interpolate(i - 1, i)
            break
    left = None
    for i in range(centre - 1, -1, -1):
        if intensity[i] < half:
            left = interpolate(i + 1, i)
            break
    if left is None or right is None:
        raise ValueError("no half-maximum crossing inside the grid")
    return right - left, left, right


def read_sidecar_fwhm(path: str) -> float:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read sidecar {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"sidecar {path!r} is not valid JSON: {exc}") from exc
    value = payload.get(SIDECAR_KEY) if isinstance(payload, dict) else None
    if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
        raise ValueError(
            f"sidecar {path!r} carries no positive numeric {SIDECAR_KEY!r} entry"
        )
    return float(value)


def format_width(fwhm_m: float) -> str:
    """Annotation text with the width at 3 significant digits."""
    return f"FWHM = {fwhm_m:.2e} m"


def render_profile(spec: FigureSpec) -> RenderResult:
    """Write the annotated figure; returns what was drawn.

    The FWHM span is annotated only when the profile supports it (strict
    central peak, crossings inside the grid); otherwise the curve is
    rendered bare and a warning is recorded.  A sidecar disagreeing with
    the recomputed width by more than 1 % raises SidecarMismatchError.
    """
    radii, intensity = read_profile_csv(spec.input_csv)
    result = RenderResult(output_image=spec.output_image, fwhm_m=None, annotation=None)

    width = left = right = None
    if spec.annotate_fwhm:
        try:
            width, left, right = central_fwhm(radii, intensity)
        except ValueError as exc:
            result.warnings.append(f"FWHM annotation skipped: {exc}")

    if spec.scenario_json is not None:
        reference = read_sidecar_fwhm(spec.scenario_json)
        if width is None:
            result.warnings.append(
                "sidecar width not cross-checked: no width extracted from the CSV"
            )
        elif abs(width - reference) / reference > MISMATCH_LIMIT:
            raise SidecarMismatchError(
                f"stale artifact: CSV gives FWHM {width:.6e} m but sidecar "
                f"{spec.scenario_json!r} says {reference:.6e} m "
                f"(mismatch {abs(width - reference) / reference:.2%} > 1%)"
            )

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    try:
        ax.plot(radii, intensity, lw=1.2, color="#1f4e8c")
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(spec.y_label)
        ax.set_xlim(radii[0], radii[-1])
        ax.set_ylim(bottom=0.0)
        ax.grid(True, alpha=0.3)
        if width is not None:
            peak = intensity[len(radii) // 2]
            half = 0.5 * peak
            annotation = format_width(width)
            ax.annotate(
                "", xy=(right, half), xytext=(left, half),
                arrowprops=dict(arrowstyle="<->", color="#b03030", lw=1.2),
            )
            ax.text(
                0.0, half * 1.06, annotation,
                ha="center", va="bottom", color="#b03030", fontsize=10,
            )
            result.fwhm_m = width
            result.annotation = annotation
        fig.tight_layout()
        fig.savefig(spec.output_image, dpi=150)
    finally:
        plt.close(fig)
    return result
