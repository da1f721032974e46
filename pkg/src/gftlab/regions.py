"""Target regions for the subordination checks, plus the phi_b boundary curve.

Three regions appear as operator images: the open half plane {Re w > beta},
the open disc {|w - b| < b}, and the open strip {0 < Re w < 2b}. Membership
at floating point is reported through a signed margin rather than a hard
boolean tie-break; verification harnesses compare margins against their
tolerance budgets.

The boundary curve of phi_b(z) = (1 + z)/(1 + (1/b - 1) z) is exported as
CSV data (``phi,re,im``, 17 significant digits) so any plotting tool can
draw it; no image rendering happens here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Union

import numpy as np

from .gft_ops import LParams

__all__ = [
    "HalfPlane",
    "Disc",
    "Strip",
    "Region",
    "contains",
    "phi_b_at",
    "re_phi_on_boundary",
    "boundary_re_profile",
    "boundary_angles",
    "phi_boundary_curve",
    "curve_csv_lines",
    "write_curve_csv",
]


@dataclass(frozen=True)
class HalfPlane:
    """Open half plane {Re w > beta}."""

    beta: float

    def __post_init__(self) -> None:
        if not self.beta < 1.0:
            raise ValueError("half-plane level must satisfy beta < 1")

    def margin(self, w: complex) -> float:
        return w.real - self.beta


@dataclass(frozen=True)
class Disc:
    """Open disc {|w - b| < b}."""

    b: float

    def __post_init__(self) -> None:
        if not self.b > 0.5:
            raise ValueError("disc parameter must exceed 1/2")

    def margin(self, w: complex) -> float:
        return self.b - abs(w - self.b)


@dataclass(frozen=True)
class Strip:
    """Open strip {0 < Re w < 2 b}."""

    b: float

    def __post_init__(self) -> None:
        if not self.b > 0.5:
            raise ValueError("strip parameter must exceed 1/2")

    def margin(self, w: complex) -> float:
        return min(w.real, 2.0 * self.b - w.real)


Region = Union[HalfPlane, Disc, Strip]


def contains(region: Region, w: complex) -> tuple[bool, float]:
    """Strict membership plus the signed margin (positive iff inside)."""
    m = region.margin(complex(w))
    return m > 0.0, m


def phi_b_at(params: LParams, z: complex) -> complex:
    """Direct Moebius evaluation of (1 + z)/(1 + c z)."""
    return (1.0 + z) / (1.0 + params.c * z)


def re_phi_on_boundary(params: LParams, phi: float) -> float:
    """Re of the boundary value phi_b(e^{i phi}) in closed form.

    Equals (1/b)(1 + cos phi) / (1 + 2 c cos phi + c^2) with c = 1/b - 1;
    the denominator is |1 + c e^{i phi}|^2 and stays positive because
    |c| < 1 for every b > 1/2.
    """
    c = params.c
    denom = 1.0 + 2.0 * c * math.cos(phi) + c * c
    assert denom > 0.0
    return (1.0 / params.b) * (1.0 + math.cos(phi)) / denom


def boundary_re_profile(x, b: float):
    """Boundary Re as a function of x = cos(phi): h(x) = (1/b)(1+x)/(1+2cx+c^2).

    Nondecreasing on [-1, 1] with h(-1) = 0 and h(1) = 2b; accepts scalars
    or ndarrays.
    """
    c = 1.0 / b - 1.0
    return (1.0 / b) * (1.0 + x) / (1.0 + 2.0 * c * x + c * c)


def boundary_angles(num_points: int) -> np.ndarray:
    """Equally spaced angles in [0, 2 pi)."""
    return 2.0 * np.pi * np.arange(num_points) / num_points


def phi_boundary_curve(params: LParams, num_points: int) -> list[complex]:
    """Boundary samples phi_b(e^{i phi_j}) at equally spaced angles."""
    if num_points < 3:
        raise ValueError("need at least 3 boundary samples")
    z = np.exp(1j * boundary_angles(num_points))
    w = (1.0 + z) / (1.0 + params.c * z)
    return [complex(v) for v in w]


def curve_csv_lines(params: LParams, num_points: int) -> list[str]:
    """CSV rows for the boundary curve: header then phi,re,im per sample."""
    angles = boundary_angles(num_points)
    points = phi_boundary_curve(params, num_points)
    lines = ["phi,re,im"]
    for phi, w in zip(angles, points):
        lines.append(f"{phi:.17g},{w.real:.17g},{w.imag:.17g}")
    return lines


def write_curve_csv(fh: IO[str], params: LParams, num_points: int) -> None:
    fh.write("\n".join(curve_csv_lines(params, num_points)) + "\n")
