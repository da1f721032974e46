"""Truncated Taylor-series arithmetic over complex coefficients.

A series is a finite, immutable tuple of complex coefficients; ``coeffs[k]``
multiplies ``z**k`` and the order of the series is ``len(coeffs) - 1``.
Truncations are treated as first-class values: every operation returns a
fresh series, never mutates its inputs, and is exact on polynomial
identities up to the requested order. Because values are immutable and all
functions here are pure, series can be shared between any number of workers
without synchronization.

The on-disk interchange format is JSON: ``{"coeffs": [[re, im], ...]}`` with
index equal to the power of z. Parsers reject non-finite entries.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "TaylorSeries",
    "evaluate",
    "derivative",
    "scale_argument",
    "compose",
    "reciprocal",
    "linear_combination",
    "series_to_json",
    "series_from_json",
    "load_series",
    "dump_series",
    "COEFF_TOL",
]

# Coefficient-wise comparisons throughout the package use this absolute
# tolerance; evaluated values use 1e-9 (see analysis.VALUE_TOL).
COEFF_TOL = 1e-12


def _is_finite(c: complex) -> bool:
    return math.isfinite(c.real) and math.isfinite(c.imag)


@dataclass(frozen=True)
class TaylorSeries:
    """Truncation of a power series: ``coeffs[k]`` is the z**k coefficient."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        cs = tuple(complex(c) for c in self.coeffs)
        if len(cs) == 0:
            raise ValueError("a series needs at least one coefficient")
        if not all(_is_finite(c) for c in cs):
            raise ValueError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def as_array(self) -> np.ndarray:
        """Coefficients as a fresh complex ndarray."""
        return np.asarray(self.coeffs, dtype=complex)


def evaluate(f: TaylorSeries, z: complex) -> complex:
    """Value of the truncation at z, computed by Horner's nested scheme."""
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * z + c
    return acc


def derivative(f: TaylorSeries) -> TaylorSeries:
    """Coefficient-wise derivative; a constant series differentiates to zero."""
    if f.order == 0:
        return TaylorSeries((0j,))
    return TaylorSeries(tuple((k + 1) * c for k, c in enumerate(f.coeffs[1:])))


def scale_argument(f: TaylorSeries, x: complex) -> TaylorSeries:
    """Series of ``f(x z)``: multiplies ``coeffs[k]`` by ``x**k``."""
    out = []
    p = 1 + 0j
    for c in f.coeffs:
        out.append(c * p)
        p *= x
    return TaylorSeries(tuple(out))


def _mul_trunc(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    return np.convolve(a, b)[: order + 1]


def compose(g: TaylorSeries, w: TaylorSeries, order: int) -> TaylorSeries:
    """Truncation of ``g(w(z))`` to the requested order.

    Requires ``w(0) = 0``; otherwise the truncated composition would need
    every coefficient of g at once and is rejected.
    """
    if order < 0:
        raise ValueError("composition order must be nonnegative")
    if w.coeffs[0] != 0:
        raise ValueError("composition requires w(0) = 0")
    wa = np.asarray(w.coeffs[: order + 1], dtype=complex)
    acc = np.zeros(1, dtype=complex)
    for c in reversed(g.coeffs):
        acc = _mul_trunc(acc, wa, order)
        if len(acc) == 0:
            acc = np.zeros(1, dtype=complex)
        acc[0] += c
    out = np.zeros(order + 1, dtype=complex)
    out[: len(acc)] = acc
    return TaylorSeries(tuple(out))


def reciprocal(g: TaylorSeries, order: int) -> TaylorSeries:
    """Truncation of ``1/g``; rejects a vanishing constant term (pole at 0)."""
    if order < 0:
        raise ValueError("reciprocal order must be nonnegative")
    if g.coeffs[0] == 0:
        raise ValueError("reciprocal requires g(0) != 0")
    g0 = g.coeffs[0]
    ga = np.zeros(order + 1, dtype=complex)
    m = min(order + 1, len(g.coeffs))
    ga[:m] = g.coeffs[:m]
    h = np.zeros(order + 1, dtype=complex)
    h[0] = 1.0 / g0
    for k in range(1, order + 1):
        h[k] = -np.sum(ga[1 : k + 1] * h[k - 1 :: -1]) / g0
    return TaylorSeries(tuple(h))


def linear_combination(
    terms: Iterable[tuple[complex, TaylorSeries]],
) -> TaylorSeries:
    """Coefficient-wise weighted sum, padded to the largest order."""
    pairs = list(terms)
    if not pairs:
        raise ValueError("need at least one (weight, series) term")
    order = max(f.order for _, f in pairs)
    out = np.zeros(order + 1, dtype=complex)
    for weight, f in pairs:
        out[: len(f.coeffs)] += complex(weight) * f.as_array()
    return TaylorSeries(tuple(out))


# ---------------------------------------------------------------------------
# JSON interchange


def series_to_json(f: TaylorSeries) -> str:
    return json.dumps({"coeffs": [[c.real, c.imag] for c in f.coeffs]})


def _reject_constant(name: str):
    raise ValueError(f"non-finite number in series JSON: {name}")


def _as_pair(entry: object) -> complex:
    if (
        not isinstance(entry, Sequence)
        or isinstance(entry, (str, bytes))
        or len(entry) != 2
        or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry
        )
    ):
        raise ValueError("series JSON coefficients must be [re, im] pairs")
    c = complex(float(entry[0]), float(entry[1]))
    if not _is_finite(c):
        raise ValueError("series JSON coefficients must be finite")
    return c


def series_from_json(text: str) -> TaylorSeries:
    """Parse the ``{"coeffs": [[re, im], ...]}`` format, rejecting NaN/inf."""
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed series JSON: {exc}") from exc
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError('series JSON must be an object with a "coeffs" key')
    coeffs = data["coeffs"]
    if not isinstance(coeffs, list) or not coeffs:
        raise ValueError("series JSON needs a nonempty coefficient list")
    return TaylorSeries(tuple(_as_pair(entry) for entry in coeffs))


def load_series(path: str | Path) -> TaylorSeries:
    return series_from_json(Path(path).read_text())


def dump_series(path: str | Path, f: TaylorSeries) -> None:
    Path(path).write_text(series_to_json(f) + "\n")
