"""Indices quantifying how far a function is from being monotone.

``loi`` measures the distance from the non-decreasing cone (the integral of
the negative part of the derivative), ``lod`` the distance from the
non-increasing cone, and ``lom`` twice the smaller of the two.  Normalized
variants divide by the total variation and live in [0, 1]; they are undefined
for constant functions and raising is preferred over silently emitting NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .errors import InvalidParameterError, UndefinedIndexError
from .functions import (
    DerivativeProfile,
    DerivativeTransform,
    SampledFunction,
    StandardizedFunction,
    _as_standardized,
    derivative,
    integrate_transform,
)

__all__ = [
    "MonotonicityReport",
    "loi",
    "lod",
    "lom",
    "loi_norm",
    "lod_norm",
    "lom_norm",
    "normalized_indices",
    "loi_p",
    "report",
]


@dataclass(frozen=True)
class MonotonicityReport:
    """All raw and normalized indices of one function, plus interval metadata.

    Normalized fields are ``None`` when the function is constant (zero total
    variation).  ``interval`` records the original sampling interval; the
    indices themselves are invariant under the standardizing shift.
    """

    loi: float
    lod: float
    lom: float
    tv: float
    loi_norm: float | None
    lod_norm: float | None
    lom_norm: float | None
    interval: tuple[float, float]
    p: float | None = None
    loi_p: float | None = None


def loi(g: StandardizedFunction | SampledFunction) -> float:
    """Distance from the set of non-decreasing functions (L1, via the derivative)."""
    return integrate_transform(derivative(g), DerivativeTransform.neg_part())


def lod(g: StandardizedFunction | SampledFunction) -> float:
    """Distance from the set of non-increasing functions."""
    return integrate_transform(derivative(g), DerivativeTransform.pos_part())


def lom(g: StandardizedFunction | SampledFunction) -> float:
    """Twice the smaller of loi and lod; 0 exactly when the function is monotone."""
    profile = derivative(g)
    neg = integrate_transform(profile, DerivativeTransform.neg_part())
    pos = integrate_transform(profile, DerivativeTransform.pos_part())
    return 2.0 * min(neg, pos)


def _split(profile: DerivativeProfile) -> tuple[float, float, float]:
    neg, pos, tv, _ = _backend.sign_split_sums(profile.lengths, profile.slopes)
    return float(neg), float(pos), float(tv)


def normalized_indices(g: StandardizedFunction | SampledFunction) -> tuple[float, float, float]:
    """(loi_norm, lod_norm, lom_norm); raises UndefinedIndexError for constant functions."""
    neg, pos, tv = _split(derivative(g))
    if tv == 0.0:
        raise UndefinedIndexError("normalized indices are undefined for constant functions (zero total variation)")
    up = neg / tv
    down = pos / tv
    return up, down, 2.0 * min(up, down)


def loi_norm(g: StandardizedFunction | SampledFunction) -> float:
    return normalized_indices(g)[0]


def lod_norm(g: StandardizedFunction | SampledFunction) -> float:
    return normalized_indices(g)[1]


def lom_norm(g: StandardizedFunction | SampledFunction) -> float:
    return normalized_indices(g)[2]


def loi_p(g: StandardizedFunction | SampledFunction, p: float) -> float:
    """Lp-distance from the non-decreasing cone: the p-norm of the derivative's negative part.

    Coincides with ``loi`` at p = 1.  The minimizing comparison function is the
    same for every p, so only the size of the gap changes with the exponent.
    """
    p = float(p)
    if not math.isfinite(p) or p < 1.0:
        raise InvalidParameterError(f"p must be a finite real >= 1, got {p}")
    profile = derivative(g)
    total = integrate_transform(profile, DerivativeTransform.neg_part_power(p))
    return total ** (1.0 / p)


def report(f0: SampledFunction, p: float | None = None) -> MonotonicityReport:
    """Standardize ``f0`` and assemble every index into one report.

    Raw indices are always present; normalized fields are ``None`` for
    constant functions.  When ``p`` is given the Lp lack-of-increase index is
    attached as well.
    """
    g = _as_standardized(f0)
    interval = (float(f0.xs[0]), float(f0.xs[-1])) if isinstance(f0, SampledFunction) else (0.0, g.span)
    neg, pos, tv = _split(derivative(g))
    if tv > 0.0:
        up = neg / tv
        down = pos / tv
        norm = (up, down, 2.0 * min(up, down))
    else:
        norm = (None, None, None)
    lp = None if p is None else loi_p(g, p)
    return MonotonicityReport(
        loi=neg,
        lod=pos,
        lom=2.0 * min(neg, pos),
        tv=tv,
        loi_norm=norm[0],
        lod_norm=norm[1],
        lom_norm=norm[2],
        interval=interval,
        p=None if p is None else float(p),
        loi_p=lp,
    )
