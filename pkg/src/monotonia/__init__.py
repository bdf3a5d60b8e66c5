"""Indices of non-monotonicity for functions and non-positivity for measures.

The library models sampled functions as piecewise-linear interpolants, which
makes every index an exact finite sum rather than a quadrature estimate.  On
top of the core indices sit orderings between functions (index-based and
survival-curve based), Jordan decomposition of finitely represented signed
measures, and the weighted-premium machinery that motivated the indices.

A compiled extension accelerates the inner reductions when available; the
pure-Python fallback is numerically identical.  Set MONO_BACKEND=python or
MONO_BACKEND=compiled to force a choice, and check ``BACKEND_NAME`` to see
which one is active.
"""

from ._backend import BACKEND_NAME, HAVE_COMPILED
from .errors import (
    DegenerateWeightError,
    InvalidInputError,
    InvalidParameterError,
    MonotoniaError,
    NumericalInvariantError,
    UndefinedComparisonError,
    UndefinedIndexError,
    UndefinedRatioError,
)
from .functions import (
    DerivativeProfile,
    DerivativeTransform,
    SampledFunction,
    StandardizedFunction,
    derivative,
    integrate_transform,
    standardize,
    total_variation,
)
from .indices import (
    MonotonicityReport,
    loi,
    loi_norm,
    loi_p,
    lod,
    lod_norm,
    lom,
    lom_norm,
    normalized_indices,
    report,
)
from .measures import (
    DiscreteSignedMeasure,
    GridDensityMeasure,
    JordanPair,
    MixedSignedMeasure,
    jordan,
    lon,
    lon_norm,
    lop,
    lop_norm,
    los,
    los_norm,
)
from .orderings import (
    OrderingVerdict,
    SurvivalCurve,
    compare,
    compare_strict,
    survival_minus,
    survival_plus,
)
from .risk import (
    WEIGHT_CATALOG,
    EmpiricalDistribution,
    LoadingReport,
    WeightSpec,
    gain_loss,
    loading_covariance,
    loading_report,
    premium,
    quantile,
    v_theta,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND_NAME",
    "HAVE_COMPILED",
    "MonotoniaError",
    "InvalidInputError",
    "InvalidParameterError",
    "UndefinedIndexError",
    "UndefinedComparisonError",
    "DegenerateWeightError",
    "UndefinedRatioError",
    "NumericalInvariantError",
    "SampledFunction",
    "StandardizedFunction",
    "DerivativeProfile",
    "DerivativeTransform",
    "standardize",
    "derivative",
    "integrate_transform",
    "total_variation",
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
    "SurvivalCurve",
    "OrderingVerdict",
    "survival_minus",
    "survival_plus",
    "compare",
    "compare_strict",
    "DiscreteSignedMeasure",
    "GridDensityMeasure",
    "MixedSignedMeasure",
    "JordanPair",
    "jordan",
    "lop",
    "lon",
    "los",
    "lop_norm",
    "lon_norm",
    "los_norm",
    "EmpiricalDistribution",
    "WeightSpec",
    "LoadingReport",
    "WEIGHT_CATALOG",
    "quantile",
    "premium",
    "loading_covariance",
    "v_theta",
    "gain_loss",
    "loading_report",
]
