"""Pure-NumPy kernel implementations.

Fallback used when the compiled extension is unavailable.  Reductions are
performed in strict left-to-right order (``cumsum`` accumulates sequentially),
so results are bit-identical to a plain Python loop over the cells and to the
compiled kernels in ``_kernels.pyx``.  Powered transforms go through
``math.pow`` per cell for the same reason: ``np.power`` is not guaranteed to
round identically to libm.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"

# Transform codes shared with the compiled kernel.
NEG = 0
POS = 1
ABS = 2
NEG_POW = 3
POS_POW = 4
ABS_POW = 5


def _seq_sum(terms: np.ndarray) -> float:
    if terms.size == 0:
        return 0.0
    return float(np.cumsum(terms)[-1])


def transform_reduce(lengths: np.ndarray, values: np.ndarray, code: int, p: float = 1.0) -> float:
    """Sum of ``length * H(value)`` over cells, accumulated left to right."""
    if code == NEG:
        terms = np.where(values < 0.0, lengths * (-values), 0.0)
    elif code == POS:
        terms = np.where(values > 0.0, lengths * values, 0.0)
    elif code == ABS:
        terms = lengths * np.abs(values)
    elif code in (NEG_POW, POS_POW, ABS_POW):
        if p == 1.0:
            return transform_reduce(lengths, values, code - 3)
        acc = 0.0
        if code == NEG_POW:
            for i in range(values.shape[0]):
                v = values[i]
                if v < 0.0:
                    acc += lengths[i] * math.pow(-v, p)
        elif code == POS_POW:
            for i in range(values.shape[0]):
                v = values[i]
                if v > 0.0:
                    acc += lengths[i] * math.pow(v, p)
        else:
            for i in range(values.shape[0]):
                v = values[i]
                if v != 0.0:
                    acc += lengths[i] * math.pow(abs(v), p)
        return acc
    else:
        raise ValueError(f"unknown transform code {code}")
    return _seq_sum(terms)


def sign_split_sums(lengths: np.ndarray, values: np.ndarray) -> tuple[float, float, float, float]:
    """Fused pass returning (negative mass, positive mass, total mass, signed total)."""
    neg_terms = np.where(values < 0.0, lengths * (-values), 0.0)
    pos_terms = np.where(values > 0.0, lengths * values, 0.0)
    return (
        _seq_sum(neg_terms),
        _seq_sum(pos_terms),
        _seq_sum(neg_terms + pos_terms),
        _seq_sum(pos_terms - neg_terms),
    )
