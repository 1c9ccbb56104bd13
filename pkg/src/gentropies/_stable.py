"""Stable numeric kernels shared by the distribution and entropy layers.

All sums are compensated (``math.fsum``), so results do not depend on the
order of the input terms.  Power sums are max-factored in log2 space, which
keeps them finite for exponents far beyond the naive overflow point.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import Overflow

# Below this length plain Python loops beat numpy's per-call overhead.
_VECTOR_MIN = 256


def exact_sum(values) -> float:
    """Exactly rounded (compensated) sum of a sequence of floats."""
    return math.fsum(values)


def log2_power_sum(probs: Sequence[float], alpha: float) -> float:
    """log2 of sum_k p_k**alpha over the positive entries of ``probs``.

    Factoring out the largest term keeps every intermediate in [0, 1], so
    the result is finite for |alpha| up to several hundred.  At least one
    entry must be positive.
    """
    if len(probs) >= _VECTOR_MIN:
        arr = np.asarray(probs, dtype=float)
        t = alpha * np.log2(arr[arr > 0.0])
        m = float(t.max())
        s = math.fsum(np.exp2(t - m).tolist())
    else:
        logs = [alpha * math.log2(p) for p in probs if p > 0.0]
        m = max(logs)
        s = math.fsum(2.0 ** (t - m) for t in logs)
    return m + math.log2(s)


def power_sum(probs: Sequence[float], alpha: float) -> float:
    """sum_k p_k**alpha over positive entries (0**alpha := 0 for alpha > 0)."""
    try:
        if len(probs) >= _VECTOR_MIN:
            arr = np.asarray(probs, dtype=float)
            return math.fsum(np.power(arr[arr > 0.0], alpha).tolist())
        return math.fsum(p ** alpha for p in probs if p > 0.0)
    except OverflowError as exc:
        raise Overflow(f"power sum with exponent {alpha!r} overflowed") from exc


def plogp_sum(probs: Sequence[float]) -> float:
    """sum_k p_k * log2(p_k) over positive entries (0*log 0 := 0)."""
    if len(probs) >= _VECTOR_MIN:
        arr = np.asarray(probs, dtype=float)
        pos = arr[arr > 0.0]
        return math.fsum((pos * np.log2(pos)).tolist())
    return math.fsum(p * math.log2(p) for p in probs if p > 0.0)


def escort_weights(probs: Sequence[float], alpha: float) -> list[float]:
    """Normalized weights p_k**alpha / sum_i p_i**alpha, max-factored.

    Zero entries keep weight exactly 0 (valid only for alpha > 0; callers
    enforce positivity of the input when alpha <= 0).  ``alpha == 1``
    returns the input unchanged, so the identity holds exactly.
    """
    if alpha == 1.0:
        return list(probs)
    n = len(probs)
    if n >= _VECTOR_MIN:
        arr = np.asarray(probs, dtype=float)
        out = np.zeros(n)
        mask = arr > 0.0
        t = alpha * np.log2(arr[mask])
        w = np.exp2(t - t.max())
        out[mask] = w / math.fsum(w.tolist())
        return out.tolist()
    indexed = [(i, alpha * math.log2(p)) for i, p in enumerate(probs) if p > 0.0]
    m = max(t for _, t in indexed)
    scaled = [(i, 2.0 ** (t - m)) for i, t in indexed]
    total = math.fsum(w for _, w in scaled)
    out_list = [0.0] * n
    for i, w in scaled:
        out_list[i] = w / total
    return out_list
