"""Misclustering metrics and spectral-concentration measurement."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graph_model import (
    CommunityAssignment,
    InvalidInputError,
    InvalidParamsError,
    SolverFailureError,
)

__all__ = [
    "misclustering_rate",
    "misclustered_count",
    "spectral_norm",
    "concentration_ratio",
    "ConcentrationNormalizers",
    "normalizers",
]

_ENUMERATION_LIMIT = 8


def _confusion(truth: CommunityAssignment, est: CommunityAssignment) -> np.ndarray:
    if truth.n != est.n:
        raise InvalidParamsError("labelings must cover the same vertex set")
    kk = max(truth.k, est.k)
    c = np.zeros((kk, kk), dtype=np.int64)
    np.add.at(c, (truth.labels, est.labels), 1)
    return c


def _best_agreement(truth, est, method: str) -> int:
    """Max agreement over relabelings of the estimate.

    `enumeration` tries every permutation (exact, k <= 8);
    `assignment` solves the equivalent assignment problem (exact for
    any k).  `auto` picks enumeration when it is affordable.
    """
    c = _confusion(truth, est)
    kk = c.shape[0]
    if method == "auto":
        method = "enumeration" if kk <= _ENUMERATION_LIMIT else "assignment"
    if method == "enumeration":
        if kk > _ENUMERATION_LIMIT:
            raise InvalidParamsError(
                f"enumeration path is limited to k <= {_ENUMERATION_LIMIT}"
            )
        idx = np.arange(kk)
        best = 0
        for perm in permutations(range(kk)):
            agree = int(c[np.asarray(perm), idx].sum())
            if agree > best:
                best = agree
        return best
    if method == "assignment":
        rows, cols = linear_sum_assignment(-c)
        return int(c[rows, cols].sum())
    raise InvalidParamsError("method must be 'auto', 'enumeration', or 'assignment'")


def misclustering_rate(truth: CommunityAssignment, est: CommunityAssignment,
                       *, method: str = "auto") -> float:
    """Fraction of vertices misclustered under the best label matching.

    Infimum over permutations of the estimated labels of the disagreement
    rate with the ground truth.
    """
    return (truth.n - _best_agreement(truth, est, method)) / truth.n


def misclustered_count(truth: CommunityAssignment, est: CommunityAssignment,
                       *, method: str = "auto") -> int:
    """Integer number of misclustered vertices (no float round-trip)."""
    return truth.n - _best_agreement(truth, est, method)


def spectral_norm(m, tol: float = 1e-8) -> float:
    """Largest absolute eigenvalue of a symmetric matrix.

    Computed by a dense symmetric eigensolver, which is accurate far
    below `tol` at the sizes this package targets; `tol` documents the
    accuracy contract.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError("spectral_norm expects a square matrix")
    if a.size == 0:
        return 0.0
    try:
        w = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise SolverFailureError(f"eigenvalue solve failed: {exc}") from exc
    return float(np.abs(w).max())


def concentration_ratio(a, ea, normalizer: float, exponent: str) -> float:
    """||a - ea||_2 / normalizer**e with e in {1/2, 1}.

    The half exponent serves deviation bounds stated against the square
    root of a degree scale; the unit exponent serves bounds stated
    against the scale itself.
    """
    if exponent not in ("half", "one"):
        raise InvalidParamsError("exponent must be 'half' or 'one'")
    if not normalizer > 0:
        raise InvalidParamsError("normalizer must be positive")
    x = np.asarray(a, dtype=np.float64)
    y = np.asarray(ea, dtype=np.float64)
    if x.shape != y.shape:
        raise InvalidInputError("matrix and expectation must share a shape")
    power = 0.5 if exponent == "half" else 1.0
    return spectral_norm(x - y) / normalizer**power


@dataclass(frozen=True)
class ConcentrationNormalizers:
    """Degree-scale normalizers for the deviation bounds (constants 1,
    natural log)."""

    delta: float        # dyadic degree scale
    delta_t: float      # hyperedge-cover degree scale
    tau_max: float      # dyadic codegree scale
    d_e3: float         # all-dyadic triangle deviation scale
    delta_t3: float     # three-overlapping-hyperedge scale
    delta_t2e: float    # two-hyperedge one-edge scale
    delta_te2: float    # one-hyperedge two-edge scale


def normalizers(n: int, p_e_max: float, p_t_max: float) -> ConcentrationNormalizers:
    if n < 2:
        raise InvalidParamsError("n must be at least 2")
    for p in (p_e_max, p_t_max):
        if not 0.0 <= p <= 1.0:
            raise InvalidParamsError("probabilities must lie in [0, 1]")
    ln = math.log(n)
    return ConcentrationNormalizers(
        delta=max(n * p_e_max, ln),
        delta_t=max(n**2 * p_t_max, ln),
        tau_max=max(n * p_e_max**2, ln),
        d_e3=max(n**3 * p_e_max**5, n * p_e_max * ln**2),
        delta_t3=max(n**5 * p_t_max**3, ln**4),
        delta_t2e=max(n**4 * p_t_max**2 * p_e_max, ln**4),
        delta_te2=max(n**3 * p_t_max * p_e_max**2, ln**3),
    )
