"""Slope diagnostics and the (p, q) convexity classification of Lambert W.

Whether W carries the order-p power mean of its arguments above or below
the order-q power mean of its values is decided by the monotonicity of

    g_pq(r) = W(r)**q / (r**p * (W(r) + 1)),

whose logarithmic derivative is (q - h_p(r)) / (r * (W(r) + 1)) with

    h_p(r) = p * (W(r) + 1) + W(r) / (W(r) + 1).

For -1 < p < 0 the function h_p attains an interior maximum c_of_p(p) =
1 - 2*sqrt(-p); that curve is the boundary between "strictly convex" and
"neither" in the (p, q) plane.  classify() folds all of this into a
three-way verdict.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .lambert import w0

__all__ = [
    "ConvexityClass",
    "HpqParams",
    "c_of_p",
    "classify",
    "f1",
    "g_pq",
    "h_p",
    "h_p_argmax",
]

# Stay inside the normal double range; past these exp() would lose meaning.
_LN_MAX = math.log(np.finfo(np.float64).max)
_LN_TINY = math.log(np.finfo(np.float64).tiny)


class ConvexityClass(Enum):
    """Three-way verdict for a (p, q) pair; .value is the CLI/CSV label."""

    STRICTLY_CONVEX = "convex"
    STRICTLY_CONCAVE = "concave"
    NEITHER = "neither"


@dataclass(frozen=True)
class HpqParams:
    """A point of the (p, q) classification plane."""

    p: float
    q: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and math.isfinite(self.q)):
            raise ValueError("p and q must be finite")


def _check_order(p):
    p = float(p)
    if not math.isfinite(p):
        raise ValueError("p must be finite")
    return p


def _positive_array(r):
    arr = np.asarray(r, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("r must be finite")
    if np.any(arr <= 0.0):
        raise ValueError("r must be > 0")
    return arr


def _shape_result(out, template):
    if np.ndim(template) == 0:
        return float(np.atleast_1d(out)[0])
    return out


def h_p(p, r):
    """p * (W(r) + 1) + W(r) / (W(r) + 1) for r > 0.

    Tends to p as r -> 0+; strictly increasing for p >= 0, strictly
    decreasing for p <= -1, and for -1 < p < 0 rises to the interior
    maximum c_of_p(p) before falling to -inf.
    """
    p = _check_order(p)
    arr = _positive_array(r)
    w = w0(arr)
    wp1 = np.asarray(w) + 1.0
    return _shape_result(p * wp1 + np.asarray(w) / wp1, r)


def f1(r):
    """-1 / (W(r) + 1)**2: the r-independent part of the slope of h_p.

    Strictly increasing from -1 toward 0; h_p'(r) = w0_prime(r) * (p - f1(r)).
    """
    arr = _positive_array(r)
    wp1 = np.asarray(w0(arr)) + 1.0
    return _shape_result(-1.0 / (wp1 * wp1), r)


def _ln_g(p, q, r):
    w = np.asarray(w0(r))
    return q * np.log(w) - p * np.log(r) - np.log1p(w)


def g_pq(p, q, r):
    """W(r)**q / (r**p * (W(r) + 1)) for r > 0.

    Always positive; its logarithmic derivative is
    (q - h_p(r)) / (r * (W(r) + 1)).  Values outside the normal double
    range raise OverflowError instead of returning inf or 0.
    """
    p = _check_order(p)
    q = _check_order(q)
    arr = _positive_array(r)
    ln_val = _ln_g(p, q, arr)
    if np.any(ln_val > _LN_MAX):
        raise OverflowError("g_pq overflows the double range")
    if np.any(ln_val < _LN_TINY):
        raise OverflowError("g_pq underflows the double range")
    w = np.asarray(w0(arr))
    a = q * np.log(w)
    b = p * np.log(arr)
    with np.errstate(over="ignore", under="ignore"):
        direct = w**q / (arr**p * (w + 1.0))
    safe = (np.abs(a) < 700.0) & (np.abs(b) < 700.0) & np.isfinite(direct)
    out = np.where(safe, direct, np.exp(ln_val))
    return _shape_result(out, r)


def c_of_p(p):
    """Boundary curve 1 - 2*sqrt(-p) on -1 <= p <= 0.

    Strictly increasing from -1 to 1; also the maximum value of h_p when
    -1 < p < 0.
    """
    p = float(p)
    if not (-1.0 <= p <= 0.0):
        raise ValueError("c_of_p requires -1 <= p <= 0")
    return 1.0 - 2.0 * math.sqrt(-p)


def h_p_argmax(p):
    """The r in (0, inf) maximising h_p, for -1 < p < 0.

    At the maximiser W(r) + 1 = 1/sqrt(-p), i.e. r = (z-1)*e**(z-1) with
    z = 1/sqrt(-p), and h_p there equals c_of_p(p).
    """
    p = float(p)
    if not (-1.0 < p < 0.0):
        raise ValueError("h_p_argmax requires -1 < p < 0")
    z = 1.0 / math.sqrt(-p)
    return (z - 1.0) * math.exp(z - 1.0)


def classify(p, q):
    """Three-way convexity verdict of W for the pair (p, q).

    Strictly convex when p <= -1 and q >= p, or -1 < p <= 0 and
    q >= c_of_p(p); strictly concave when p >= 0 and q <= p; otherwise
    neither direction holds on all of (0, inf).  Region boundaries are
    inclusive on the convex/concave side.
    """
    p = _check_order(p)
    q = _check_order(q)
    if p <= -1.0:
        return ConvexityClass.STRICTLY_CONVEX if q >= p else ConvexityClass.NEITHER
    if p <= 0.0:
        if q >= c_of_p(p):
            return ConvexityClass.STRICTLY_CONVEX
        if p == 0.0 and q <= 0.0:
            return ConvexityClass.STRICTLY_CONCAVE
        return ConvexityClass.NEITHER
    return ConvexityClass.STRICTLY_CONCAVE if q <= p else ConvexityClass.NEITHER
