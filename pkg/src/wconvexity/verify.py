"""Randomized numerical verification of the convexity classification.

Everything here is evidence, not proof: verify_region samples the
comparison W(H_p(x, y)) vs H_q(W(x), W(y)) over a log-uniform window and
checks that the sign pattern matches classify(); find_counterexamples
hunts for both violation directions inside a "neither" region; the lemma
checkers confirm the monotone / non-monotone behaviour of h_p and g_pq on
dense grids; check_chain evaluates the four-member harmonic-to-arithmetic
inequality chain.

Sampling is counter-based: sample i of a run draws its two coordinates
from SplitMix64 outputs at positions (seed, 2i) and (seed, 2i + 1).  Any
partition of the index space can therefore be scanned independently and
merged associatively with bit-identical results, which is also the
contract for parallel execution.
"""

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .lambert import w0
from .means import holder_mean, quartic_harmonic_form
from .theory import ConvexityClass, HpqParams, c_of_p, classify, h_p

__all__ = [
    "CASE_FIXTURES",
    "ComparisonRecord",
    "CounterexamplePair",
    "DEFAULT_BUDGET",
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "GLemmaCheck",
    "GRID_AXIS",
    "G_LEMMA_FIXTURES",
    "HLemmaCheck",
    "H_LEMMA_FIXTURES",
    "NEITHER_FIXTURES",
    "SAMPLE_DOMAIN",
    "SIGNIFICANCE_REL",
    "SearchExhaustedError",
    "VerificationReport",
    "check_chain",
    "check_g_lemma",
    "check_h_lemma",
    "compare_at",
    "find_counterexamples",
    "sample_pairs",
    "significance_threshold",
    "verify_region",
]

# |gap| at or below SIGNIFICANCE_REL * max(|lhs|, |rhs|, 1) is a tie:
# indistinguishable from rounding noise, never counted as a violation.
SIGNIFICANCE_REL = 1e-12
# Log-uniform sampling window per coordinate.  The upper edge must clear
# the largest turning radius of g_pq over the fixture grid: at (p, q) =
# (-0.1, -3) the slope function h_p only crosses q near r ~ 2.6e18, and
# below that radius the comparison cannot show its second sign at all.
# 1e22 keeps >= 10% of each coordinate's mass beyond that radius.
SAMPLE_DOMAIN = (1e-6, 1e22)
# Tie threshold for grid monotonicity steps in the lemma checkers.
_STEP_SIGNIFICANCE = 1e-13
_LEMMA_DOMAIN = (1e-9, 1e9)

DEFAULT_SAMPLES = 10_000
DEFAULT_BUDGET = 100_000
DEFAULT_SEED = 42
_CHUNK = 1 << 16
_WORST_KEPT = 10

# Verification fixtures: the 11x11 soundness grid, the slope-lemma orders,
# the twelve g-lemma clause pairs, the four "neither" search targets, and
# one representative (p, q, verdict) per proof case of the classification.
GRID_AXIS = (-3.0, -2.0, -1.0, -0.75, -0.5, -0.25, -0.1, 0.0, 0.25, 1.0, 2.0)
H_LEMMA_FIXTURES = (-2.0, -1.0, -0.9, -0.75, -0.5, -0.25, -0.1, 0.0, 0.5, 2.0)
G_LEMMA_FIXTURES = (
    (1.0, 1.0),
    (2.0, 1.0),
    (3.0, 3.0),
    (1.0, 2.0),
    (0.0, 1.0),
    (0.0, -1.0),
    (0.0, 0.5),
    (-1.0, -1.0),
    (-1.0, 1.0),
    (-2.0, -3.0),
    (-0.5, -0.3),
    (-0.5, -1.0),
)
NEITHER_FIXTURES = ((2.0, 3.0), (-2.0, -3.0), (0.0, 0.5), (-0.5, -1.0))
CASE_FIXTURES = (
    (2.0, 1.0, ConvexityClass.STRICTLY_CONCAVE),
    (1.0, -1.0, ConvexityClass.STRICTLY_CONCAVE),
    (2.0, 3.0, ConvexityClass.NEITHER),
    (-1.0, -1.0, ConvexityClass.STRICTLY_CONVEX),
    (-2.0, 1.0, ConvexityClass.STRICTLY_CONVEX),
    (-2.0, -3.0, ConvexityClass.NEITHER),
    (-0.5, -0.25, ConvexityClass.STRICTLY_CONVEX),
    (-0.25, 1.0, ConvexityClass.STRICTLY_CONVEX),
    (-0.5, -1.0, ConvexityClass.NEITHER),
    (1.0, 0.0, ConvexityClass.STRICTLY_CONCAVE),
    (-1.5, 0.0, ConvexityClass.STRICTLY_CONVEX),
    (-0.25, 0.0, ConvexityClass.STRICTLY_CONVEX),
    (-0.1, 0.0, ConvexityClass.NEITHER),
    (0.0, 1.0, ConvexityClass.STRICTLY_CONVEX),
    (0.0, -1.0, ConvexityClass.STRICTLY_CONCAVE),
    (0.0, 0.5, ConvexityClass.NEITHER),
    (0.0, 0.0, ConvexityClass.STRICTLY_CONCAVE),
)


class SearchExhaustedError(RuntimeError):
    """Counterexample search used its whole budget without both directions."""


# --------------------------------------------------------------------------
# Counter-based sampling (SplitMix64).
#
# output(seed, j) = mix(seed + (j + 1) * 0x9E3779B97F4A7C15) with the
# standard SplitMix64 finaliser; uniform doubles take the top 53 bits.
# The algorithm is fixed for the life of this package: reports quote only
# the seed, and identical seeds must reproduce identical reports anywhere.
# --------------------------------------------------------------------------

_SM_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_MIX2 = np.uint64(0x94D049BB133111EB)
_U64_ONE = np.uint64(1)


def _check_seed(seed):
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return seed


def _splitmix64(seed, positions):
    z = np.uint64(seed) + (positions + _U64_ONE) * _SM_GAMMA
    z = (z ^ (z >> np.uint64(30))) * _SM_MIX1
    z = (z ^ (z >> np.uint64(27))) * _SM_MIX2
    z = z ^ (z >> np.uint64(31))
    return z


def _uniform01(seed, positions):
    return (_splitmix64(seed, positions) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def sample_pairs(seed, start, count):
    """Coordinates of samples start .. start+count-1 of the seeded stream.

    Log-uniform over SAMPLE_DOMAIN per coordinate; depends only on
    (seed, sample index), never on how the index space is chunked.
    """
    seed = _check_seed(seed)
    idx = np.arange(start, start + count, dtype=np.uint64)
    lo, hi = SAMPLE_DOMAIN
    ln_lo, ln_hi = math.log(lo), math.log(hi)
    span = ln_hi - ln_lo
    two = np.uint64(2)
    x = np.exp(ln_lo + span * _uniform01(seed, idx * two))
    y = np.exp(ln_lo + span * _uniform01(seed, idx * two + _U64_ONE))
    return x, y


# --------------------------------------------------------------------------
# Pointwise comparison.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonRecord:
    """One evaluation of W(H_p(x, y)) against H_q(W(x), W(y))."""

    x: float
    y: float
    p: float
    q: float
    lhs: float
    rhs: float
    gap: float


def significance_threshold(lhs, rhs):
    """Gap magnitude below which a comparison counts as a numerical tie."""
    return SIGNIFICANCE_REL * np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1.0)


def _gap_arrays(p, q, x, y):
    lhs = np.asarray(w0(holder_mean(p, x, y)))
    rhs = np.asarray(holder_mean(q, np.asarray(w0(x)), np.asarray(w0(y))))
    return lhs, rhs, lhs - rhs


def compare_at(p, q, x, y):
    """Evaluate the two sides at one point; gap = lhs - rhs as stored."""
    xx = np.atleast_1d(np.asarray(x, dtype=np.float64))
    yy = np.atleast_1d(np.asarray(y, dtype=np.float64))
    lhs, rhs, gap = _gap_arrays(float(p), float(q), xx, yy)
    return ComparisonRecord(
        x=float(xx[0]),
        y=float(yy[0]),
        p=float(p),
        q=float(q),
        lhs=float(lhs[0]),
        rhs=float(rhs[0]),
        gap=float(gap[0]),
    )


# --------------------------------------------------------------------------
# Region verification.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate of one randomized region check."""

    params: HpqParams
    expected: ConvexityClass
    n_samples: int
    n_gap_positive: int
    n_gap_negative: int
    max_abs_gap: float
    worst_records: tuple
    seed: int
    verdict: str

    def to_json(self):
        """Single JSON document; floats round-trip exactly via repr."""
        doc = {
            "params": {"p": self.params.p, "q": self.params.q},
            "expected": self.expected.value,
            "n_samples": self.n_samples,
            "n_gap_positive": self.n_gap_positive,
            "n_gap_negative": self.n_gap_negative,
            "max_abs_gap": self.max_abs_gap,
            "worst_records": [asdict(rec) for rec in self.worst_records],
            "seed": self.seed,
            "verdict": self.verdict,
        }
        return json.dumps(doc)


def _scan_part(p, q, seed, start, count):
    """Scan samples [start, start+count): counts, extremes, worst rows.

    Parts are plain dicts that _merge_parts combines associatively.
    """
    x, y = sample_pairs(seed, start, count)
    lhs, rhs, gap = _gap_arrays(p, q, x, y)
    tol = significance_threshold(lhs, rhs)
    abs_gap = np.abs(gap)
    order = np.argsort(-abs_gap, kind="stable")[:_WORST_KEPT]
    worst = [
        (
            float(abs_gap[i]),
            int(start + i),
            ComparisonRecord(
                x=float(x[i]),
                y=float(y[i]),
                p=p,
                q=q,
                lhs=float(lhs[i]),
                rhs=float(rhs[i]),
                gap=float(gap[i]),
            ),
        )
        for i in order
    ]
    return {
        "count": int(count),
        "positive": int(np.sum(gap > tol)),
        "negative": int(np.sum(gap < -tol)),
        "max_abs_gap": float(abs_gap.max(initial=0.0)),
        "worst": worst,
    }


def _merge_parts(a, b):
    worst = sorted(a["worst"] + b["worst"], key=lambda item: (-item[0], item[1]))
    return {
        "count": a["count"] + b["count"],
        "positive": a["positive"] + b["positive"],
        "negative": a["negative"] + b["negative"],
        "max_abs_gap": max(a["max_abs_gap"], b["max_abs_gap"]),
        "worst": worst[:_WORST_KEPT],
    }


def _verdict(expected, n_positive, n_negative):
    if expected is ConvexityClass.STRICTLY_CONVEX:
        ok = n_positive == 0
    elif expected is ConvexityClass.STRICTLY_CONCAVE:
        ok = n_negative == 0
    else:
        ok = n_positive > 0 and n_negative > 0
    return "pass" if ok else "fail"


def verify_region(params, n_samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, expected=None):
    """Randomized sign check of the comparison over the sampling window.

    Draws n_samples log-uniform pairs, counts gaps beyond the significance
    threshold and grades the pattern against `expected` (classify(p, q)
    unless overridden).  Deterministic for a fixed seed.
    """
    if not isinstance(params, HpqParams):
        params = HpqParams(*params)
    n_samples = int(n_samples)
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    seed = _check_seed(seed)
    if expected is None:
        expected = classify(params.p, params.q)
    part = None
    for start in range(0, n_samples, _CHUNK):
        piece = _scan_part(params.p, params.q, seed, start, min(_CHUNK, n_samples - start))
        part = piece if part is None else _merge_parts(part, piece)
    return VerificationReport(
        params=params,
        expected=expected,
        n_samples=part["count"],
        n_gap_positive=part["positive"],
        n_gap_negative=part["negative"],
        max_abs_gap=part["max_abs_gap"],
        worst_records=tuple(rec for _, _, rec in part["worst"]),
        seed=seed,
        verdict=_verdict(expected, part["positive"], part["negative"]),
    )


# --------------------------------------------------------------------------
# Counterexample search.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CounterexamplePair:
    """Witnesses that neither inequality direction holds globally."""

    violates_convexity: ComparisonRecord
    violates_concavity: ComparisonRecord


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fun, a, b, iters=20):
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fun(d)
    return c if fc >= fd else d


def _refine(p, q, x, y, sign):
    """Coordinate-wise golden-section polish of sign * gap around (x, y)."""
    lo, hi = SAMPLE_DOMAIN
    ln_lo, ln_hi = math.log(lo), math.log(hi)
    half_span = 0.5 * math.log(10.0)

    def signed_gap(lx, ly):
        return sign * compare_at(p, q, math.exp(lx), math.exp(ly)).gap

    lx, ly = math.log(x), math.log(y)
    best = signed_gap(lx, ly)
    for coord in (0, 1):
        if coord == 0:
            fun = lambda t: signed_gap(t, ly)
            center = lx
        else:
            fun = lambda t: signed_gap(lx, t)
            center = ly
        a = max(ln_lo, center - half_span)
        b = min(ln_hi, center + half_span)
        t = _golden_max(fun, a, b)
        val = fun(t)
        if val > best:
            best = val
            if coord == 0:
                lx = t
            else:
                ly = t
    return compare_at(p, q, math.exp(lx), math.exp(ly))


def find_counterexamples(params, budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """One significant violation per direction inside a "neither" region.

    Scans `budget` seeded samples for the extreme positive and negative
    gaps, then polishes each extreme with coordinate-wise golden-section
    steps.  Raises SearchExhaustedError when a direction never shows up
    (either the budget is too small or the implementation is wrong: the
    classification guarantees both exist).
    """
    if not isinstance(params, HpqParams):
        params = HpqParams(*params)
    if classify(params.p, params.q) is not ConvexityClass.NEITHER:
        raise ValueError("find_counterexamples requires a 'neither' pair")
    budget = int(budget)
    if budget < 1:
        raise ValueError("budget must be >= 1")
    seed = _check_seed(seed)

    best_pos = None  # (gap, index, x, y)
    best_neg = None
    for start in range(0, budget, _CHUNK):
        count = min(_CHUNK, budget - start)
        x, y = sample_pairs(seed, start, count)
        lhs, rhs, gap = _gap_arrays(params.p, params.q, x, y)
        tol = significance_threshold(lhs, rhs)
        excess = np.where(gap > tol, gap, -np.inf)
        i = int(np.argmax(excess))
        if excess[i] > -np.inf and (best_pos is None or gap[i] > best_pos[0]):
            best_pos = (float(gap[i]), start + i, float(x[i]), float(y[i]))
        shortfall = np.where(gap < -tol, gap, np.inf)
        j = int(np.argmin(shortfall))
        if shortfall[j] < np.inf and (best_neg is None or gap[j] < best_neg[0]):
            best_neg = (float(gap[j]), start + j, float(x[j]), float(y[j]))

    missing = [
        name
        for name, found in (("positive", best_pos), ("negative", best_neg))
        if found is None
    ]
    if missing:
        raise SearchExhaustedError(
            f"no significant {' or '.join(missing)} gap found for "
            f"(p={params.p}, q={params.q}) within budget {budget}"
        )

    pos_rec = _refine(params.p, params.q, best_pos[2], best_pos[3], +1.0)
    if pos_rec.gap < best_pos[0]:
        pos_rec = compare_at(params.p, params.q, best_pos[2], best_pos[3])
    neg_rec = _refine(params.p, params.q, best_neg[2], best_neg[3], -1.0)
    if neg_rec.gap > best_neg[0]:
        neg_rec = compare_at(params.p, params.q, best_neg[2], best_neg[3])
    return CounterexamplePair(violates_convexity=pos_rec, violates_concavity=neg_rec)


# --------------------------------------------------------------------------
# Inequality chain.
# --------------------------------------------------------------------------


def check_chain(x, y):
    """The four-member chain at (x, y), ordered smallest to largest:

        W(quartic harmonic form) <= geometric mean of W values
        <= W(geometric mean) <= arithmetic mean of W values.

    All members coincide exactly when x == y; for x != y every inequality
    is strict.  Accepts scalars or arrays.
    """
    wx = w0(x)
    wy = w0(y)
    a = w0(quartic_harmonic_form(x, y))
    b = holder_mean(0.0, wx, wy)
    c = w0(holder_mean(0.0, x, y))
    d = holder_mean(1.0, wx, wy)
    return a, b, c, d


# --------------------------------------------------------------------------
# Lemma checks: monotonicity on dense log grids.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HLemmaCheck:
    """Grid verdict on the monotonicity / interior maximum of h_p."""

    p: float
    grid_size: int
    expected: str
    rises: int
    falls: int
    grid_max: float
    grid_argmax: float
    max_bound: float
    passed: bool


@dataclass(frozen=True)
class GLemmaCheck:
    """Grid verdict on the monotonicity of g_pq."""

    p: float
    q: float
    grid_size: int
    expected: str
    rises: int
    falls: int
    passed: bool


def _count_steps(values):
    # Steps below the tie threshold are rounding noise, not monotonicity
    # evidence: near flat stretches adjacent values can round identically.
    diffs = np.diff(values)
    tau = _STEP_SIGNIFICANCE * np.maximum(
        1.0, np.maximum(np.abs(values[:-1]), np.abs(values[1:]))
    )
    return int(np.sum(diffs > tau)), int(np.sum(diffs < -tau))


def _lemma_grid(grid_size):
    grid_size = int(grid_size)
    if grid_size < 3:
        raise ValueError("grid_size must be >= 3")
    lo, hi = _LEMMA_DOMAIN
    return np.logspace(math.log10(lo), math.log10(hi), grid_size)


def check_h_lemma(p, grid_size=10_000):
    """Confirm the expected shape of h_p on a log grid over [1e-9, 1e9].

    p >= 0: strictly increasing; p <= -1: strictly decreasing; otherwise
    non-monotone with grid maximum at most c_of_p(p) + 1e-8.
    """
    p = float(p)
    r = _lemma_grid(grid_size)
    values = np.asarray(h_p(p, r))
    rises, falls = _count_steps(values)
    i_max = int(np.argmax(values))
    grid_max = float(values[i_max])
    if p >= 0.0:
        expected = "increasing"
        bound = math.inf
        passed = rises > 0 and falls == 0
    elif p <= -1.0:
        expected = "decreasing"
        bound = math.inf
        passed = falls > 0 and rises == 0
    else:
        expected = "interior-max"
        bound = c_of_p(p) + 1e-8
        passed = rises > 0 and falls > 0 and grid_max <= bound
    return HLemmaCheck(
        p=p,
        grid_size=int(grid_size),
        expected=expected,
        rises=rises,
        falls=falls,
        grid_max=grid_max,
        grid_argmax=float(r[i_max]),
        max_bound=bound,
        passed=passed,
    )


def _g_expected(p, q):
    if p > 0.0:
        return "decreasing" if q <= p else "non-monotone"
    if p == 0.0:
        if q >= 1.0:
            return "increasing"
        return "decreasing" if q <= 0.0 else "non-monotone"
    if p <= -1.0:
        return "increasing" if q >= p else "non-monotone"
    return "increasing" if q >= c_of_p(p) else "non-monotone"


def check_g_lemma(p, q, grid_size=10_000):
    """Confirm the expected monotonicity clause of g_pq on the log grid.

    The clause is selected from (p, q) exactly as the classification
    partitions the plane; evaluation runs in log space so extreme orders
    cannot overflow.
    """
    p = float(p)
    q = float(q)
    r = _lemma_grid(grid_size)
    w = np.asarray(w0(r))
    ln_g = q * np.log(w) - p * np.log(r) - np.log1p(w)
    rises, falls = _count_steps(ln_g)
    expected = _g_expected(p, q)
    if expected == "increasing":
        passed = rises > 0 and falls == 0
    elif expected == "decreasing":
        passed = falls > 0 and rises == 0
    else:
        passed = rises > 0 and falls > 0
    return GLemmaCheck(
        p=p,
        q=q,
        grid_size=int(grid_size),
        expected=expected,
        rises=rises,
        falls=falls,
        passed=passed,
    )
