"""Lambert W, two-point power means, and the power-mean convexity map of W.

The package evaluates the principal branch of W on [0, inf), classifies
each (p, q) pair by whether W is strictly convex, strictly concave, or
neither with respect to order-p/order-q power means, and ships a seeded
numerical verifier for the classification, its slope lemmas, and the
harmonic-geometric-arithmetic inequality chain.
"""

from .lambert import w0, w0_prime
from .means import holder_mean, quartic_harmonic_form
from .raster import RegionRaster, build_raster, raster_to_csv, raster_to_svg
from .theory import (
    ConvexityClass,
    HpqParams,
    c_of_p,
    classify,
    f1,
    g_pq,
    h_p,
    h_p_argmax,
)
from .verify import (
    ComparisonRecord,
    CounterexamplePair,
    SearchExhaustedError,
    VerificationReport,
    check_chain,
    check_g_lemma,
    check_h_lemma,
    compare_at,
    find_counterexamples,
    sample_pairs,
    verify_region,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonRecord",
    "ConvexityClass",
    "CounterexamplePair",
    "HpqParams",
    "RegionRaster",
    "SearchExhaustedError",
    "VerificationReport",
    "build_raster",
    "c_of_p",
    "check_chain",
    "check_g_lemma",
    "check_h_lemma",
    "classify",
    "compare_at",
    "f1",
    "find_counterexamples",
    "g_pq",
    "h_p",
    "h_p_argmax",
    "holder_mean",
    "quartic_harmonic_form",
    "raster_to_csv",
    "raster_to_svg",
    "sample_pairs",
    "verify_region",
    "w0",
    "w0_prime",
]
