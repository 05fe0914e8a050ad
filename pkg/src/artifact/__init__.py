"""Exact nonintegrability certification for planar polynomial vector fields.

Given a polynomial system and a rational invariant curve, the pipeline
computes the variational coefficients along the curve in exact arithmetic
over a quadratic number field, decides transcendence of the first-order
solution, runs a battery of higher-order criteria, and emits a
machine-readable certificate.  Built-in generators cover the planar
reductions of the fold-Hopf and double-Hopf bifurcation unfoldings.
"""

__version__ = "0.1.0"

from .exactalg import BiPoly, FieldSpec, QuadExt, RatFunc, UPoly

__all__ = [
    "BiPoly",
    "FieldSpec",
    "QuadExt",
    "RatFunc",
    "UPoly",
    "__version__",
]
