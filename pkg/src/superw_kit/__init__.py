"""Symbolic verification kit for free-field vertex superalgebras, Miura operators and q-series."""

from .scalars import EPS, ONE, ZERO, PoleAtEvaluation, Rational, Scalar, evaluate, gen_binomial

__all__ = ["EPS", "ONE", "ZERO", "PoleAtEvaluation", "Rational", "Scalar", "evaluate", "gen_binomial"]
__version__ = "0.1.0"
