"""Exact-arithmetic section rings of root line bundles on rational cuspidal curves.

Everything is computed over Q with no rounding: dense binary forms in the
curve parameters (s, t), sparse weighted multivariate polynomials, exact
linear algebra, a small Buchberger engine, and resolution-graph / splice
calculus.  All values are immutable after construction; every operation is
a pure function, so results are deterministic and safe to share between
threads.
"""

from cuspcover.binforms import BinaryForm
from cuspcover.mpoly import MultiPoly, Variable
from cuspcover.linalg import MatrixQ

__all__ = ["BinaryForm", "MultiPoly", "Variable", "MatrixQ"]
