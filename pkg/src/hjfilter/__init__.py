"""
hjfilter - Filtered schemes for first-order Hamilton-Jacobi equations.

A monotone finite-difference (or semi-Lagrangian) step is blended with an
arbitrary high-order step through a bounded filter function, together with a
benchmark harness reproducing convergence-order tables on seven test problems.
"""

__version__ = "0.1.0"
