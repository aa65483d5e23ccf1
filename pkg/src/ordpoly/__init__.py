"""Exact order-polynomial computations for cell posets of shape families.

Subpackage map:

- ``exactpoly``   exact rational polynomials, determinants, Sturm analysis
- ``shapes``      partitions, skew / cylindric / shifted shapes, parsing
- ``posets``      finite posets, ideal lattices, brute-force order polynomials
- ``detformulas`` determinant engines (Kreweras, Gessel-Krattenthaler, fences)
- ``schubert``    reduced words, Macdonald-identity engines for straight shapes
- ``geometry``    order-polytope Ehrhart, h*, shard polytopes, stretched shapes
- ``harness``     conjecture scans with persistent, resumable stores
- ``cli``         the ``ordpoly`` command-line interface
"""

__version__ = "0.1.0"

from .exactpoly import Polynomial, analyze, binomial_poly, interpolate, poly_det

__all__ = [
    "Polynomial",
    "analyze",
    "binomial_poly",
    "interpolate",
    "poly_det",
    "__version__",
]
