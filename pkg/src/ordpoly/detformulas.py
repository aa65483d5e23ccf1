"""Closed-form determinant engines for order polynomials.

Four engines live here:

- the Kreweras determinant for skew shapes,
- the Gessel-Krattenthaler determinant sum for cylindric shapes,
- the compact circular-fence form (the GK sum collapsed to ell terms),
- the uniform zig-zag determinant.

All public polynomials use the order-polynomial convention Omega(P;t); the
bounded-part plane-partition convention differs by the substitution
t -> t - 1 and is applied internally.

Each engine supports two exact evaluation strategies: a symbolic determinant
over the polynomial ring, and the default evaluate-and-interpolate scheme
(integer determinants at t = 1..n+1, then one exact interpolation; the result
has degree at most n = number of cells, so both agree).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator

from .exactpoly import (
    Polynomial,
    binomial_poly,
    int_det,
    integer_binomial,
    interpolate,
    poly_det,
)
from .shapes import CylindricShape, ShapeError, SkewShape, is_connected, is_ribbon, zigzag


# ---------------------------------------------------------------------------
# Kreweras determinant for skew shapes
# ---------------------------------------------------------------------------


def kreweras_matrix(shape: SkewShape) -> list[list[Polynomial]]:
    """Matrix with entries binom(t - 1 + lam_i - mu_j, lam_i - mu_j - i + j).

    Entries with negative lower index are the zero polynomial; the
    determinant equals Omega of the cell poset.
    """
    lam, mu = shape.lam, shape.mu
    ell = shape.length
    rows = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            k = lam[i - 1] - mu[j - 1] - i + j
            if k < 0:
                row.append(Polynomial.zero())
            else:
                row.append(binomial_poly(lam[i - 1] - mu[j - 1] - 1, k))
        rows.append(row)
    return rows


def _kreweras_value(lam, mu, ell: int, t: int) -> int:
    """Integer value of the Kreweras determinant at integer t >= 1."""
    m = [
        [
            integer_binomial(t - 1 + lam[i] - mu[j], lam[i] - mu[j] - i + j)
            if lam[i] - mu[j] - i + j >= 0
            else 0
            for j in range(ell)
        ]
        for i in range(ell)
    ]
    return int_det(m)


def kreweras_order_polynomial(shape: SkewShape, symbolic: bool = False) -> Polynomial:
    """Order polynomial of the skew cell poset by the Kreweras determinant.

    The default evaluates integer determinants at t = 1..n+1 and
    interpolates; symbolic=True computes the determinant over the polynomial
    ring instead (same result, slower, useful for cross-checks).
    """
    if shape.size == 0:
        raise ShapeError("empty shape")
    if symbolic:
        return poly_det(kreweras_matrix(shape))
    lam, mu = shape.lam, shape.mu
    n = shape.size
    pts = [(t, _kreweras_value(lam, mu, shape.length, t)) for t in range(1, n + 2)]
    return interpolate(pts)


def c1_skew(shape: SkewShape) -> Fraction:
    """Linear coefficient of Omega for a skew shape, in closed form.

    Zero for disconnected shapes; otherwise
    (lam_1 - mu_ell - 1)! (ell - 1)! / (lam_1 - mu_ell - 1 + ell)!.
    """
    if shape.size == 0:
        raise ShapeError("empty shape")
    if not is_connected(shape):
        return Fraction(0)
    a = shape.lam[0] - shape.mu[-1] - 1
    ell = shape.length
    return Fraction(factorial(a) * factorial(ell - 1), factorial(a + ell))


# ---------------------------------------------------------------------------
# Gessel-Krattenthaler sum for cylindric shapes
# ---------------------------------------------------------------------------


def _gk_tuples(shape: CylindricShape) -> Iterator[tuple[int, ...]]:
    """Zero-sum integer tuples (k_1..k_ell) that can carry a nonzero determinant.

    Row i vanishes unless k_i <= max_j (lam_i - mu_j - i + j) / (ell + d), and
    the zero-sum constraint then bounds each k_i below.
    """
    lam, mu, d = shape.lam, shape.mu, shape.d
    ell = shape.length
    step = ell + d
    ubs = []
    for i in range(ell):
        best = max(lam[i] - mu[j] - (i + 1) + (j + 1) for j in range(ell))
        ubs.append(best // step if best >= 0 else -((-best + step - 1) // step))
    suffix = [0] * (ell + 1)
    for i in range(ell - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ubs[i]

    def rec(i: int, partial: int):
        if i == ell - 1:
            k = -partial
            if k <= ubs[i]:
                yield (k,)
            return
        # partial + k_i + (future) = 0 with future <= suffix[i+1]
        lo = -partial - suffix[i + 1]
        for k in range(lo, ubs[i] + 1):
            for rest in rec(i + 1, partial + k):
                yield (k,) + rest

    yield from rec(0, 0)


def _gk_value(shape: CylindricShape, tuples: list[tuple[int, ...]], t: int) -> int:
    lam, mu, d = shape.lam, shape.mu, shape.d
    ell = shape.length
    step = ell + d
    total = 0
    for ks in tuples:
        m = []
        for i in range(ell):
            row = []
            for j in range(ell):
                low = lam[i] - mu[j] - (i + 1) + (j + 1) - step * ks[i]
                if low < 0:
                    row.append(0)
                else:
                    row.append(integer_binomial(t - 1 + lam[i] - mu[j] - d * ks[i], low))
            m.append(row)
        total += int_det(m)
    return total


def gk_term_matrix(shape: CylindricShape, ks: tuple[int, ...]) -> list[list[Polynomial]]:
    """Symbolic matrix of one GK summand for the given zero-sum tuple."""
    lam, mu, d = shape.lam, shape.mu, shape.d
    ell = shape.length
    step = ell + d
    rows = []
    for i in range(ell):
        row = []
        for j in range(ell):
            low = lam[i] - mu[j] - (i + 1) + (j + 1) - step * ks[i]
            if low < 0:
                row.append(Polynomial.zero())
            else:
                row.append(binomial_poly(lam[i] - mu[j] - d * ks[i] - 1, low))
        rows.append(row)
    return rows


def _require_gk_domain(shape: CylindricShape) -> None:
    """The determinant sum counts the cylindric cell poset only when lambda
    and mu are genuine partitions and the wrap inequalities are strict
    (d > lam_1 - lam_ell - 1 and d > mu_1 - mu_ell - 1); at seam equality the
    cylinder self-touches and the sum counts a degenerate object.  Such
    presentations are rotations/translations of in-domain shapes.
    """
    lam, mu = shape.lam, shape.mu
    ell = shape.length
    if any(lam[i] < lam[i + 1] for i in range(ell - 1)) or any(
        mu[i] < mu[i + 1] for i in range(ell - 1)
    ):
        raise ShapeError(
            "determinant sum requires lambda and mu to be partitions; "
            "rotate the cylindric presentation first"
        )
    if ell > 1 and shape.d <= max(lam[0] - lam[-1] - 1, mu[0] - mu[-1] - 1):
        raise ShapeError(
            "determinant sum requires strict wrap inequalities "
            f"(d = {shape.d} self-touches); use the brute-force engine"
        )


def gk_cylindric_order_polynomial(shape: CylindricShape, symbolic: bool = False) -> Polynomial:
    """Order polynomial of a cylindric cell poset by the GK determinant sum.

    Sums determinants over zero-sum tuples (k_1..k_ell), in lexicographic
    tuple order; rows that would vanish identically prune the tuple set.
    """
    if shape.size == 0:
        raise ShapeError("empty cylindric shape")
    _require_gk_domain(shape)
    tuples = sorted(_gk_tuples(shape))
    if symbolic:
        total = Polynomial.zero()
        for ks in tuples:
            total = total + poly_det(gk_term_matrix(shape, ks))
        return total
    n = shape.size
    pts = [(t, _gk_value(shape, tuples, t)) for t in range(1, n + 2)]
    return interpolate(pts)


# ---------------------------------------------------------------------------
# Circular fences
# ---------------------------------------------------------------------------


def _require_circular_fence(shape: CylindricShape) -> None:
    skew = SkewShape(shape.lam, shape.mu)
    if not is_ribbon(skew) or not is_connected(skew):
        raise ShapeError("circular fence requires a connected ribbon shape")
    if shape.mu[-1] != 0:
        raise ShapeError("circular fence requires mu_ell = 0")
    if shape.d != shape.lam[0] - 1:
        raise ShapeError("circular fence requires d = lambda_1 - 1")


def circular_fence_order_polynomial(shape: CylindricShape, symbolic: bool = False) -> Polynomial:
    """Order polynomial of a circular fence poset via the compact form.

    For a ribbon with d = lambda_1 - 1 the GK sum collapses to the Kreweras
    determinant plus one determinant for each m = 2..ell (the tuples
    k = e_1 - e_m).  Single-row shapes are routed through the GK sum, whose
    only surviving tuple is k = 0.
    """
    _require_circular_fence(shape)
    ell = shape.length
    if ell == 1:
        return gk_cylindric_order_polynomial(shape, symbolic=symbolic)
    skew = SkewShape(shape.lam, shape.mu)
    tuples = [tuple(1 if i == 0 else -1 if i == m else 0 for i in range(ell))
              for m in range(1, ell)]
    if symbolic:
        total = kreweras_order_polynomial(skew, symbolic=True)
        for ks in tuples:
            total = total + poly_det(gk_term_matrix(shape, ks))
        return total
    n = shape.size
    pts = []
    for t in range(1, n + 2):
        val = _kreweras_value(shape.lam, shape.mu, ell, t)
        val += _gk_value(shape, tuples, t)
        pts.append((t, val))
    return interpolate(pts)


def c1_circular_fence(shape: CylindricShape) -> Fraction:
    """Linear coefficient of a circular fence order polynomial, in closed form:
    ell * (lambda_1 - 1)! (ell - 1)! / (lambda_1 - 1 + ell)!."""
    _require_circular_fence(shape)
    ell = shape.length
    a = shape.lam[0] - 1
    return Fraction(ell * factorial(a) * factorial(ell - 1), factorial(a + ell))


# ---------------------------------------------------------------------------
# Zig-zags
# ---------------------------------------------------------------------------


def zigzag_determinant(n: int) -> Polynomial:
    """Order polynomial of the zig-zag poset Z_n via its determinant.

    Even n uses the k x k matrix binom(t+1-i+j, 2j-2i+2) with k = n/2; that
    uniform entry formula encodes the even zig-zag only, so odd n falls back
    to the Kreweras matrix of the zig-zag ribbon itself (same value, one more
    row).
    """
    if n < 1:
        raise ShapeError("zig-zag size must be positive")
    if n % 2 == 0:
        k = n // 2
        m = []
        for i in range(1, k + 1):
            row = []
            for j in range(1, k + 1):
                low = 2 * j - 2 * i + 2
                if low < 0:
                    row.append(Polynomial.zero())
                else:
                    row.append(binomial_poly(1 - i + j, low))
            m.append(row)
        return poly_det(m)
    return kreweras_order_polynomial(zigzag(n), symbolic=True)
