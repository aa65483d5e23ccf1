"""Polytope-level computations: Ehrhart polynomials, h* vectors, shards.

The order polytope of a poset has Ehrhart polynomial Omega(P; t+1); its h*
vector is obtained by the exact binomial-basis change.  Shard polytopes are
described by an arc (a, b, A, B): prefix-sum variables turn the H-description
into box-and-chain constraints, which makes exact lattice-point enumeration a
small DFS.  Stretched-shape polynomials interpolate bounded plane-partition
counts of k*lambda / k*mu in the stretch factor k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .exactpoly import Polynomial, int_det, integer_binomial, interpolate
from .posets import Poset, order_polynomial
from .shapes import ShapeError, SkewShape, ribbons, stretch


class GeometryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Order polytopes and h* vectors
# ---------------------------------------------------------------------------


def ehrhart_order_polytope(poset: Poset, omega: Polynomial | None = None) -> Polynomial:
    """Ehrhart polynomial of the order polytope: Omega(P; t+1), exactly."""
    if omega is None:
        omega = order_polynomial(poset)
    return omega.shift(1)


@dataclass(frozen=True)
class HStarVector:
    """h* vector of a lattice polytope: nonnegative integers, h*_0 = 1."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def total(self) -> int:
        """Sum of entries = normalized volume (= e(P) for order polytopes)."""
        return sum(self.coeffs)

    def polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def to_json(self) -> dict:
        return {"hstar": [str(c) for c in self.coeffs]}


def hstar_from_ehrhart(ehr: Polynomial) -> HStarVector:
    """Binomial-basis change: ehr(t) = sum_i h*_i binom(t + d - i, d).

    Equivalently h*_i = sum_j (-1)^j binom(d+1, j) ehr(i - j).  Non-integer or
    negative output signals an input that is not the Ehrhart polynomial of a
    lattice polytope (an internal error for order polytopes).
    """
    d = ehr.degree
    if d < 0:
        raise GeometryError("zero polynomial")
    values = [ehr(i) for i in range(d + 1)]
    out = []
    for i in range(d + 1):
        acc = Fraction(0)
        for j in range(i + 1):
            acc += (-1) ** j * comb(d + 1, j) * values[i - j]
        if acc.denominator != 1:
            raise AssertionError(f"h*_{i} = {acc} is not an integer")
        out.append(int(acc))
    if out and out[0] != 1:
        raise AssertionError(f"h*_0 = {out[0]} != 1")
    if any(c < 0 for c in out):
        raise AssertionError(f"negative h* entry in {out}")
    return HStarVector(tuple(out))


def hstar(poset: Poset, omega: Polynomial | None = None) -> HStarVector:
    """h* vector of the order polytope of a poset."""
    return hstar_from_ehrhart(ehrhart_order_polytope(poset, omega))


# ---------------------------------------------------------------------------
# Shard polytopes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arc:
    """Arc (a, b, A, B) with 1 <= a < b <= n+1 and A, B partitioning {a+1..b-1}.

    Falls are positions j in [a, b-1] with j in {a} u A and j+1 in B u {b};
    rises the mirror.  The shard polytope lives in the sum-zero hyperplane of
    R^n with coordinates vanishing outside [a, b].
    """

    a: int
    b: int
    A: frozenset[int]
    B: frozenset[int]
    n: int

    def __post_init__(self):
        if not (1 <= self.a < self.b <= self.n + 1):
            raise GeometryError(f"need 1 <= a < b <= n+1, got a={self.a}, b={self.b}, n={self.n}")
        interior = set(range(self.a + 1, self.b))
        if set(self.A) | set(self.B) != interior or set(self.A) & set(self.B):
            raise GeometryError("A and B must partition {a+1..b-1}")
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))

    @property
    def falls(self) -> tuple[int, ...]:
        down = set(self.A) | {self.a}
        after = set(self.B) | {self.b}
        return tuple(j for j in range(self.a, self.b) if j in down and j + 1 in after)

    @property
    def rises(self) -> tuple[int, ...]:
        up = set(self.B) | {self.a}
        after = set(self.A) | {self.b}
        return tuple(j for j in range(self.a, self.b) if j in up and j + 1 in after)

    @property
    def pinned(self) -> bool:
        """True when b = n+1: the final prefix sum is forced to zero."""
        return self.b == self.n + 1

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "A": sorted(self.A),
            "B": sorted(self.B),
            "n": self.n,
        }

    def text(self) -> str:
        return "%d,%d;%s;%s" % (
            self.a,
            self.b,
            ",".join(str(x) for x in sorted(self.A)),
            ",".join(str(x) for x in sorted(self.B)),
        )


def parse_arc(text: str, n: int | None = None) -> Arc:
    """Parse "a,b;A;B" (A, B comma lists, possibly empty); ambient defaults to b."""
    try:
        head, astr, bstr = text.strip().split(";")
        a_s, b_s = head.split(",")
        a, b = int(a_s), int(b_s)
        A = frozenset(int(x) for x in astr.split(",") if x)
        B = frozenset(int(x) for x in bstr.split(",") if x)
    except (ValueError, AttributeError) as exc:
        raise GeometryError(f"bad arc text {text!r}") from exc
    return Arc(a, b, A, B, b if n is None else n)


def shard_lattice_points(arc: Arc, t: int) -> int:
    """Number of integer points of the t-th dilate of the shard polytope.

    Enumeration runs over the prefix sums S_j = x_a + ... + x_j for
    j = a..b-1: sign constraints make S monotone between falls (local maxima,
    <= t) and rises (local minima, >= 0), so every S_j lies in [0, t]; when
    b = n+1 the last prefix sum is pinned to 0 by the ambient hyperplane.
    """
    if t < 0:
        raise GeometryError("dilation must be nonnegative")
    a, b = arc.a, arc.b
    falls = set(arc.falls)
    rises = set(arc.rises)
    inA, inB = arc.A, arc.B
    width = b - a

    # DFS over the prefix sums S_a..S_{b-1}
    def rec(pos: int, prev: int) -> int:
        j = a + pos
        if pos == width:
            return 1
        if j in inA:
            lo, hi = prev, t
        elif j in inB:
            lo, hi = 0, prev
        else:  # j == a
            lo, hi = 0, t
        if j in falls:
            hi = min(hi, t)
        if j in rises:
            lo = max(lo, 0)
        if pos == width - 1 and arc.pinned:
            lo = max(lo, 0)
            return 1 if lo <= 0 <= hi else 0
        count = 0
        for s in range(lo, hi + 1):
            count += rec(pos + 1, s)
        return count

    return rec(0, 0)


def shard_ehrhart(arc: Arc) -> Polynomial:
    """Ehrhart polynomial of the shard polytope, by exact interpolation.

    Interpolates the lattice-point counts at t = 0..b-a and certifies the
    degree bound with two extra evaluations.
    """
    d_bound = arc.b - arc.a
    pts = [(t, shard_lattice_points(arc, t)) for t in range(d_bound + 1)]
    poly = interpolate(pts)
    for t in (d_bound + 1, d_bound + 2):
        if poly(t) != shard_lattice_points(arc, t):
            raise AssertionError(f"degree bound {d_bound} violated for arc {arc.text()}")
    return poly


def match_shard_to_fence(arc: Arc, size_cap: int = 8) -> SkewShape | None:
    """Search ribbons for a fence whose order-polytope Ehrhart polynomial
    equals the shard's; returns the lexicographically first match or None.

    Free-regime arcs (b <= n) match fences with b-a cells; the pinned regime
    can drop a dimension further.
    """
    target = shard_ehrhart(arc)
    if target == Polynomial.one():
        return None  # a point; no nonempty fence matches
    from .posets import cell_poset

    for size in range(1, size_cap + 1):
        for rib in sorted(ribbons(size), key=lambda s: (s.lam, s.mu)):
            omega = _ribbon_omega(rib)
            if omega.shift(1) == target:
                return rib
    return None


def _ribbon_omega(rib: SkewShape) -> Polynomial:
    from .detformulas import kreweras_order_polynomial

    return kreweras_order_polynomial(rib)


def shard_arcs(max_span: int) -> Iterator[Arc]:
    """Canonical arcs with 1 <= b - a <= max_span: a = 1, ambient n = b."""
    for span in range(1, max_span + 1):
        b = 1 + span
        interior = list(range(2, b))
        for bits in range(1 << len(interior)):
            A = frozenset(x for i, x in enumerate(interior) if bits >> i & 1)
            B = frozenset(x for x in interior if x not in A)
            yield Arc(1, b, A, B, b)


# ---------------------------------------------------------------------------
# Stretched shapes
# ---------------------------------------------------------------------------


def kreweras_pp_value(shape: SkewShape, t: int) -> int:
    """Bounded plane-partition count of a skew shape with parts <= t, as the
    integer Kreweras determinant."""
    if t < 0:
        raise GeometryError("bound must be nonnegative")
    lam, mu = shape.lam, shape.mu
    ell = shape.length
    if ell == 0:
        return 1
    m = [
        [
            integer_binomial(lam[i] - mu[j] + t, lam[i] - mu[j] - i + j)
            if lam[i] - mu[j] - i + j >= 0
            else 0
            for j in range(ell)
        ]
        for i in range(ell)
    ]
    return int_det(m)


def stretched_pp(shape: SkewShape, t: int) -> Polynomial:
    """The polynomial k -> PP_{k*lambda / k*mu}(t), exactly.

    Interpolates bounded plane-partition counts of the stretched shapes at
    k = 0..ell(lambda)*t (the ambient dimension bound) and certifies the
    bound by one extra evaluation.  Value 1 at k = 0.
    """
    if shape.size == 0:
        raise ShapeError("empty shape")
    if t < 0:
        raise GeometryError("bound must be nonnegative")
    d_bound = shape.length * t
    pts: list[tuple[int, int]] = [(0, 1)]
    for k in range(1, d_bound + 1):
        pts.append((k, kreweras_pp_value(stretch(shape, k), t)))
    poly = interpolate(pts)
    check = poly(d_bound + 1)
    if check != kreweras_pp_value(stretch(shape, d_bound + 1), t):
        raise AssertionError(
            f"stretched degree bound {d_bound} violated for {shape.lam}/{shape.mu}, t={t}"
        )
    return poly
