"""Exact univariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` values (always reduced, positive
denominator), so equality is structural and every computation here is exact:
determinants over the polynomial ring are fraction-free, real-root counts come
from Sturm sequences, and there is no floating point anywhere.

The polynomial variable is written ``t`` in all text output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def integer_binomial(x: int, k: int) -> int:
    """Binomial coefficient x choose k for any integer x and k >= 0.

    Uses the falling-factorial definition x(x-1)...(x-k+1)/k!, which is the
    polynomial extension of the combinatorial binomial to negative x, e.g.
    integer_binomial(-1, 2) == 1.
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree order with trailing zeros
    trimmed; the zero polynomial is the empty tuple and reports degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def t(cls) -> "Polynomial":
        """The monomial t."""
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reporting -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of t**k (zero beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def shift(self, c: Scalar) -> "Polynomial":
        """Substitution t -> t + c, computed exactly."""
        # Horner on the reversed coefficient list: p(t+c) built bottom-up.
        acc = Polynomial.zero()
        tc = Polynomial((Fraction(c), Fraction(1)))
        for coef in reversed(self.coeffs):
            acc = acc * tc + Polynomial.constant(coef)
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return Polynomial.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] * inv_lead
            quo[k] = c
            if c:
                for j, d in enumerate(div):
                    rem[k + j] -= c * d
        return Polynomial(quo), Polynomial(rem[: len(div) - 1])

    def divexact(self, other: "Polynomial") -> "Polynomial":
        """Exact division; raises if the remainder is nonzero."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    # -- text and serialization -------------------------------------------

    def denominator_cleared(self) -> tuple[tuple[int, ...], int]:
        """Return (integer coefficients, common denominator L) with p = (...)/L."""
        if self.is_zero:
            return (), 1
        lcm = 1
        for c in self.coeffs:
            d = c.denominator
            from math import gcd as _gcd

            lcm = lcm // _gcd(lcm, d) * d
        return tuple(int(c * lcm) for c in self.coeffs), lcm

    @staticmethod
    def _term(num: int, k: int) -> str:
        if k == 0:
            return str(num)
        body = "t" if k == 1 else f"t^{k}"
        if num == 1:
            return body
        if num == -1:
            return f"-{body}"
        return f"{num}{body}"

    def __str__(self) -> str:
        """Plain text form with a single cleared denominator.

        Examples: "t", "(5t^4 + 10t^3 + 7t^2 + 2t)/24", "0".
        """
        if self.is_zero:
            return "0"
        ints, den = self.denominator_cleared()
        parts = []
        for k in range(len(ints) - 1, -1, -1):
            c = ints[k]
            if c == 0:
                continue
            term = self._term(abs(c) if parts else c, k)
            if parts:
                parts.append(" + " if c > 0 else " - ")
            parts.append(term)
        body = "".join(parts)
        if den == 1:
            return body
        return f"({body})/{den}"

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def to_latex(self) -> str:
        r"""LaTeX form with per-term \tfrac coefficients, descending degree."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = ""
            if parts:
                sign = " + " if c > 0 else " - "
                c = abs(c)
            elif c < 0:
                sign = "-"
                c = -c
            if c.denominator == 1:
                coef = "" if (c == 1 and k > 0) else str(c.numerator)
            else:
                coef = r"\tfrac{%d}{%d}" % (c.numerator, c.denominator)
            body = "" if k == 0 else ("t" if k == 1 else f"t^{{{k}}}" if k > 9 else f"t^{k}")
            parts.append(f"{sign}{coef}{body}")
        return "".join(parts)

    def to_json(self) -> dict:
        """JSON form {"coeffs": [["num","den"], ...]} ascending by degree."""
        return {
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(Fraction(int(n), int(d)) for n, d in data["coeffs"])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "Polynomial":
        return cls.from_json(json.loads(text))


def binomial_poly(offset: int, k: int) -> Polynomial:
    """The binomial coefficient binom(t+offset, k) as a degree-k polynomial.

    Equals (t+offset)(t+offset-1)...(t+offset-k+1)/k!; k = 0 gives the
    constant 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = Polynomial.one()
    for i in range(k):
        p = p * Polynomial((offset - i, 1))
    return p * Fraction(1, factorial(k))


# ---------------------------------------------------------------------------
# Determinants over the polynomial ring
# ---------------------------------------------------------------------------


def _det_cofactor(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    n = len(m)
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = Polynomial.zero()
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in m[1:]]
        term = m[0][j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free Bareiss elimination; divisions are exact by construction."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.divexact(prev)
            a[i][k] = Polynomial.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def poly_det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square matrix of polynomials.

    Cofactor expansion for matrices up to 4x4, fraction-free Bareiss
    elimination above that (Kreweras matrices are small but their entries have
    high degree, so intermediate blowup is what matters).  The empty matrix
    has determinant 1.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    if n <= 4:
        return _det_cofactor(matrix)
    return _det_bareiss(matrix)


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Interpolation
# ---------------------------------------------------------------------------


def interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton's divided differences over exact rationals.  Duplicate abscissae
    are rejected.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae in interpolation input")
    ys = [Fraction(y) for _, y in points]
    n = len(points)
    if n == 0:
        return Polynomial.zero()
    # divided difference table, in place
    dd = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner-style assembly of the Newton form
    poly = Polynomial.constant(dd[n - 1])
    for i in range(n - 2, -1, -1):
        poly = poly * Polynomial((-xs[i], 1)) + Polynomial.constant(dd[i])
    return poly


# ---------------------------------------------------------------------------
# Real roots via Sturm sequences
# ---------------------------------------------------------------------------


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, divmod(a, b)[1]
    return a.monic() if not a.is_zero else a


def squarefree_part(p: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of p, made monic."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return Polynomial.one()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    return p.divexact(g).monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Write p (up to a constant) as a product of squarefree factors f^m.

    Returns [(factor, multiplicity), ...] with monic pairwise-coprime factors.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    g = poly_gcd(p, p.derivative())
    s = p.divexact(g).monic()  # product of all distinct factors
    if g.degree == 0:
        return [(s, 1)]
    rest = squarefree_decomposition(g)  # factors of prod q_i^(i-1)
    out = []
    mult_one = s
    for base, m in rest:
        out.append((base, m + 1))
        mult_one = mult_one.divexact(base)
    if mult_one.degree > 0:
        out.append((mult_one.monic(), 1))
    out.sort(key=lambda fm: (fm[1], fm[0].coeffs))
    return out


def _sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        rem = divmod(chain[-2], chain[-1])[1]
        chain.append(-rem)
    chain.pop()
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain: Sequence[Polynomial], x) -> int:
    """Sign variations of the chain at x; x may be None for +inf, 'neg' -inf."""
    signs = []
    for q in chain:
        if q.is_zero:
            continue
        if x == "+inf":
            s = _sign(q.leading)
        elif x == "-inf":
            s = _sign(q.leading) * (-1 if q.degree % 2 else 1)
        else:
            s = _sign(q(x))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Polynomial, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    lo=None means -infinity and hi=None means +infinity.  Roots at finite
    endpoints are excluded (the interval is open).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    q = squarefree_part(p)
    if q.degree == 0:
        return 0
    if lo is not None:
        lo = Fraction(lo)
        if q(lo) == 0:
            q = q.divexact(Polynomial((-lo, 1)))
    if hi is not None:
        hi = Fraction(hi)
        if q(hi) == 0:
            q = q.divexact(Polynomial((-hi, 1)))
    if q.degree == 0:
        return 0
    if lo is not None and hi is not None and lo >= hi:
        return 0
    chain = _sturm_chain(q)
    va = _variations_at(chain, "-inf" if lo is None else lo)
    vb = _variations_at(chain, "+inf" if hi is None else hi)
    return va - vb


def roots_in_open_interval(p: Polynomial, lo: Scalar, hi: Scalar) -> int:
    """Distinct real roots of p strictly between lo and hi (exact)."""
    return count_real_roots(p, Fraction(lo), Fraction(hi))


def is_real_rooted(p: Polynomial) -> bool:
    """True iff every complex root of p is real (counted with multiplicity).

    Computed exactly: Sturm-count the distinct real roots of each squarefree
    factor and weight by multiplicity; real-rooted iff the total matches the
    degree.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    total = 0
    for factor, mult in squarefree_decomposition(p):
        total += mult * count_real_roots(factor)
    return total == p.degree


def _is_log_concave(seq: Sequence[Fraction]) -> bool:
    return all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def _is_unimodal(seq: Sequence[Fraction]) -> bool:
    i = 0
    n = len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i == n - 1


@dataclass(frozen=True)
class PolyAnalysis:
    nonnegative_coeffs: bool
    log_concave: bool
    unimodal: bool
    real_rooted: bool

    def to_json(self) -> dict:
        return {
            "nonnegative_coeffs": self.nonnegative_coeffs,
            "log_concave": self.log_concave,
            "unimodal": self.unimodal,
            "real_rooted": self.real_rooted,
        }


def analyze(p: Polynomial) -> PolyAnalysis:
    """Exact sign/shape report on the dense coefficient sequence of p.

    log-concavity and unimodality are tested on the coefficients c_0..c_d
    including internal zeros; real-rootedness is decided by Sturm counts.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    cs = list(p.coeffs)
    return PolyAnalysis(
        nonnegative_coeffs=all(c >= 0 for c in cs),
        log_concave=_is_log_concave(cs),
        unimodal=_is_unimodal(cs),
        real_rooted=is_real_rooted(p),
    )
