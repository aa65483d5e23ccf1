"""Permutations, Rothe diagrams, reduced words, and the Macdonald-sum engines.

For a straight shape the bounded plane-partition count is the average of
(t + r_1)...(t + r_n) over the reduced words r of the dominant permutation
whose Rothe diagram is the shape.  This module enumerates reduced words by
descent peeling and derives the plane-partition polynomial, its coefficient
formula through elementary symmetric polynomials, the hook closed form, and
an exact searcher for sum-of-products certificates of normalized order
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .exactpoly import Polynomial, interpolate
from .shapes import SkewShape, conjugate, is_partition
from .detformulas import kreweras_order_polynomial


class SchubertError(ValueError):
    pass


class WordCapExceeded(RuntimeError):
    """Reduced-word enumeration exceeded the configured cap."""


REDUCED_WORD_CAP = 2_000_000


# ---------------------------------------------------------------------------
# Permutations (one-line notation, values 1..n)
# ---------------------------------------------------------------------------


def check_permutation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise SchubertError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def permutation_length(w: Sequence[int]) -> int:
    """Number of inversions."""
    w = check_permutation(w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def lehmer_code(w: Sequence[int]) -> tuple[int, ...]:
    w = check_permutation(w)
    return tuple(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))
    )


def permutation_from_code(code: Sequence[int]) -> tuple[int, ...]:
    n = len(code)
    avail = list(range(1, n + 1))
    out = []
    for c in code:
        if c >= len(avail):
            raise SchubertError(f"invalid Lehmer code {tuple(code)}")
        out.append(avail.pop(c))
    return tuple(out)


def rothe_diagram(w: Sequence[int]) -> set[tuple[int, int]]:
    """D(w) = {(i, w_j) : i < j, w_i > w_j} (1-indexed cells)."""
    w = check_permutation(w)
    return {
        (i + 1, w[j])
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    }


def dominant_permutation(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """The unique permutation of size n whose Rothe diagram is the partition lam.

    Requires lam inside the staircase (n-1, n-2, ..., 1); the Lehmer code of
    the result is lam padded with zeros, and the permutation is 132-avoiding.
    """
    lam = tuple(lam)
    if not is_partition(lam):
        raise SchubertError(f"not a partition: {lam}")
    lam = tuple(p for p in lam if p > 0)
    if len(lam) > max(n - 1, 0) or any(lam[i] > n - 1 - i for i in range(len(lam))):
        raise SchubertError(f"{lam} does not fit in the staircase of size {n}")
    return permutation_from_code(lam + (0,) * (n - len(lam)))


def contains_pattern(w: Sequence[int], pattern: Sequence[int]) -> bool:
    """Classical pattern containment (brute force over index subsets)."""
    from itertools import combinations

    w = check_permutation(w)
    k = len(pattern)
    rel = check_permutation(pattern)
    for idx in combinations(range(len(w)), k):
        vals = [w[i] for i in idx]
        ranks = sorted(range(k), key=lambda a: vals[a])
        got = [0] * k
        for r, a in enumerate(ranks):
            got[a] = r + 1
        if tuple(got) == rel:
            return True
    return False


def is_dominant(w: Sequence[int]) -> bool:
    """132-avoiding, i.e. the Lehmer code is weakly decreasing."""
    return is_partition(lehmer_code(w))


def is_vexillary(w: Sequence[int]) -> bool:
    """2143-avoiding."""
    return not contains_pattern(w, (2, 1, 4, 3))


def vexillary_shape(w: Sequence[int]) -> SkewShape:
    """The skew shape lambda(w)/mu(w) attached to a vexillary permutation.

    mu(w) sorts the row sizes of the Rothe diagram; lambda(w) is the smallest
    partition whose diagram contains D(w).
    """
    if not is_vexillary(w):
        raise SchubertError(f"{tuple(w)} is not vexillary")
    n = len(w)
    diag = rothe_diagram(w)
    row_max = [0] * (n + 1)
    row_cnt = [0] * (n + 1)
    for i, j in diag:
        row_max[i] = max(row_max[i], j)
        row_cnt[i] += 1
    mu = tuple(sorted((c for c in row_cnt if c), reverse=True))
    lam = []
    running = 0
    for i in range(n, 0, -1):
        running = max(running, row_max[i])
        if running:
            lam.append(running)
    lam_t = tuple(reversed(lam))
    return SkewShape(lam_t, mu)


def one_m_times(w: Sequence[int], m: int) -> tuple[int, ...]:
    """The permutation 1^m x w = 1 2 .. m (m+w_1) .. (m+w_n)."""
    w = check_permutation(w)
    if m < 0:
        raise SchubertError("m must be nonnegative")
    return tuple(range(1, m + 1)) + tuple(v + m for v in w)


# ---------------------------------------------------------------------------
# Reduced words
# ---------------------------------------------------------------------------


def reduced_words(w: Sequence[int], cap: int = REDUCED_WORD_CAP) -> list[tuple[int, ...]]:
    """All reduced words of w, duplicate-free, by descent peeling.

    A word (i_1..i_l) satisfies s_{i_1}...s_{i_l} = w with l = inversions(w);
    peeling the last letter at each descent position enumerates every word
    exactly once.
    """
    w = check_permutation(w)
    memo: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    count = 0

    def rec(v: tuple[int, ...]) -> list[tuple[int, ...]]:
        nonlocal count
        got = memo.get(v)
        if got is not None:
            return got
        if all(v[i] < v[i + 1] for i in range(len(v) - 1)):
            memo[v] = [()]
            return memo[v]
        words = []
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                u = v[:i] + (v[i + 1], v[i]) + v[i + 2:]
                for word in rec(u):
                    words.append(word + (i + 1,))
                    count += 1
                    if count > cap:
                        raise WordCapExceeded(f"more than {cap} partial words")
        memo[v] = words
        return words

    out = rec(w)
    length = permutation_length(w)
    assert all(len(word) == length for word in out)
    return out


def apply_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    """Product s_{i_1}...s_{i_l} as a permutation of 1..n."""
    v = list(range(1, n + 1))
    for i in reversed(word):
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def reduced_word_multiset(w: Sequence[int], cap: int = REDUCED_WORD_CAP) -> dict[tuple[int, ...], int]:
    """Multiset of sorted letter tuples over RW(w); the Macdonald summand
    (t+r_1)...(t+r_n) depends only on this."""
    counts: dict[tuple[int, ...], int] = {}
    for word in reduced_words(w, cap):
        key = tuple(sorted(word))
        counts[key] = counts.get(key, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Macdonald-identity engines for straight shapes
# ---------------------------------------------------------------------------


def _dominant_for(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(p for p in lam if p > 0)
    if not is_partition(lam) or (lam and min(lam) < 0):
        raise SchubertError(f"not a partition: {lam}")
    n = max(len(lam) + (lam[0] if lam else 0), 1)
    return dominant_permutation(lam, n)


def macdonald_pp(lam: Sequence[int], cap: int = REDUCED_WORD_CAP) -> Polynomial:
    """Bounded plane partitions of the straight shape lam as a polynomial in t:
    the average over reduced words of the dominant permutation of the product
    of (t + letter)."""
    lam = tuple(p for p in lam if p > 0)
    if not lam:
        return Polynomial.one()
    n = sum(lam)
    total = Polynomial.zero()
    for letters, mult in sorted(reduced_word_multiset(_dominant_for(lam), cap).items()):
        term = Polynomial.one()
        for r in letters:
            term = term * Polynomial((r, 1))
        total = total + term * mult
    return total * Fraction(1, factorial(n))


def macdonald_order_polynomial(lam: Sequence[int], cap: int = REDUCED_WORD_CAP) -> Polynomial:
    """Order polynomial of the straight-shape cell poset: the plane-partition
    polynomial shifted t -> t - 1."""
    return macdonald_pp(lam, cap).shift(-1)


def coefficients_via_esym(lam: Sequence[int], cap: int = REDUCED_WORD_CAP) -> list[Fraction]:
    """Coefficients [c_1..c_n] of the order polynomial of a straight shape:
    c_i = (1/n!) sum over reduced words of e_{n-i}(r_1 - 1, ..., r_n - 1)."""
    lam = tuple(p for p in lam if p > 0)
    if not lam:
        return []
    n = sum(lam)
    acc = [Fraction(0)] * (n + 1)
    for letters, mult in sorted(reduced_word_multiset(_dominant_for(lam), cap).items()):
        # elementary symmetric polynomials of (r_j - 1) by the product DP
        e = [1] + [0] * n
        for r in letters:
            x = r - 1
            for k in range(n, 0, -1):
                e[k] += x * e[k - 1]
        for i in range(n + 1):
            acc[i] += mult * e[n - i]
    return [c / factorial(n) for c in acc[1:]]


def hook_pp(a: int, b: int) -> Polynomial:
    """Plane-partition polynomial of the hook (a+1, 1^b), in closed form.

    Conjugation symmetry swaps a and b, so a > b is folded first.  The sum
    runs over the position of the unique letter 1 in the canonical reduced
    word of the dominant permutation.
    """
    if a < 0 or b < 0:
        raise SchubertError("hook parameters must be nonnegative")
    if a > b:
        a, b = b, a
    n = a + b + 1
    total = Polynomial.zero()
    for i in range(1, a + 2):
        term = Polynomial.constant(Fraction(comb(a, i - 1) * comb(b, i - 1)))
        term = term * Polynomial((i, 1))
        for j in range(1, a + 2):
            if j != i:
                term = term * Polynomial((j, 1))
        for j in range(1, b + 2):
            if j != i:
                term = term * Polynomial((j, 1))
        total = total + term
    return total * Fraction(1, factorial(n))


def curious_identity_check(lam: Sequence[int], cap: int = REDUCED_WORD_CAP) -> bool:
    """Check the linear-coefficient identity for a straight shape:

    (1/n!) * sum over reduced words with exactly one letter 1 of
    prod_{j != k} (r_j - 1) equals (lam_1 - 1)! (ell - 1)! / (lam_1 - 1 + ell)!
    where k is the position of that letter.
    """
    lam = tuple(p for p in lam if p > 0)
    if not lam:
        raise SchubertError("empty partition")
    n = sum(lam)
    lhs = Fraction(0)
    for letters, mult in reduced_word_multiset(_dominant_for(lam), cap).items():
        if sum(1 for r in letters if r == 1) != 1:
            continue
        prod = 1
        for r in letters:
            if r != 1:
                prod *= r - 1
        lhs += mult * prod
    lhs /= factorial(n)
    ell = len(lam)
    rhs = Fraction(
        factorial(lam[0] - 1) * factorial(ell - 1), factorial(lam[0] - 1 + ell)
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# Macdonald-type expansion search for skew shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionResult:
    """Outcome of the sum-of-products certificate search.

    `certificate` maps exponent tuples (a_0..a_m) of products
    prod_i (t+i)^(a_i) to multiplicities; `found` False with exhausted=False
    means the node budget ran out (not a refutation), exhausted=True means
    the search space was fully explored and no certificate exists.
    """

    found: bool
    certificate: dict[tuple[int, ...], int] | None
    conjugated: bool
    nodes: int
    exhausted: bool

    def expansion(self) -> Polynomial:
        if not self.found:
            raise ValueError("no certificate")
        total = Polynomial.zero()
        for expo, mult in self.certificate.items():
            term = Polynomial.one()
            for i, a in enumerate(expo):
                term = term * Polynomial((i, 1)) ** a
            total = total + term * mult
        return total


def macdonald_expansion_search(
    shape: SkewShape, m: int | None = None, budget: int = 200_000
) -> ExpansionResult:
    """Search for a multiset of products prod_i (t+i)^(a_i), i = 0..m, summing
    to n! * Omega of the skew cell poset.

    Shapes with lambda_1 < ell are conjugated first (same poset).  The search
    targets the lowest unmatched coefficient, branching on the multiplicity of
    each product able to supply it; the residual stays coordinatewise
    nonnegative since all candidate coefficients are nonnegative.  Budget
    counts explored nodes; exhaustion without a certificate is a verdict, not
    an error.
    """
    if shape.size == 0:
        raise SchubertError("empty shape")
    conjugated = False
    if shape.lam[0] < shape.length:
        shape = shape.conjugate_shape()
        conjugated = True
    if m is None:
        m = shape.lam[0]
    n = shape.size
    target = kreweras_order_polynomial(shape) * factorial(n)
    tvec = [int(target.coeff(k)) for k in range(n + 1)]
    assert all(Fraction(c) == target.coeff(k) for k, c in enumerate(tvec))

    # candidate products with a_0 >= 1 (the target has no constant term)
    cands: list[tuple[tuple[int, ...], list[int]]] = []

    def emit(expo: tuple[int, ...]):
        poly = Polynomial.one()
        for base, a in enumerate(expo):
            poly = poly * Polynomial((base, 1)) ** a
        cands.append((expo, [int(poly.coeff(k)) for k in range(n + 1)]))

    def gen(i: int, left: int, acc: list[int]):
        if i == m:
            emit(tuple(acc) + (left,))
            return
        for a in range(left + 1):
            acc.append(a)
            gen(i + 1, left - a, acc)
            acc.pop()

    if m == 0:
        emit((n,))
    else:
        for a0 in range(1, n + 1):
            gen(1, n - a0, [a0])
    cands.sort(key=lambda ev: ev[0])
    nodes = 0
    exhausted = True

    def dfs(residual: list[int], pool: list, chosen: dict):
        # pool: candidates not yet assigned a multiplicity, sorted by exponent
        nonlocal nodes, exhausted
        nodes += 1
        if nodes > budget:
            exhausted = False
            return None
        low = next((k for k, c in enumerate(residual) if c), None)
        if low is None:
            return dict(chosen)
        # only products whose lowest power equals `low` can reduce it; anything
        # with a lower lowest power can never be used again
        usable = [
            (expo, vec)
            for expo, vec in pool
            if expo[0] == low and all(v <= r for v, r in zip(vec, residual))
        ]
        if not usable:
            return None
        (expo, vec) = usable[0]
        rest = [(e, v) for e, v in pool if e[0] >= low and e != expo]
        max_mult = min(r // v for v, r in zip(vec, residual) if v)
        for mult in range(max_mult, -1, -1):
            if mult:
                chosen[expo] = mult
            else:
                chosen.pop(expo, None)
            new_res = [r - mult * v for r, v in zip(residual, vec)]
            sub = dfs(new_res, rest, chosen)
            if sub is not None:
                return sub
        chosen.pop(expo, None)
        return None

    cert = dfs(tvec, cands, {})
    return ExpansionResult(
        found=cert is not None,
        certificate=cert,
        conjugated=conjugated,
        nodes=nodes,
        exhausted=cert is None and exhausted,
    )
