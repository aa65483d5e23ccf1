"""Finite posets, ideal lattices, and brute-force order polynomials.

A poset is stored by its cover relations (the Hasse diagram) over elements
0..n-1.  The workhorse here is the lattice of order ideals J(P): the order
polynomial is recovered by counting multichains of ideals (the (empty, full)
entry of powers of the containment matrix) at t = 0..n and interpolating.

An independent engine based on linear extensions and descents is provided for
cross-checks, along with the coefficient recursion driven by the coproduct
identity, the meta positivity check for ideal-closed families, and the
Kahn-Saks monotonicity test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Sequence

from .exactpoly import Polynomial, binomial_poly, interpolate
from .shapes import (
    CylindricShape,
    ShapeError,
    ShiftedSkewShape,
    SkewShape,
    zigzag,
)


class PosetError(ValueError):
    """Invalid poset construction (cycles, redundant covers, bad indices)."""


class CapExceeded(RuntimeError):
    """A configurable enumeration cap was exceeded; use a formula engine."""


IDEAL_CAP = 2_000_000  # default guard on |J(P)|


# ---------------------------------------------------------------------------
# Poset
# ---------------------------------------------------------------------------


class Poset:
    """Finite poset given by its cover relations (lower, upper)."""

    __slots__ = ("n", "covers", "labels", "_below", "_above", "_lattice")

    def __init__(self, n: int, covers: Iterable[tuple[int, int]], labels=None,
                 _validated: bool = False):
        covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        if any(a == b or not (0 <= a < n) or not (0 <= b < n) for a, b in covers):
            raise PosetError("cover endpoints must be distinct elements in range")
        if len(set(covers)) != len(covers):
            raise PosetError("duplicate cover")
        self.n = n
        self.covers = covers
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise PosetError("labels length mismatch")
        self._below = self._closure()
        self._above = None
        self._lattice = None
        if not _validated:
            self._check_reduced()

    # -- construction helpers ----------------------------------------------

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[tuple[int, int]],
                       labels=None) -> "Poset":
        """Build from arbitrary order relations: close transitively, reduce."""
        below = [1 << i for i in range(n)]
        rels = set()
        for a, b in relations:
            if a == b:
                continue  # reflexive relations carry no information
            rels.add((int(a), int(b)))
        adj = [[] for _ in range(n)]
        for a, b in rels:
            adj[a].append(b)
        order = _topo_order(n, adj)
        if order is None:
            raise PosetError("relations contain a cycle")
        strict_below = [0] * n  # mask of elements strictly below i
        for v in order:  # edges go forward along a topological order
            for w in adj[v]:
                strict_below[w] |= strict_below[v] | (1 << v)
        # every cover of the closure is among the given relations, so the
        # transitive reduction is the relations with no strict intermediate
        covers = [
            (a, b)
            for a, b in sorted(rels)
            if not any(
                strict_below[b] >> c & 1 and strict_below[c] >> a & 1
                for c in _bits(strict_below[b] & ~(1 << a))
            )
        ]
        return cls(n, covers, labels=labels, _validated=True)

    def _closure(self) -> list[int]:
        """below[i] = bitmask of elements <= i (including i)."""
        n = self.n
        adj_up: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            adj_up[a].append(b)
        order = _topo_order(n, adj_up)
        if order is None:
            raise PosetError("cover relation contains a cycle")
        below = [1 << i for i in range(n)]
        for v in order:
            for w in adj_up[v]:
                below[w] |= below[v]
        return below

    def _check_reduced(self):
        below = self._below
        for a, b in self.covers:
            between = below[b] & ~(1 << b) & ~below[a]
            for c in _bits(between):
                if below[c] >> a & 1:
                    raise PosetError(f"cover ({a},{b}) is implied through {c}")

    # -- basic queries -------------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool(self._below[b] >> a & 1)

    def below_mask(self, i: int) -> int:
        return self._below[i]

    def above_mask(self, i: int) -> int:
        if self._above is None:
            above = [1 << x for x in range(self.n)]
            for y in range(self.n):
                for x in _bits(self._below[y] & ~(1 << y)):
                    above[x] |= 1 << y
            self._above = above
        return self._above[i]

    def dual(self) -> "Poset":
        return Poset(self.n, [(b, a) for a, b in self.covers], labels=self.labels,
                     _validated=True)

    def is_antichain_triple_free(self) -> bool:
        """True iff the poset has width <= 2 (no 3 pairwise-incomparable elements)."""
        n = self.n
        for a in range(n):
            for b in range(a + 1, n):
                if self.leq(a, b) or self.leq(b, a):
                    continue
                for c in range(b + 1, n):
                    if not (
                        self.leq(a, c) or self.leq(c, a)
                        or self.leq(b, c) or self.leq(c, b)
                    ):
                        return False
        return True

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if not self.leq(a, b) and not self.leq(b, a)
        ]

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={list(self.covers)})"

    def to_json(self) -> dict:
        out = {"n": self.n, "covers": [list(c) for c in self.covers]}
        if self.labels is not None:
            out["labels"] = [list(l) if isinstance(l, tuple) else l for l in self.labels]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        labels = data.get("labels")
        if labels is not None:
            labels = [tuple(l) if isinstance(l, list) else l for l in labels]
        return cls(data["n"], [tuple(c) for c in data["covers"]], labels=labels)

    def to_dot(self) -> str:
        """Hasse diagram in DOT form (for debugging)."""
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i in range(self.n):
            label = self.labels[i] if self.labels else i
            lines.append(f'  {i} [label="{label}"];')
        for a, b in self.covers:
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines)

    # -- ideal lattice -------------------------------------------------------

    def ideal_lattice(self, cap: int = IDEAL_CAP) -> "IdealLattice":
        if self._lattice is None or self._lattice.capped_at < cap:
            self._lattice = IdealLattice(self, cap)
        return self._lattice


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _topo_order(n: int, adj_up: Sequence[Sequence[int]]) -> list[int] | None:
    indeg = [0] * n
    for v in range(n):
        for w in adj_up[v]:
            indeg[w] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj_up[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return order if len(order) == n else None


class IdealLattice:
    """The distributive lattice J(P) of order ideals, as sorted bitmasks."""

    __slots__ = ("poset", "ideals", "index", "capped_at")

    def __init__(self, poset: Poset, cap: int = IDEAL_CAP):
        self.poset = poset
        self.capped_at = cap
        self.ideals = _enumerate_ideals(poset.n, poset._below, (1 << poset.n) - 1, cap)
        self.index = {m: i for i, m in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def zeta_apply(self, vec: list[int]) -> list[int]:
        """One application of the containment zeta: out[K] = sum_{I <= K} vec[I]."""
        n = self.poset.n
        if n <= 20:
            cube = [0] * (1 << n)
            for m, v in zip(self.ideals, vec):
                cube[m] = v
            for b in range(n):
                bit = 1 << b
                for m in range(1 << n):
                    if m & bit:
                        cube[m] += cube[m ^ bit]
            return [cube[m] for m in self.ideals]
        out = []
        for m in self.ideals:
            acc = 0
            for m2, v in zip(self.ideals, vec):
                if m2 & ~m == 0:
                    acc += v
            out.append(acc)
        return out

    def multichain_counts(self, t_max: int) -> list[int]:
        """[N_0..N_t_max] where N_t = #(I_0=empty <= I_1 <= ... <= I_t = P)."""
        full = (1 << self.poset.n) - 1
        vec = [1 if m == 0 else 0 for m in self.ideals]
        counts = [vec[self.index[full]]]
        for _ in range(t_max):
            vec = self.zeta_apply(vec)
            counts.append(vec[self.index[full]])
        return counts


def _enumerate_ideals(n: int, below: Sequence[int], universe: int, cap: int) -> list[int]:
    """All ideals (downward-closed masks) contained in `universe`, BFS from empty."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ideal in frontier:
            avail = universe & ~ideal
            for x in _bits(avail):
                if below[x] & universe & ~(1 << x) & ~ideal == 0:
                    new = ideal | (1 << x)
                    if new not in seen:
                        seen.add(new)
                        if len(seen) > cap:
                            raise CapExceeded(
                                f"ideal lattice exceeds cap {cap}; "
                                "use a determinant engine"
                            )
                        nxt.append(new)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


# ---------------------------------------------------------------------------
# Cell posets
# ---------------------------------------------------------------------------


def cell_poset(shape: SkewShape) -> Poset:
    """Poset of the boxes of a skew shape; (i,j) covers (i+1,j) and (i,j+1)."""
    cells = shape.cells()
    if not cells:
        raise ShapeError("empty shape has no cell poset")
    return _poset_from_cells(cells)


def _poset_from_cells(cells: list[tuple[int, int]]) -> Poset:
    index = {c: k for k, c in enumerate(cells)}
    covers = []
    for (i, j), k in index.items():
        right = index.get((i, j + 1))
        if right is not None:
            covers.append((right, k))
        down = index.get((i + 1, j))
        if down is not None:
            covers.append((down, k))
    return Poset(len(cells), covers, labels=cells, _validated=True)


def cylindric_cell_poset(shape: CylindricShape) -> Poset:
    """Cell poset of a cylindric shape, with the wrap relations of the glued row.

    Row ell, shifted d columns right, sits above row 1: cell (ell, j) lies
    above cell (1, j+d) whenever both exist.  Raises if the wrap closes a
    cycle (which happens only for d = 0 through a full column).
    """
    cells = shape.cells()
    if not cells:
        raise ShapeError("empty cylindric shape has no cell poset")
    index = {c: k for k, c in enumerate(cells)}
    relations = []
    for (i, j), k in index.items():
        for nbr in ((i, j + 1), (i + 1, j)):
            t = index.get(nbr)
            if t is not None:
                relations.append((t, k))
    for upper, lower in shape.wrap_pairs():
        relations.append((index[lower], index[upper]))
    try:
        return Poset.from_relations(len(cells), relations, labels=cells)
    except PosetError as exc:
        raise ShapeError(f"cylindric wrap creates a cycle: {exc}") from exc


def shifted_cell_poset(shape: ShiftedSkewShape) -> Poset:
    """Cell poset of a shifted skew shape (row/column adjacency)."""
    cells = shape.cells()
    if not cells:
        raise ShapeError("empty shifted shape has no cell poset")
    return _poset_from_cells(cells)


def width_two_poset(shape: SkewShape, m: int, n: int) -> Poset:
    """The width-two poset on two chains encoded by lambda/mu inside m x n.

    Chains alpha_1 > ... > alpha_m and beta_n > ... > beta_1; the pair
    (alpha_i, beta_j) is incomparable exactly when (i, j) is a cell of
    lambda/mu; otherwise alpha_i > beta_j for j <= mu_i and beta_j > alpha_i
    for j > lambda_i.
    """
    lam = tuple(shape.lam) + (0,) * (m - shape.length)
    mu = tuple(shape.mu) + (0,) * (m - shape.length)
    if shape.length > m or (shape.lam and shape.lam[0] > n):
        raise ShapeError(f"shape does not fit in a {m}x{n} rectangle")
    alpha = list(range(m))           # alpha_i -> i-1
    beta = [m + j for j in range(n)]  # beta_j -> m+j-1
    relations = []
    for i in range(m - 1):
        relations.append((alpha[i + 1], alpha[i]))  # alpha chain, alpha_1 on top
    for j in range(n - 1):
        relations.append((beta[j], beta[j + 1]))    # beta chain, beta_n on top
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if mu[i - 1] < j <= lam[i - 1]:
                continue  # incomparable pair
            if j <= mu[i - 1]:
                relations.append((beta[j - 1], alpha[i - 1]))
            else:
                relations.append((alpha[i - 1], beta[j - 1]))
    labels = [("a", i + 1) for i in range(m)] + [("b", j + 1) for j in range(n)]
    poset = Poset.from_relations(m + n, relations, labels=labels)
    if not poset.is_antichain_triple_free():
        raise AssertionError("width-two construction produced width > 2")
    want = {(i, j) for (i, j) in shape.cells()}
    got = set()
    for a, b in poset.incomparable_pairs():
        la, lb = labels[a], labels[b]
        if la[0] == "a" and lb[0] == "b":
            got.add((la[1], lb[1]))
        elif la[0] == "b" and lb[0] == "a":
            got.add((lb[1], la[1]))
        else:
            raise AssertionError("incomparable pair within a chain")
    if got != want:
        raise AssertionError("incomparability pattern does not match the diagram")
    return poset


def complement_zigzag(n: int) -> Poset:
    """Poset on x_1..x_n with x_i below x_{i+2} and x_{i+3} (width two)."""
    if n < 1:
        raise PosetError("need at least one element")
    relations = [(i, i + 2) for i in range(n - 2)]
    relations += [(i, i + 3) for i in range(n - 3)]
    return Poset.from_relations(n, relations,
                                labels=[("x", i + 1) for i in range(n)])


# -- named example posets ----------------------------------------------------


def zigzag_poset(n: int) -> Poset:
    """The zig-zag (fence) poset on n elements, as the cell poset of its ribbon."""
    return cell_poset(zigzag(n))


def circular_zigzag_poset(n: int) -> Poset:
    """The circular zig-zag on n elements (n even)."""
    from .shapes import circular_zigzag_shape

    return cylindric_cell_poset(circular_zigzag_shape(n))


def faulhaber_poset(n: int) -> Poset:
    """One minimum element covered by an antichain of n elements."""
    if n < 1:
        raise PosetError("need at least one antichain element")
    return Poset(n + 1, [(0, i) for i in range(1, n + 1)], _validated=True)


def two_covers_example() -> Poset:
    """The 7-element poset (two V's over a common minimum) whose order
    polynomial has a negative linear term although every element covers and
    is covered by at most two elements."""
    # 0 bottom; 1, 2 cover 0; 3,4 cover 1; 5,6 cover 2
    return Poset(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)],
                 _validated=True)


def disjoint_union(p: Poset, q: Poset) -> Poset:
    covers = list(p.covers) + [(a + p.n, b + p.n) for a, b in q.covers]
    return Poset(p.n + q.n, covers, _validated=True)


# ---------------------------------------------------------------------------
# Order polynomial engines
# ---------------------------------------------------------------------------


def order_polynomial(poset: Poset, cap: int = IDEAL_CAP) -> Polynomial:
    """Order polynomial via multichain counts in J(P), interpolated at 0..n.

    Omega(P;t) is the (empty, P) entry of the t-th power of the containment
    matrix of J(P); the empty poset gives the constant 1.
    """
    if poset.n == 0:
        return Polynomial.one()
    lattice = poset.ideal_lattice(cap)
    counts = lattice.multichain_counts(poset.n)
    return interpolate(list(enumerate(counts)))


def order_polynomial_values(poset: Poset, t_max: int, cap: int = IDEAL_CAP) -> list[int]:
    """[Omega(P;0), ..., Omega(P;t_max)] as exact integers."""
    if poset.n == 0:
        return [1] * (t_max + 1)
    return poset.ideal_lattice(cap).multichain_counts(t_max)


def linear_extensions(poset: Poset, cap: int = IDEAL_CAP) -> int:
    """Number of linear extensions e(P), by dynamic programming over J(P)."""
    if poset.n == 0:
        return 1
    lattice = poset.ideal_lattice(cap)
    ext = {0: 1}
    for ideal in lattice.ideals:
        if ideal == 0:
            continue
        total = 0
        for x in _bits(ideal):
            if poset.above_mask(x) & ideal == 1 << x:  # x maximal in the ideal
                total += ext[ideal ^ (1 << x)]
        ext[ideal] = total
    return ext[(1 << poset.n) - 1]


def order_polynomial_by_descents(poset: Poset, max_extensions: int = 2_000_000) -> Polynomial:
    """Independent engine: sum binom(t + n - 1 - des, n) over linear extensions.

    Uses a fixed natural labelling (a topological order); des counts descents
    of the extension word in that labelling.  Exponential in general; meant as
    a cross-check oracle on small posets.
    """
    n = poset.n
    if n == 0:
        return Polynomial.one()
    label_order = _topo_order(n, _adj_up(poset))
    label = [0] * n
    for pos, v in enumerate(label_order):
        label[v] = pos + 1
    below = poset._below
    des_counts: dict[int, int] = {}
    seen = 0
    # iterative DFS over linear extensions, tracking last label and descents
    stack = [(0, 0, 0)]  # (placed mask, last label, descents)
    while stack:
        mask, last, des = stack.pop()
        if mask == (1 << n) - 1:
            des_counts[des] = des_counts.get(des, 0) + 1
            seen += 1
            if seen > max_extensions:
                raise CapExceeded("too many linear extensions for the descent oracle")
            continue
        for x in range(n):
            if mask >> x & 1:
                continue
            if below[x] & ~(1 << x) & ~mask:
                continue  # some element below x not yet placed
            stack.append((mask | (1 << x), label[x], des + (1 if last > label[x] else 0)))
    total = Polynomial.zero()
    for des, cnt in sorted(des_counts.items()):
        total = total + binomial_poly(n - 1 - des, n) * cnt
    return total


def _adj_up(poset: Poset) -> list[list[int]]:
    adj = [[] for _ in range(poset.n)]
    for a, b in poset.covers:
        adj[a].append(b)
    return adj


def count_order_preserving_maps(poset: Poset, t: int) -> int:
    """Literal enumeration of order-preserving maps P -> {1..t} (tiny posets only)."""
    n = poset.n
    order = _topo_order(n, _adj_up(poset))
    below = poset._below
    values = [0] * n

    def rec(k: int) -> int:
        if k == n:
            return 1
        x = order[k]
        lo = 1
        for y in _bits(below[x] & ~(1 << x)):
            lo = max(lo, values[y])
        total = 0
        for v in range(lo, t + 1):
            values[x] = v
            total += rec(k + 1)
        values[x] = 0
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# Coefficient recursion (coproduct identity)
# ---------------------------------------------------------------------------


def _c1_weights(m: int) -> list[Fraction]:
    """Weights w_j with [t^1] p = sum w_j p(j) for all polynomials of degree <= m."""
    ws = []
    for j in range(m + 1):
        basis = Polynomial.one()
        for i in range(m + 1):
            if i != j:
                basis = basis * Polynomial((-i, 1)) * Fraction(1, j - i)
        ws.append(basis.coeff(1))
    return ws


_C1_CACHE: dict[int, list[Fraction]] = {}


def _masked_multichain_counts(ideals: list[int], full: int, t_max: int) -> list[int]:
    """Multichain counts for a subposet given its ideal list (submasks of full)."""
    pairs = [
        (i, k)
        for i, mi in enumerate(ideals)
        for k, mk in enumerate(ideals)
        if mi & ~mk == 0
    ]
    vec = [1 if m == 0 else 0 for m in ideals]
    full_at = ideals.index(full)
    out = [vec[full_at]]
    for _ in range(t_max):
        new = [0] * len(ideals)
        for i, k in pairs:
            new[k] += vec[i]
        vec = new
        out.append(vec[full_at])
    return out


def coefficients_by_recursion(poset: Poset, cap: int = IDEAL_CAP) -> list[Fraction]:
    """Coefficients [c_1..c_n] of Omega(P;t) via the ideal-splitting recursion.

    c_k(P) = (2^k - 2)^{-1} * sum over proper nonempty ideals I of
    sum_i c_i(I) c_{k-i}(P \\ I); the linear coefficient at each node is read
    off from multichain counts by interpolation (the recursion only reaches
    k >= 2).
    """
    if poset.n == 0:
        return []
    below = poset._below
    memo: dict[int, list[Fraction]] = {0: [Fraction(1)]}  # c_0..c_m lists

    def coeffs(mask: int) -> list[Fraction]:
        got = memo.get(mask)
        if got is not None:
            return got
        m = bin(mask).count("1")
        if len(memo) > cap:
            raise CapExceeded("recursion node cap exceeded")
        ideals = _enumerate_ideals(poset.n, below, mask, cap)
        counts = _masked_multichain_counts(ideals, mask, m)
        weights = _C1_CACHE.get(m)
        if weights is None:
            weights = _C1_CACHE.setdefault(m, _c1_weights(m))
        c1 = sum(w * c for w, c in zip(weights, counts))
        out = [Fraction(0), c1] + [Fraction(0)] * (m - 1)
        splits = [(coeffs(i_mask), coeffs(mask ^ i_mask))
                  for i_mask in ideals if i_mask != 0 and i_mask != mask]
        for k in range(2, m + 1):
            acc = Fraction(0)
            for ci, cq in splits:
                top = min(k - 1, len(ci) - 1)
                for i in range(max(1, k - (len(cq) - 1)), top + 1):
                    acc += ci[i] * cq[k - i]
            out[k] = acc / (2 ** k - 2)
        memo[mask] = out
        return out

    full = (1 << poset.n) - 1
    return coeffs(full)[1:]


def verify_coproduct(poset: Poset, x: int, y: int, cap: int = IDEAL_CAP) -> bool:
    """Exact check of Omega(P;x+y) = sum_I Omega(I;x) Omega(P\\I;y) over ideals."""
    if x < 0 or y < 0:
        raise ValueError("x and y must be nonnegative")
    if poset.n == 0:
        return True
    lattice = poset.ideal_lattice(cap)
    ideals = lattice.ideals
    # v[I] = Omega(I; x): multichains from empty to I
    vec = [1 if m == 0 else 0 for m in ideals]
    for _ in range(x):
        vec = lattice.zeta_apply(vec)
    # w[I] = Omega(P\I; y): multichains from I to full = reverse zeta powers
    full = (1 << poset.n) - 1
    wec = [1 if m == full else 0 for m in ideals]
    for _ in range(y):
        wec = _zeta_apply_up(lattice, wec)
    rhs = sum(v * w for v, w in zip(vec, wec))
    lhs = lattice.multichain_counts(x + y)[-1]
    return lhs == rhs


def _zeta_apply_up(lattice: IdealLattice, vec: list[int]) -> list[int]:
    """out[I] = sum_{K >= I} vec[K] (superset sum over ideals)."""
    n = lattice.poset.n
    if n <= 20:
        cube = [0] * (1 << n)
        for m, v in zip(lattice.ideals, vec):
            cube[m] = v
        for b in range(n):
            bit = 1 << b
            for m in range(1 << n):
                if not m & bit:
                    cube[m] += cube[m | bit]
        return [cube[m] for m in lattice.ideals]
    out = []
    for m in lattice.ideals:
        acc = 0
        for m2, v in zip(lattice.ideals, vec):
            if m & ~m2 == 0:
                acc += v
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Kahn-Saks monotonicity
# ---------------------------------------------------------------------------


def kahn_saks_check(poset: Poset, t_max: int, omega: Polynomial | None = None) -> bool:
    """True iff Omega(P;t)/t^n is weakly decreasing for t = 1..t_max (exact)."""
    if poset.n == 0:
        return True
    if omega is None:
        omega = order_polynomial(poset)
    return kahn_saks_check_poly(omega, poset.n, t_max)


def kahn_saks_check_poly(omega: Polynomial, n: int, t_max: int) -> bool:
    """Kahn-Saks monotonicity for a precomputed order polynomial of degree n."""
    ints, den = omega.denominator_cleared()

    def val(t: int) -> int:
        acc = 0
        for c in reversed(ints):
            acc = acc * t + c
        return acc

    prev = val(1)
    for t in range(1, t_max + 1):
        nxt = val(t + 1)
        # Omega(t) (t+1)^n >= Omega(t+1) t^n, cleared of the common denominator
        if prev * (t + 1) ** n < nxt * t ** n:
            return False
        prev = nxt
    return True


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------


def canonical_form(poset: Poset) -> tuple[tuple[int, int], ...]:
    """Canonical cover list: lex-minimal encoding over linear-extension relabelings.

    Two posets are isomorphic iff their canonical forms are equal.
    """
    n = poset.n
    below = poset._below
    lower_covers = [0] * n
    for a, b in poset.covers:
        lower_covers[b] |= 1 << a
    # transposition automorphisms let us skip symmetric branches
    cover_set = set(poset.covers)

    def swap_auto(x: int, y: int) -> bool:
        def sw(v: int) -> int:
            return y if v == x else x if v == y else v

        return all((sw(a), sw(b)) in cover_set for a, b in cover_set)

    best: list[tuple[int, ...]] | None = None

    def rec(placed: list[int], placed_mask: int, enc: list[tuple[int, ...]]):
        nonlocal best
        if len(placed) == n:
            if best is None or enc < best:
                best = list(enc)
            return
        cands = [
            x for x in range(n)
            if not placed_mask >> x & 1 and below[x] & ~(1 << x) & ~placed_mask == 0
        ]
        pos = {v: i for i, v in enumerate(placed)}
        tried: list[int] = []
        for x in cands:
            if any(swap_auto(x, y) for y in tried):
                continue
            tried.append(x)
            code = tuple(sorted(pos[v] for v in _bits(lower_covers[x] & placed_mask)))
            enc.append(code)
            if best is None or enc <= best[: len(enc)]:
                rec(placed + [x], placed_mask | (1 << x), enc)
            enc.pop()

    rec([], 0, [])
    assert best is not None
    out = []
    for j, code in enumerate(best):
        out.extend((i, j) for i in code)
    return tuple(sorted(out))


def is_isomorphic(p: Poset, q: Poset) -> bool:
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    return canonical_form(p) == canonical_form(q)


# ---------------------------------------------------------------------------
# Meta positivity check for ideal-closed families
# ---------------------------------------------------------------------------


@dataclass
class MetaPositivityReport:
    size_cap: int
    members_checked: int
    closure_violations: list[str] = field(default_factory=list)
    negative_c1: list[tuple[str, Fraction]] = field(default_factory=list)
    negative_coefficients: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.closure_violations or self.negative_c1
                    or self.negative_coefficients)


def meta_positivity_check(
    family: Callable[[int], Iterable[tuple[str, Poset]]],
    size_cap: int,
) -> MetaPositivityReport:
    """Check the two hypotheses that force nonnegative order polynomials.

    `family(size)` must yield (key, poset) pairs for the members of that size.
    The check verifies (a) closure: every ideal and co-ideal of a member is
    isomorphic to some member of the right size; (b) c_1 >= 0 for every
    member; then certifies nonnegativity of all coefficients through the
    coefficient recursion.  Closure violations are flagged, not fatal.
    """
    canon_by_size: dict[int, set] = {0: {()}, }
    members: list[tuple[str, Poset]] = []
    for size in range(1, size_cap + 1):
        canon_by_size[size] = set()
        for key, poset in family(size):
            if poset.n != size:
                raise ValueError(f"family member {key} has size {poset.n}, not {size}")
            members.append((key, poset))
            canon_by_size[size].add(canonical_form(poset))

    report = MetaPositivityReport(size_cap=size_cap, members_checked=len(members))
    for key, poset in members:
        below = poset._below
        full = (1 << poset.n) - 1
        for ideal in poset.ideal_lattice().ideals:
            for mask in (ideal, full ^ ideal):
                size = bin(mask).count("1")
                if size == 0 or size == poset.n:
                    continue
                sub = _induced_subposet(poset, mask)
                if canonical_form(sub) not in canon_by_size[size]:
                    report.closure_violations.append(
                        f"{key}: sub-poset on {size} elements not in family"
                    )
                    break
            else:
                continue
            break
        omega = order_polynomial(poset)
        c1 = omega.coeff(1)
        if c1 < 0:
            report.negative_c1.append((key, c1))
            continue
        coeffs = coefficients_by_recursion(poset)
        if any(c < 0 for c in coeffs):
            report.negative_coefficients.append(key)
    return report


def _induced_subposet(poset: Poset, mask: int) -> Poset:
    elems = list(_bits(mask))
    pos = {v: i for i, v in enumerate(elems)}
    below = poset._below
    relations = [
        (pos[a], pos[b])
        for a in elems
        for b in elems
        if a != b and below[b] >> a & 1
    ]
    return Poset.from_relations(len(elems), relations)
