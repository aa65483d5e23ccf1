"""Shape grammar: partitions, skew, cylindric and shifted shapes.

Shapes are immutable validated descriptors.  Text forms follow the compact
digit convention of the literature ("6533/21", "7644/311/4", "shifted:7521/31")
with a comma form ("12,10,6,6/4,2") when parts exceed one digit.

Conventions used throughout:

- a skew shape lambda/mu stores mu zero-padded to the length of lambda and
  trims trailing rows with lambda_i = mu_i = 0;
- cells of lambda/mu are the 1-indexed boxes (i, j) with mu_i < j <= lambda_i;
- a cylindric shape lambda/mu/d glues row ell, shifted d columns right, on top
  of row 1;
- a shifted shape uses strict partitions, row i occupying columns
  i .. i + lambda_i - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class ShapeError(ValueError):
    """Base class for shape validation failures."""


class ShapeParseError(ShapeError):
    """Malformed shape text."""


class PartitionError(ShapeError):
    """A part list is not a valid (or not a strict) partition."""


class CylindricError(ShapeError):
    """Violated cylindric inequality chain; message pinpoints the index."""


class ShiftedError(ShapeError):
    """Invalid shifted shape (non-strict parts or broken containment)."""


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def is_partition(parts: Sequence[int]) -> bool:
    return all(
        isinstance(p, int) and p >= 0 and (i == 0 or parts[i - 1] >= p)
        for i, p in enumerate(parts)
    )


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Conjugate (transpose) partition."""
    if not parts or parts[0] == 0:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts bounded by max_part, parts descending."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All strictly decreasing partitions of n."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """All partitions with at most `rows` parts, each at most `cols` (lex order)."""
    out = []

    def build(i: int, prev: int, acc: list[int]):
        trimmed = list(acc)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        out.append(tuple(trimmed))
        if i == rows:
            return
        for part in range(1, prev + 1):
            acc.append(part)
            build(i + 1, part, acc)
            acc.pop()

    build(0, cols, [])
    yield from sorted(set(out))


def subpartitions(lam: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All partitions mu with mu_i <= lam_i, trailing zeros trimmed."""
    out: list[tuple[int, ...]] = []

    def build(i: int, prev: int, acc: list[int]):
        if i == len(lam):
            trimmed = list(acc)
            while trimmed and trimmed[-1] == 0:
                trimmed.pop()
            out.append(tuple(trimmed))
            return
        for part in range(min(prev, lam[i]), -1, -1):
            acc.append(part)
            build(i + 1, part, acc)
            acc.pop()

    build(0, lam[0] if lam else 0, [])
    yield from dict.fromkeys(out)


# ---------------------------------------------------------------------------
# Skew shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewShape:
    """Skew shape lambda/mu with mu padded to the length of lambda."""

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        lam = tuple(self.lam)
        mu = tuple(self.mu)
        if not is_partition(lam):
            raise PartitionError(f"lambda is not a partition: {lam}")
        if not is_partition(mu):
            raise PartitionError(f"mu is not a partition: {mu}")
        if len(mu) > len(lam):
            if any(p > 0 for p in mu[len(lam):]):
                raise PartitionError("mu longer than lambda")
            mu = mu[: len(lam)]
        mu = mu + (0,) * (len(lam) - len(mu))
        for i, (a, b) in enumerate(zip(lam, mu)):
            if b > a:
                raise PartitionError(f"mu_{i+1} = {b} exceeds lambda_{i+1} = {a}")
        # canonicalize: drop trailing rows with lambda_i = mu_i = 0
        while lam and lam[-1] == 0:
            lam = lam[:-1]
            mu = mu[:-1]
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def length(self) -> int:
        """Number of rows ell (after trailing-zero canonicalization)."""
        return len(self.lam)

    @property
    def size(self) -> int:
        return sum(a - b for a, b in zip(self.lam, self.mu))

    def cells(self) -> list[tuple[int, int]]:
        """1-indexed boxes (i, j) with mu_i < j <= lambda_i, row-major."""
        return [
            (i + 1, j)
            for i in range(self.length)
            for j in range(self.mu[i] + 1, self.lam[i] + 1)
        ]

    def conjugate_shape(self) -> "SkewShape":
        return SkewShape(conjugate(self.lam), conjugate(self.mu))

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "d": None,
            "shifted": False,
        }


@dataclass(frozen=True)
class CylindricShape:
    """Cylindric shape lambda/mu/d.

    lambda and mu are nonnegative integer sequences of common length ell
    satisfying the cylindric inequality chains
    s_1 >= s_2 - 1 >= ... >= s_ell - (ell-1) >= s_1 - d - ell
    and mu_i <= lambda_i.  Unlike skew shapes, consecutive parts may increase
    by one.
    """

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    d: int

    def __post_init__(self):
        lam = tuple(self.lam)
        mu = tuple(self.mu)
        if not lam:
            raise CylindricError("cylindric shape needs at least one row")
        if len(mu) > len(lam):
            raise CylindricError("mu longer than lambda")
        mu = mu + (0,) * (len(lam) - len(mu))
        if not isinstance(self.d, int) or self.d < 0:
            raise CylindricError(f"shift d must be a nonnegative integer, got {self.d}")
        for name, seq in (("lambda", lam), ("mu", mu)):
            for i, v in enumerate(seq):
                if not isinstance(v, int) or v < 0:
                    raise CylindricError(
                        f"{name}_{i+1} = {v} is not a nonnegative integer"
                    )
            self._check_chain(name, seq, len(lam), self.d)
        for i, (a, b) in enumerate(zip(lam, mu)):
            if b > a:
                raise CylindricError(f"mu_{i+1} = {b} exceeds lambda_{i+1} = {a}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @staticmethod
    def _check_chain(name: str, seq: Sequence[int], ell: int, d: int):
        for i in range(ell - 1):
            if seq[i] - i < seq[i + 1] - (i + 1):
                raise CylindricError(
                    f"{name} chain fails at index {i+1}: "
                    f"{name}_{i+1} - {i} < {name}_{i+2} - {i+1}"
                )
        if seq[ell - 1] - (ell - 1) < seq[0] - d - ell:
            raise CylindricError(
                f"{name} chain fails at the wrap: "
                f"{name}_{ell} - {ell-1} < {name}_1 - d - {ell}"
            )

    @property
    def length(self) -> int:
        return len(self.lam)

    @property
    def size(self) -> int:
        return sum(a - b for a, b in zip(self.lam, self.mu))

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i + 1, j)
            for i in range(self.length)
            for j in range(self.mu[i] + 1, self.lam[i] + 1)
        ]

    def wrap_pairs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Wrap relations ((ell, j) above (1, j + d)) present in the diagram."""
        ell = self.length
        out = []
        for j in range(self.mu[ell - 1] + 1, self.lam[ell - 1] + 1):
            jj = j + self.d
            if self.mu[0] < jj <= self.lam[0] and (ell, j) != (1, jj):
                out.append(((ell, j), (1, jj)))
        return out

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "d": self.d,
            "shifted": False,
        }


@dataclass(frozen=True)
class ShiftedSkewShape:
    """Shifted skew shape on strict partitions; row i starts at column i."""

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        lam = tuple(self.lam)
        mu = tuple(self.mu)
        if not lam:
            raise ShiftedError("shifted shape needs at least one row")
        if any(lam[i] <= lam[i + 1] for i in range(len(lam) - 1)) or lam[-1] <= 0:
            raise ShiftedError(f"lambda must be strictly decreasing and positive: {lam}")
        if mu and (
            any(mu[i] <= mu[i + 1] for i in range(len(mu) - 1)) or mu[-1] <= 0
        ):
            raise ShiftedError(f"mu must be strictly decreasing and positive: {mu}")
        if len(mu) > len(lam):
            raise ShiftedError("mu longer than lambda")
        for i, b in enumerate(mu):
            if b > lam[i]:
                raise ShiftedError(
                    f"shifted containment fails at row {i+1}: mu_{i+1} > lambda_{i+1}"
                )
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def length(self) -> int:
        return len(self.lam)

    @property
    def size(self) -> int:
        mu = self.mu + (0,) * (self.length - len(self.mu))
        return sum(a - b for a, b in zip(self.lam, mu))

    def cells(self) -> list[tuple[int, int]]:
        """Boxes (i, j): row i holds columns i + mu_i .. i + lambda_i - 1."""
        mu = self.mu + (0,) * (self.length - len(self.mu))
        return [
            (i + 1, j)
            for i in range(self.length)
            for j in range(i + 1 + mu[i], i + 1 + self.lam[i])
        ]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "d": None,
            "shifted": True,
        }


Shape = Union[SkewShape, CylindricShape, ShiftedSkewShape]


# ---------------------------------------------------------------------------
# Text grammar
# ---------------------------------------------------------------------------


def _parse_parts(text: str) -> tuple[int, ...]:
    if text == "":
        return ()
    if "," in text:
        try:
            return tuple(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ShapeParseError(f"bad part list {text!r}") from exc
    if not text.isdigit():
        raise ShapeParseError(f"bad part list {text!r}")
    return tuple(int(ch) for ch in text)


def _format_parts(parts: Sequence[int], comma: bool) -> str:
    if comma:
        return ",".join(str(p) for p in parts)
    return "".join(str(p) for p in parts)


def parse_shape(text: str) -> Shape:
    """Parse a shape string into a validated shape descriptor.

    Grammar: ``parts[/parts[/d]]`` with an optional ``shifted:`` prefix; parts
    are single digits in compact form or comma-separated integers.  A third
    component makes the shape cylindric; shifted shapes take no d.
    """
    if not isinstance(text, str) or not text.strip():
        raise ShapeParseError("empty shape text")
    text = text.strip()
    shifted = False
    if text.startswith("shifted:"):
        shifted = True
        text = text[len("shifted:"):]
    pieces = text.split("/")
    if len(pieces) > 3 or (shifted and len(pieces) > 2):
        raise ShapeParseError(f"too many '/' components in {text!r}")
    lam = _parse_parts(pieces[0])
    mu = _parse_parts(pieces[1]) if len(pieces) >= 2 else ()
    if shifted:
        return ShiftedSkewShape(lam, mu)
    if len(pieces) == 3:
        if not pieces[2].isdigit():
            raise ShapeParseError(f"bad shift {pieces[2]!r}")
        return CylindricShape(lam, mu, int(pieces[2]))
    return SkewShape(lam, mu)


def format_shape(shape: Shape) -> str:
    """Canonical text form; parse_shape(format_shape(s)) == s."""
    comma = any(p > 9 for p in tuple(shape.lam) + tuple(shape.mu))
    if isinstance(shape, ShiftedSkewShape):
        body = _format_parts(shape.lam, comma)
        if shape.mu:
            body += "/" + _format_parts(shape.mu, comma)
        return "shifted:" + body
    mu = tuple(shape.mu)
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    body = _format_parts(shape.lam, comma)
    if isinstance(shape, CylindricShape):
        return f"{body}/{_format_parts(mu, comma)}/{shape.d}"
    if mu:
        body += "/" + _format_parts(mu, comma)
    return body


# ---------------------------------------------------------------------------
# Predicates and constructions
# ---------------------------------------------------------------------------


def is_ribbon(shape: SkewShape) -> bool:
    """True iff the diagram contains no 2x2 block of cells."""
    cells = set(shape.cells())
    return not any(
        (i, j + 1) in cells and (i + 1, j) in cells and (i + 1, j + 1) in cells
        for (i, j) in cells
    )


def is_connected(shape: SkewShape) -> bool:
    """True iff no row is empty and consecutive rows share a column.

    Equivalently, neither degeneracy lambda_i = mu_i nor
    lambda_i <= mu_{i-1} occurs; this matches cell-adjacency connectivity.
    """
    if shape.size == 0:
        raise ShapeError("empty shape")
    lam, mu = shape.lam, shape.mu
    for i in range(shape.length):
        if lam[i] == mu[i]:
            return False
        if i > 0 and lam[i] <= mu[i - 1]:
            return False
    return True


def zigzag(n: int) -> SkewShape:
    """The zig-zag ribbon with n boxes (its cell poset is the zig-zag poset)."""
    if n < 1:
        raise ShapeError("zig-zag size must be positive")
    k = n // 2
    if n == 1:
        return SkewShape((1,))
    if n % 2 == 0:
        lam = tuple(range(k + 1, 1, -1))
        mu = tuple(range(k - 1, 0, -1))
    else:
        lam = tuple(range(k + 1, 0, -1))
        mu = tuple(range(k - 1, 0, -1))
    return SkewShape(lam, mu)


def stretch(shape: SkewShape, k: int) -> SkewShape:
    """The stretched shape (k*lambda)/(k*mu)."""
    if k < 1:
        raise ShapeError("stretch factor must be positive")
    return SkewShape(tuple(k * a for a in shape.lam), tuple(k * b for b in shape.mu))


def ribbon_from_rows(row_lengths: Sequence[int]) -> SkewShape:
    """Connected ribbon whose rows, top to bottom, have the given lengths.

    Consecutive rows of a ribbon overlap in exactly one column, which pins
    lambda and mu: mu_i = lambda_{i+1} - 1 and mu_ell = 0.
    """
    if not row_lengths or any(r < 1 for r in row_lengths):
        raise ShapeError("row lengths must be positive")
    ell = len(row_lengths)
    lam = [0] * ell
    lam[ell - 1] = row_lengths[ell - 1]
    for i in range(ell - 2, -1, -1):
        lam[i] = lam[i + 1] - 1 + row_lengths[i]
    mu = [lam[i + 1] - 1 for i in range(ell - 1)] + [0]
    return SkewShape(tuple(lam), tuple(mu))


def _compositions(m: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions(m - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Family enumerators (canonical forms; used by scans and tests)
# ---------------------------------------------------------------------------


def skew_shapes(n: int) -> Iterator[SkewShape]:
    """All skew shapes with exactly n cells, canonically placed.

    Canonical means every row is nonempty and mu_ell = 0; column translates
    and empty-row paddings of these realize all skew cell posets.  Emitted in
    lexicographic (lambda, mu) order.
    """
    if n < 1:
        return
    results = []

    def build(rows: list[tuple[int, int]], remaining: int):
        # rows collected bottom-up as (lam_i, mu_i) pairs
        if remaining == 0:
            lam = tuple(a for a, _ in reversed(rows))
            mu = tuple(b for _, b in reversed(rows))
            results.append(SkewShape(lam, mu))
            return
        if not rows:
            for lam_l in range(1, remaining + 1):
                rows.append((lam_l, 0))
                build(rows, remaining - lam_l)
                rows.pop()
            return
        lam_below, mu_below = rows[-1]
        # mu_i <= lam_below: rows further right give isomorphic cell posets
        for mu_i in range(mu_below, lam_below + 1):
            for lam_i in range(max(lam_below, mu_i + 1), mu_i + remaining + 1):
                rows.append((lam_i, mu_i))
                build(rows, remaining - (lam_i - mu_i))
                rows.pop()

    build([], n)
    results.sort(key=lambda s: (s.lam, s.mu))
    yield from results


def ribbons(n: int) -> Iterator[SkewShape]:
    """All connected ribbons with n cells (one per composition of n)."""
    if n < 1:
        return
    for comp in _compositions(n):
        yield ribbon_from_rows(comp)


def circular_fence_shapes(n: int) -> Iterator[CylindricShape]:
    """Circular fences of size n: ribbon shapes with d = lambda_1 - 1.

    Multi-row single-column ribbons are excluded: there d would be 0 and the
    wrap relation closes the column into a cycle.
    """
    for rib in ribbons(n):
        if rib.lam[0] == 1 and rib.length > 1:
            continue
        yield CylindricShape(rib.lam, rib.mu, rib.lam[0] - 1)


def circular_zigzag_shape(n: int) -> CylindricShape:
    """The circular zig-zag with n boxes (n even)."""
    if n < 2 or n % 2:
        raise ShapeError("circular zig-zag needs an even size >= 2")
    rib = zigzag(n)
    return CylindricShape(rib.lam, rib.mu, rib.lam[0] - 1)


def cylindric_shapes(n: int) -> Iterator[CylindricShape]:
    """Canonical cylindric shapes with n cells.

    lambda and mu are proper partitions, every row is nonempty, consecutive
    rows share at least one column, min(mu) = 0, and d runs from
    max(1, lam_1 - lam_ell, mu_1 - mu_ell) (the wrap inequalities strict, so
    the cylinder does not self-touch) through the largest value still
    producing a wrap relation, plus one no-wrap representative (where the
    poset degenerates to the plain skew cell poset).  Seam-equality and
    non-partition presentations are rotations or translates of these.
    """
    if n < 1:
        return
    results: dict[tuple, CylindricShape] = {}

    def emit(sizes: Sequence[int], offsets: Sequence[int]):
        ell = len(sizes)
        shift = min(offsets)
        mu = [o - shift for o in offsets]
        lam = [m + s for m, s in zip(mu, sizes)]
        if any(lam[i] < lam[i + 1] for i in range(ell - 1)):
            return
        if any(mu[i] < mu[i + 1] for i in range(ell - 1)):
            return
        d_lo = max(1, lam[0] - lam[-1], mu[0] - mu[-1])
        d_wrap_hi = lam[0] - mu[-1] - 1
        ds = list(range(d_lo, d_wrap_hi + 1))
        ds.append(max(d_lo, d_wrap_hi + 1))
        for d in ds:
            shape = CylindricShape(tuple(lam), tuple(mu), d)
            results[(shape.lam, shape.mu, shape.d)] = shape

    def place(sizes: tuple[int, ...], i: int, offsets: list[int]):
        if i == len(sizes):
            emit(sizes, offsets)
            return
        prev = offsets[-1]
        r_prev, r_i = sizes[i - 1], sizes[i]
        # shared column with the previous row and both chain conditions
        lo = prev - r_i + 1
        hi = min(prev + 1, prev + r_prev + 1 - r_i)
        for off in range(lo, min(hi, prev + r_prev - 1) + 1):
            offsets.append(off)
            place(sizes, i + 1, offsets)
            offsets.pop()

    for comp in _compositions(n):
        place(comp, 1, [0])
    for key in sorted(results):
        yield results[key]


def shifted_shapes(n: int) -> Iterator[ShiftedSkewShape]:
    """Canonical shifted skew shapes with n cells.

    Every row is nonempty, mu_ell = 0 (leftmost translate), and consecutive
    rows overlap or touch in columns (mu_i <= lambda_{i+1} + 1); sliding rows
    further apart changes no cover relation.
    """
    if n < 1:
        return
    results = []

    def build(rows: list[tuple[int, int]], remaining: int):
        # rows collected bottom-up as (lam_i, mu_i); bottom row has mu = 0
        if remaining == 0:
            lam = tuple(a for a, _ in reversed(rows))
            mu = tuple(b for _, b in reversed(rows))
            while mu and mu[-1] == 0:
                mu = mu[:-1]
            results.append(ShiftedSkewShape(lam, mu))
            return
        if not rows:
            for lam_l in range(1, remaining + 1):
                rows.append((lam_l, 0))
                build(rows, remaining - lam_l)
                rows.pop()
            return
        lam_below, mu_below = rows[-1]
        mu_lo = 0 if mu_below == 0 else mu_below + 1
        for mu_i in range(mu_lo, lam_below + 2):
            for lam_i in range(
                max(lam_below + 1, mu_i + 1), mu_i + remaining + 1
            ):
                rows.append((lam_i, mu_i))
                build(rows, remaining - (lam_i - mu_i))
                rows.pop()

    build([], n)
    results.sort(key=lambda s: (s.lam, s.mu))
    yield from results
