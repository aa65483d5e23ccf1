"""Conjecture-scan orchestration with resumable persistence.

A scan walks a shape/poset family in canonical key order, computes each
member's order polynomial with the appropriate engine, derives sign verdicts,
and appends one JSON record per line to a store file.  Scans are resumable:
records already present are never recomputed, and a truncated trailing line
(a crash artifact) is detected and dropped.  Summaries are deterministic for
a fixed cap regardless of worker count.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from . import detformulas, geometry, posets, shapes
from .exactpoly import Polynomial, analyze


class HarnessError(RuntimeError):
    pass


class EngineDisagreement(HarnessError):
    """Two engines produced different polynomials for the same key."""


FAMILIES = (
    "skew",
    "ribbon",
    "cylindric",
    "circular_fence",
    "shifted",
    "width_two",
    "complement_zigzag",
    "stretched",
    "shard",
)

# families whose records hold order polynomials (Omega(0)=0, Omega(1)=1);
# the rest hold Ehrhart-style polynomials (p(0)=1)
_ORDER_FAMILIES = frozenset(
    ("skew", "ribbon", "cylindric", "circular_fence", "shifted", "width_two",
     "complement_zigzag")
)


@dataclass
class ScanRecord:
    family: str
    key: str
    engine: str
    polynomial: Polynomial | None
    verdicts: dict | None
    timestamp: str
    skipped: bool = False
    reason: str | None = None

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "key": self.key,
            "engine": self.engine,
            "timestamp": self.timestamp,
        }
        if self.skipped:
            out["skipped"] = True
            out["reason"] = self.reason
        else:
            out["polynomial"] = self.polynomial.to_json()
            out["verdicts"] = self.verdicts
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ScanRecord":
        poly = None
        if "polynomial" in data:
            poly = Polynomial.from_json(data["polynomial"])
        return cls(
            family=data["family"],
            key=data["key"],
            engine=data["engine"],
            polynomial=poly,
            verdicts=data.get("verdicts"),
            timestamp=data.get("timestamp", ""),
            skipped=bool(data.get("skipped", False)),
            reason=data.get("reason"),
        )


# ---------------------------------------------------------------------------
# Families: canonical keys and engines
# ---------------------------------------------------------------------------


def family_keys(family: str, size_cap: int, t_max: int = 3) -> list[str]:
    """Canonical member keys for a family up to the size cap, sorted."""
    keys: list[str] = []
    if family == "skew":
        for n in range(1, size_cap + 1):
            keys += [shapes.format_shape(s) for s in shapes.skew_shapes(n)]
    elif family == "ribbon":
        for n in range(1, size_cap + 1):
            keys += [shapes.format_shape(s) for s in shapes.ribbons(n)]
    elif family == "cylindric":
        for n in range(1, size_cap + 1):
            keys += [shapes.format_shape(s) for s in shapes.cylindric_shapes(n)]
    elif family == "circular_fence":
        for n in range(1, size_cap + 1):
            keys += [shapes.format_shape(s) for s in shapes.circular_fence_shapes(n)]
    elif family == "shifted":
        for n in range(1, size_cap + 1):
            keys += [shapes.format_shape(s) for s in shapes.shifted_shapes(n)]
    elif family == "width_two":
        for m in range(1, size_cap + 1):
            for n in range(1, size_cap + 1):
                for lam in shapes.partitions_in_box(m, n):
                    for mu in shapes.subpartitions(lam):
                        sh = shapes.SkewShape(lam, mu)
                        keys.append(f"width2:{m}x{n}:{shapes.format_shape(sh)}")
    elif family == "complement_zigzag":
        keys += [f"zbar:{n}" for n in range(1, size_cap + 1)]
    elif family == "stretched":
        for n in range(1, size_cap + 1):
            for sh in shapes.skew_shapes(n):
                for t in range(1, t_max + 1):
                    keys.append(f"stretch:t={t}:{shapes.format_shape(sh)}")
    elif family == "shard":
        keys += [arc.text() for arc in geometry.shard_arcs(size_cap)]
    else:
        raise HarnessError(f"unknown family {family!r}")
    return sorted(keys)


def compute_member(family: str, key: str) -> ScanRecord:
    """Compute one record: polynomial by the family's engine, plus verdicts."""
    ts = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    try:
        poly, engine, kind = _compute_polynomial(family, key)
    except posets.CapExceeded as exc:
        return ScanRecord(family, key, "skipped", None, None, ts,
                          skipped=True, reason=str(exc))
    verdicts = _verdicts(poly, kind)
    return ScanRecord(family, key, engine, poly, verdicts, ts)


def _compute_polynomial(family: str, key: str) -> tuple[Polynomial, str, str]:
    if family == "skew" or family == "ribbon":
        sh = shapes.parse_shape(key)
        return detformulas.kreweras_order_polynomial(sh), "kreweras", "order"
    if family == "cylindric":
        sh = shapes.parse_shape(key)
        return detformulas.gk_cylindric_order_polynomial(sh), "gk", "order"
    if family == "circular_fence":
        sh = shapes.parse_shape(key)
        return (
            detformulas.circular_fence_order_polynomial(sh),
            "circular-fence",
            "order",
        )
    if family == "shifted":
        sh = shapes.parse_shape(key)
        poset = posets.shifted_cell_poset(sh)
        return posets.order_polynomial(poset), "bruteforce", "order"
    if family == "width_two":
        _, box, shape_text = key.split(":", 2)
        m, n = (int(x) for x in box.split("x"))
        sh = shapes.parse_shape(shape_text) if shape_text else shapes.SkewShape(())
        poset = posets.width_two_poset(sh, m, n)
        return posets.order_polynomial(poset), "bruteforce", "order"
    if family == "complement_zigzag":
        n = int(key.split(":", 1)[1])
        return posets.order_polynomial(posets.complement_zigzag(n)), "bruteforce", "order"
    if family == "stretched":
        _, tpart, shape_text = key.split(":", 2)
        t = int(tpart.split("=", 1)[1])
        sh = shapes.parse_shape(shape_text)
        return geometry.stretched_pp(sh, t), "stretched-kreweras", "ehrhart"
    if family == "shard":
        arc = geometry.parse_arc(key)
        return geometry.shard_ehrhart(arc), "shard-points", "ehrhart"
    raise HarnessError(f"unknown family {family!r}")


def _verdicts(poly: Polynomial, kind: str) -> dict:
    n = poly.degree
    ints, den = poly.denominator_cleared()
    if kind == "order":
        if poly(1) != 1 or (n > 0 and poly(0) != 0):
            raise HarnessError(f"not an order polynomial: {poly}")
    else:
        if poly(0) != 1:
            raise HarnessError(f"not an Ehrhart-style polynomial: {poly}")
    if factorial(n) % den != 0:
        raise HarnessError(f"{n}! * polynomial is not integral: {poly}")
    rep = analyze(poly)
    positive = rep.nonnegative_coeffs
    try:
        if kind == "order":
            hs = geometry.hstar_from_ehrhart(poly.shift(1))
        else:
            hs = geometry.hstar_from_ehrhart(poly)
        log_concave_hstar = analyze(hs.polynomial()).log_concave
    except AssertionError:
        log_concave_hstar = False
    c1 = poly.coeff(1)
    return {
        "positive": positive,
        "c1": [str(c1.numerator), str(c1.denominator)],
        "real_rooted": rep.real_rooted,
        "log_concave_hstar": log_concave_hstar,
    }


# ---------------------------------------------------------------------------
# Store
# ---------------------------------------------------------------------------


def _read_store(path: str) -> tuple[dict | None, list[ScanRecord], int]:
    """Read a JSONL store; returns (header, records, valid byte offset).

    A truncated or corrupt trailing line is ignored; its start offset is the
    returned valid offset.
    """
    if not os.path.exists(path):
        return None, [], 0
    header = None
    records = []
    offset = 0
    with open(path, "rb") as fh:
        for raw in fh:
            try:
                data = json.loads(raw.decode("utf-8"))
                if "header" in data:
                    if header is None:
                        header = data["header"]
                else:
                    records.append(ScanRecord.from_json(data))
            except (ValueError, KeyError):
                break
            offset += len(raw)
    return header, records, offset


def _append_record(fh, data: dict) -> None:
    fh.write(json.dumps(data, separators=(",", ":"), sort_keys=True) + "\n")
    fh.flush()


@dataclass
class ScanSummary:
    family: str
    size_cap: int
    members: int
    computed: int
    reused: int
    skipped: int
    counterexamples: list[str]
    min_c1: str | None
    elapsed: float

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "size_cap": self.size_cap,
            "members": self.members,
            "computed": self.computed,
            "reused": self.reused,
            "skipped": self.skipped,
            "counterexamples": sorted(self.counterexamples),
            "min_c1": self.min_c1,
        }

    def table(self) -> str:
        rows = [
            ("family", self.family),
            ("size cap", str(self.size_cap)),
            ("members", str(self.members)),
            ("computed", str(self.computed)),
            ("reused", str(self.reused)),
            ("skipped", str(self.skipped)),
            ("counterexamples", str(len(self.counterexamples))),
            ("min c1", self.min_c1 or "-"),
            ("elapsed [s]", f"{self.elapsed:.2f}"),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def scan(
    family: str,
    size_cap: int,
    workers: int = 1,
    store_path: str | None = None,
    t_max: int = 3,
) -> ScanSummary:
    """Scan a family up to the cap, verifying sign verdicts member by member.

    With a store path, records append after the last valid line and existing
    keys are not recomputed, so interrupted scans resume; re-running a
    complete scan appends nothing.
    """
    if family not in FAMILIES:
        raise HarnessError(f"unknown family {family!r}; choose from {FAMILIES}")
    start = time.monotonic()
    keys = family_keys(family, size_cap, t_max=t_max)
    done: dict[str, ScanRecord] = {}
    fh = None
    if store_path:
        header, old, offset = _read_store(store_path)
        if header is not None and header.get("family") != family:
            raise HarnessError(
                f"store {store_path} belongs to family {header.get('family')!r}"
            )
        for rec in old:
            done[rec.key] = rec
        if os.path.exists(store_path):
            size = os.path.getsize(store_path)
            if offset < size:
                with open(store_path, "r+b") as trunc:
                    trunc.truncate(offset)
        fh = open(store_path, "a", encoding="utf-8")
        if header is None:
            _append_record(fh, {"header": {"family": family, "size_cap": size_cap,
                                           "version": 1}})
    todo = [k for k in keys if k not in done]
    computed: list[ScanRecord] = []
    try:
        if workers > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for rec in pool.map(compute_member, [family] * len(todo), todo,
                                    chunksize=16):
                    computed.append(rec)
                    if fh:
                        _append_record(fh, rec.to_json())
        else:
            for key in todo:
                rec = compute_member(family, key)
                computed.append(rec)
                if fh:
                    _append_record(fh, rec.to_json())
    finally:
        if fh:
            fh.close()

    all_records = sorted(
        list(done.values()) + computed, key=lambda r: r.key
    )
    relevant = [r for r in all_records if r.key in set(keys)]
    counterexamples = [
        r.key for r in relevant if not r.skipped and not r.verdicts["positive"]
    ]
    min_c1 = None
    c1s = [
        Fraction(int(r.verdicts["c1"][0]), int(r.verdicts["c1"][1]))
        for r in relevant
        if not r.skipped
    ]
    if c1s:
        m = min(c1s)
        min_c1 = f"{m.numerator}/{m.denominator}"
    return ScanSummary(
        family=family,
        size_cap=size_cap,
        members=len(keys),
        computed=len(computed),
        reused=len(keys) - len(todo),
        skipped=sum(1 for r in relevant if r.skipped),
        counterexamples=counterexamples,
        min_c1=min_c1,
        elapsed=time.monotonic() - start,
    )


def resume(store_path: str, workers: int = 1) -> ScanSummary:
    """Continue an interrupted scan from its store header."""
    header, _, _ = _read_store(store_path)
    if header is None:
        raise HarnessError(f"store {store_path} has no header")
    return scan(
        header["family"],
        header["size_cap"],
        workers=workers,
        store_path=store_path,
    )


# ---------------------------------------------------------------------------
# Cross-validation of all engines
# ---------------------------------------------------------------------------


@dataclass
class CrossValidationReport:
    size_cap: int
    shapes_checked: int
    pair_counts: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "size_cap": self.size_cap,
            "shapes_checked": self.shapes_checked,
            "engine_pairs": dict(sorted(self.pair_counts.items())),
        }


def cross_validate(size_cap: int) -> CrossValidationReport:
    """Exercise every applicable engine pair on every shape up to the cap.

    Any disagreement raises EngineDisagreement carrying the offending key and
    both polynomials.
    """
    report = CrossValidationReport(size_cap=size_cap, shapes_checked=0)

    def check(key: str, name: str, a: Polynomial, b: Polynomial):
        if a != b:
            raise EngineDisagreement(f"{name} disagree on {key}: {a} vs {b}")
        report.pair_counts[name] = report.pair_counts.get(name, 0) + 1

    for n in range(1, size_cap + 1):
        for sh in shapes.skew_shapes(n):
            key = shapes.format_shape(sh)
            report.shapes_checked += 1
            kre = detformulas.kreweras_order_polynomial(sh)
            poset = posets.cell_poset(sh)
            brute = posets.order_polynomial(poset)
            check(key, "kreweras/bruteforce", kre, brute)
            rec = Polynomial([Fraction(0)] + posets.coefficients_by_recursion(poset))
            check(key, "recursion/bruteforce", rec, brute)
            if all(m == 0 for m in sh.mu) and n <= 7:
                from .schubert import macdonald_order_polynomial

                mac = macdonald_order_polynomial(sh.lam)
                check(key, "macdonald/kreweras", mac, kre)
                lam = sh.lam
                if len([p for p in lam if p > 0]) == 1 or all(
                    p == 1 for p in lam[1:]
                ):
                    from .schubert import hook_pp

                    a = lam[0] - 1
                    b = len(lam) - 1
                    check(key, "hook/macdonald", hook_pp(a, b).shift(-1), mac)
        zz = shapes.zigzag(n)
        check(
            shapes.format_shape(zz),
            "zigzagdet/kreweras",
            detformulas.zigzag_determinant(n),
            detformulas.kreweras_order_polynomial(zz),
        )
        for cyl in shapes.cylindric_shapes(n):
            key = shapes.format_shape(cyl)
            report.shapes_checked += 1
            gk = detformulas.gk_cylindric_order_polynomial(cyl)
            brute = posets.order_polynomial(posets.cylindric_cell_poset(cyl))
            check(key, "gk/bruteforce", gk, brute)
        for fence in shapes.circular_fence_shapes(n):
            key = shapes.format_shape(fence)
            report.shapes_checked += 1
            cf = detformulas.circular_fence_order_polynomial(fence)
            gk = detformulas.gk_cylindric_order_polynomial(fence)
            check(key, "circularfence/gk", cf, gk)
    return report
