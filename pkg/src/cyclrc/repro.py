"""Recompute the published code parameters and compare field by field."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .bounds import lp_bound, shortening_bound
from .cyclic import code_from_zeros
from .linalg import LinearCode, min_weight
from .lrc import (binary_simplex_locality, coset_locality_certificate, locality_exact,
                  multiple_recovery_partitions, partitions_meet_only_at_symbol,
                  support_intersection, ternary_two_weight_recovery, trace_recovery_subspace)

EXPECTED: dict[str, dict[str, Any]] = {
    "table1/n=35": {"k": 20, "d": 3, "z": 3, "r": 3, "w": 4, "dual_zeros": [0, 1, 7, 15],
                    "d_dual": 4, "shortening": 25, "lp_k": 29, "locator": "GF(2^12)"},
    "table1/n=45": {"k": 33, "d": 3, "z": 4, "r": 7, "w": 8, "dual_zeros": [0, 1, 3, 5, 9, 15, 21],
                    "d_dual": 8, "shortening": 37, "lp_k": 39, "locator": "GF(2^12)"},
    "table1/n=27": {"k": 7, "d": 6, "z": 2, "r": 1, "w": 2, "dual_zeros": [0, 3],
                    "d_dual": 2, "locator": "GF(2^18)"},
    "table1/n=63": {"k": 36, "d": 3, "z": 3, "r": 3, "w": 4, "dual_zeros": [0, 1, 7, 9, 11, 15, 21, 23],
                    "d_dual": 4, "locator": "GF(2^6)"},
    "example/1": {"k": 30, "d": 4, "coset_r_bound": 8, "dual_k": 15, "d_dual": 9,
                  "dual_zeros": [1, 3, 7, 15], "r": 8, "shortening": 36, "lp_log_q": 38.48, "lp_k": 38},
    "example/2": {"k": 12, "d": 4, "coset_r_bound": 6, "dual_k": 9, "d_dual": 6,
                  "dual_zeros": [1, 3, 9], "r": 5, "shortening": 14, "lp_k": 15},
    "example/3": {"k": 68, "m": 4, "v_weights": {"24": 40, "30": 40}, "per_symbol_count": 24,
                  "set_size": 23, "d_dual_max": 24},
    "example/4": {"k": 54, "d": 2, "v_repetitions": 3, "v_period_code": [7, 3, 4],
                  "v_min_weight": 12, "dual_k": 9, "d_dual": 12, "r": 11},
    "partitions/n=63": {"block_sizes": [7, 9], "recovering_sizes": [6, 8], "disjoint": True},
    "intersections/n=63": {"pair": 1, "triple": 0},
}

TABLE1 = {
    "table1/n=35": (35, [1, 15], 3),
    "table1/n=45": (45, [1], 4),
    "table1/n=27": (27, [1, 9], 2),
    "table1/n=63": (63, [1, 9, 11, 15, 23], 3),
}


@dataclass
class ReproductionResult:
    item: str
    expected: dict[str, Any]
    computed: dict[str, Any]
    error: str | None = None

    @property
    def diffs(self) -> list[tuple[str, Any, Any]]:
        out = []
        for key, want in self.expected.items():
            got = self.computed.get(key, "missing")
            if not _same(key, want, got):
                out.append((key, want, got))
        return out

    @property
    def passed(self) -> bool:
        return self.error is None and not self.diffs

    def lines(self) -> list[str]:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.item}"
        if self.error:
            return [head, f"    error: {self.error}"]
        return [head] + [f"    {k}: expected {w!r}, computed {g!r}" for k, w, g in self.diffs]


def _same(key: str, want, got) -> bool:
    if isinstance(want, float) or isinstance(got, float):
        # displayed to two decimals, tolerance 0.01
        try:
            return abs(float(want) - float(got)) <= 0.01 + 1e-12
        except (TypeError, ValueError):
            return False
    return want == got


def _dual_reps(c) -> list[int]:
    return list(c.dual().defining_set.representatives)


def _table_row(n: int, seeds: list[int], z: int) -> dict[str, Any]:
    c = code_from_zeros(2, n, seeds)
    rep = locality_exact(c)
    simplex = binary_simplex_locality(c, z)
    d = min_weight(c.code).d
    out = {"k": c.k, "d": d, "z": z, "r": rep.r, "w": simplex.subspace.w,
           "dual_zeros": _dual_reps(c), "d_dual": rep.d_dual, "locator": str(c.locator_field),
           "simplex_r_bound": simplex.r_bound}
    out["shortening"] = shortening_bound(2, n, d, rep.r).k
    out["lp_k"] = lp_bound(2, n, d, rep.r).k_bound
    if simplex.r_bound != rep.r:
        raise AssertionError(f"simplex bound {simplex.r_bound} is not tight (r = {rep.r})")
    return out


def _example1() -> dict[str, Any]:
    c = code_from_zeros(2, 45, [0, 3, 5, 9])
    rep = locality_exact(c)
    dual = c.dual()
    lp = lp_bound(2, 45, 4, 8)
    return {"k": c.k, "d": min_weight(c.code).d, "coset_r_bound": coset_locality_certificate(c, 8).r_bound,
            "dual_k": dual.k, "d_dual": rep.d_dual, "dual_zeros": _dual_reps(c), "r": rep.r,
            "shortening": shortening_bound(2, 45, 4, 8).k, "lp_log_q": round(lp.log_q, 2), "lp_k": lp.k_bound}


def _example2() -> dict[str, Any]:
    c = code_from_zeros(2, 21, [0, 1, 7])
    rep = locality_exact(c)
    lp = lp_bound(2, 21, 4, 5)
    return {"k": c.k, "d": min_weight(c.code).d, "coset_r_bound": coset_locality_certificate(c, 6).r_bound,
            "dual_k": c.dual().k, "d_dual": rep.d_dual, "dual_zeros": _dual_reps(c), "r": rep.r,
            "shortening": shortening_bound(2, 21, 4, 5).k, "lp_k": lp.k_bound}


def _example3() -> dict[str, Any]:
    c = code_from_zeros(3, 80, [1, 2, 41])
    tr = ternary_two_weight_recovery(c, 40)
    counts = {str(w): n for w, n in tr.subspace.distribution.counts.items() if w}
    per = set(tr.per_coordinate.tolist())
    return {"k": c.k, "m": tr.m, "v_weights": counts,
            "per_symbol_count": per.pop() if len(per) == 1 else sorted(per),
            "set_size": tr.set_size, "d_dual_max": tr.weights[0],
            "d_dual": locality_exact(c).d_dual}


def _example4() -> dict[str, Any]:
    c = code_from_zeros(2, 63, [3, 27])
    sub = trace_recovery_subspace(c, 3, 20)
    period = sub.code.generator[:, :sub.period]
    short = LinearCode(c.symbol_field, period)
    rep = locality_exact(c)
    return {"k": c.k, "d": min_weight(c.code).d, "v_repetitions": sub.repetitions,
            "v_period_code": [short.n, short.k, min_weight(short).d], "v_min_weight": sub.min_weight,
            "dual_k": c.dual().k, "d_dual": rep.d_dual, "r": rep.r}


def two_partition_code():
    """Length-63 binary code whose zeros hold every multiple of 7 and of 9."""
    return code_from_zeros(2, 63, sorted(set(range(0, 63, 7)) | set(range(0, 63, 9))))


def _partitions() -> dict[str, Any]:
    c = two_partition_code()
    parts = multiple_recovery_partitions(c, [9, 7])
    return {"block_sizes": sorted(p.block_size for p in parts),
            "recovering_sizes": sorted(p.r for p in parts),
            "disjoint": len(parts) == 2 and partitions_meet_only_at_symbol(parts, c.n)}


def recovering_set_intersections(c, z: int = 3) -> tuple[set[int], set[int]]:
    """Sizes of pairwise and triple intersections of recovering sets through one symbol.

    Sets come from the simplex trace subspace; each size is confirmed by
    counting solutions of ``x . u = 1`` over the message vectors ``u``.
    """
    sub = binary_simplex_locality(c, z).subspace
    sets = sub.recovering_sets(0)
    pairs, triples = set(), set()
    for group, bucket in ((2, pairs), (3, triples)):
        for combo in itertools.combinations(sets, group):
            shared = set.intersection(*(set(h) for _, h in combo))
            us = [u for u, _ in combo]
            count = support_intersection(z, us)
            if count != len(shared) + 1:
                raise AssertionError(f"support count {count} != {len(shared) + 1}")
            bucket.add(len(shared))
    return pairs, triples


def _intersections() -> dict[str, Any]:
    pairs, triples = recovering_set_intersections(code_from_zeros(2, 63, [1, 9, 11, 15, 23]))
    one = lambda s: s.pop() if len(s) == 1 else sorted(s)
    return {"pair": one(pairs), "triple": one(triples)}


ITEMS: dict[str, Callable[[], dict[str, Any]]] = {
    **{key: (lambda args=args: _table_row(*args)) for key, args in TABLE1.items()},
    "example/1": _example1,
    "example/2": _example2,
    "example/3": _example3,
    "example/4": _example4,
    "partitions/n=63": _partitions,
    "intersections/n=63": _intersections,
}

TARGETS = {
    "table1": [k for k in ITEMS if k.startswith("table1/")],
    "examples": [k for k in ITEMS if not k.startswith("table1/")],
}
TARGETS["all"] = TARGETS["table1"] + TARGETS["examples"]


def load_expected(path: str | Path | None) -> dict[str, dict[str, Any]]:
    if path is None:
        return EXPECTED
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object keyed by item")
    return data


def reproduce(target: str = "all", expected: dict[str, dict[str, Any]] | None = None
              ) -> list[ReproductionResult]:
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {sorted(TARGETS)}")
    expected = EXPECTED if expected is None else expected
    out = []
    for item in TARGETS[target]:
        want = expected.get(item, {})
        try:
            got = ITEMS[item]()
            out.append(ReproductionResult(item, want, got))
        except AssertionError as exc:
            out.append(ReproductionResult(item, want, {}, error=str(exc)))
    return out
