"""Command-line interface: analyze, construct, bounds, reproduce."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any

from .bounds import KqTable, lp_bound, shortening_bound, singleton_like
from .cyclic import CyclicCode, code_from_zeros
from .gf import FieldError, field_create, multiplicative_order
from .linalg import COMBINATION_BUDGET, ENUMERATION_BUDGET, BudgetExceeded, min_weight
from .lrc import (binary_simplex_locality, coset_locality_certificate, irreducible_locality_bound,
                  locality_exact, optimal_cyclic_lrc, rs_like_construct, singleton_like_distance,
                  ternary_two_weight_recovery, trace_recovery_subspace)
from .repro import load_expected, reproduce

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
UNKNOWN = "unknown (budget)"


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _locator(text: str):
    try:
        p, m = (int(x) for x in text.split("^"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p^m, got {text!r}")
    return field_create(p, m)


def _max_k_for(n: int, d: int, r: int) -> int:
    """Largest k with d <= singleton-like bound."""
    best = 0
    for k in range(r, n + 1):
        if singleton_like(n, k, r) >= d:
            best = k
    return best


def smallest_recovery_subspace(c: CyclicCode):
    """Trace subspace with the smallest weight bound over all qualifying cosets."""
    best = None
    for s in range(2, c.n + 1):
        if c.n % s:
            continue
        cert = coset_locality_certificate(c, s - 1)
        if cert is None:
            continue
        sub = trace_recovery_subspace(c, cert.l, s - 1)
        if best is None or sub.r_bound < best.r_bound:
            best = sub
    return best


def _certificates(c: CyclicCode) -> list[dict]:
    out = []
    for s in range(2, c.n + 1):
        if c.n % s:
            continue
        cert = coset_locality_certificate(c, s - 1)
        if cert is not None:
            out.append({"prop": "coset", "parameters": {"block": s, "l": cert.l, "r_bound": cert.r_bound}})
            break
    for s in range(2, c.n + 1):
        if c.n % s or not c.defining_set.contains_coset(1, s):
            continue
        m = multiplicative_order(c.q, s)
        out.append({"prop": "irreducible-average", "parameters": {"s": s, "m": m,
                                                                "r_bound": irreducible_locality_bound(c, s)}})
        if c.q == 2 and s == 2 ** (s.bit_length()) - 1:
            sim = binary_simplex_locality(c, s.bit_length())
            out.append({"prop": "simplex", "parameters": {"z": sim.z, "r_bound": sim.r_bound, "w": sim.w_bound}})
        if c.q == 3:
            try:
                tr = ternary_two_weight_recovery(c, s)
            except ValueError:
                pass
            else:
                out.append({"prop": "ternary-two-weight", "parameters": {"t": s, "m": tr.m,
                            "set_size": tr.set_size, "count": tr.count}})
    return out


def code_report(c: CyclicCode, budget: int = ENUMERATION_BUDGET, threads: int = 1,
                support_budget: int = COMBINATION_BUDGET) -> tuple[dict, bool]:
    """Report for a cyclic code; the flag is True when some field hit the budget."""
    over = False
    try:
        d: Any = min_weight(c.code, budget=budget, combination_budget=support_budget, threads=threads).d if c.k else None
    except BudgetExceeded:
        d, over = UNKNOWN, True
    try:
        rep = locality_exact(c, budget=budget, threads=threads, combination_budget=support_budget)
        r, d_dual, note = rep.r, rep.d_dual, rep.note
    except BudgetExceeded:
        r = d_dual = UNKNOWN
        note, over = "", True
    try:
        sub = smallest_recovery_subspace(c)
        w = sub.w if sub is not None else None
    except BudgetExceeded:
        w, over = UNKNOWN, True
    bounds: dict[str, Any] = {"singleton": None, "shortening": None, "shortening_t": None,
                              "lp_log_q": None, "lp_k": None, "lp_k_relaxed": None}
    if isinstance(r, int) and isinstance(d, int) and 1 <= r <= c.k:
        bounds["singleton"] = singleton_like(c.n, c.k, r)
        sh = shortening_bound(c.q, c.n, d, r)
        bounds["shortening"], bounds["shortening_t"] = sh.k, sh.t
        lp = lp_bound(c.q, c.n, d, r)
        bounds["lp_log_q"] = None if lp.log_q is None else round(lp.log_q, 2)
        bounds["lp_k"] = lp.k_bound
        # the pinned program excludes dual weight r+1; the relaxed one admits it
        bounds["lp_k_relaxed"] = lp_bound(c.q, c.n, d, r, relaxed=True).k_bound
    report = {
        "params": {"q": c.q, "n": c.n, "locator": str(c.locator_field)},
        "defining_set": {"seeds": list(c.seeds), "complete": sorted(c.zeros),
                         "representatives": list(c.defining_set.representatives),
                         "dual": list(c.defining_set.dual().representatives)},
        "generator_poly": list(c.generator_poly),
        "results": {"k": c.k, "d": d, "d_dual": d_dual, "r": r, "w": w,
                    "optimal": (isinstance(d, int) and isinstance(r, int) and 1 <= r <= c.k
                                and d == singleton_like_distance(c.n, c.k, r))},
        "bounds": bounds,
        "certificates": _certificates(c),
    }
    if note:
        report["note"] = note
    return report, over


def _print_report(rep: dict, out) -> None:
    p, res, ds, b = rep["params"], rep["results"], rep["defining_set"], rep["bounds"]
    rows = [
        ("code", f"[{p['n']},{res['k']}] over GF({p['q']}), locator {p['locator']}"),
        ("zeros (reps)", ds["representatives"]),
        ("zeros (complete)", ds["complete"]),
        ("dual zeros (reps)", ds["dual"]),
        ("d", res["d"]), ("d_dual", res["d_dual"]), ("locality r", res["r"]),
        ("recovering sets w", res["w"]), ("optimal", res["optimal"]),
        ("singleton-like d", b["singleton"]),
        ("shortening k", b["shortening"] if b["shortening_t"] is None else f"{b['shortening']} (t={b['shortening_t']})"),
        ("lp k", "infeasible" if b["lp_k"] is None and b["singleton"] is not None
         else b["lp_k"] if b["lp_log_q"] is None else f"{b['lp_k']} (log_q M = {b['lp_log_q']:.2f})"),
        ("lp k (relaxed)", b["lp_k_relaxed"]),
    ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {'-' if v is None else v}", file=out)
    for cert in rep["certificates"]:
        print(f"{'certificate':<{width}}  {cert['prop']} {cert['parameters']}", file=out)
    if "note" in rep:
        print(f"{'note':<{width}}  {rep['note']}", file=out)


def _emit(rep: dict, args, out) -> None:
    if args.json:
        json.dump(rep, out, sort_keys=True)
        out.write("\n")
    else:
        _print_report(rep, out)


def cmd_analyze(args, out) -> int:
    c = code_from_zeros(args.q, args.n, args.zeros, locator=args.locator)
    rep, over = code_report(c, budget=args.budget, threads=args.threads, support_budget=args.support_budget)
    rep["params"]["zeros"] = list(args.zeros)
    _emit(rep, args, out)
    return EXIT_BUDGET if over else EXIT_OK


def cmd_construct(args, out) -> int:
    if args.kind == "rs-like":
        _, c = rs_like_construct(args.q, args.n, args.k, args.r)
    else:
        c = optimal_cyclic_lrc(args.q, args.n, args.k, args.r, l=args.l, b=args.b, j=args.j,
                               verify=args.verify)
    rep, over = code_report(c, budget=args.budget, threads=args.threads, support_budget=args.support_budget)
    rep["params"].update({"construction": args.kind, "k": args.k, "r": args.r})
    if args.verify and rep["results"]["r"] != args.r:
        print(f"locality {rep['results']['r']} != {args.r}", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(rep, args, out)
    return EXIT_BUDGET if over else EXIT_OK


def bound_rows(q: int, n: int, ds: list[int], rs: list[int], table: KqTable | None) -> list[dict]:
    rows = []
    for d in ds:
        for r in rs:
            sh = shortening_bound(q, n, d, r, table)
            lp = lp_bound(q, n, d, r)
            rows.append({"q": q, "n": n, "d": d, "r": r, "singleton_k": _max_k_for(n, d, r),
                         "shortening_k": sh.k, "shortening_t": sh.t, "lp_k": lp.k_bound,
                         "lp_log_q": None if lp.log_q is None else round(lp.log_q, 2),
                         "lp_M": None if lp.M is None else str(lp.M),
                         "kq_source": "table+fallback" if table else "fallback"})
    return rows


def cmd_bounds(args, out) -> int:
    table = KqTable.from_csv(args.kq_table) if args.kq_table else None
    rows = bound_rows(args.q, args.n, args.d, args.r, table)
    if args.csv:
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    elif args.json:
        json.dump(rows if len(rows) > 1 else rows[0], out, sort_keys=True)
        out.write("\n")
    else:
        for row in rows:
            lp = "infeasible" if row["lp_k"] is None else f"k <= {row['lp_k']} (log_{row['q']} M = {row['lp_log_q']:.2f}, M = {row['lp_M']})"
            print(f"q={row['q']} n={row['n']} d={row['d']} r={row['r']}", file=out)
            print(f"  singleton-like  k <= {row['singleton_k']}", file=out)
            print(f"  shortening      k <= {row['shortening_k']} (t={row['shortening_t']}, k_q {row['kq_source']})", file=out)
            print(f"  linear program  {lp}", file=out)
    return EXIT_OK


def cmd_reproduce(args, out) -> int:
    results = reproduce(args.target, load_expected(args.expected))
    if args.json:
        json.dump([{"item": r.item, "passed": r.passed, "expected": r.expected, "computed": r.computed,
                    "error": r.error} for r in results], out, sort_keys=True)
        out.write("\n")
    else:
        for r in results:
            print("\n".join(r.lines()), file=out)
        print(f"{sum(r.passed for r in results)}/{len(results)} passed", file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=ENUMERATION_BUDGET, help="codeword enumeration budget")
    common.add_argument("--support-budget", type=int, default=COMBINATION_BUDGET,
                        help="candidate supports examined before giving up")
    common.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")

    ap = argparse.ArgumentParser(prog="cyclrc", description="Cyclic locally recoverable codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="analyze a cyclic code given by zeros")
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--zeros", type=_int_list, required=True, help="exponents a,b,c (completed automatically)")
    a.add_argument("--locator", type=_locator, default=None, help="locator field p^m")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", parents=[common], help="build an optimal cyclic LRC code")
    c.add_argument("kind", choices=["rs-like", "thm31", "optimal"])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--l", type=int, default=0)
    c.add_argument("--b", type=int, default=1)
    c.add_argument("--j", type=int, default=None)
    c.add_argument("--verify", action="store_true", help="brute-force distance and locality")
    c.set_defaults(func=cmd_construct)

    b = sub.add_parser("bounds", help="upper bounds on the dimension")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=_int_list, required=True, help="distance, or a comma list for a sweep")
    b.add_argument("--r", type=_int_list, required=True, help="locality, or a comma list for a sweep")
    b.add_argument("--kq-table", default=None, help="CSV with header q,n,d,k")
    b.add_argument("--csv", action="store_true")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("reproduce", help="recompute the published parameters")
    r.add_argument("target", choices=["table1", "examples", "all"])
    r.add_argument("--expected", default=None, help="JSON file of expected values")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reproduce)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "kind", None) == "optimal":
        args.kind = "thm31"
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
