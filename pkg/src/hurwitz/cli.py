"""Command-line front end.

Every command is deterministic given its flags and prints machine-readable
output on stdout (JSON by default, maps in sorted key order); diagnostics go
to stderr.  The exit code is 0 exactly when all requested checks PASS.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .counts import (
    HurwitzRequest,
    ORACLE_DEGREE_CAP,
    connected_series_character,
    connected_series_oracle,
    disconnected_series_character,
    fock_shifted_coefficient,
    hurwitz_number,
    oracle_series,
    request_status,
    result_record,
)
from .kinds import ALL_KINDS, HurwitzKind
from .partitions import active_cache, configure_cache, enumerate_partitions
from .polycheck import admissible_residue_classes, verify_quasipolynomiality
from .spectral import (
    check_F01,
    check_bergman02,
    check_case_identities,
    xi_derivative_coefficient,
    xi_series,
)

METHODS = ("character", "fock", "oracle")


def _parse_mu(text: str) -> tuple[int, ...]:
    try:
        mus = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"--mu expects comma-separated integers, got {text!r}")
    if not mus or any(m < 1 for m in mus):
        raise ValueError("--mu entries must be positive")
    return mus


def _parse_eta(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def default_cache_dir() -> str:
    env = os.environ.get("HURWITZ_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "hurwitz")


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        rows = payload.get("results", [])
        keys = sorted({k for row in rows for k in row})
        print(",".join(keys))
        for row in rows:
            print(",".join(_csv_cell(row.get(k)) for k in keys))
    else:
        print(f"# {payload['command']}  status={payload['status']}")
        for key, val in sorted(payload.get("params", {}).items()):
            print(f"#   {key} = {val}")
        for row in payload.get("results", []):
            print("  ".join(f"{k}={_csv_cell(v)}" for k, v in sorted(row.items())))


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + " ".join(str(x) for x in value) + "]"
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True).replace(",", ";")
    return str(value)


# -- commands ----------------------------------------------------------------


def cmd_compute(args) -> dict:
    kind = HurwitzKind.parse(args.kind)
    mus = _parse_mu(args.mu)
    connected = not args.disconnected
    methods = METHODS if args.method == "all" else (args.method,)
    results, values = [], []
    for method in methods:
        if method == "oracle" and sum(mus) > ORACLE_DEGREE_CAP:
            if args.method != "all":
                raise ValueError(f"oracle is capped at degree {ORACLE_DEGREE_CAP}")
            continue
        req = HurwitzRequest(kind, args.r, args.g, mus, connected=connected,
                             method=method)
        value = hurwitz_number(req)
        record = result_record(req, value)
        reason = request_status(req)
        if reason:
            record["note"] = reason
        results.append(record)
        values.append(value)
    status = "PASS" if len(set(values)) <= 1 else "FAIL"
    return {"command": "compute",
            "params": {"kind": kind.value, "r": args.r, "g": args.g,
                       "mu": list(mus), "connected": connected,
                       "method": args.method},
            "results": results, "status": status}


def cmd_series(args) -> dict:
    kind = HurwitzKind.parse(args.kind)
    mus = _parse_mu(args.mu)
    connected = not args.disconnected
    if args.method == "character":
        series = (connected_series_character if connected
                  else disconnected_series_character)(kind, args.r, mus, args.order)
        coeff = lambda b: series.coefficient(u=b)
    elif args.method == "oracle":
        series = (connected_series_oracle if connected
                  else oracle_series)(kind, args.r, mus, args.order)
        coeff = lambda b: series.coefficient(u=b)
    elif args.method == "fock":
        coeff = lambda b: fock_shifted_coefficient(kind, args.r, mus, b, connected)
    else:
        raise ValueError(f"unknown method {args.method!r}")
    results = [{"b": b, "value": str(coeff(b))} for b in range(args.order + 1)]
    return {"command": "series",
            "params": {"kind": kind.value, "r": args.r, "mu": list(mus),
                       "connected": connected, "method": args.method,
                       "order": args.order},
            "results": results, "status": "PASS"}


def cmd_verify_quasipoly(args) -> dict:
    kind = HurwitzKind.parse(args.kind)
    classes = ([_parse_eta(args.eta)] if args.eta is not None
               else admissible_residue_classes(args.r, args.n))
    results, ok = [], True
    for residues in classes:
        report = verify_quasipolynomiality(kind, args.r, args.g, args.n, residues,
                                           grid_base=args.grid_base,
                                           holdout_count=args.holdouts)
        ok = ok and report.passed
        results.append(report.to_json())
    return {"command": "verify-quasipoly",
            "params": {"kind": kind.value, "r": args.r, "g": args.g, "n": args.n,
                       "grid_base": args.grid_base, "holdouts": args.holdouts},
            "results": results, "status": "PASS" if ok else "FAIL"}


def cmd_xi(args) -> dict:
    kind = HurwitzKind.parse(args.kind)
    series = xi_series(kind, args.r, args.i, args.order)
    for _ in range(args.derivative):
        from .spectral import _apply_d_dx
        series = _apply_d_dx(kind, series)
    results, ok = [], True
    start = 1 if kind is HurwitzKind.STRICT else 0
    for mu in range(start, args.order + 1 - args.derivative):
        got = series.coefficient(q=mu)
        closed = xi_derivative_coefficient(kind, args.r, args.i, args.derivative, mu)
        match = got == closed
        ok = ok and match
        if got or closed:
            results.append({"exponent": mu, "value": str(got),
                            "closed_form": str(closed), "match": match})
    return {"command": "xi",
            "params": {"kind": kind.value, "r": args.r, "i": args.i,
                       "order": args.order, "derivative": args.derivative},
            "results": results, "status": "PASS" if ok else "FAIL"}


def cmd_unstable_check(args) -> dict:
    kind = HurwitzKind.parse(args.kind)
    results, ok = [], True
    rep = check_F01(kind, args.r, args.order)
    results.append(rep.to_json())
    ok = ok and rep.passed
    if kind is HurwitzKind.MONOTONE:
        rep = check_bergman02(args.r, args.order)
        results.append(rep.to_json())
        ok = ok and rep.passed
        for m1 in range(1, args.order):
            for m2 in range(m1, args.order + 1 - m1):
                if (m1 + m2) % args.r == 0:
                    rep = check_case_identities(args.r, m1, m2)
                    ok = ok and rep.passed
                    if not rep.passed:
                        results.append(rep.to_json())
        results.append({"check": "case_identities",
                        "params": {"r": args.r, "max_total": args.order},
                        "status": "PASS" if ok else "FAIL", "witness": None})
    return {"command": "unstable-check",
            "params": {"kind": kind.value, "r": args.r, "order": args.order},
            "results": results, "status": "PASS" if ok else "FAIL"}


def cmd_cross_validate(args) -> dict:
    kinds = ALL_KINDS if args.kind == "all" else (HurwitzKind.parse(args.kind),)
    results, ok = [], True
    for kind in kinds:
        for d in range(1, args.max_d + 1):
            if d % args.r:
                continue
            for mus in enumerate_partitions(d):
                record = {"kind": kind.value, "r": args.r, "mu": list(mus)}
                agree = True
                char_disc = disconnected_series_character(kind, args.r, mus, args.max_b)
                orac_disc = oracle_series(kind, args.r, mus, args.max_b)
                for b in range(args.max_b + 1):
                    if char_disc.coefficient(u=b) != orac_disc.coefficient(u=b):
                        agree = False
                        record["disagreement"] = {"routes": "character/oracle", "b": b}
                        break
                char_conn = connected_series_character(kind, args.r, mus, args.max_b)
                for b in range(args.max_b + 1):
                    fv = fock_shifted_coefficient(kind, args.r, mus, b, True)
                    if char_conn.coefficient(u=b) != fv:
                        agree = False
                        record["disagreement"] = {"routes": "character/fock", "b": b}
                        break
                record["status"] = "PASS" if agree else "FAIL"
                ok = ok and agree
                results.append(record)
    return {"command": "cross-validate",
            "params": {"kind": args.kind, "r": args.r,
                       "max_d": args.max_d, "max_b": args.max_b},
            "results": results, "status": "PASS" if ok else "FAIL"}


def cmd_cache(args) -> dict:
    cache = active_cache()
    results = []
    if args.action == "info":
        results.append({"path": cache.path, "entries": len(cache)})
    elif args.action == "clear":
        cache.clear()
        cache.save()
        results.append({"path": cache.path, "entries": len(cache)})
    elif args.action == "warm":
        for d in range(1, args.d + 1):
            for lam in enumerate_partitions(d):
                for rho in enumerate_partitions(d):
                    cache.compute(lam, rho)
        results.append({"path": cache.path, "entries": len(cache),
                        "warmed_through": args.d})
    return {"command": "cache", "params": {"action": args.action},
            "results": results, "status": "PASS"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Exact monotone / strictly monotone / usual r-orbifold "
                    "Hurwitz numbers, with built-in cross-validation.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--cache-dir", default=None,
                        help="character cache directory (default: "
                             "$HURWITZ_CACHE_DIR or ~/.cache/hurwitz)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kind_r(p, kinds=("monotone", "strict", "usual")):
        p.add_argument("--kind", required=True, choices=kinds)
        p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("compute", help="one Hurwitz number, optionally by all routes")
    add_kind_r(p)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--disconnected", action="store_true")
    p.add_argument("--method", choices=METHODS + ("all",), default="character")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("series", help="genus series coefficients h_b for b <= order")
    add_kind_r(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--disconnected", action="store_true")
    p.add_argument("--method", choices=METHODS, default="character")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify-quasipoly", help="interpolation check of the "
                                                "quasi-polynomial structure")
    add_kind_r(p)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", default=None, help="residue class (default: all admissible)")
    p.add_argument("--grid-base", type=int, default=1)
    p.add_argument("--holdouts", type=int, default=3)
    p.set_defaults(func=cmd_verify_quasipoly)

    p = sub.add_parser("xi", help="xi basis expansion vs closed form")
    add_kind_r(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--derivative", type=int, default=0)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("unstable-check", help="(0,1) and (0,2) identities")
    add_kind_r(p, kinds=("monotone", "strict"))
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_unstable_check)

    p = sub.add_parser("cross-validate", help="route agreement sweep")
    p.add_argument("--kind", default="all", choices=("all",) + tuple(k.value for k in ALL_KINDS))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--max-b", type=int, default=5)
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("cache", help="character table cache maintenance")
    p.add_argument("action", choices=("info", "clear", "warm"))
    p.add_argument("--d", type=int, default=6)
    p.set_defaults(func=cmd_cache)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = args.cache_dir or default_cache_dir()
    cache = configure_cache(os.path.join(cache_dir, "characters.txt"))
    try:
        payload = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        try:
            cache.save()
        except OSError as exc:
            print(f"warning: could not save character cache: {exc}", file=sys.stderr)
    _emit(payload, args.format)
    return 0 if payload["status"] == "PASS" else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
