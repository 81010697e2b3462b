"""Command-line surface: compute families, run checks, list the
catalog, manage the disk cache.

Exit codes: 0 success, 1 identity failure, 2 usage error,
3 specialization collision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import (DivisionByZero, InterpmacError, SpecializationCollision,
                     UsageError)
from .identities import CATALOG, run_check
from .interpolation import (FamilyCache, binom, binom_sym, closed_d, closed_e,
                            closed_phi, e_top, g_recursive, gplus, gprime,
                            okounkov, r_sym, rprime)
from .scalars import (FieldConfig, Scalar, dumps_canonical, qt_config,
                      r_config)

FAMILIES = ("G", "E", "Gprime", "Gplus", "R", "Rprime", "O",
            "binom", "binom-sym", "d", "e", "phi")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _index(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad index {text!r}; expected comma-separated "
                         f"integers") from exc


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="interpmac",
        description="Exact interpolation Macdonald/Jack polynomial "
                    "calculator and identity checker")
    sub = top.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="construct one family member")
    comp.add_argument("family", choices=FAMILIES)
    comp.add_argument("--n", type=int, default=None,
                      help="number of variables (default: index length)")
    comp.add_argument("--alpha", help="composition index, e.g. 0,2,1")
    comp.add_argument("--lambda", dest="lam", help="partition index")
    comp.add_argument("--beta", help="lower binomial index")
    comp.add_argument("--mu", help="lower symmetric binomial index")
    comp.add_argument("--variant", choices=("qt", "r"), default="qt")
    comp.add_argument("--symbolic", action="store_true",
                      help="force symbolic parameters (default when no "
                           "values are given)")
    comp.add_argument("--q", help="specialize q")
    comp.add_argument("--t", help="specialize t")
    comp.add_argument("--r", help="specialize r")
    comp.add_argument("--a", help="specialize the evaluation parameter a")
    comp.add_argument("--inverted", action="store_true",
                      help="binomial at reciprocal q, t")
    comp.add_argument("--json", action="store_true")
    comp.add_argument("--pretty", action="store_true")
    comp.add_argument("--cache-dir")

    chk = sub.add_parser("check", help="run catalog checks")
    chk.add_argument("id", help="check id or 'all'")
    chk.add_argument("--n", type=int, default=2)
    chk.add_argument("--deg", type=int, default=None,
                     help="degree bound (default 4 for n<=2, else 3)")
    chk.add_argument("--seed", default="0")
    chk.add_argument("--jobs", type=int, default=1)
    chk.add_argument("--symbolic", action="store_true",
                     help="symbolic q,t for the qt-side checks")
    chk.add_argument("--q", help="specialize q (default 2)")
    chk.add_argument("--t", help="specialize t (default 3)")
    chk.add_argument("--r", help="specialize r (default: symbolic)")
    chk.add_argument("--json", action="store_true",
                     help="one canonical JSON report per line")
    chk.add_argument("--timings", action="store_true",
                     help="include elapsed_ms in JSON reports (breaks "
                          "byte-for-byte reproducibility)")
    chk.add_argument("--cache-dir")

    lst = sub.add_parser("list-checks", help="list the catalog")
    lst.add_argument("--json", action="store_true")
    lst.add_argument("--filter", help="substring filter on check ids")

    cache = sub.add_parser("cache", help="inspect or clear the disk cache")
    cache.add_argument("action", choices=("info", "clear"))
    cache.add_argument("--cache-dir")
    return top


def _cache_dir(args) -> str | None:
    return getattr(args, "cache_dir", None) or os.environ.get("CACHE_DIR")


def _compute_configs(args) -> FieldConfig:
    explicit = any(v is not None for v in (args.q, args.t, args.r))
    if args.symbolic or not explicit:
        return qt_config() if args.variant == "qt" else r_config()
    if args.variant == "qt":
        if args.q is None or args.t is None:
            raise UsageError("specialized qt needs both --q and --t")
        return qt_config(_fraction(args.q), _fraction(args.t))
    if args.r is None:
        raise UsageError("specialized r variant needs --r")
    return r_config(_fraction(args.r))


def _a_scalar(args, cfg: FieldConfig) -> Scalar:
    if args.a is not None:
        return Scalar.from_fraction(_fraction(args.a))
    return Scalar.generator("a", cfg.gens() + ("a",))


def cmd_compute(args) -> int:
    family = args.family
    if args.json and args.pretty:
        raise UsageError("--json and --pretty are mutually exclusive")
    cfg = _compute_configs(args)
    cache = FamilyCache(_cache_dir(args))
    partitions = family in ("R", "Rprime", "binom-sym")
    raw = args.lam if partitions or (args.lam and not args.alpha) \
        else args.alpha
    if raw is None:
        raise UsageError(f"family {family} needs --alpha or --lambda")
    index = _index(raw)
    n = args.n if args.n is not None else len(index)
    if n != len(index):
        raise UsageError(f"--n {n} does not match index length {len(index)}")
    if family in ("Gplus", "Rprime", "binom-sym") and cfg.variant != "r":
        raise UsageError(f"family {family} exists in the r variant only")

    result: dict = {"family": family, "variant": cfg.variant,
                    "index": list(index), "config": cfg.describe()}
    poly = None
    scalar = None
    if family == "G":
        poly = g_recursive(index, cfg, cache)
    elif family == "E":
        poly = e_top(index, cfg, cache)
    elif family == "Gprime":
        poly = gprime(index, cfg, cache)
    elif family == "Gplus":
        poly = gplus(index, cfg, cache)
    elif family == "R":
        poly = r_sym(index, cfg, cache)
    elif family == "Rprime":
        poly = rprime(index, cfg, cache)
    elif family == "O":
        a = _a_scalar(args, cfg)
        result["a"] = str(a)
        poly = okounkov(index, cfg, a, cache)
    elif family == "binom":
        if args.beta is None:
            raise UsageError("binom needs --beta")
        beta = _index(args.beta)
        result["beta"] = list(beta)
        result["inverted"] = bool(args.inverted)
        scalar = binom(index, beta, cfg, cache, inverted=args.inverted)
    elif family == "binom-sym":
        if args.mu is None:
            raise UsageError("binom-sym needs --mu")
        mu = _index(args.mu)
        result["mu"] = list(mu)
        scalar = binom_sym(index, mu, cfg, cache)
    elif family == "d":
        scalar = closed_d(index, cfg)
    elif family == "e":
        scalar = closed_e(index, cfg)
    elif family == "phi":
        a = _a_scalar(args, cfg)
        result["a"] = str(a)
        scalar = closed_phi(index, cfg, a)

    if args.json:
        if poly is not None:
            result["poly"] = poly.to_json()
        else:
            result["scalar"] = scalar.to_json()
        print(dumps_canonical(result))
    else:
        print(poly.pretty() if poly is not None else str(scalar))
    return 0


def _check_configs(args) -> tuple:
    if args.symbolic:
        qt = qt_config()
    else:
        q = _fraction(args.q) if args.q is not None else Fraction(2)
        t = _fraction(args.t) if args.t is not None else Fraction(3)
        qt = qt_config(q, t)
    r = r_config(_fraction(args.r)) if args.r is not None else r_config()
    return qt, r


def _report_worker(check_id: str, n: int, d: int, seed: str,
                   qt_args: tuple, r_args, cache_dir) -> dict:
    qt = qt_config(*qt_args) if qt_args else qt_config()
    r = r_config(r_args) if r_args is not None else r_config()
    cache = FamilyCache(cache_dir)
    report = run_check(check_id, n, d, seed=seed, cache=cache, qt=qt, r=r)
    return {"report": report.to_json(include_timing=False),
            "elapsed_ms": report.elapsed_ms,
            "passed": report.passed}


def _emit_report(report_data: dict, as_json: bool, timings: bool):
    rep = report_data["report"]
    if timings:
        rep = dict(rep)
        rep["elapsed_ms"] = round(report_data["elapsed_ms"], 3)
    if as_json:
        print(dumps_canonical(rep))
    else:
        status = "ok  " if report_data["passed"] else "FAIL"
        line = f"{status} {rep['id']:22s} instances={rep['instances']}"
        if timings:
            line += f" elapsed={report_data['elapsed_ms']:.0f}ms"
        if not report_data["passed"]:
            first = rep["failures"][0]
            line += f"  first failure: {first['instance']}"
        print(line)


def cmd_check(args) -> int:
    ids = list(CATALOG) if args.id == "all" else [args.id]
    for check_id in ids:
        if check_id not in CATALOG:
            raise UsageError(f"unknown check id {check_id!r}")
    n = args.n
    d = args.deg if args.deg is not None else (4 if n <= 2 else 3)
    qt, r = _check_configs(args)
    qt_args = None if qt.symbolic else tuple(
        Fraction(v) for _, v in sorted(qt.assignments))
    r_args = None if r.symbolic else Fraction(dict(r.assignments)["r"])
    cache_dir = _cache_dir(args)

    all_passed = True
    if args.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_report_worker, cid, n, d, str(args.seed),
                                   qt_args, r_args, cache_dir)
                       for cid in ids]
            for future in futures:
                data = future.result()
                _emit_report(data, args.json, args.timings)
                all_passed = all_passed and data["passed"]
    else:
        cache = FamilyCache(cache_dir)
        for check_id in ids:
            report = run_check(check_id, n, d, seed=str(args.seed),
                               cache=cache, qt=qt, r=r)
            data = {"report": report.to_json(include_timing=False),
                    "elapsed_ms": report.elapsed_ms,
                    "passed": report.passed}
            _emit_report(data, args.json, args.timings)
            all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def cmd_list_checks(args) -> int:
    rows = [{"id": cdef.id, "statement": cdef.statement,
             "formula": cdef.formula}
            for cdef in CATALOG.values()
            if not args.filter or args.filter in cdef.id]
    if args.json:
        print(dumps_canonical(rows))
    else:
        for row in rows:
            print(f"{row['id']:22s} {row['statement']}")
            print(f"{'':22s}   {row['formula']}")
    return 0


def cmd_cache(args) -> int:
    root = _cache_dir(args)
    if not root:
        raise UsageError("cache command needs --cache-dir or CACHE_DIR")
    import pathlib
    path = pathlib.Path(root)
    files = sorted(path.glob("*.json")) if path.exists() else []
    if args.action == "info":
        total = sum(f.stat().st_size for f in files)
        print(f"{len(files)} cached polynomials, {total} bytes, at {path}")
    else:
        for f in files:
            f.unlink()
        print(f"removed {len(files)} cached polynomials from {path}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "compute":
            code = cmd_compute(args)
        elif args.command == "check":
            code = cmd_check(args)
        elif args.command == "list-checks":
            code = cmd_list_checks(args)
        else:
            code = cmd_cache(args)
        return code
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SpecializationCollision, DivisionByZero) as exc:
        print(f"specialization error: {exc}", file=sys.stderr)
        return 3
    except InterpmacError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
