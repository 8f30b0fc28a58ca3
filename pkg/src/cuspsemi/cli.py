"""Command-line interface: info, generic, verify, sweep.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric error,
4 seed disagreement.  All output is deterministic for fixed arguments; sweep
files carry a provenance comment line with the toolkit version and seed.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import cuspsemi
from cuspsemi import arith, series, severi, supersym, verify
from cuspsemi.semigroup import GcdNotOneError, NumericalSemigroup
from cuspsemi.series import PrecisionTooSmallError, SeedDisagreementError
from cuspsemi.supersym import MethodMismatchError, NotApplicableError


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return (int(lo), int(hi))
        value = int(text)
        return (value, value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")


def _default_prime() -> int:
    env = os.environ.get("CUSPSEMI_PRIME")
    return int(env) if env else series.DEFAULT_PRIME


def _emit_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args: argparse.Namespace) -> int:
    s = NumericalSemigroup(args.gens)
    betti_bound = args.betti_bound if args.betti_bound is not None else s.conductor + max(s.generators)
    payload = {
        "toolkit_version": cuspsemi.__version__,
        "generators": list(s.generators),
        "multiplicity": s.multiplicity,
        "conductor": s.conductor,
        "frobenius": s.frobenius,
        "genus": s.genus,
        "symmetric": s.is_symmetric() if s.conductor > 0 else None,
        "apery": list(s.apery().entries),
        "betti_bound": betti_bound,
        "betti_up_to": s.betti_elements(betti_bound),
    }
    _emit_json(payload, args.out)
    return 0


def cmd_generic(args: argparse.Namespace) -> int:
    prime = args.prime if args.prime else _default_prime()
    emp = series.empirical_generic_semigroup(
        args.profile, trials=args.trials, prime=prime, base_seed=args.seed
    )
    payload = {
        "toolkit_version": cuspsemi.__version__,
        "profile": list(emp.profile.orders),
        "prime": prime,
        "trials": args.trials,
        "base_seed": args.seed,
        "seeds": list(emp.seeds_used),
        "conductor": emp.conductor,
        "genus": emp.genus,
        "achieved_below_conductor": list(emp.achieved),
        "gaps": list(emp.gaps),
    }
    _emit_json(payload, args.out)
    return 0


def _verify_kwargs(func: object, args: argparse.Namespace) -> dict:
    available = {
        "max_abc": args.max_abc,
        "l_lo": args.l[0] if args.l else None,
        "l_hi": args.l[1] if args.l else None,
        "m_lo": args.m[0] if args.m else None,
        "m_hi": args.m[1] if args.m else None,
        "l_max": args.l_max,
        "trials": args.trials,
        "base_seed": args.seed,
        "seed": args.seed,
        "prime": args.prime if args.prime else None,
        "instances": args.instances,
        "samples": args.samples,
        "eps": args.eps,
    }
    kwargs = {}
    for name in inspect.signature(func).parameters:  # type: ignore[arg-type]
        if available.get(name) is not None:
            kwargs[name] = available[name]
    return kwargs


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list_theorems:
        for name in sorted(verify.THEOREMS):
            description, _ = verify.THEOREMS[name]
            sys.stdout.write(f"{name}: {description}\n")
        return 0
    if not args.theorem:
        sys.stderr.write("error: a theorem id is required (see --list-theorems)\n")
        return 2
    if args.theorem not in verify.THEOREMS:
        sys.stderr.write(f"error: unknown theorem {args.theorem!r} (see --list-theorems)\n")
        return 2
    _, func = verify.THEOREMS[args.theorem]
    result = func(**_verify_kwargs(func, args))
    sys.stdout.write(f"theorem: {result.theorem}\n")
    for row in result.rows:
        status = "INFO" if row.ok is None else ("PASS" if row.ok else "FAIL")
        detail = f"  [{row.detail}]" if row.detail else ""
        sys.stdout.write(f"  {status} {row.label}{detail}\n")
    for note in result.findings:
        sys.stdout.write(f"  FINDING: {note}\n")
    sys.stdout.write(f"result: {'PASS' if result.passed else 'FAIL'}\n")
    return 0 if result.passed else 1


_SUPERSYM_COLUMNS = (
    "a,b,c,genus,frobenius,rho,codim,nodal_codim,excess,rhobound1_holds,"
    "F_poly_sign,sprime_applicable,sprime_genus,sprime_frobenius"
).split(",")

_ARITH_COLUMNS = (
    "m,l,genus,frobenius,conductor,genus_upper,genus_upper_stated,"
    "best_lower_k,best_lower"
).split(",")

_GENERIC_COLUMNS = "l,r1,r2,r3,conductor,genus,genus_lower,genus_upper,in_bounds".split(",")


def _supersym_row(triple: tuple[int, int, int]) -> dict:
    a, b, c = triple
    report = severi.excess_supersym(a, b, c)
    fvalue = severi.bound_polynomial(a, b, c)
    applicable = not supersym.abc_plus_one_is_member(a, b, c)
    return {
        "a": a,
        "b": b,
        "c": c,
        "genus": report.genus,
        "frobenius": supersym.frobenius_formula(a, b, c),
        "rho": supersym.rho(a, b, c),
        "codim": report.codim,
        "nodal_codim": report.nodal_codim,
        "excess": report.excess,
        "rhobound1_holds": report.holds("rhobound1"),
        "F_poly_sign": "nonnegative" if fvalue >= 0 else "negative",
        "sprime_applicable": applicable,
        "sprime_genus": supersym.genus_s_prime(a, b, c) if applicable else None,
        "sprime_frobenius": supersym.frobenius_s_prime(a, b, c) if applicable else None,
    }


def _arith_row(pair: tuple[int, int]) -> dict:
    m, ell = pair
    s = arith.approximating_semigroup(m, ell)
    bound = arith.genus_upper(m, ell)
    best = arith.best_genus_lower(m * ell, m, 2 * m)
    stated = bound.stated
    return {
        "m": m,
        "l": ell,
        "genus": s.genus,
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "genus_upper": bound.proof_derived,
        "genus_upper_stated": int(stated) if stated.denominator == 1 else str(stated),
        "best_lower_k": best.k,
        "best_lower": best.bound,
    }


def _generic_row(task: tuple[int, int, int, int]) -> dict:
    ell, trials, prime, seed = task
    emp = series.empirical_generic_semigroup(
        (2 * ell, 2 * ell + 2, 2 * ell + 4), trials=trials, prime=prime, base_seed=seed
    )
    lower = arith.best_genus_lower(2 * ell, 2, 4).bound
    upper = arith.genus_upper(2, ell).proof_derived
    r1, r2, r3 = emp.profile.orders
    return {
        "l": ell,
        "r1": r1,
        "r2": r2,
        "r3": r3,
        "conductor": emp.conductor,
        "genus": emp.genus,
        "genus_lower": lower,
        "genus_upper": upper,
        "in_bounds": lower <= emp.genus <= upper,
    }


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def cmd_sweep(args: argparse.Namespace) -> int:
    prime = args.prime if args.prime else _default_prime()
    if args.family == "supersym":
        tasks = list(supersym.coprime_triples(args.max_abc, min_a=args.min_a))
        worker = _supersym_row
        columns = _SUPERSYM_COLUMNS
    elif args.family == "arith":
        m_lo, m_hi = args.m if args.m else (2, 4)
        l_lo, l_hi = args.l if args.l else (4, 12)
        tasks = [
            (m, ell)
            for m in range(m_lo, m_hi + 1)
            for ell in range(max(l_lo, 2 * m), l_hi + 1)
        ]
        worker = _arith_row
        columns = _ARITH_COLUMNS
    elif args.family == "generic":
        l_lo, l_hi = args.l if args.l else (4, 8)
        tasks = [(ell, args.trials, prime, args.seed) for ell in range(l_lo, l_hi + 1)]
        worker = _generic_row
        columns = _GENERIC_COLUMNS
    else:
        sys.stderr.write(f"error: unknown family {args.family!r}\n")
        return 2

    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(worker, tasks))
    else:
        rows = [worker(task) for task in tasks]

    provenance = f"cuspsemi {cuspsemi.__version__} family={args.family} seed={args.seed}"
    if args.format == "json":
        payload = {
            "toolkit_version": cuspsemi.__version__,
            "family": args.family,
            "seed": args.seed,
            "rows": rows,
        }
        _emit_json(payload, args.out)
    else:
        lines: list[str] = []

        class _Sink:
            def write(self, text: str) -> None:
                lines.append(text)

        writer = csv.writer(_Sink(), lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[col]) for col in columns])
        text = f"# {provenance}\n" + "".join(lines)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspsemi",
        description="numerical semigroups, generic value semigroups, and excess-dimension predicates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="invariants of a numerical semigroup")
    p_info.add_argument("--gens", type=_parse_ints, required=True, help="generators, comma separated")
    p_info.add_argument("--betti-bound", type=int, default=None)
    p_info.add_argument("--out", default=None)
    p_info.set_defaults(func=cmd_info)

    p_gen = sub.add_parser("generic", help="Monte-Carlo value semigroup of a profile")
    p_gen.add_argument("--profile", type=_parse_ints, required=True, help="orders, comma separated")
    p_gen.add_argument("--trials", type=int, default=3)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--prime", type=int, default=None)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_generic)

    p_ver = sub.add_parser("verify", help="check a published statement over a sweep")
    p_ver.add_argument("theorem", nargs="?", default=None)
    p_ver.add_argument("--list-theorems", action="store_true")
    p_ver.add_argument("--max-abc", type=int, default=None)
    p_ver.add_argument("--l", type=_parse_range, default=None, help="LO..HI")
    p_ver.add_argument("--m", type=_parse_range, default=None, help="LO..HI")
    p_ver.add_argument("--l-max", type=int, default=None)
    p_ver.add_argument("--trials", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--prime", type=int, default=None)
    p_ver.add_argument("--instances", type=int, default=None)
    p_ver.add_argument("--samples", type=int, default=None)
    p_ver.add_argument("--eps", type=float, default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="tabulate a parameter family")
    p_sweep.add_argument("--family", choices=("supersym", "arith", "generic"), required=True)
    p_sweep.add_argument("--max-abc", type=int, default=2000)
    p_sweep.add_argument("--min-a", type=int, default=2)
    p_sweep.add_argument("--m", type=_parse_range, default=None, help="LO..HI")
    p_sweep.add_argument("--l", type=_parse_range, default=None, help="LO..HI")
    p_sweep.add_argument("--trials", type=int, default=3)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--prime", type=int, default=None)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GcdNotOneError, NotApplicableError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except SeedDisagreementError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 4
    except MethodMismatchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (PrecisionTooSmallError, OverflowError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entry() -> None:
    raise SystemExit(main())
