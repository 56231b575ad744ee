"""Command-line interface: gen, verify, decompose, identities, classify, density.

Exit codes: 0 on success / all checks passing, 1 when a mathematical
defect is found (failed verification, failed identity, inadmissible
census class), 2 on invalid input.  Output is CSV by default or JSON
with --format json; big integer values are serialized as decimal
strings in JSON.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import identities, partition, three_set
from .qfield import HALF_PHI_SQ, PHI, PHI_CUBED, PHI_SQ, QuadraticReal, SQRT2
from .three_set import ADMISSIBLE_ROW_CLASSES, ALL_PAIR_CLASSES

ALPHA_NAMES = {
    "phi": PHI,
    "phi2": PHI_SQ,
    "phi3": PHI_CUBED,
    "phi2/2": HALF_PHI_SQ,
    "sqrt2": SQRT2,
}

EXIT_OK = 0
EXIT_DEFECT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _parse_alpha(text: str) -> QuadraticReal:
    if text in ALPHA_NAMES:
        return ALPHA_NAMES[text]
    parts = text.split(",")
    if len(parts) not in (3, 4):
        raise UsageError(
            f"alpha must be one of {sorted(ALPHA_NAMES)} or p,q,d[,radicand], got {text!r}"
        )
    try:
        numbers = [int(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"non-integer component in alpha tuple {text!r}") from exc
    radicand = numbers[3] if len(numbers) == 4 else 5
    try:
        return QuadraticReal(numbers[0], numbers[1], numbers[2], radicand)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc


def _resolve_spec(args) -> partition.PartitionSpec:
    chosen = [name for name in ("h", "alpha", "explicit") if getattr(args, name, None)]
    if len(chosen) != 1:
        raise UsageError("exactly one of --h, --alpha, --explicit is required")
    try:
        if args.h == "identity":
            return partition.identity_spec(args.n)
        if args.h == "phi":
            return partition.phi_spec(args.n)
        if args.h:
            raise UsageError(f"--h must be identity or phi, got {args.h!r}")
        if args.alpha:
            return partition.alpha_spec(args.n, _parse_alpha(args.alpha))
        values = _read_explicit(args.explicit)
        return partition.explicit_spec(args.n, values)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _read_explicit(path: str) -> list[int]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read explicit generator file: {exc}") from exc
    try:
        return [int(token) for token in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"explicit generator file must contain integers: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_table(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _frequency_string(fr: Fraction, places: int = 12) -> str:
    scaled = fr.numerator * 10**places // fr.denominator
    return f"{scaled // 10 ** places}.{scaled % 10 ** places:0{places}d}"


# -- subcommands ---------------------------------------------------------------


def _cmd_gen(args) -> int:
    spec = _resolve_spec(args)
    try:
        columns = partition.build_columns(spec, args.limit)
    except partition.GeneratorError as exc:
        print(f"generator violation: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        payload = {
            "n": spec.n,
            "generator": spec.describe(),
            "limit": args.limit,
            "columns": [[str(v) for v in col] for col in columns],
        }
        _emit(_json_text(payload), args.out)
    else:
        rows = []
        for j, col in enumerate(columns, start=1):
            rows.extend([j, k, v] for k, v in enumerate(col, start=1))
        _emit(_csv_table(["column", "k", "value"], rows), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    spec = _resolve_spec(args)
    report = partition.verify_partition(spec, args.limit, shards=args.shards)
    if args.format == "json":
        payload = report.to_json_dict()
        payload["limit"] = str(payload["limit"])
        if payload["first_defect"] is not None:
            payload["first_defect"] = str(payload["first_defect"])
        _emit(_json_text(payload), args.out)
    else:
        row = [
            report.n,
            report.generator,
            report.limit,
            report.covered,
            report.disjoint,
            "" if report.first_defect is None else report.first_defect,
        ]
        _emit(_csv_table(["n", "generator", "limit", "covered", "disjoint", "first_defect"], [row]), args.out)
    return EXIT_OK if report.ok else EXIT_DEFECT


def _cmd_decompose(args) -> int:
    spec = _resolve_spec(args)
    if args.m < 1:
        raise UsageError(f"--m must be positive, got {args.m}")
    try:
        dec = partition.decompose(args.m, spec)
    except ArithmeticError as exc:
        print(f"decomposition defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    if args.format == "json":
        payload = {
            "m": str(args.m),
            "column": dec.column,
            "k": dec.index,
            "signs": list(dec.signs),
        }
        _emit(_json_text(payload), args.out)
    else:
        signs = "".join("+" if e > 0 else "-" for e in dec.signs)
        _emit(_csv_table(["m", "column", "k", "signs"], [[args.m, dec.column, dec.index, signs]]), args.out)
    return EXIT_OK


def _identity_options(args) -> identities.CheckOptions:
    rs = (1, 3, 5, 7)
    if args.r is not None:
        rs = tuple(int(tok) for tok in str(args.r).split(","))
        for r in rs:
            if r < 1 or r % 2 == 0:
                raise UsageError(f"--r must list odd positive integers, got {r}")
    return identities.CheckOptions(
        rs=rs,
        converse_rs=tuple(r for r in rs if r in (1, 3)) or (1, 3),
        bound=args.bound,
        fault_offset=1 if args.inject_off_by_one else 0,
    )


def _cmd_identities(args) -> int:
    names = identities.identity_names()
    if args.identity:
        if args.identity not in names:
            raise UsageError(f"unknown identity {args.identity!r}; choose from {names}")
        names = [args.identity]
    opts = _identity_options(args)
    if args.format:
        rows = []
        records = []
        failed = 0
        for name in names:
            for check in identities.iter_identity_checks(name, args.N, opts):
                failed += 0 if check.passed else 1
                if args.format == "json":
                    records.append(check.to_json_dict())
                else:
                    rows.append(
                        [check.identity, check.n, check.case, str(check.lhs), str(check.rhs), check.passed]
                    )
        if args.format == "json":
            _emit(_json_text(records), args.out)
        else:
            _emit(_csv_table(["identity", "n", "case", "lhs", "rhs", "pass"], rows), args.out)
        return EXIT_OK if failed == 0 else EXIT_DEFECT
    lines = [f"{'identity':24} {'checks':>8} {'failed':>8}  first failure"]
    any_failed = False
    for name in names:
        summary = identities.summarize_identity(name, args.N, opts)
        detail = "-"
        if summary.first_failure is not None:
            any_failed = True
            ff = summary.first_failure
            detail = f"n={ff.n} {ff.case} lhs={ff.lhs} rhs={ff.rhs}"
        lines.append(f"{summary.name:24} {summary.checks:>8} {summary.failures:>8}  {detail}")
    verdict = "FAIL" if any_failed else "PASS"
    lines.append(f"overall: {verdict} (N={args.N})")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_DEFECT if any_failed else EXIT_OK


def _census_rows(census: three_set.Census, keys: list[str]) -> list[list]:
    rows = []
    for key in keys:
        count = census.counts.get(key, 0)
        rows.append(
            [
                key,
                count,
                _frequency_string(census.frequency(key)),
                census.first_index.get(key, ""),
            ]
        )
    return rows


def _census_json(census: three_set.Census, keys: list[str]) -> list[dict]:
    out = []
    for key in keys:
        count = census.counts.get(key, 0)
        out.append(
            {
                "class": key,
                "count": count,
                "frequency": {"num": count, "den": census.total},
                "first_k": census.first_index.get(key),
            }
        )
    return out


def _cmd_classify(args) -> int:
    if args.N < 1:
        raise UsageError(f"--N must be positive, got {args.N}")
    if args.what == "rows":
        rows = []
        for k in range(1, args.N + 1):
            triple = three_set.scd(k)
            cls = three_set.row_class(k)
            rows.append([k, triple.s, triple.c, triple.d, cls.s.value, cls.c.value, cls.d.value])
        if args.format == "json":
            payload = [
                {
                    "k": r[0],
                    "s": str(r[1]),
                    "c": str(r[2]),
                    "d": str(r[3]),
                    "class": r[4] + r[5] + r[6],
                }
                for r in rows
            ]
            _emit(_json_text(payload), args.out)
        else:
            _emit(
                _csv_table(["k", "s", "c", "d", "s_class", "c_class", "d_class"], rows),
                args.out,
            )
        return EXIT_OK
    if args.what == "census":
        census = three_set.row_class_census(args.N, shards=args.shards)
        keys = sorted(ADMISSIBLE_ROW_CLASSES) + sorted(census.counts.keys() - ADMISSIBLE_ROW_CLASSES)
        admissible = set(census.counts) <= ADMISSIBLE_ROW_CLASSES
    else:  # ab-over-scd
        census = three_set.ab_over_scd_census(args.N, shards=args.shards)
        keys = list(ALL_PAIR_CLASSES)
        admissible = True
    if args.format == "json":
        payload = {"N": args.N, "classes": _census_json(census, keys)}
        _emit(_json_text(payload), args.out)
    else:
        _emit(_csv_table(["class", "count", "frequency", "first_k"], _census_rows(census, keys)), args.out)
    return EXIT_OK if admissible else EXIT_DEFECT


def _cmd_density(args) -> int:
    report = three_set.density_report(args.N, shards=args.shards)
    if args.format == "json":
        payload = {
            "N": args.N,
            "densities": [
                {
                    "name": e.name,
                    "count": e.count,
                    "frequency": {"num": e.count, "den": e.total},
                    "expected": None if e.expected is None else e.expected.to_json_dict(),
                    "status": e.status,
                }
                for e in report.entries
            ],
        }
        _emit(_json_text(payload), args.out)
    else:
        rows = [
            [
                e.name,
                e.count,
                e.total,
                _frequency_string(e.frequency),
                "" if e.expected is None else str(e.expected),
                e.status,
            ]
            for e in report.entries
        ]
        _emit(
            _csv_table(["name", "count", "total", "frequency", "expected", "status"], rows),
            args.out,
        )
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _add_generator_flags(sub) -> None:
    sub.add_argument("--n", type=int, required=True, help="number of columns (>= 2)")
    sub.add_argument("--h", choices=("identity", "phi"), help="named step sequence")
    sub.add_argument("--alpha", help="exact alpha: named constant or p,q,d[,radicand]")
    sub.add_argument("--explicit", help="file with explicit first-column values")


def _add_output_flags(sub, default_format: str | None = "csv") -> None:
    sub.add_argument("--format", choices=("csv", "json"), default=default_format)
    sub.add_argument("--out", help="write output to this file instead of stdout")


def build_parser(default_shards: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beatty-lab",
        description="Exact Beatty/Wythoff sequence partitions, identities and censuses.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="dump partition columns up to a limit")
    _add_generator_flags(gen)
    gen.add_argument("--limit", type=int, required=True)
    _add_output_flags(gen)

    verify = subparsers.add_parser("verify", help="brute-force cover/disjointness check")
    _add_generator_flags(verify)
    verify.add_argument("--limit", type=int, required=True)
    verify.add_argument("--shards", type=int, default=default_shards)
    _add_output_flags(verify)

    dec = subparsers.add_parser("decompose", help="invert the partition map for one integer")
    _add_generator_flags(dec)
    dec.add_argument("--m", type=int, required=True)
    _add_output_flags(dec)

    idn = subparsers.add_parser("identities", help="run the exact identity suite")
    idn.add_argument("--N", type=int, default=1000, help="scan indices 1..N")
    idn.add_argument("--identity", help="run a single named identity")
    idn.add_argument("--r", help="comma list of odd shift indices (default 1,3,5,7)")
    idn.add_argument("--bound", type=int, help="search bound for the converse scan")
    idn.add_argument(
        "--inject-off-by-one",
        action="store_true",
        help="test mode: perturb the direct side of the grid check by +1",
    )
    _add_output_flags(idn, default_format=None)

    cls = subparsers.add_parser("classify", help="row classes and membership censuses")
    cls.add_argument("what", choices=("rows", "census", "ab-over-scd"))
    cls.add_argument("--N", type=int, required=True)
    cls.add_argument("--shards", type=int, default=default_shards)
    _add_output_flags(cls)

    den = subparsers.add_parser("density", help="desk-scale density measurements")
    den.add_argument("--N", type=int, required=True)
    den.add_argument("--shards", type=int, default=default_shards)
    _add_output_flags(den)

    return parser


_DISPATCH = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "decompose": _cmd_decompose,
    "identities": _cmd_identities,
    "classify": _cmd_classify,
    "density": _cmd_density,
}


def main(argv: list[str] | None = None) -> int:
    env_shards = os.environ.get("BEATTY_LAB_SHARDS", "1")
    try:
        default_shards = int(env_shards)
        if default_shards < 1:
            raise ValueError
    except ValueError:
        print(f"invalid BEATTY_LAB_SHARDS value {env_shards!r}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_shards)
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"mathematical defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT


if __name__ == "__main__":
    raise SystemExit(main())
